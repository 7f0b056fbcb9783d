#include "chainface/linalg.hpp"

#include "chainface/errors.hpp"

namespace chainface {

RatVec incidence(int p, const std::vector<int>& members) {
  RatVec v(p, Rat(0));
  for (int x : members) {
    if (x < 1 || x > p) throw LabelError("incidence label out of range");
    v[x - 1] = 1;
  }
  return v;
}

RatVec incidence(const Poset& P, const Chain& c) {
  return incidence(P.size(), c.elems);
}

RatVec barycenter(const std::vector<RatVec>& points) {
  if (points.empty()) throw DimensionMismatchError("no points");
  RatVec b(points[0].size(), Rat(0));
  for (const auto& pt : points) {
    if (pt.size() != b.size()) throw DimensionMismatchError("ragged points");
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += pt[i];
  }
  Rat k(static_cast<long>(points.size()));
  for (auto& x : b) x /= k;
  return b;
}

int affine_rank(const std::vector<RatVec>& points) {
  if (points.empty()) throw DimensionMismatchError("no points");
  std::size_t dim = points[0].size();
  std::vector<RatVec> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != dim) throw DimensionMismatchError("ragged points");
    RatVec d(dim);
    for (std::size_t j = 0; j < dim; ++j) d[j] = points[i][j] - points[0][j];
    rows.push_back(std::move(d));
  }
  int rank = 0;
  for (std::size_t col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
      Rat factor = rows[r][col] / rows[rank][col];
      for (std::size_t j = col; j < dim; ++j)
        rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace chainface

#include "chainface/oracle.hpp"

#include <algorithm>

namespace chainface {

namespace {

RatVec chain_row(const Poset& P, const Chain& pos, const Chain& neg) {
  RatVec row(P.size(), Rat(0));
  for (int x : pos.elems) row[x - 1] += 1;
  for (int x : neg.elems) row[x - 1] -= 1;
  return row;
}

}  // namespace

std::optional<RatVec> face_oracle(const Poset& P, const ChainFamily& F) {
  if (F.empty()) throw WitnessError("empty chain family");
  ChainFamily all = maximal_chains(P);
  std::vector<Chain> outside;
  for (const Chain& d : all)
    if (!F.contains(d)) outside.push_back(d);
  if (outside.empty()) return RatVec(P.size(), Rat(0));

  const Chain& ref = F.chains.front();
  LinearProgram lp(P.size(), /*maximize=*/false);
  for (std::size_t i = 1; i < F.chains.size(); ++i)
    lp.add_row(chain_row(P, F.chains[i], ref), Relation::Eq, Rat(0));
  for (const Chain& d : outside)
    lp.add_row(chain_row(P, ref, d), Relation::GreaterEq, Rat(1));

  LpResult res = lp_solve(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return res.witness;
}

ChainFamily minimal_face_oracle(const Poset& P, const ChainFamily& F) {
  if (F.empty()) throw WitnessError("empty chain family");
  ChainFamily all = maximal_chains(P);
  const Chain& ref = F.chains.front();
  ChainFamily out = F;
  for (const Chain& d : all) {
    if (F.contains(d)) continue;
    // Can d be separated from F? Maximize f(ref) - f(d) over the cone of
    // functions constant on F and maximal there, capped at 1. Optimum 0
    // puts d on every face containing F.
    LinearProgram lp(P.size(), /*maximize=*/true);
    RatVec gap = chain_row(P, ref, d);
    lp.objective = gap;
    for (std::size_t i = 1; i < F.chains.size(); ++i)
      lp.add_row(chain_row(P, F.chains[i], ref), Relation::Eq, Rat(0));
    for (const Chain& e : all) {
      if (F.contains(e)) continue;
      lp.add_row(chain_row(P, ref, e), Relation::GreaterEq, Rat(0));
    }
    lp.add_row(gap, Relation::LessEq, Rat(1));
    LpResult res = lp_solve(lp);
    if (res.status != LpStatus::Optimal)
      throw std::logic_error("separation program must be solvable");
    if (res.value == 0) out.insert(d);
  }
  return out;
}

bool member_of_hull(const RatVec& point, const std::vector<RatVec>& points) {
  if (points.empty()) return false;
  std::size_t dim = point.size();
  for (const auto& p : points)
    if (p.size() != dim) throw DimensionMismatchError("ragged points");

  int k = static_cast<int>(points.size());
  LinearProgram lp(k, /*maximize=*/false);
  lp.nonneg.assign(k, true);
  for (std::size_t c = 0; c < dim; ++c) {
    RatVec row(k);
    for (int i = 0; i < k; ++i) row[i] = points[i][c];
    lp.add_row(std::move(row), Relation::Eq, point[c]);
  }
  lp.add_row(RatVec(k, Rat(1)), Relation::Eq, Rat(1));
  return lp_solve(lp).status == LpStatus::Optimal;
}

}  // namespace chainface

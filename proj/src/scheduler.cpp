#include "chainface/scheduler.hpp"

#include <algorithm>
#include <string>

#include "chainface/oracle.hpp"

namespace chainface {

ActivityWeights::ActivityWeights(const Poset& P, const std::map<int, Rat>& values) {
  w.assign(P.size() + 1, Rat(0));
  for (auto& [x, v] : values) {
    if (x < 1 || x > P.size())
      throw LabelError("weight label out of range: " + std::to_string(x));
    w[x] = v;
    w[x].canonicalize();
  }
  for (int x = 1; x <= P.size(); ++x)
    if (!values.count(x))
      throw MissingWeightError("no weight for element " + std::to_string(x));
}

ActivityWeights::ActivityWeights(const Poset& P, RatVec dense) : w(std::move(dense)) {
  if (w.size() != static_cast<std::size_t>(P.size()) + 1)
    throw MissingWeightError("weight vector does not cover the poset");
  for (Rat& q : w) q.canonicalize();
}

Rat ActivityWeights::chain_total(const Chain& c) const {
  Rat t(0);
  for (int x : c.elems) t += w[x];
  return t;
}

Rat eft(const Poset& P, const ActivityWeights& f) {
  int p = P.size();
  if (f.w.size() != static_cast<std::size_t>(p) + 1)
    throw MissingWeightError("weights do not cover the poset");
  // Longest path over the cover digraph, processed in topological order.
  std::vector<int> indeg(p + 1, 0), order;
  for (int x = 1; x <= p; ++x)
    indeg[x] = static_cast<int>(P.down_covers(x).size());
  for (int x = 1; x <= p; ++x)
    if (indeg[x] == 0) order.push_back(x);
  RatVec best(p + 1, Rat(0));
  std::vector<char> ready(p + 1, 0);
  for (std::size_t h = 0; h < order.size(); ++h) {
    int x = order[h];
    Rat b = f.at(x);
    bool first = true;
    for (int u : P.down_covers(x)) {
      Rat cand = best[u] + f.at(x);
      if (first || cand > b) b = cand;
      first = false;
    }
    best[x] = b;
    ready[x] = 1;
    for (int y : P.up_covers(x))
      if (--indeg[y] == 0) order.push_back(y);
  }
  Rat result;
  bool first = true;
  for (int x : P.maximal_elements()) {
    if (first || best[x] > result) result = best[x];
    first = false;
  }
  return result;
}

ScheduleReport critical_chains(const Poset& P, const ActivityWeights& f) {
  ScheduleReport rep;
  rep.eft = eft(P, f);
  for (const Chain& c : maximal_chains(P)) {
    Rat t = f.chain_total(c);
    if (t == rep.eft) rep.critical.insert(c);
    rep.totals.emplace_back(c, std::move(t));
  }
  return rep;
}

std::optional<ActivityWeights> multicritical(const Poset& P,
                                             const ChainFamily& F) {
  auto weights = face_oracle(P, F);
  if (!weights) return std::nullopt;
  RatVec w(P.size() + 1, Rat(0));
  for (int x = 1; x <= P.size(); ++x) w[x] = (*weights)[x - 1];
  return ActivityWeights(P, std::move(w));
}

}  // namespace chainface

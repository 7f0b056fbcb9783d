#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "chainface/poset.hpp"
#include "chainface/rational.hpp"

namespace chainface {

/// Time cost per activity, defined on every element of the owning poset.
struct ActivityWeights {
  RatVec w;  // 1-indexed, w[0] unused

  ActivityWeights() = default;
  ActivityWeights(const Poset& P, const std::map<int, Rat>& values);
  ActivityWeights(const Poset& P, RatVec dense);  // dense[0] unused

  const Rat& at(int x) const { return w[x]; }
  Rat chain_total(const Chain& c) const;
};

struct ScheduleReport {
  Rat eft;
  ChainFamily critical;  // every maximal chain attaining the EFT
  std::vector<std::pair<Chain, Rat>> totals;  // per-chain totals, for audit
};

/// Earliest finishing time: longest-path dynamic programming over the cover
/// digraph, linear in the number of covers.
Rat eft(const Poset& P, const ActivityWeights& f);

/// All critical chains, with per-chain totals.
ScheduleReport critical_chains(const Poset& P, const ActivityWeights& f);

/// A weight function under which exactly the chains of F are critical;
/// exists iff conv(F) is a face of the maximal chain polytope.
std::optional<ActivityWeights> multicritical(const Poset& P,
                                             const ChainFamily& F);

}  // namespace chainface

#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "chainface/poset.hpp"

namespace chainface {

/// Alternating cover cycle a_1 < b_1 > a_2 < b_2 > ... > a_rho < b_rho > a_1
/// where every a_i < b_i is a cover realized inside some member of the
/// family, every a_{i+1} < b_i is a cover of the poset, all a's are
/// distinct and all b's are distinct. Stored in canonical rotation: the
/// rotation starting at the smallest alpha (lexicographically least
/// interleaved sequence).
struct GuidedCrown {
  int rho = 0;
  std::vector<int> alphas, betas;
  std::vector<Chain> witnesses;  // one member of F through (alpha_i, beta_i)

  std::vector<int> interleaved() const {
    std::vector<int> seq;
    for (int i = 0; i < rho; ++i) {
      seq.push_back(alphas[i]);
      seq.push_back(betas[i]);
    }
    return seq;
  }
};

/// Two realized order pairs a1 < b1, a2 < b2 with a1, a2 incomparable and
/// b1, b2 incomparable, sharing a strictly intermediate element on member
/// chains. Canonical orientation: (a1, b1) lexicographically below (a2, b2).
struct GuidedStar {
  int a1 = 0, b1 = 0, a2 = 0, b2 = 0;
  // (C1, C2, gamma): C1 through a1,b1, C2 through a2,b2, gamma strictly
  // between both pairs along both chains.
  std::vector<std::tuple<Chain, Chain, int>> witness_pairs;

  std::vector<int> gammas() const;
};

enum class Verdict { NoStructure, CompleteStructure, IncompleteStructure };

struct FlaggedCrown {
  GuidedCrown crown;
  bool complete = false;
  std::vector<Chain> missing;
};

struct FlaggedStar {
  GuidedStar star;
  bool complete = false;
  std::vector<Chain> missing;
};

struct StructureReport {
  Verdict verdict = Verdict::NoStructure;
  std::vector<FlaggedCrown> crowns;
  std::vector<FlaggedStar> stars;
};

/// All stars of F up to the orientation swap, with full witness lists.
std::vector<GuidedStar> find_stars(const Poset& P, const ChainFamily& F);

/// All crowns of F with rho <= max_rho (default: poset size), canonical
/// rotation, deterministic order.
std::vector<GuidedCrown> find_crowns(const Poset& P, const ChainFamily& F,
                                     std::optional<int> max_rho = std::nullopt);

/// Completeness over every admissible witness choice; returns the flag and
/// every absent swapped chain.
std::pair<bool, std::vector<Chain>> check_complete(const Poset& P,
                                                   const ChainFamily& F,
                                                   const GuidedCrown& w);
std::pair<bool, std::vector<Chain>> check_complete(const Poset& P,
                                                   const ChainFamily& F,
                                                   const GuidedStar& s);

StructureReport classify_structure(const Poset& P, const ChainFamily& F,
                                   std::optional<int> max_rho = std::nullopt);

struct Diamond {
  Poset poset;              // induced subposet on the symmetric difference
  std::vector<int> labels;  // labels[i] = original element of new label i+1
  Chain d1, d2;             // C1 \ C2 and C2 \ C1, relabeled
  bool has_two_crown = false;
};

/// The symmetric difference of two distinct maximal chains, ordered via
/// covering sequences inside their union, with the 2-crown flag for the
/// family {C1 \ C2, C2 \ C1}.
Diamond diamond_poset(const Poset& P, const Chain& c1, const Chain& c2);

/// Crown swaps for one witness selection (one chain per crown index).
/// At least one returned chain lies outside the selection.
std::vector<Chain> swap_chains(const Poset& P, const ChainFamily& F,
                               const GuidedCrown& w,
                               const std::vector<Chain>& choices);
/// Star swaps for one witness triple.
std::vector<Chain> swap_chains(const Poset& P, const ChainFamily& F,
                               const GuidedStar& s, const Chain& c1,
                               const Chain& c2, int gamma);

const char* verdict_name(Verdict v);

}  // namespace chainface

#pragma once

#include <optional>

#include "chainface/linalg.hpp"
#include "chainface/lp.hpp"
#include "chainface/poset.hpp"

namespace chainface {

/// Weight function maximized exactly on F: f(C) equal across F and
/// f(C) >= f(D) + 1 for every maximal chain D outside F (margin-1
/// normalization of the strict system). nullopt iff conv(F) is not a face
/// of the maximal chain polytope. The zero function when F is everything.
std::optional<RatVec> face_oracle(const Poset& P, const ChainFamily& F);

/// Vertex set of the minimum face containing conv(F): one LP per candidate
/// chain, deciding whether it can be separated from F.
ChainFamily minimal_face_oracle(const Poset& P, const ChainFamily& F);

/// Exact convex-combination feasibility.
bool member_of_hull(const RatVec& point, const std::vector<RatVec>& points);

}  // namespace chainface

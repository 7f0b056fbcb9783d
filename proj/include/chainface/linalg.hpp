#pragma once

#include <vector>

#include "chainface/poset.hpp"
#include "chainface/rational.hpp"

namespace chainface {

/// 0/1 incidence vector of an element set in Q^p.
RatVec incidence(int p, const std::vector<int>& members);
RatVec incidence(const Poset& P, const Chain& c);

RatVec barycenter(const std::vector<RatVec>& points);

/// Dimension of the affine hull, by exact Gaussian elimination on the
/// difference vectors.
int affine_rank(const std::vector<RatVec>& points);

}  // namespace chainface

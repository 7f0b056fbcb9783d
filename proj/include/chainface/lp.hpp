#pragma once

#include <vector>

#include "chainface/rational.hpp"

namespace chainface {

enum class Relation { LessEq, Eq, GreaterEq };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpRow {
  RatVec coeffs;  // length = num_vars
  Relation rel = Relation::LessEq;
  Rat rhs;
};

/// Exact rational linear program. Variables are free unless flagged
/// nonnegative.
struct LinearProgram {
  int num_vars = 0;
  bool maximize = true;
  RatVec objective;            // length = num_vars
  std::vector<bool> nonneg;    // length = num_vars
  std::vector<LpRow> rows;

  explicit LinearProgram(int n, bool maximize_ = true)
      : num_vars(n),
        maximize(maximize_),
        objective(n, Rat(0)),
        nonneg(n, false) {}
  LinearProgram() = default;

  void add_row(RatVec coeffs, Relation rel, Rat rhs);
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;       // optimal objective value (when Optimal)
  RatVec witness;  // optimal point (when Optimal)
};

/// Two-phase primal simplex with Bland's rule; exact arithmetic throughout,
/// deterministic and terminating.
LpResult lp_solve(const LinearProgram& lp);

}  // namespace chainface

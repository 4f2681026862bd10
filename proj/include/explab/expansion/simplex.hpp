#pragma once

#include <cstddef>
#include <vector>

#include "explab/exactla/matrix.hpp"

namespace explab {

// minimize c.x subject to a x = b, x >= 0, over the rationals.
struct LpProblem {
  RatMatrix a;
  RatVector b;
  RatVector c;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  RatVector x;
  std::size_t pivots = 0;
};

// Dense-tableau two-phase simplex with Bland's rule. Rows whose sign-adjusted
// form already contains a unit column start with that column basic; the rest
// receive artificial variables for phase one.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace explab

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "explab/exactla/matrix.hpp"

namespace explab {

// Reduced row echelon form over Q.
struct RowEchelon {
  RatMatrix r;
  std::vector<std::size_t> pivot_cols;
};

RowEchelon rref(RatMatrix a);

// Solution set {particular + sum_j c_j * directions.row(j)} of a x = b.
struct AffineSolution {
  RatVector particular;  // free variables set to zero
  RatMatrix directions;  // rows form a basis of ker(a)
};

// nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const RatMatrix& a,
                                           std::span<const Rational> b);

// Rows form a basis of {x : a x = 0}.
RatMatrix nullspace(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

}  // namespace explab

#pragma once

#include <cstddef>
#include <vector>

#include "explab/exactla/matrix.hpp"

namespace explab {

// Row-style Hermite normal form h = u * m with u unimodular.
//  - the first `rank` rows of h are nonzero, the rest are zero;
//  - pivot (first nonzero entry) columns strictly increase down the rows;
//  - every pivot is positive and entries above it lie in [0, pivot).
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

HermiteForm hnf(const IntMatrix& m);

// d = u * m * v with u, v unimodular and d diagonal; the diagonal entries are
// nonnegative and each divides the next.
struct SnfDecomposition {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  // Diagonal of d, length min(rows, cols).
  std::vector<Integer> diagonal() const;
};

SnfDecomposition snf(const IntMatrix& m);

// Fraction-free (Bareiss) determinant. Throws DimensionError if not square.
Integer determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);
// Throws NotUnimodularError if m is not square with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Rank over Q (equivalently, over Z).
std::size_t rank(const IntMatrix& m);

}  // namespace explab

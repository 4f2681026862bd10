#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "explab/exactla/matrix.hpp"

namespace explab {

// An inclusion-minimal nonempty intersection H_I of the hyperplanes
// H_i = {x : u_i + (Z^T x)_i = 0}. Every coordinate of u + Z^T x is constant
// on it, so it is recorded once with I equal to the set of vanishing
// coordinates.
struct MinimalFace {
  std::vector<std::size_t> zero_coords;  // I, 0-based
  RatVector point;                       // a point of H_I in Q^k
  RatMatrix directions;                  // rows span the directions of H_I
  Rational value;                        // f on H_I
};

struct FaceEnumeration {
  std::vector<MinimalFace> faces;
  std::size_t subsets_examined = 0;
  std::size_t best = 0;  // index of the first face attaining the minimum
};

// Enumerates every subset I of {0..n-1}. z holds k generator rows of length
// n; they need not be independent. Throws CapExceededError when n or k is
// above the given caps.
FaceEnumeration enumerate_minimal_faces(std::span<const Rational> u, const IntMatrix& z,
                                        std::size_t max_coords, std::size_t max_generators);

}  // namespace explab

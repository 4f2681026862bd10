#pragma once

#include <cstdint>
#include <random>

#include "explab/exactla/matrix.hpp"

namespace explab {

using Rng = std::mt19937_64;

// Uniform in [lo, hi] without relying on std::uniform_int_distribution, whose
// output differs between standard libraries.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

// Columns are vertices (2..8), rows are edges (1..8). Each row is zero with
// probability 1/10, otherwise a single +-1 with probability 1/5, otherwise a
// +1/-1 pair on two distinct vertices.
IntMatrix random_incidence_matrix(Rng& rng);

IntMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                std::int64_t lo, std::int64_t hi);

IntVector random_integer_vector(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi);

}  // namespace explab

#include "explab/harness/generators.hpp"

#include <limits>

namespace explab {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + static_cast<std::int64_t>(x % span);
}

IntMatrix random_incidence_matrix(Rng& rng) {
  const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 8));
  const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 8));
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (uniform_int(rng, 0, 9) == 0) continue;
    const auto tail = static_cast<std::size_t>(uniform_int(rng, 0, n - 1));
    if (uniform_int(rng, 0, 4) == 0) {
      a(i, tail) = uniform_int(rng, 0, 1) ? 1 : -1;
      continue;
    }
    auto head = static_cast<std::size_t>(uniform_int(rng, 0, n - 2));
    if (head >= tail) ++head;
    a(i, tail) = 1;
    a(i, head) = -1;
  }
  return a;
}

IntMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                std::int64_t lo, std::int64_t hi) {
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = uniform_int(rng, lo, hi);
  return a;
}

IntVector random_integer_vector(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  IntVector v(n);
  for (auto& x : v) x = uniform_int(rng, lo, hi);
  return v;
}

}  // namespace explab

#include "explab/expansion/face_oracle.hpp"

#include <cstdint>
#include <string>

#include "explab/exactla/linear_solve.hpp"
#include "explab/expansion/expansion.hpp"

namespace explab {

FaceEnumeration enumerate_minimal_faces(std::span<const Rational> u, const IntMatrix& z,
                                        std::size_t max_coords, std::size_t max_generators) {
  const std::size_t n = u.size();
  const std::size_t k = z.rows();
  if (z.cols() != n) {
    throw DimensionError("generators of length " + std::to_string(z.cols()) +
                         " for a point of length " + std::to_string(n));
  }
  if (n > max_coords || k > max_generators || n >= 63) {
    throw CapExceededError("face enumeration limited to n <= " + std::to_string(max_coords) +
                           " and k <= " + std::to_string(max_generators) + ", got n = " +
                           std::to_string(n) + ", k = " + std::to_string(k));
  }
  const RatMatrix zt = to_rational(z.transpose());  // n x k
  RatVector neg_u(u.begin(), u.end());
  for (auto& e : neg_u) e = -e;

  FaceEnumeration out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ++out.subsets_examined;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) subset.push_back(i);
    RatVector rhs;
    for (std::size_t i : subset) rhs.push_back(neg_u[i]);
    auto sol = solve_affine(zt.select_rows(subset), rhs);
    if (!sol) continue;
    // Minimal iff no direction of H_I moves any coordinate.
    bool minimal = true;
    for (std::size_t d = 0; d < sol->directions.rows() && minimal; ++d) {
      const RatVector moved = zt * sol->directions.row_vector(d);
      minimal = is_zero_vector(moved);
    }
    if (!minimal) continue;
    const RatVector g = affine_point(u, z, sol->particular);
    std::vector<std::size_t> closure;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i].is_zero()) closure.push_back(i);
    if (closure != subset) continue;
    MinimalFace face{std::move(subset), std::move(sol->particular), std::move(sol->directions),
                     l1_norm(g)};
    if (!out.faces.empty() && face.value < out.faces[out.best].value) out.best = out.faces.size();
    out.faces.push_back(std::move(face));
  }
  return out;
}

}  // namespace explab

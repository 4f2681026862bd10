#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "explab/exactla/lattice.hpp"
#include "explab/exactla/matrix.hpp"

namespace explab {

struct Ring {
  enum class Kind { Q, Z, Zq };
  Kind kind = Kind::Q;
  std::uint32_t modulus = 0;  // only for Zq

  static Ring rationals() { return {Kind::Q, 0}; }
  static Ring integers() { return {Kind::Z, 0}; }
  static Ring mod(std::uint32_t q) { return {Kind::Zq, q}; }

  std::string to_string() const;  // "Q", "Z", "Zq(5)"
  friend bool operator==(const Ring&, const Ring&) = default;
};

enum class SolverTag { lp, face_oracle, bnb, coset_bruteforce };
std::string to_string(SolverTag tag);

struct ExpansionResult {
  Rational value;
  IntVector target;
  // Preimage attaining the minimum. Integral for Z, residues in [0, q) for Zq.
  RatVector witness;
  Ring ring;
  SolverTag solver = SolverTag::lp;
};

struct GlobalExpansion {
  Rational value;
  IntVector attaining_target;
  bool exact = false;
  std::uint64_t candidates = 0;
};

struct ExpansionLimits {
  // Face-enumeration oracle.
  std::size_t face_max_coords = 14;
  std::size_t face_max_generators = 8;
  // Branch-and-bound node budget per target.
  std::uint64_t bnb_max_nodes = 200000;
  // xi_z_at first tries an integer point on a minimal face of the LP optimum.
  bool face_rounding = true;
  // Extreme-point candidates for the global rational supremum.
  std::uint64_t global_max_candidates = 1000000;
  // Sampling used when a global value cannot be computed exactly.
  std::uint64_t sample_box_limit = 20000;
  std::size_t sample_count = 2000;
  std::uint64_t sample_seed = 0x5eed;
};

// Expansion solvers for a fixed matrix A. The kernel basis Z (rows) and the
// Hermite data for preimages are computed once.
class ExpansionSolver {
 public:
  explicit ExpansionSolver(IntMatrix a, ExpansionLimits limits = {});

  const IntMatrix& matrix() const noexcept { return preimages_.matrix(); }
  const IntMatrix& kernel() const noexcept { return preimages_.kernel().generators(); }
  const PreimageSolver& preimages() const noexcept { return preimages_; }
  const ExpansionLimits& limits() const noexcept { return limits_; }

  // Exact rational LP over the kernel parametrization u + Z^T x.
  ExpansionResult xi_q_at(std::span<const Integer> v) const;
  // Independent oracle: minimum of f over minimal hyperplane intersections.
  ExpansionResult xi_q_at_face_oracle(std::span<const Integer> v) const;
  // Integer preimages u0 + Z^T c. The LP optimum is walked to a minimal face
  // and rounded by an integer solve; when that fails, branch-and-bound.
  ExpansionResult xi_z_at(std::span<const Integer> v) const;

  GlobalExpansion xi_q_global() const;
  GlobalExpansion xi_z_global() const;

 private:
  RatVector rational_preimage(std::span<const Integer> v) const;

  PreimageSolver preimages_;
  ExpansionLimits limits_;
};

ExpansionResult xi_q_at(const IntMatrix& a, std::span<const Integer> v);
ExpansionResult xi_q_at_face_oracle(const IntMatrix& a, std::span<const Integer> v);
ExpansionResult xi_z_at(const IntMatrix& a, std::span<const Integer> v);
GlobalExpansion xi_q_global(const IntMatrix& a);
GlobalExpansion xi_z_global(const IntMatrix& a);

// f(x) = sum_i |u_i + (Z^T x)_i| for generator rows Z.
Rational l1_objective(std::span<const Rational> u, const IntMatrix& z,
                      std::span<const Rational> x);
// u + Z^T x.
RatVector affine_point(std::span<const Rational> u, const IntMatrix& z,
                       std::span<const Rational> x);

}  // namespace explab

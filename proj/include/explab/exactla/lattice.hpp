#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "explab/exactla/matrix.hpp"
#include "explab/exactla/normal_form.hpp"

namespace explab {

// A sublattice of Z^n given by generator rows, with its row-style Hermite
// normal form cached for membership queries.
class LatticeBasis {
 public:
  LatticeBasis() = default;
  explicit LatticeBasis(IntMatrix generators);

  // The zero lattice inside Z^ambient.
  static LatticeBasis zero(std::size_t ambient);

  const IntMatrix& generators() const noexcept { return generators_; }
  const IntMatrix& hnf() const noexcept { return hnf_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t ambient_dim() const noexcept { return generators_.cols(); }

  // The nonzero rows of hnf(), a Z-basis of the lattice.
  IntMatrix basis() const;

  // Integer coefficients y with x = sum_r y_r * basis().row(r), if any.
  std::optional<IntVector> coordinates(std::span<const Integer> x) const;
  bool contains(std::span<const Integer> x) const;

  // Mutual membership of generators.
  bool same_lattice(const LatticeBasis& other) const;

 private:
  IntMatrix generators_;
  IntMatrix hnf_;
  std::vector<std::size_t> pivots_;
  std::size_t rank_ = 0;
};

bool lattice_member(const LatticeBasis& lattice, std::span<const Integer> x);

// Solves A x = v over Z and over Q through the Hermite form of A^T, and
// exposes ker_Z(A). Particular solutions are deterministic: back-substitution
// along the pivots with free coordinates set to zero.
class PreimageSolver {
 public:
  explicit PreimageSolver(IntMatrix a);

  const IntMatrix& matrix() const noexcept { return a_; }
  // Saturated Z-basis of ker(A), rows in Hermite normal form.
  const LatticeBasis& kernel() const noexcept { return kernel_; }
  std::size_t rank() const noexcept { return form_.rank; }

  std::optional<IntVector> solve_integer(std::span<const Integer> v) const;
  std::optional<RatVector> solve_rational(std::span<const Rational> v) const;

 private:
  IntMatrix a_;
  HermiteForm form_;  // of A^T
  LatticeBasis kernel_;
};

LatticeBasis integer_kernel_basis(const IntMatrix& a);
std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Integer> v);
std::optional<RatVector> solve_rational(const IntMatrix& a, std::span<const Rational> v);

}  // namespace explab

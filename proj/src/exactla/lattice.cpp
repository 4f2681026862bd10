#include "explab/exactla/lattice.hpp"

#include <string>

namespace explab {

LatticeBasis::LatticeBasis(IntMatrix generators) : generators_(std::move(generators)) {
  HermiteForm form = explab::hnf(generators_);
  hnf_ = std::move(form.h);
  pivots_ = std::move(form.pivot_cols);
  rank_ = form.rank;
}

LatticeBasis LatticeBasis::zero(std::size_t ambient) {
  return LatticeBasis(IntMatrix(0, ambient));
}

IntMatrix LatticeBasis::basis() const {
  IntMatrix out(rank_, hnf_.cols());
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < hnf_.cols(); ++j) out(i, j) = hnf_(i, j);
  return out;
}

std::optional<IntVector> LatticeBasis::coordinates(std::span<const Integer> x) const {
  if (x.size() != ambient_dim()) {
    throw DimensionError("vector of length " + std::to_string(x.size()) +
                         " tested against a lattice in dimension " +
                         std::to_string(ambient_dim()));
  }
  IntVector residual(x.begin(), x.end());
  IntVector coords(rank_);
  for (std::size_t r = 0; r < rank_; ++r) {
    const std::size_t c = pivots_[r];
    if (residual[c].is_zero()) continue;
    if (!(residual[c] % hnf_(r, c)).is_zero()) return std::nullopt;
    coords[r] = residual[c] / hnf_(r, c);
    for (std::size_t j = c; j < residual.size(); ++j) {
      if (!hnf_(r, j).is_zero()) residual[j] -= coords[r] * hnf_(r, j);
    }
  }
  if (!is_zero_vector(residual)) return std::nullopt;
  return coords;
}

bool LatticeBasis::contains(std::span<const Integer> x) const {
  return coordinates(x).has_value();
}

bool LatticeBasis::same_lattice(const LatticeBasis& other) const {
  if (ambient_dim() != other.ambient_dim()) return false;
  for (std::size_t i = 0; i < generators_.rows(); ++i)
    if (!other.contains(generators_.row(i))) return false;
  for (std::size_t i = 0; i < other.generators_.rows(); ++i)
    if (!contains(other.generators_.row(i))) return false;
  return true;
}

bool lattice_member(const LatticeBasis& lattice, std::span<const Integer> x) {
  return lattice.contains(x);
}

PreimageSolver::PreimageSolver(IntMatrix a) : a_(std::move(a)), form_(hnf(a_.transpose())) {
  const std::size_t n = a_.cols();
  IntMatrix kernel_rows(n - form_.rank, n);
  for (std::size_t i = form_.rank; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) kernel_rows(i - form_.rank, j) = form_.u(i, j);
  // Canonical generators: the Hermite basis of the kernel lattice.
  kernel_ = LatticeBasis(LatticeBasis(std::move(kernel_rows)).basis());
}

std::optional<IntVector> PreimageSolver::solve_integer(std::span<const Integer> v) const {
  if (v.size() != a_.rows()) {
    throw DimensionError("target of length " + std::to_string(v.size()) +
                         " for a matrix with " + std::to_string(a_.rows()) + " rows");
  }
  const IntMatrix& h = form_.h;
  IntVector residual(v.begin(), v.end());
  IntVector x(a_.cols());
  for (std::size_t r = 0; r < form_.rank; ++r) {
    const std::size_t c = form_.pivot_cols[r];
    if (residual[c].is_zero()) continue;
    if (!(residual[c] % h(r, c)).is_zero()) return std::nullopt;
    const Integer y = residual[c] / h(r, c);
    for (std::size_t j = c; j < residual.size(); ++j) {
      if (!h(r, j).is_zero()) residual[j] -= y * h(r, j);
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!form_.u(r, j).is_zero()) x[j] += y * form_.u(r, j);
    }
  }
  if (!is_zero_vector(residual)) return std::nullopt;
  return x;
}

std::optional<RatVector> PreimageSolver::solve_rational(std::span<const Rational> v) const {
  if (v.size() != a_.rows()) {
    throw DimensionError("target of length " + std::to_string(v.size()) +
                         " for a matrix with " + std::to_string(a_.rows()) + " rows");
  }
  const IntMatrix& h = form_.h;
  RatVector residual(v.begin(), v.end());
  RatVector x(a_.cols());
  for (std::size_t r = 0; r < form_.rank; ++r) {
    const std::size_t c = form_.pivot_cols[r];
    if (residual[c].is_zero()) continue;
    const Rational y = residual[c] / Rational(h(r, c));
    for (std::size_t j = c; j < residual.size(); ++j) {
      if (!h(r, j).is_zero()) residual[j] -= y * Rational(h(r, j));
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!form_.u(r, j).is_zero()) x[j] += y * Rational(form_.u(r, j));
    }
  }
  if (!is_zero_vector(residual)) return std::nullopt;
  return x;
}

LatticeBasis integer_kernel_basis(const IntMatrix& a) { return PreimageSolver(a).kernel(); }

std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Integer> v) {
  return PreimageSolver(a).solve_integer(v);
}

std::optional<RatVector> solve_rational(const IntMatrix& a, std::span<const Rational> v) {
  return PreimageSolver(a).solve_rational(v);
}

}  // namespace explab

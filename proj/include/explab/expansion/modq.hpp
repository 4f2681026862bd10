#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "explab/exactla/matrix.hpp"
#include "explab/expansion/expansion.hpp"

namespace explab {

using ModQVector = std::vector<std::uint32_t>;

// Trial division.
bool is_prime(std::uint64_t q);

class ModQMatrix {
 public:
  // Throws NotPrimeError unless q is a prime below 2^31; entries must already
  // be reduced into [0, q).
  ModQMatrix(std::uint32_t q, std::size_t rows, std::size_t cols, ModQVector entries);

  std::uint32_t modulus() const noexcept { return q_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ModQVector apply(std::span<const std::uint32_t> x) const;

 private:
  std::uint32_t q_;
  std::size_t rows_;
  std::size_t cols_;
  ModQVector data_;
};

ModQMatrix reduce_mod_q(const IntMatrix& a, std::uint32_t q);
ModQVector reduce_mod_q(std::span<const Integer> v, std::uint32_t q);
// [i] -> i with i in {0, ..., q-1}.
IntVector lift_section(std::span<const std::uint32_t> u);

std::size_t hamming_weight(std::span<const std::uint32_t> v);

struct ModQLimits {
  std::uint64_t coset_cap = 10000000;  // q^(dim ker) per target
  std::uint64_t image_cap = 1000000;   // q^rank for the global value
  // The global value sweeps all of Z_q^n at once when q^n is within this.
  std::uint64_t sweep_cap = 10000000;
};

// Gaussian elimination of A~ over Z_q.
class ModQSystem {
 public:
  explicit ModQSystem(ModQMatrix a);

  const ModQMatrix& matrix() const noexcept { return a_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  const std::vector<ModQVector>& kernel() const noexcept { return kernel_; }
  const std::vector<std::size_t>& pivot_cols() const noexcept { return pivots_; }

  // Some u with A~ u = w, free coordinates zero.
  std::optional<ModQVector> solve(std::span<const std::uint32_t> w) const;

 private:
  ModQMatrix a_;
  std::vector<ModQVector> rref_;  // rank rows of length cols
  std::vector<std::size_t> pivots_;
  std::vector<ModQVector> transform_;  // rank rows of length rows: rref_ = T * A~
  std::vector<ModQVector> left_null_;  // rows y with y A~ = 0
  std::vector<ModQVector> kernel_;
};

// Minimum Hamming weight over the coset u0 + ker(A~), divided by the weight of
// w. Exhaustive over q^(dim ker) kernel elements.
ExpansionResult xi_zq_at(const ModQMatrix& a, std::span<const std::uint32_t> w,
                         const ModQLimits& limits = {});
GlobalExpansion xi_zq_global(const ModQMatrix& a, const ModQLimits& limits = {});

// Minimum-weight coset representatives for every image vector, from one
// sweep of Z_q^n. Used when q^n is within the coset cap.
class CosetLeaders {
 public:
  CosetLeaders(const ModQMatrix& a, std::uint64_t cap);

  struct Entry {
    std::size_t weight;
    ModQVector leader;
  };

  // Image vectors in first-reached sweep order.
  const std::vector<ModQVector>& images() const noexcept { return images_; }
  const Entry& at(std::span<const std::uint32_t> w) const;

 private:
  std::uint64_t encode(std::span<const std::uint32_t> w) const;

  std::uint32_t q_;
  std::vector<ModQVector> images_;
  std::unordered_map<std::uint64_t, Entry> table_;
};

}  // namespace explab

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "explab/errors.hpp"

namespace explab {

// A subset I = {i_1 < ... < i_m} of {1, ..., ambient}. Indices are 1-based.
class CoordSubset {
 public:
  CoordSubset() = default;
  CoordSubset(std::size_t ambient, std::vector<std::size_t> indices);

  static CoordSubset full(std::size_t ambient);
  // Subset whose bit j (0-based) selects coordinate j + 1.
  static CoordSubset from_mask(std::size_t ambient, unsigned long long mask);

  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }

  // 0-based positions, convenient for Matrix::select_cols.
  std::vector<std::size_t> zero_based() const;

  std::string to_string() const;  // "{1,3}"

  friend bool operator==(const CoordSubset&, const CoordSubset&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<std::size_t> indices_;
};

// p_I(x) = (x_{i_1}, ..., x_{i_m}).
template <typename T>
std::vector<T> project(const CoordSubset& subset, std::span<const T> x) {
  if (x.size() != subset.ambient()) {
    throw DimensionError("projection onto a subset of {1.." + std::to_string(subset.ambient()) +
                         "} applied to a vector of length " + std::to_string(x.size()));
  }
  std::vector<T> out;
  out.reserve(subset.size());
  for (std::size_t i : subset.indices()) out.push_back(x[i - 1]);
  return out;
}

template <typename T>
std::vector<T> project(const CoordSubset& subset, const std::vector<T>& x) {
  return project(subset, std::span<const T>(x));
}

}  // namespace explab

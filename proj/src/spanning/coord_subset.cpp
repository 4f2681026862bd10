#include "explab/spanning/coord_subset.hpp"

namespace explab {

CoordSubset::CoordSubset(std::size_t ambient, std::vector<std::size_t> indices)
    : ambient_(ambient), indices_(std::move(indices)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] < 1 || indices_[k] > ambient_) {
      throw DimensionError("subset index " + std::to_string(indices_[k]) +
                           " outside {1.." + std::to_string(ambient_) + "}");
    }
    if (k > 0 && indices_[k] <= indices_[k - 1]) {
      throw DimensionError("subset indices must be strictly increasing");
    }
  }
}

CoordSubset CoordSubset::full(std::size_t ambient) {
  std::vector<std::size_t> idx(ambient);
  for (std::size_t i = 0; i < ambient; ++i) idx[i] = i + 1;
  return CoordSubset(ambient, std::move(idx));
}

CoordSubset CoordSubset::from_mask(std::size_t ambient, unsigned long long mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < ambient; ++i)
    if (mask >> i & 1ULL) idx.push_back(i + 1);
  return CoordSubset(ambient, std::move(idx));
}

std::vector<std::size_t> CoordSubset::zero_based() const {
  std::vector<std::size_t> out;
  out.reserve(indices_.size());
  for (std::size_t i : indices_) out.push_back(i - 1);
  return out;
}

std::string CoordSubset::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(indices_[k]);
  }
  return out + "}";
}

}  // namespace explab

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "explab/exactla/matrix.hpp"
#include "explab/spanning/coord_subset.hpp"

namespace explab {

struct SpanningWitness {
  CoordSubset subset;
  // Integer point of the rational span of p_I(generators) outside their Z-span.
  IntVector vector;
};

struct SpanningVerdict {
  bool spanned = true;
  std::optional<SpanningWitness> witness;
  std::uint64_t subsets_checked = 0;
};

// Generator rows projected onto I: the k x |I| matrix with rows p_I(v_j).
IntMatrix project_rows(const IntMatrix& generators, const CoordSubset& subset);

// True iff <p_I(v_j)>_Z equals the integer points of <p_I(v_j)>_Q, decided by
// all nonzero Smith invariant factors being 1.
bool saturated_for(const IntMatrix& generators, const CoordSubset& subset);

// For a subset where saturated_for fails, an integer vector in the rational
// span but not the integer span of the projected rows; nullopt otherwise.
std::optional<IntVector> saturation_witness(const IntMatrix& generators,
                                            const CoordSubset& subset);

inline constexpr std::uint64_t kDefaultMaxSubsets = (std::uint64_t{1} << 22) - 1;

struct SpanningOptions {
  // Refuse inputs needing more than this many subset checks (2^n - 1).
  // nullopt means: EXPANSION_LAB_MAX_SUBSETS if set, else kDefaultMaxSubsets.
  std::optional<std::uint64_t> max_subsets;
};

// Limit in effect for the given options after consulting the environment.
std::uint64_t effective_max_subsets(const SpanningOptions& options);

// Checks every nonempty I, by increasing size and lexicographically within a
// size, and stops at the first failure. Throws CapExceededError above the cap.
SpanningVerdict is_integrally_spanned(const IntMatrix& generators,
                                      const SpanningOptions& options = {});

// u * generators; throws NotUnimodularError unless u is unimodular.
IntMatrix respan(const IntMatrix& generators, const IntMatrix& u);

}  // namespace explab

#include "explab/spanning/spanning.hpp"

#include <cstdlib>
#include <string>

#include "explab/exactla/lattice.hpp"
#include "explab/exactla/normal_form.hpp"

namespace explab {
namespace {

// First diagonal position of the Smith form with an invariant factor > 1.
std::optional<std::size_t> torsion_position(const SnfDecomposition& s) {
  const auto diag = s.diagonal();
  for (std::size_t r = 0; r < diag.size(); ++r) {
    if (diag[r].is_zero()) break;
    if (!diag[r].is_one()) return r;
  }
  return std::nullopt;
}

// Advances idx to the next size-k combination of {0..n-1}; false at the end.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

IntMatrix project_rows(const IntMatrix& generators, const CoordSubset& subset) {
  if (generators.cols() != subset.ambient()) {
    throw DimensionError("generators of dimension " + std::to_string(generators.cols()) +
                         " projected onto a subset of {1.." +
                         std::to_string(subset.ambient()) + "}");
  }
  return generators.select_cols(subset.zero_based());
}

bool saturated_for(const IntMatrix& generators, const CoordSubset& subset) {
  return !torsion_position(snf(project_rows(generators, subset))).has_value();
}

std::optional<IntVector> saturation_witness(const IntMatrix& generators,
                                            const CoordSubset& subset) {
  const IntMatrix p = project_rows(generators, subset);
  const SnfDecomposition s = snf(p);
  const auto r = torsion_position(s);
  if (!r) return std::nullopt;
  // Rows of P v span d_1 e_1, ..., d_t e_t, so row r of v^-1 is an integer
  // vector of the rational span that the lattice misses.
  const IntVector x = unimodular_inverse(s.v).row_vector(*r);
  // Reduce modulo the lattice to the representative sum {c_j} p_j with
  // fractional coefficients; it stays integral and outside the lattice.
  const auto c = solve_rational(p.transpose(), to_rational(x));
  if (!c) return x;
  RatVector reduced(p.cols());
  for (std::size_t j = 0; j < p.rows(); ++j) {
    const Rational frac = (*c)[j].fractional_part();
    if (frac.is_zero()) continue;
    for (std::size_t i = 0; i < p.cols(); ++i) reduced[i] += frac * Rational(p(j, i));
  }
  auto out = to_integer(reduced);
  return out ? *out : x;
}

std::uint64_t effective_max_subsets(const SpanningOptions& options) {
  if (options.max_subsets) return *options.max_subsets;
  if (const char* env = std::getenv("EXPANSION_LAB_MAX_SUBSETS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultMaxSubsets;
}

SpanningVerdict is_integrally_spanned(const IntMatrix& generators,
                                      const SpanningOptions& options) {
  const std::size_t n = generators.cols();
  const std::uint64_t cap = effective_max_subsets(options);
  if (n >= 64 || ((std::uint64_t{1} << n) - 1) > cap) {
    throw CapExceededError("integral-spanning check over n = " + std::to_string(n) +
                           " coordinates needs 2^n - 1 subsets, above the limit of " +
                           std::to_string(cap) +
                           " (raise it with EXPANSION_LAB_MAX_SUBSETS)");
  }
  SpanningVerdict verdict;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      ++verdict.subsets_checked;
      std::vector<std::size_t> one_based(idx);
      for (auto& i : one_based) ++i;
      CoordSubset subset(n, std::move(one_based));
      if (auto w = saturation_witness(generators, subset)) {
        verdict.spanned = false;
        verdict.witness = SpanningWitness{std::move(subset), std::move(*w)};
        return verdict;
      }
    } while (next_combination(idx, n));
  }
  return verdict;
}

IntMatrix respan(const IntMatrix& generators, const IntMatrix& u) {
  if (u.rows() != u.cols() || u.cols() != generators.rows()) {
    throw DimensionError("respan needs a " + std::to_string(generators.rows()) + "x" +
                         std::to_string(generators.rows()) + " matrix");
  }
  if (!is_unimodular(u)) throw NotUnimodularError("respan matrix is not unimodular");
  return u * generators;
}

}  // namespace explab

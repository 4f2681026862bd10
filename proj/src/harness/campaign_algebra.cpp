#include <cstdlib>
#include <limits>
#include <string>

#include "explab/complexes/graph.hpp"
#include "explab/errors.hpp"
#include "explab/exactla/lattice.hpp"
#include "explab/exactla/normal_form.hpp"
#include "explab/expansion/expansion.hpp"
#include "explab/harness/campaigns.hpp"
#include "explab/harness/generators.hpp"
#include "explab/harness/json_util.hpp"
#include "explab/spanning/spanning.hpp"

namespace explab {
namespace {

bool hermite_ok(const IntMatrix& m, std::string& why) {
  const HermiteForm f = hnf(m);
  if (!(f.u * m == f.h)) return why = "H != U M", false;
  if (!is_unimodular(f.u)) return why = "HNF transform not unimodular", false;
  for (std::size_t r = 0; r < f.h.rows(); ++r) {
    const std::size_t lead = r < f.rank ? f.pivot_cols[r] : f.h.cols();
    for (std::size_t j = 0; j < lead; ++j)
      if (!f.h(r, j).is_zero()) return why = "HNF not in echelon form", false;
    if (r >= f.rank) continue;
    if (r > 0 && lead <= f.pivot_cols[r - 1]) return why = "HNF pivots not increasing", false;
    const Integer& p = f.h(r, lead);
    if (p.sign() <= 0) return why = "HNF pivot not positive", false;
    for (std::size_t i = 0; i < r; ++i)
      if (f.h(i, lead).sign() < 0 || !(f.h(i, lead) < p)) return why = "HNF not reduced", false;
  }
  return true;
}

bool smith_ok(const IntMatrix& m, std::string& why) {
  const SnfDecomposition s = snf(m);
  if (!(s.u * m * s.v == s.d)) return why = "D != U M V", false;
  if (!is_unimodular(s.u) || !is_unimodular(s.v)) return why = "SNF transform not unimodular", false;
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j && !s.d(i, j).is_zero()) return why = "SNF not diagonal", false;
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i].sign() < 0) return why = "negative invariant factor", false;
    if (i + 1 == diag.size()) break;
    if (diag[i].is_zero() ? !diag[i + 1].is_zero() : !(diag[i + 1] % diag[i]).is_zero())
      return why = "invariant factors do not divide", false;
  }
  return true;
}

bool kernel_ok(const IntMatrix& m, std::string& why) {
  const IntMatrix k = integer_kernel_basis(m).generators();
  if (k.rows() + rank(m) != m.cols()) return why = "kernel has the wrong rank", false;
  if (!(m * k.transpose()).is_zero()) return why = "kernel vector not annihilated", false;
  for (const auto& d : snf(k).diagonal())
    if (!d.is_one()) return why = "kernel lattice not saturated", false;
  return true;
}

// min ||x||_1 over integer x with A x = v and ||x||_1 <= radius.
std::int64_t exhaustive_min_norm(const IntMatrix& a, const IntVector& v, std::int64_t radius) {
  const std::size_t n = a.cols();
  std::vector<std::int64_t> x(n, -radius);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (;;) {
    std::int64_t norm = 0;
    for (auto e : x) norm += std::llabs(e);
    if (norm <= radius && norm < best) {
      bool hit = true;
      for (std::size_t i = 0; i < a.rows() && hit; ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < n; ++j) s += a(i, j).to_int64() * x[j];
        hit = s == v[i].to_int64();
      }
      if (hit) best = norm;
    }
    std::size_t k = 0;
    while (k < n && x[k] == radius) x[k++] = -radius;
    if (k == n) return best;
    ++x[k];
  }
}

}  // namespace

CampaignReport campaign_incidence_kernel(std::uint64_t seed, std::size_t count) {
  CampaignReport report;
  report.campaign = "incidence-kernel";
  report.seed = seed;
  report.parameters = {{"count", count}};
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    InstanceRecord& rec = report.add("random " + std::to_string(i));
    const IntMatrix a = random_incidence_matrix(rng);
    rec.data["matrix"] = to_json(a);
    try {
      const LatticeBasis by_components = incidence_kernel_basis(a);
      const LatticeBasis by_hermite = integer_kernel_basis(a);
      const IntMatrix image = LatticeBasis(a.transpose()).basis();
      const bool same = by_components.same_lattice(by_hermite);
      const bool kernel_spanned = is_integrally_spanned(by_hermite.generators()).spanned;
      const bool image_spanned = is_integrally_spanned(image).spanned;
      rec.data["component_basis"] = to_json(by_components.generators());
      rec.data["hermite_basis"] = to_json(by_hermite.generators());
      rec.data["image_basis"] = to_json(image);
      rec.data["same_lattice"] = same;
      rec.data["kernel_spanned"] = kernel_spanned;
      rec.data["image_spanned"] = image_spanned;
      if (!same || !kernel_spanned || !image_spanned) {
        rec.verdict = Verdict::fail;
        rec.note = !same ? "kernel bases differ" : !kernel_spanned ? "kernel not spanned"
                                                                   : "image not spanned";
      }
    } catch (const CapExceededError& e) {
      rec.verdict = Verdict::skipped;
      rec.note = e.what();
    }
  }
  return report;
}

CampaignReport campaign_substrate(std::uint64_t seed, std::size_t count,
                                  std::size_t tiny_count) {
  CampaignReport report;
  report.campaign = "substrate";
  report.seed = seed;
  report.parameters = {{"count", count}, {"tiny_count", tiny_count}};
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    InstanceRecord& rec = report.add("normal forms " + std::to_string(i));
    const auto rows = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    const auto cols = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    const IntMatrix m = random_integer_matrix(rng, rows, cols, -5, 5);
    rec.data["matrix"] = to_json(m);
    std::string why;
    if (!hermite_ok(m, why) || !smith_ok(m, why) || !kernel_ok(m, why)) {
      rec.verdict = Verdict::fail;
      rec.note = why;
    }
  }
  for (std::size_t i = 0; i < tiny_count; ++i) {
    InstanceRecord& rec = report.add("box search " + std::to_string(i));
    IntMatrix a;
    IntVector u, v;
    do {
      const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 2));
      const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
      a = random_integer_matrix(rng, m, n, -3, 3);
      u = random_integer_vector(rng, n, -2, 2);
      v = a * u;
    } while (is_zero_vector(v));
    // u is a preimage, so the minimum lies in the L1 ball of radius ||u||_1.
    const std::int64_t best = exhaustive_min_norm(a, v, l1_norm(u).to_int64());
    const Rational expected(Integer(best), l1_norm(v));
    const ExpansionResult got = xi_z_at(a, v);
    rec.data = {{"matrix", to_json(a)},
                {"target", to_json(v)},
                {"xi_z", to_json(got.value)},
                {"exhaustive", to_json(expected)}};
    if (got.value != expected) {
      rec.verdict = Verdict::fail;
      rec.note = "xi_z_at disagrees with exhaustive search";
    }
  }
  return report;
}

}  // namespace explab

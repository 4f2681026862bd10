#include <map>
#include <string>

#include "explab/errors.hpp"
#include "explab/expansion/modq.hpp"
#include "explab/harness/campaigns.hpp"
#include "explab/harness/generators.hpp"
#include "explab/harness/json_util.hpp"

namespace explab {
namespace {

nlohmann::json to_json_mod(std::span<const std::uint32_t> v) {
  nlohmann::json out = nlohmann::json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

void run_prime(InstanceRecord& rec, const IntMatrix& a, std::uint32_t q) {
  rec.data = {{"matrix", to_json(a)}, {"q", q}};
  try {
    const ExpansionSolver solver(a);
    const GlobalExpansion z = solver.xi_z_global();
    const ModQMatrix reduced = reduce_mod_q(a, q);
    const GlobalExpansion zq = xi_zq_global(reduced);
    const Rational bound = Rational(q - 1) * z.value;
    rec.data["xi_z"] = to_json(z.value);
    rec.data["xi_z_exact"] = z.exact;
    rec.data["xi_z_target"] = to_json(z.attaining_target);
    rec.data["xi_zq"] = to_json(zq.value);
    rec.data["xi_zq_target"] = to_json(zq.attaining_target);
    if (!z.exact) {
      rec.verdict = Verdict::skipped;
      rec.note = "Xi_Z(A) not computed exactly";
      return;
    }
    if (bound < zq.value) {
      rec.verdict = Verdict::fail;
      rec.note = "global inequality fails";
      return;
    }

    const ModQLimits limits;
    const CosetLeaders leaders(reduced, limits.sweep_cap);
    std::size_t checked = 0;
    for (const auto& w : leaders.images()) {
      const std::size_t w_weight = hamming_weight(w);
      if (w_weight == 0) continue;
      const auto& entry = leaders.at(w);
      const IntVector v = a * lift_section(entry.leader);
      const Rational left = Rational(q - 1) * solver.xi_z_at(v).value;
      const Rational right(Integer(entry.weight), Integer(w_weight));
      ++checked;
      if (left < right) {
        rec.verdict = Verdict::fail;
        rec.note = "per-witness inequality fails";
        rec.data["witness"] = {{"w", to_json_mod(w)},
                               {"u", to_json_mod(entry.leader)},
                               {"target", to_json(v)},
                               {"left", to_json(left)},
                               {"right", to_json(right)}};
        return;
      }
    }
    rec.data["images_checked"] = checked;
  } catch (const CapExceededError& e) {
    rec.verdict = Verdict::skipped;
    rec.note = e.what();
  } catch (const UndefinedSupremumError& e) {
    rec.verdict = Verdict::skipped;
    rec.note = e.what();
  }
}

}  // namespace

CampaignReport campaign_modq(std::uint64_t seed, std::size_t count,
                             const std::vector<std::uint32_t>& primes) {
  CampaignReport report;
  report.campaign = "modq";
  report.seed = seed;
  report.parameters = {{"count", count}, {"primes", primes}};
  if (primes.empty()) return report;
  for (auto q : primes)
    if (!is_prime(q)) throw NotPrimeError(std::to_string(q) + " is not prime");
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    // Zero matrices have no nonzero image, so neither side is defined.
    IntMatrix a = random_incidence_matrix(rng);
    while (a.is_zero()) a = random_incidence_matrix(rng);
    for (auto q : primes)
      run_prime(report.add("random " + std::to_string(i) + " q=" + std::to_string(q)), a, q);
  }
  return report;
}

}  // namespace explab

#include <string>

#include "explab/complexes/graph.hpp"
#include "explab/complexes/presentation.hpp"
#include "explab/errors.hpp"
#include "explab/expansion/modq.hpp"
#include "explab/harness/campaigns.hpp"
#include "explab/harness/json_util.hpp"
#include "explab/spanning/spanning.hpp"
#include "targets.hpp"

namespace explab {
namespace {

void run_family_member(InstanceRecord& rec, const GroupPresentation& p,
                       const TargetSampling& sampling, Rng& rng) {
  const IntMatrix d1 = presentation_d1(p);
  rec.data = {{"presentation", format_presentation(p)}, {"d1", to_json(d1)}};
  const bool shaped = is_incidence_shaped(d1);
  rec.data["row_shape"] = shaped;
  if (!shaped) {
    rec.verdict = Verdict::fail;
    rec.note = "d1 is not incidence-shaped";
    return;
  }
  try {
    const ExpansionSolver solver(d1);
    const SpanningVerdict span = is_integrally_spanned(solver.kernel());
    rec.data["kernel_spanned"] = span.spanned;
    const auto check = detail::check_equality(solver, detail::ray_targets(d1, sampling, rng));
    rec.data["equality"] = detail::summary(check);

    const GlobalExpansion q = solver.xi_q_global();
    const GlobalExpansion z = solver.xi_z_global();
    const GlobalExpansion z2 = xi_zq_global(reduce_mod_q(d1, 2));
    rec.data["xi_q"] = to_json(q.value);
    rec.data["xi_z"] = to_json(z.value);
    rec.data["xi_z_exact"] = z.exact;
    rec.data["xi_z2"] = to_json(z2.value);
    if (!span.spanned || !check.ok || !z.exact || q.value != z.value || z.value < z2.value) {
      rec.verdict = Verdict::fail;
      rec.note = !span.spanned ? "kernel not integrally spanned"
                 : !check.ok   ? "Xi_Q != Xi_Z at a target"
                 : !z.exact    ? "Xi_Z(d1) not exact"
                 : q.value != z.value ? "global Xi_Q != Xi_Z"
                                      : "Xi_Z(d1) < Xi_Z2(d1)";
    }
  } catch (const CapExceededError& e) {
    rec.verdict = Verdict::skipped;
    rec.note = e.what();
  } catch (const UndefinedSupremumError& e) {
    rec.verdict = Verdict::skipped;
    rec.note = e.what();
  }
}

}  // namespace

CampaignReport campaign_presentations(FamilyRange braid, FamilyRange steinberg,
                                      const TargetSampling& sampling) {
  CampaignReport report;
  report.campaign = "presentations";
  report.parameters = {{"braid", {braid.lo, braid.hi}},
                       {"steinberg", {steinberg.lo, steinberg.hi}},
                       {"box", sampling.box}};
  Rng rng(0);
  for (std::size_t n = braid.lo; n <= braid.hi; ++n)
    run_family_member(report.add("B_" + std::to_string(n)), braid_presentation(n), sampling, rng);
  for (std::size_t n = steinberg.lo; n <= steinberg.hi; ++n)
    run_family_member(report.add("St_" + std::to_string(n)), steinberg_presentation(n),
                      sampling, rng);
  return report;
}

}  // namespace explab

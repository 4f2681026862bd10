#include <string>
#include <utility>

#include "explab/complexes/graph.hpp"
#include "explab/complexes/presentation.hpp"
#include "explab/errors.hpp"
#include "explab/harness/campaigns.hpp"
#include "explab/harness/json_util.hpp"
#include "explab/spanning/spanning.hpp"
#include "targets.hpp"

namespace explab {
namespace {

std::vector<std::pair<std::string, IntMatrix>> equality_fixtures() {
  return {
      {"edge", IntMatrix::from_rows({{1, -1}})},
      {"path3", IntMatrix::from_rows({{1, -1, 0}, {0, 1, -1}})},
      {"loop-and-edge", IntMatrix::from_rows({{1, 0}, {1, -1}})},
      {"triangle", IntMatrix::from_rows({{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}})},
      {"two-components", IntMatrix::from_rows({{1, -1, 0, 0}, {0, 0, 1, -1}, {0, 0, 0, -1}})},
      {"zero-row", IntMatrix::from_rows({{0, 0}})},
      {"b4-d1", presentation_d1(braid_presentation(4))},
      {"st3-d1", presentation_d1(steinberg_presentation(3))},
  };
}

void run_instance(InstanceRecord& rec, const IntMatrix& a, const TargetSampling& sampling,
                  Rng& rng) {
  rec.data["matrix"] = to_json(a);
  try {
    require_incidence_shape(a);
    const ExpansionSolver solver(a);
    const SpanningVerdict span = is_integrally_spanned(solver.kernel());
    rec.data["kernel"] = to_json(solver.kernel());
    rec.data["kernel_spanned"] = span.spanned;
    if (!span.spanned) {
      rec.verdict = Verdict::fail;
      rec.note = "kernel not integrally spanned at " + span.witness->subset.to_string();
      return;
    }
    const auto check = detail::check_equality(solver, detail::ray_targets(a, sampling, rng));
    rec.data["equality"] = detail::summary(check);
    if (!check.ok) {
      rec.verdict = Verdict::fail;
      rec.note = "Xi_Q != Xi_Z";
    }
  } catch (const CapExceededError& e) {
    rec.verdict = Verdict::skipped;
    rec.note = e.what();
  }
}

}  // namespace

CampaignReport campaign_equality(std::uint64_t seed, std::size_t count,
                                 const TargetSampling& sampling) {
  CampaignReport report;
  report.campaign = "equality";
  report.seed = seed;
  report.parameters = {{"count", count},
                       {"box", sampling.box},
                       {"box_limit", sampling.box_limit},
                       {"sample_count", sampling.sample_count}};
  Rng rng(seed);

  for (const auto& [name, a] : equality_fixtures())
    run_instance(report.add("fixture " + name), a, sampling, rng);

  {
    InstanceRecord& rec = report.add("control [[1,2]] at (1)");
    const IntMatrix a = IntMatrix::from_rows({{1, 2}});
    const IntVector v{1};
    const ExpansionSolver solver(a);
    const Rational q = solver.xi_q_at(v).value;
    const Rational z = solver.xi_z_at(v).value;
    rec.data = {{"matrix", to_json(a)}, {"target", to_json(v)},
                {"xi_q", to_json(q)}, {"xi_z", to_json(z)}};
    if (!(q < z)) {
      rec.verdict = Verdict::fail;
      rec.note = "expected a strict gap";
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    const IntMatrix a = random_incidence_matrix(rng);
    run_instance(report.add("random " + std::to_string(i)), a, sampling, rng);
  }
  return report;
}

}  // namespace explab

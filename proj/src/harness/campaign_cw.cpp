#include <string>

#include "explab/complexes/graph.hpp"
#include "explab/complexes/presentation.hpp"
#include "explab/errors.hpp"
#include "explab/harness/campaigns.hpp"
#include "explab/harness/json_util.hpp"
#include "explab/spanning/spanning.hpp"
#include "targets.hpp"

namespace explab {
namespace {

Graph tree_from_parents(const std::vector<std::size_t>& parent) {
  Graph g{parent.size() + 1, {}};
  for (std::size_t v = 0; v < parent.size(); ++v) g.add_edge(parent[v], v + 2);
  return g;
}

// Integer points of the rational span of the rows of m.
LatticeBasis saturation(const IntMatrix& m) {
  const IntMatrix orth = integer_kernel_basis(m).generators();
  return integer_kernel_basis(orth);
}

nlohmann::json check_map(const IntMatrix& d, const TargetSampling& sampling, Rng& rng,
                         bool& ok) {
  const ExpansionSolver solver(d);
  const SpanningVerdict span = is_integrally_spanned(solver.kernel());
  const auto check = detail::check_equality(solver, detail::ray_targets(d, sampling, rng));
  ok = ok && span.spanned && check.ok;
  nlohmann::json out = detail::summary(check);
  out["matrix"] = to_json(d);
  out["kernel_spanned"] = span.spanned;
  return out;
}

}  // namespace

std::vector<CochainComplex> default_cw_complexes() {
  std::vector<CochainComplex> out;
  Graph edge{2, {}};
  edge.add_edge(1, 2);
  out.push_back(graph_complex(edge, "edge"));
  out.push_back(graph_complex(tree_from_parents({1, 2, 3}), "path4"));
  out.push_back(graph_complex(tree_from_parents({1, 1, 1, 1}), "star5"));
  out.push_back(graph_complex(tree_from_parents({1, 1, 2, 2, 3, 5}), "tree7"));
  out.push_back(graph_complex(tree_from_parents({1, 2, 2, 4, 1, 6, 6}), "tree8"));
  Graph triangle{3, {}};
  triangle.add_edge(1, 2);
  triangle.add_edge(2, 3);
  triangle.add_edge(3, 1);
  out.push_back(graph_complex(triangle, IntMatrix::from_rows({{1, 1, 1}}), "filled-triangle"));
  out.push_back(presentation_complex(steinberg_presentation(3), "st3-presentation"));
  out.emplace_back(IntMatrix(1, 1), IntMatrix(0, 1), "circle");
  out.push_back(presentation_complex(braid_presentation(3), "b3-presentation"));
  return out;
}

CampaignReport campaign_cw(const std::vector<CochainComplex>& complexes,
                           const TargetSampling& sampling) {
  CampaignReport report;
  report.campaign = "cw";
  report.parameters = {{"complexes", complexes.size()}, {"box", sampling.box}};
  Rng rng(0);
  for (const auto& c : complexes) {
    InstanceRecord& rec = report.add(c.name().empty() ? "complex" : c.name());
    rec.data = {{"d0", to_json(c.d0())}, {"d1", to_json(c.d1())}};
    const bool trivial = h1_is_trivial(c);
    rec.data["h1_trivial"] = trivial;
    if (!trivial) {
      rec.verdict = Verdict::skipped;
      rec.note = "H^1 is nontrivial";
      continue;
    }
    try {
      const LatticeBasis ker = integer_kernel_basis(c.d1());
      const LatticeBasis image(c.d0().transpose());
      const bool same = ker.same_lattice(saturation(c.d0().transpose()));
      rec.data["kernel_equals_saturated_image"] = same;
      rec.data["image_saturated"] = ker.same_lattice(image);
      bool ok = same;
      rec.data["d0"] = check_map(c.d0(), sampling, rng, ok);
      rec.data["d1"] = check_map(c.d1(), sampling, rng, ok);
      if (!ok) {
        rec.verdict = Verdict::fail;
        rec.note = same ? "Xi_Q != Xi_Z or kernel not spanned" : "ker d1 != im d0";
      }
    } catch (const CapExceededError& e) {
      rec.verdict = Verdict::skipped;
      rec.note = e.what();
    }
  }
  return report;
}

}  // namespace explab

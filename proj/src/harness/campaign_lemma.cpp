#include <string>

#include "explab/errors.hpp"
#include "explab/expansion/expansion.hpp"
#include "explab/expansion/face_oracle.hpp"
#include "explab/harness/campaigns.hpp"
#include "explab/harness/generators.hpp"
#include "explab/harness/json_util.hpp"

namespace explab {
namespace {

Rational random_rational(Rng& rng) {
  return Rational(Integer(uniform_int(rng, -6, 6)), Integer(uniform_int(rng, 1, 4)));
}

// Kernel generators plus one random combination of them, so that minimal
// faces can have positive dimension.
IntMatrix redundant_generators(const IntMatrix& kernel, Rng& rng) {
  if (kernel.rows() == 0 || kernel.rows() >= 8) return kernel;
  IntMatrix z(kernel.rows() + 1, kernel.cols());
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    const Integer c = uniform_int(rng, -2, 2);
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
      z(i, j) = kernel(i, j);
      z(kernel.rows(), j) += c * kernel(i, j);
    }
  }
  return z;
}

}  // namespace

CampaignReport campaign_lemma_oracle(std::uint64_t seed, std::size_t count) {
  CampaignReport report;
  report.campaign = "lemma-oracle";
  report.seed = seed;
  report.parameters = {{"count", count}, {"points_per_face", 3}};
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    InstanceRecord& rec = report.add("random " + std::to_string(i));
    IntMatrix a;
    IntVector u, v;
    do {
      const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 4));
      const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 7));
      a = random_integer_matrix(rng, m, n, -3, 3);
      u = random_integer_vector(rng, n, -3, 3);
      v = a * u;
    } while (is_zero_vector(v));
    rec.data = {{"matrix", to_json(a)}, {"target", to_json(v)}, {"preimage", to_json(u)}};
    try {
      const ExpansionSolver solver(a);
      const Rational lp = solver.xi_q_at(v).value;
      const Rational oracle = solver.xi_q_at_face_oracle(v).value;
      rec.data["lp"] = to_json(lp);
      rec.data["face_oracle"] = to_json(oracle);

      const IntMatrix z = redundant_generators(solver.kernel(), rng);
      const RatVector base = to_rational(u);
      const FaceEnumeration faces = enumerate_minimal_faces(
          base, z, solver.limits().face_max_coords, solver.limits().face_max_generators);
      const Rational redundant = faces.faces[faces.best].value / Rational(l1_norm(v));
      rec.data["generators"] = to_json(z);
      rec.data["faces"] = faces.faces.size();
      rec.data["redundant_oracle"] = to_json(redundant);

      std::size_t evaluations = 0;
      for (const auto& face : faces.faces) {
        for (int p = 0; p < 3; ++p) {
          RatVector x = face.point;
          for (std::size_t d = 0; d < face.directions.rows(); ++d) {
            const Rational c = random_rational(rng);
            for (std::size_t j = 0; j < x.size(); ++j) x[j] += c * face.directions(d, j);
          }
          ++evaluations;
          const Rational f = l1_objective(base, z, x);
          if (f != face.value) {
            rec.verdict = Verdict::fail;
            rec.note = "objective not constant on a minimal face";
            rec.data["face"] = {{"zero_coords", face.zero_coords},
                                {"point", to_json(x)},
                                {"expected", to_json(face.value)},
                                {"found", to_json(f)}};
            break;
          }
        }
        if (rec.verdict == Verdict::fail) break;
      }
      rec.data["evaluations"] = evaluations;
      if (rec.verdict != Verdict::fail && (lp != oracle || lp != redundant)) {
        rec.verdict = Verdict::fail;
        rec.note = "LP and face enumeration disagree";
      }
    } catch (const CapExceededError& e) {
      rec.verdict = Verdict::skipped;
      rec.note = e.what();
    }
  }
  return report;
}

}  // namespace explab

#include "targets.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>

#include "explab/harness/json_util.hpp"

namespace explab::detail {
namespace {

using Small = std::vector<std::int64_t>;

Small normalized_ray(const Small& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  Small out(v);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] /= g;
  for (auto x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

}  // namespace

std::vector<IntVector> ray_targets(const IntMatrix& a, const TargetSampling& sampling,
                                   Rng& rng) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<Small> rows(m, Small(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j).to_int64();

  std::map<Small, std::pair<std::int64_t, Small>> best;
  Small u(n), v(m);
  auto visit = [&] {
    std::int64_t norm = 0;
    for (std::size_t i = 0; i < m; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += rows[i][j] * u[j];
      v[i] = s;
      norm += std::llabs(s);
    }
    if (norm == 0) return;
    auto [it, fresh] = best.try_emplace(normalized_ray(v), norm, v);
    if (!fresh && norm < it->second.first) it->second = {norm, v};
  };

  const std::int64_t b = sampling.box;
  const std::uint64_t side = static_cast<std::uint64_t>(2 * b + 1);
  std::uint64_t volume = 1;
  bool enumerate = true;
  for (std::size_t j = 0; j < n && enumerate; ++j) {
    volume *= side;
    enumerate = volume <= sampling.box_limit;
  }
  if (enumerate) {
    std::fill(u.begin(), u.end(), -b);
    for (;;) {
      visit();
      std::size_t k = 0;
      while (k < n && u[k] == b) u[k++] = -b;
      if (k == n) break;
      ++u[k];
    }
  } else {
    for (std::size_t s = 0; s < sampling.sample_count; ++s) {
      for (auto& x : u) x = uniform_int(rng, -b, b);
      visit();
    }
  }

  std::vector<IntVector> out;
  out.reserve(best.size());
  for (const auto& [ray, entry] : best) out.emplace_back(entry.second.begin(), entry.second.end());
  return out;
}

EqualityCheck check_equality(const ExpansionSolver& solver,
                             const std::vector<IntVector>& targets,
                             std::size_t branch_stride) {
  ExpansionLimits no_rounding = solver.limits();
  no_rounding.face_rounding = false;
  const ExpansionSolver branch_solver(solver.matrix(), no_rounding);

  EqualityCheck out;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const IntVector& v = targets[t];
    const ExpansionResult q = solver.xi_q_at(v);
    const ExpansionResult z = solver.xi_z_at(v);
    ++out.targets;
    if (z.solver == SolverTag::bnb) ++out.branched;
    else ++out.rounded;

    std::string problem;
    const auto w = to_integer(z.witness);
    if (!w || solver.matrix() * *w != v ||
        Rational(l1_norm(*w)) / Rational(l1_norm(v)) != z.value) {
      problem = "integer witness does not certify Xi_Z";
    } else if (q.value != z.value) {
      problem = "Xi_Q != Xi_Z";
    } else if (branch_stride != 0 && t % branch_stride == 0) {
      ++out.branch_only;
      const ExpansionResult b = branch_solver.xi_z_at(v);
      if (b.value != z.value) problem = "branch-and-bound disagrees with rounding";
    }
    if (!problem.empty()) {
      out.ok = false;
      out.mismatch = {{"problem", problem},
                      {"target", to_json(v)},
                      {"xi_q", to_json(q.value)},
                      {"xi_z", to_json(z.value)},
                      {"q_witness", to_json(q.witness)},
                      {"z_witness", to_json(z.witness)}};
      return out;
    }
  }
  return out;
}

nlohmann::json summary(const EqualityCheck& check) {
  nlohmann::json out = {{"targets", check.targets},
                        {"rounded", check.rounded},
                        {"branched", check.branched},
                        {"branch_only", check.branch_only}};
  if (!check.ok) out["mismatch"] = check.mismatch;
  return out;
}

}  // namespace explab::detail

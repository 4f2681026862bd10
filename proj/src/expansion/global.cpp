#include <map>
#include <random>
#include <set>
#include <string>

#include "explab/exactla/linear_solve.hpp"
#include "explab/expansion/expansion.hpp"
#include "explab/spanning/spanning.hpp"

namespace explab {
namespace {

// Number of subsets of an m-set of size 1..t, saturating at cap + 1.
std::uint64_t count_subsets(std::size_t m, std::size_t t, std::uint64_t cap) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (std::size_t s = 1; s <= t && s <= m; ++s) {
    // binom = C(m, s), computed incrementally; stop once it passes the cap.
    binom = binom * (m - s + 1) / s;
    total += binom;
    if (binom > cap || total > cap) return cap + 1;
  }
  return total;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

// Distinct nonzero targets A u for u in [-1,1]^n when 3^n is within the box
// limit, else seeded random u in [-2,2]^n.
std::vector<IntVector> sampled_targets(const IntMatrix& a, const ExpansionLimits& limits) {
  const std::size_t n = a.cols();
  std::set<IntVector> seen;
  std::vector<IntVector> out;
  auto add = [&](const IntVector& u) {
    IntVector v = a * u;
    if (is_zero_vector(v) || !seen.insert(v).second) return;
    out.push_back(std::move(v));
  };
  std::uint64_t box = 1;
  bool small = true;
  for (std::size_t i = 0; i < n && small; ++i) {
    box *= 3;
    small = box <= limits.sample_box_limit;
  }
  if (small) {
    IntVector u(n, Integer(-1));
    for (;;) {
      add(u);
      std::size_t j = 0;
      while (j < n && u[j] == Integer(1)) u[j++] = Integer(-1);
      if (j == n) break;
      u[j] += Integer(1);
    }
  } else {
    std::mt19937_64 rng(limits.sample_seed);
    std::uniform_int_distribution<int> dist(-2, 2);
    IntVector u(n);
    for (std::size_t s = 0; s < limits.sample_count; ++s) {
      for (auto& e : u) e = dist(rng);
      add(u);
    }
  }
  return out;
}

}  // namespace

GlobalExpansion ExpansionSolver::xi_q_global() const {
  const IntMatrix& a = matrix();
  if (a.is_zero()) throw UndefinedSupremumError();

  // Merge rows into classes of proportional rows: row_i = lambda_i * P_c with
  // P_c primitive. On the image, ||v||_1 = sum_c W_c |y_c| where y = P x and
  // W_c = sum of |lambda_i| over the class.
  std::map<IntVector, std::size_t> class_of;
  std::vector<IntVector> reps;
  std::vector<std::size_t> row_class(a.rows(), static_cast<std::size_t>(-1));
  std::vector<Integer> lambda(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const IntVector row = a.row_vector(i);
    if (is_zero_vector(row)) continue;
    IntVector prim = primitive_direction(row);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!prim[j].is_zero()) {
        lambda[i] = row[j] / prim[j];
        break;
      }
    }
    auto [it, inserted] = class_of.emplace(prim, reps.size());
    if (inserted) reps.push_back(std::move(prim));
    row_class[i] = it->second;
  }
  const std::size_t mc = reps.size();
  const IntMatrix p = IntMatrix::from_rows(reps);
  // Image of P is {y : L y = 0}.
  const RatMatrix l = nullspace(to_rational(p).transpose());
  const std::size_t max_support = l.rows() + 1;

  GlobalExpansion out;
  auto consider = [&](const RatVector& y) {
    RatVector v(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (row_class[i] != static_cast<std::size_t>(-1)) v[i] = Rational(lambda[i]) * y[row_class[i]];
    const IntVector target = primitive_direction(clear_denominators(v));
    const ExpansionResult r = xi_q_at(target);
    if (out.attaining_target.empty() || r.value > out.value) {
      out.value = r.value;
      out.attaining_target = target;
    }
  };

  if (count_subsets(mc, max_support, limits_.global_max_candidates) >
      limits_.global_max_candidates) {
    for (const IntVector& v : sampled_targets(a, limits_)) {
      const ExpansionResult r = xi_q_at(v);
      ++out.candidates;
      if (out.attaining_target.empty() || r.value > out.value) {
        out.value = r.value;
        out.attaining_target = primitive_direction(v);
      }
    }
    out.exact = false;
    return out;
  }

  // Extreme points of the unit ball of the image: supports T on which the
  // image restricted to T is a line spanned by a vector with full support T.
  for (std::size_t t = 1; t <= max_support && t <= mc; ++t) {
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    do {
      const RatMatrix ns = nullspace(l.select_cols(idx));
      if (ns.rows() != 1) continue;
      bool full = true;
      for (std::size_t j = 0; j < t && full; ++j) full = !ns(0, j).is_zero();
      if (!full) continue;
      ++out.candidates;
      RatVector y(mc);
      for (std::size_t j = 0; j < t; ++j) y[idx[j]] = ns(0, j);
      consider(y);
    } while (next_combination(idx, mc));
  }
  out.exact = true;
  return out;
}

GlobalExpansion ExpansionSolver::xi_z_global() const {
  const IntMatrix& a = matrix();
  if (a.is_zero()) throw UndefinedSupremumError();
  bool spanned = false;
  try {
    spanned = is_integrally_spanned(kernel()).spanned;
  } catch (const CapExceededError&) {
    spanned = false;
  }
  if (spanned) {
    GlobalExpansion q = xi_q_global();
    if (q.exact) {
      // Scale the target into the integer image; with a spanned kernel the
      // integral and rational values agree there.
      if (!preimages_.solve_integer(q.attaining_target)) {
        const RatVector w = *preimages_.solve_rational(to_rational(q.attaining_target));
        Integer den = 1;
        for (const auto& e : w) den = den / gcd(den, e.denominator()) * e.denominator();
        for (auto& e : q.attaining_target) e *= den;
      }
      return q;
    }
  }
  GlobalExpansion out;
  for (const IntVector& v : sampled_targets(a, limits_)) {
    const ExpansionResult r = xi_z_at(v);
    ++out.candidates;
    if (out.attaining_target.empty() || r.value > out.value) {
      out.value = r.value;
      out.attaining_target = v;
    }
  }
  out.exact = false;
  return out;
}

}  // namespace explab

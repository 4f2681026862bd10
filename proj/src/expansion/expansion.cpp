#include "explab/expansion/expansion.hpp"

#include <optional>
#include <string>
#include <utility>

#include "explab/exactla/linear_solve.hpp"
#include "explab/expansion/face_oracle.hpp"
#include "explab/expansion/simplex.hpp"

namespace explab {
namespace {

struct Bound {
  std::size_t var;
  Integer value;
  bool upper;  // x_var <= value, else x_var >= value
};

struct L1Optimum {
  bool feasible = false;
  Rational norm;  // f at x
  RatVector x;    // length k
};

// min_x sum_i |u_i + (Z^T x)_i| subject to optional integer bounds on x.
// Coordinates with a zero column in Z are constant and stay out of the LP.
L1Optimum minimize_l1(std::span<const Rational> u, const IntMatrix& z,
                      std::span<const Bound> bounds = {}) {
  const std::size_t n = u.size();
  const std::size_t k = z.rows();
  std::vector<std::size_t> active;
  Rational constant;
  for (std::size_t i = 0; i < n; ++i) {
    bool moves = false;
    for (std::size_t j = 0; j < k && !moves; ++j) moves = !z(j, i).is_zero();
    if (moves) {
      active.push_back(i);
    } else {
      constant += abs(u[i]);
    }
  }
  L1Optimum out;
  if (active.empty()) {
    for (const Bound& b : bounds) {
      if (b.upper ? b.value.sign() < 0 : b.value.sign() > 0) return out;
    }
    out.feasible = true;
    out.norm = constant;
    out.x.assign(k, Rational(0));
    return out;
  }

  const std::size_t na = active.size();
  const std::size_t xcol = 2 * na;
  const std::size_t scol = xcol + 2 * k;
  LpProblem lp{RatMatrix(na + bounds.size(), scol + bounds.size()),
               RatVector(na + bounds.size()), RatVector(scol + bounds.size())};
  for (std::size_t t = 0; t < na; ++t) {
    const std::size_t i = active[t];
    lp.a(t, 2 * t) = Rational(1);
    lp.a(t, 2 * t + 1) = Rational(-1);
    for (std::size_t j = 0; j < k; ++j) {
      if (z(j, i).is_zero()) continue;
      lp.a(t, xcol + 2 * j) = Rational(-z(j, i));
      lp.a(t, xcol + 2 * j + 1) = Rational(z(j, i));
    }
    lp.b[t] = u[i];
    lp.c[2 * t] = Rational(1);
    lp.c[2 * t + 1] = Rational(1);
  }
  for (std::size_t s = 0; s < bounds.size(); ++s) {
    const std::size_t r = na + s;
    lp.a(r, xcol + 2 * bounds[s].var) = Rational(1);
    lp.a(r, xcol + 2 * bounds[s].var + 1) = Rational(-1);
    lp.a(r, scol + s) = Rational(bounds[s].upper ? 1 : -1);
    lp.b[r] = Rational(bounds[s].value);
  }
  LpSolution sol = solve_lp(lp);
  if (sol.status == LpStatus::infeasible) return out;
  if (sol.status != LpStatus::optimal) {
    throw std::logic_error("L1 program reported unbounded; kernel rows are dependent");
  }
  out.feasible = true;
  out.norm = sol.value + constant;
  out.x.resize(k);
  for (std::size_t j = 0; j < k; ++j) out.x[j] = sol.x[xcol + 2 * j] - sol.x[xcol + 2 * j + 1];
  return out;
}

// Moves an optimal x to an inclusion-minimal intersection H_I without
// changing f. Returns I (0-based, the coordinates of u + Z^T x that vanish).
std::vector<std::size_t> walk_to_minimal_face(std::span<const Rational> u, const IntMatrix& z,
                                              RatVector& x) {
  const RatMatrix zt = to_rational(z.transpose());
  for (;;) {
    const RatVector g = affine_point(u, z, x);
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i].is_zero()) zeros.push_back(i);
    const RatMatrix dirs = nullspace(zt.select_rows(zeros));
    if (dirs.rows() == 0) return zeros;
    const RatVector d = dirs.row_vector(0);
    const RatVector e = zt * d;
    std::optional<Rational> step;
    for (std::size_t l = 0; l < e.size(); ++l) {
      if (e[l].is_zero()) continue;
      Rational t = -g[l] / e[l];
      if (!step || abs(t) < abs(*step)) step = std::move(t);
    }
    if (!step) return zeros;  // Z rows dependent; cannot happen for a kernel basis
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += *step * d[j];
  }
}

Integer integer_norm(std::span<const Integer> v) { return l1_norm(v); }

}  // namespace

std::string Ring::to_string() const {
  switch (kind) {
    case Kind::Q:
      return "Q";
    case Kind::Z:
      return "Z";
    case Kind::Zq:
      return "Zq(" + std::to_string(modulus) + ")";
  }
  return "?";
}

std::string to_string(SolverTag tag) {
  switch (tag) {
    case SolverTag::lp:
      return "lp";
    case SolverTag::face_oracle:
      return "face_oracle";
    case SolverTag::bnb:
      return "bnb";
    case SolverTag::coset_bruteforce:
      return "coset_bruteforce";
  }
  return "?";
}

Rational l1_objective(std::span<const Rational> u, const IntMatrix& z,
                      std::span<const Rational> x) {
  return l1_norm(affine_point(u, z, x));
}

RatVector affine_point(std::span<const Rational> u, const IntMatrix& z,
                       std::span<const Rational> x) {
  if (z.cols() != u.size() || z.rows() != x.size()) {
    throw DimensionError("affine point with mismatched generator shape");
  }
  RatVector out(u.begin(), u.end());
  for (std::size_t j = 0; j < z.rows(); ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < z.cols(); ++i)
      if (!z(j, i).is_zero()) out[i] += x[j] * Rational(z(j, i));
  }
  return out;
}

ExpansionSolver::ExpansionSolver(IntMatrix a, ExpansionLimits limits)
    : preimages_(std::move(a)), limits_(limits) {}

RatVector ExpansionSolver::rational_preimage(std::span<const Integer> v) const {
  if (v.size() != matrix().rows()) {
    throw DimensionError("target of length " + std::to_string(v.size()) +
                         " for a matrix with " + std::to_string(matrix().rows()) + " rows");
  }
  if (is_zero_vector(v)) throw ZeroTargetError();
  if (auto u = preimages_.solve_integer(v)) return to_rational(*u);
  auto w = preimages_.solve_rational(to_rational(v));
  if (!w) throw NotInImageError("target " + format_vector(v) + " is not in the image of A");
  return std::move(*w);
}

ExpansionResult ExpansionSolver::xi_q_at(std::span<const Integer> v) const {
  const RatVector u = rational_preimage(v);
  const L1Optimum opt = minimize_l1(u, kernel());
  ExpansionResult out;
  out.value = opt.norm / Rational(integer_norm(v));
  out.target.assign(v.begin(), v.end());
  out.witness = affine_point(u, kernel(), opt.x);
  out.ring = Ring::rationals();
  out.solver = SolverTag::lp;
  return out;
}

ExpansionResult ExpansionSolver::xi_q_at_face_oracle(std::span<const Integer> v) const {
  const RatVector u = rational_preimage(v);
  const FaceEnumeration faces = enumerate_minimal_faces(u, kernel(), limits_.face_max_coords,
                                                        limits_.face_max_generators);
  const MinimalFace& best = faces.faces.at(faces.best);
  ExpansionResult out;
  out.value = best.value / Rational(integer_norm(v));
  out.target.assign(v.begin(), v.end());
  out.witness = affine_point(u, kernel(), best.point);
  out.ring = Ring::rationals();
  out.solver = SolverTag::face_oracle;
  return out;
}

ExpansionResult ExpansionSolver::xi_z_at(std::span<const Integer> v) const {
  if (v.size() != matrix().rows()) {
    throw DimensionError("target of length " + std::to_string(v.size()) +
                         " for a matrix with " + std::to_string(matrix().rows()) + " rows");
  }
  if (is_zero_vector(v)) throw ZeroTargetError();
  const auto u0 = preimages_.solve_integer(v);
  if (!u0) {
    auto q = xi_q_at(v);  // throws NotInImageError outside the rational image
    throw NotInIntegerImageError("target " + format_vector(v) +
                                     " has a rational but no integer preimage",
                                 q.value.to_string());
  }
  const IntMatrix& z = kernel();
  const std::size_t k = z.rows();
  const RatVector u = to_rational(*u0);
  const Rational vnorm(integer_norm(v));

  ExpansionResult out;
  out.target.assign(v.begin(), v.end());
  out.ring = Ring::integers();
  out.solver = SolverTag::lp;
  if (k == 0) {
    out.value = Rational(integer_norm(*u0)) / vnorm;
    out.witness = u;
    return out;
  }

  const L1Optimum root = minimize_l1(u, z);
  // Rounding on a minimal face: an integer point of H_I attains the rational
  // optimum and is therefore optimal over Z.
  if (limits_.face_rounding) {
    RatVector x = root.x;
    const std::vector<std::size_t> zeros = walk_to_minimal_face(u, z, x);
    IntMatrix sub(zeros.size(), k);
    IntVector rhs(zeros.size());
    for (std::size_t r = 0; r < zeros.size(); ++r) {
      for (std::size_t j = 0; j < k; ++j) sub(r, j) = z(j, zeros[r]);
      rhs[r] = -(*u0)[zeros[r]];
    }
    if (auto c = solve_integer(sub, rhs)) {
      RatVector w = affine_point(u, z, to_rational(*c));
      if (l1_norm(w) == root.norm) {
        out.value = root.norm / vnorm;
        out.witness = std::move(w);
        return out;
      }
    }
  }

  // Depth-first branch-and-bound on c, floor branch first.
  out.solver = SolverTag::bnb;
  Integer incumbent = integer_norm(*u0);
  RatVector best_x(k, Rational(0));
  std::vector<std::vector<Bound>> stack{{}};
  std::uint64_t nodes = 0;
  while (!stack.empty()) {
    std::vector<Bound> bounds = std::move(stack.back());
    stack.pop_back();
    if (++nodes > limits_.bnb_max_nodes) {
      throw CapExceededError("branch-and-bound exceeded " +
                             std::to_string(limits_.bnb_max_nodes) + " nodes");
    }
    const L1Optimum node = bounds.empty() ? root : minimize_l1(u, z, bounds);
    if (!node.feasible) continue;
    // Norms of integer points are integers.
    if (node.norm.ceil() >= incumbent) continue;
    std::size_t branch = k;
    for (std::size_t j = 0; j < k && branch == k; ++j)
      if (!node.x[j].is_integer()) branch = j;
    if (branch == k) {
      incumbent = node.norm.numerator();
      best_x = node.x;
      continue;
    }
    std::vector<Bound> up = bounds;
    up.push_back({branch, node.x[branch].ceil(), false});
    bounds.push_back({branch, node.x[branch].floor(), true});
    stack.push_back(std::move(up));
    stack.push_back(std::move(bounds));
  }
  out.value = Rational(incumbent) / vnorm;
  out.witness = affine_point(u, z, best_x);
  return out;
}

ExpansionResult xi_q_at(const IntMatrix& a, std::span<const Integer> v) {
  return ExpansionSolver(a).xi_q_at(v);
}

ExpansionResult xi_q_at_face_oracle(const IntMatrix& a, std::span<const Integer> v) {
  return ExpansionSolver(a).xi_q_at_face_oracle(v);
}

ExpansionResult xi_z_at(const IntMatrix& a, std::span<const Integer> v) {
  return ExpansionSolver(a).xi_z_at(v);
}

GlobalExpansion xi_q_global(const IntMatrix& a) { return ExpansionSolver(a).xi_q_global(); }

GlobalExpansion xi_z_global(const IntMatrix& a) { return ExpansionSolver(a).xi_z_global(); }

}  // namespace explab

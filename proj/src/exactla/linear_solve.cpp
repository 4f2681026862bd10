#include "explab/exactla/linear_solve.hpp"

namespace explab {

RowEchelon rref(RatMatrix a) {
  RowEchelon out{std::move(a), {}};
  RatMatrix& r = out.r;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r.cols() && row < r.rows(); ++c) {
    std::size_t p = row;
    while (p < r.rows() && r(p, c).is_zero()) ++p;
    if (p == r.rows()) continue;
    r.swap_rows(row, p);
    if (!(r(row, c) == Rational(1))) {
      const Rational inv = Rational(1) / r(row, c);
      for (std::size_t j = c; j < r.cols(); ++j) {
        if (!r(row, j).is_zero()) r(row, j) *= inv;
      }
    }
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, c).is_zero()) continue;
      const Rational f = r(i, c);
      for (std::size_t j = c; j < r.cols(); ++j) {
        if (!r(row, j).is_zero()) r(i, j) -= f * r(row, j);
      }
    }
    out.pivot_cols.push_back(c);
    ++row;
  }
  return out;
}

namespace {

RatMatrix nullspace_from_rref(const RowEchelon& e, std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMatrix out(free_cols.size(), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    out(k, f) = Rational(1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
      out(k, e.pivot_cols[i]) = -e.r(i, f);
    }
  }
  return out;
}

}  // namespace

std::optional<AffineSolution> solve_affine(const RatMatrix& a,
                                           std::span<const Rational> b) {
  if (b.size() != a.rows()) {
    throw DimensionError("right-hand side length does not match row count");
  }
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  RowEchelon e = rref(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == n) return std::nullopt;
  AffineSolution out;
  out.particular.assign(n, Rational());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
    out.particular[e.pivot_cols[i]] = e.r(i, n);
  }
  out.directions = nullspace_from_rref(e, n);
  return out;
}

RatMatrix nullspace(const RatMatrix& a) {
  return nullspace_from_rref(rref(a), a.cols());
}

std::size_t rank(const RatMatrix& a) { return rref(a).pivot_cols.size(); }

}  // namespace explab

#include "explab/exactla/normal_form.hpp"

#include <algorithm>
#include <utility>

namespace explab {
namespace {

// row_a <- s*row_a + t*row_b ; row_b <- p*row_a + q*row_b (simultaneously)
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s,
                  const Integer& t, const Integer& p, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Integer x = m(a, j);
    const Integer y = m(b, j);
    if (x.is_zero() && y.is_zero()) continue;
    m(a, j) = s * x + t * y;
    m(b, j) = p * x + q * y;
  }
}

void combine_cols(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s,
                  const Integer& t, const Integer& p, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Integer x = m(i, a);
    const Integer y = m(i, b);
    if (x.is_zero() && y.is_zero()) continue;
    m(i, a) = s * x + t * y;
    m(i, b) = p * x + q * y;
  }
}

// row_b -= factor * row_a
void subtract_row(IntMatrix& m, std::size_t b, std::size_t a, const Integer& factor) {
  if (factor.is_zero()) return;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!m(a, j).is_zero()) m(b, j) -= factor * m(a, j);
  }
}

void subtract_col(IntMatrix& m, std::size_t b, std::size_t a, const Integer& factor) {
  if (factor.is_zero()) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, a).is_zero()) m(i, b) -= factor * m(i, a);
  }
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// Clears entry (i, c) against pivot entry (r, c) using unimodular row
// operations mirrored on `track`.
void eliminate_row_entry(IntMatrix& m, IntMatrix& track, std::size_t r,
                         std::size_t i, std::size_t c) {
  const Integer a = m(r, c);
  const Integer b = m(i, c);
  if (b.is_zero()) return;
  if (a.is_zero()) {
    m.swap_rows(r, i);
    track.swap_rows(r, i);
    return;
  }
  if ((b % a).is_zero()) {
    const Integer q = b / a;
    subtract_row(m, i, r, q);
    subtract_row(track, i, r, q);
    return;
  }
  const auto [g, s, t] = xgcd(a, b);
  const Integer p = -(b / g);
  const Integer q = a / g;
  combine_rows(m, r, i, s, t, p, q);
  combine_rows(track, r, i, s, t, p, q);
}

void eliminate_col_entry(IntMatrix& m, IntMatrix& track, std::size_t c,
                         std::size_t j, std::size_t r) {
  const Integer a = m(r, c);
  const Integer b = m(r, j);
  if (b.is_zero()) return;
  if (a.is_zero()) {
    m.swap_cols(c, j);
    track.swap_cols(c, j);
    return;
  }
  if ((b % a).is_zero()) {
    const Integer q = b / a;
    subtract_col(m, j, c, q);
    subtract_col(track, j, c, q);
    return;
  }
  const auto [g, s, t] = xgcd(a, b);
  const Integer p = -(b / g);
  const Integer q = a / g;
  combine_cols(m, c, j, s, t, p, q);
  combine_cols(track, c, j, s, t, p, q);
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0, {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) eliminate_row_entry(h, u, r, i, c);
    if (h(r, c).is_zero()) continue;
    if (h(r, c).sign() < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(h(i, c), h(r, c));
      subtract_row(h, i, r, q);
      subtract_row(u, i, r, q);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<Integer> SnfDecomposition::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

SnfDecomposition snf(const IntMatrix& m) {
  SnfDecomposition out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = out.d;
  const std::size_t limit = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    std::size_t best_i = d.rows(), best_j = d.cols();
    for (std::size_t i = t; i < d.rows(); ++i) {
      for (std::size_t j = t; j < d.cols(); ++j) {
        if (d(i, j).is_zero()) continue;
        if (best_i == d.rows() || abs(d(i, j)) < abs(d(best_i, best_j))) {
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_i == d.rows()) break;
    d.swap_rows(t, best_i);
    out.u.swap_rows(t, best_i);
    d.swap_cols(t, best_j);
    out.v.swap_cols(t, best_j);

    for (;;) {
      for (std::size_t i = t + 1; i < d.rows(); ++i) eliminate_row_entry(d, out.u, t, i, t);
      for (std::size_t j = t + 1; j < d.cols(); ++j) eliminate_col_entry(d, out.v, t, j, t);
      bool clear = true;
      for (std::size_t i = t + 1; i < d.rows() && clear; ++i) clear = d(i, t).is_zero();
      if (!clear) continue;
      // Divisibility: fold any offending row into row t and repeat.
      const Integer& pivot = d(t, t);
      std::size_t offender = d.rows();
      for (std::size_t i = t + 1; i < d.rows() && offender == d.rows(); ++i) {
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (!(d(i, j) % pivot).is_zero()) {
            offender = i;
            break;
          }
        }
      }
      if (offender == d.rows()) break;
      subtract_row(d, t, offender, Integer(-1));
      subtract_row(out.u, t, offender, Integer(-1));
    }
    if (d(t, t).sign() < 0) {
      negate_row(d, t);
      negate_row(out.u, t);
    }
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return Integer(0);
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = divexact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      }
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  return m.rows() == m.cols() && abs(determinant(m)).is_one();
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw NotUnimodularError("matrix is not square");
  HermiteForm form = hnf(m);
  if (!(form.h == IntMatrix::identity(m.rows()))) {
    throw NotUnimodularError("matrix determinant is not +-1");
  }
  return std::move(form.u);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        a(i, j) = divexact(a(i, j) * a(r, c) - a(i, c) * a(r, j), prev);
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace explab

#include "explab/exactla/matrix.hpp"

namespace explab {

RatMatrix to_rational(const IntMatrix& m) {
  std::vector<Rational> entries;
  entries.reserve(m.entries().size());
  for (const auto& x : m.entries()) entries.emplace_back(x);
  return RatMatrix(m.rows(), m.cols(), std::move(entries));
}

RatVector to_rational(std::span<const Integer> v) {
  return RatVector(v.begin(), v.end());
}

std::optional<IntVector> to_integer(std::span<const Rational> v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_integer()) return std::nullopt;
    out.push_back(x.numerator());
  }
  return out;
}

Integer l1_norm(std::span<const Integer> v) {
  Integer total = 0;
  for (const auto& x : v) total += abs(x);
  return total;
}

Rational l1_norm(std::span<const Rational> v) {
  Rational total;
  for (const auto& x : v) total += abs(x);
  return total;
}

bool is_zero_vector(std::span<const Integer> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool is_zero_vector(std::span<const Rational> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RatVector apply(const IntMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) {
    throw DimensionError("matrix with " + std::to_string(a.cols()) +
                         " columns applied to vector of length " +
                         std::to_string(x.size()));
  }
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational acc;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero() && !x[j].is_zero()) acc += Rational(a(i, j)) * x[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

IntVector primitive_direction(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  IntVector out(v.begin(), v.end());
  if (g.is_zero()) return out;
  int lead = 0;
  for (const auto& x : v) {
    if (!x.is_zero()) {
      lead = x.sign();
      break;
    }
  }
  if (lead < 0) g = -g;
  for (auto& x : out) x = divexact(x, g);
  return out;
}

IntVector clear_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) {
    const Integer& d = x.denominator();
    l = divexact(l * d, gcd(l, d));
  }
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(divexact(x.numerator() * l, x.denominator()));
  return out;
}

std::string format_vector(std::span<const Integer> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out + ")";
}

std::string format_vector(std::span<const Rational> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace explab

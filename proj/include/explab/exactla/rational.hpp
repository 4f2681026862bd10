#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "explab/exactla/integer.hpp"

namespace explab {

// Exact rational number, always in lowest terms with a positive denominator.
// Zero is 0/1, so structural equality is numeric equality.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  template <std::integral T>
  Rational(T value) : num_(value), den_(1) {}  // NOLINT
  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT
  // Throws std::domain_error when the denominator is zero.
  Rational(Integer numerator, Integer denominator);

  // Accepts "p" or "p/q".
  static std::optional<Rational> parse(std::string_view text);

  const Integer& numerator() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_.is_one(); }

  Integer floor() const;
  Integer ceil() const;
  // x - floor(x), in [0, 1).
  Rational fractional_part() const;

  // "p/q", or "p" when q == 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Normalized {};
  Rational(Integer numerator, Integer denominator, Normalized)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}

  static Rational make_small(__int128 numerator, __int128 denominator);

  Integer num_;
  Integer den_;
};

Rational abs(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace explab

template <>
struct std::hash<explab::Rational> {
  std::size_t operator()(const explab::Rational& value) const noexcept {
    return value.numerator().hash() * 31 + value.denominator().hash();
  }
};

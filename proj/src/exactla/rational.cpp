#include "explab/exactla/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace explab {
namespace {

using u128 = unsigned __int128;

bool all_small(const Integer& a, const Integer& b, const Integer& c,
               const Integer& d) {
  return a.is_small() && b.is_small() && c.is_small() && d.is_small();
}

u128 magnitude(__int128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

Integer from_int128(__int128 v) {
  if (fits64(v)) return Integer(static_cast<std::int64_t>(v));
  u128 m = magnitude(v);
  mpz_class hi(static_cast<unsigned long>(m >> 64));
  mpz_class lo(static_cast<unsigned long>(m & ~std::uint64_t{0}));
  mpz_class out = (hi << 64) + lo;
  if (v < 0) out = -out;
  return Integer(out);
}

}  // namespace

Rational::Rational(Integer numerator, Integer denominator) {
  if (denominator.is_zero()) throw std::domain_error("zero denominator");
  if (denominator.sign() < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Integer g = gcd(numerator, denominator);
  if (!g.is_one()) {
    numerator = divexact(numerator, g);
    denominator = divexact(denominator, g);
  }
  num_ = std::move(numerator);
  den_ = std::move(denominator);
}

Rational Rational::make_small(__int128 numerator, __int128 denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (denominator != 1) {
    u128 g = gcd128(magnitude(numerator), u128(denominator));
    if (g > 1) {
      numerator /= static_cast<__int128>(g);
      denominator /= static_cast<__int128>(g);
    }
  } else if (numerator == 0) {
    return Rational();
  }
  if (numerator == 0) return Rational();
  return Rational(from_int128(numerator), from_int128(denominator),
                  Normalized{});
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = Integer::parse(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = Integer::parse(text.substr(0, slash));
  auto d = Integer::parse(text.substr(slash + 1));
  if (!n || !d || d->is_zero()) return std::nullopt;
  return Rational(*n, *d);
}

Integer Rational::floor() const { return floor_div(num_, den_); }

Integer Rational::ceil() const { return -floor_div(-num_, den_); }

Rational Rational::fractional_part() const {
  return Rational(floor_mod(num_, den_), den_, Normalized{});
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational operator+(const Rational& a, const Rational& b) {
  if (all_small(a.num_, a.den_, b.num_, b.den_)) {
    const std::int64_t an = a.num_.small_value(), ad = a.den_.small_value();
    const std::int64_t bn = b.num_.small_value(), bd = b.den_.small_value();
    if (ad == 1 && bd == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(an, bn, &r)) {
        return Rational(Integer(r), Integer(1), Rational::Normalized{});
      }
    }
    if (ad == bd) {
      return Rational::make_small(__int128(an) + bn, ad);
    }
    return Rational::make_small(__int128(an) * bd + __int128(bn) * ad,
                                __int128(ad) * bd);
  }
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a) {
  return Rational(-a.num_, a.den_, Rational::Normalized{});
}

Rational operator-(const Rational& a, const Rational& b) {
  if (all_small(a.num_, a.den_, b.num_, b.den_)) {
    const std::int64_t an = a.num_.small_value(), ad = a.den_.small_value();
    const std::int64_t bn = b.num_.small_value(), bd = b.den_.small_value();
    if (ad == 1 && bd == 1) {
      std::int64_t r;
      if (!__builtin_sub_overflow(an, bn, &r)) {
        return Rational(Integer(r), Integer(1), Rational::Normalized{});
      }
    }
    if (ad == bd) {
      return Rational::make_small(__int128(an) - bn, ad);
    }
    return Rational::make_small(__int128(an) * bd - __int128(bn) * ad,
                                __int128(ad) * bd);
  }
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (all_small(a.num_, a.den_, b.num_, b.den_)) {
    const std::int64_t an = a.num_.small_value(), ad = a.den_.small_value();
    const std::int64_t bn = b.num_.small_value(), bd = b.den_.small_value();
    if (ad == 1 && bd == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(an, bn, &r)) {
        return Rational(Integer(r), Integer(1), Rational::Normalized{});
      }
    }
    return Rational::make_small(__int128(an) * bn, __int128(ad) * bd);
  }
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  if (a.is_zero()) return Rational();
  if (all_small(a.num_, a.den_, b.num_, b.den_)) {
    const std::int64_t an = a.num_.small_value(), ad = a.den_.small_value();
    const std::int64_t bn = b.num_.small_value(), bd = b.den_.small_value();
    return Rational::make_small(__int128(an) * bd, __int128(ad) * bn);
  }
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational& Rational::operator+=(const Rational& other) {
  return *this = *this + other;
}
Rational& Rational::operator-=(const Rational& other) {
  return *this = *this - other;
}
Rational& Rational::operator*=(const Rational& other) {
  return *this = *this * other;
}
Rational& Rational::operator/=(const Rational& other) {
  return *this = *this / other;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  if (all_small(a.num_, a.den_, b.num_, b.den_)) {
    __int128 lhs = __int128(a.num_.small_value()) * b.den_.small_value();
    __int128 rhs = __int128(b.num_.small_value()) * a.den_.small_value();
    return lhs <=> rhs;
  }
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Rational abs(const Rational& value) {
  return value.sign() < 0 ? -value : value;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace explab

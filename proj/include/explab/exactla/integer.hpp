#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace explab {

// Arbitrary-precision integer. Values that fit in int64 are stored inline
// and all arithmetic on them is overflow-checked; results that do not fit
// are promoted to a GMP integer. A promoted value never fits in int64, so
// the representation of every value is unique.
class Integer {
 public:
  Integer() noexcept = default;

  template <std::integral T>
  Integer(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T> || sizeof(T) < sizeof(std::int64_t)) {
      small_ = static_cast<std::int64_t>(value);
    } else if (value <= static_cast<T>(std::numeric_limits<std::int64_t>::max())) {
      small_ = static_cast<std::int64_t>(value);
    } else {
      big_ = std::make_unique<mpz_class>();
      mpz_import(big_->get_mpz_t(), 1, 1, sizeof(T), 0, 0, &value);
    }
  }

  explicit Integer(const mpz_class& value);

  Integer(const Integer& other)
      : small_(other.small_),
        big_(other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr) {}
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& other) {
    if (this != &other) {
      small_ = other.small_;
      big_ = other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  // Accepts an optional sign followed by decimal digits.
  static std::optional<Integer> parse(std::string_view text);

  bool is_small() const noexcept { return !big_; }
  // Only meaningful when is_small().
  std::int64_t small_value() const noexcept { return small_; }
  std::int64_t to_int64() const;
  mpz_class to_mpz() const;

  int sign() const noexcept {
    if (big_) return mpz_sgn(big_->get_mpz_t());
    return (small_ > 0) - (small_ < 0);
  }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }

  std::string to_string() const;
  std::size_t hash() const noexcept;

  Integer& operator+=(const Integer& other);
  Integer& operator-=(const Integer& other);
  Integer& operator*=(const Integer& other);

  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);
  // Truncating division and remainder, as for built-in integers.
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a);

  friend bool operator==(const Integer& a, const Integer& b) noexcept;
  friend std::strong_ordering operator<=>(const Integer& a,
                                          const Integer& b) noexcept;

  friend Integer gcd(const Integer& a, const Integer& b);
  friend Integer floor_div(const Integer& a, const Integer& b);

 private:
  static Integer from_mpz(const mpz_class& value);
  static Integer add_slow(const Integer& a, const Integer& b);
  static Integer sub_slow(const Integer& a, const Integer& b);
  static Integer mul_slow(const Integer& a, const Integer& b);

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

inline Integer operator+(const Integer& a, const Integer& b) {
  std::int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) {
    return Integer(r);
  }
  return Integer::add_slow(a, b);
}

inline Integer operator-(const Integer& a, const Integer& b) {
  std::int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) {
    return Integer(r);
  }
  return Integer::sub_slow(a, b);
}

inline Integer operator*(const Integer& a, const Integer& b) {
  std::int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) {
    return Integer(r);
  }
  return Integer::mul_slow(a, b);
}

inline Integer& Integer::operator+=(const Integer& other) {
  std::int64_t r;
  if (!big_ && !other.big_ &&
      !__builtin_add_overflow(small_, other.small_, &r)) {
    small_ = r;
    return *this;
  }
  return *this = add_slow(*this, other);
}

inline Integer& Integer::operator-=(const Integer& other) {
  std::int64_t r;
  if (!big_ && !other.big_ &&
      !__builtin_sub_overflow(small_, other.small_, &r)) {
    small_ = r;
    return *this;
  }
  return *this = sub_slow(*this, other);
}

inline Integer& Integer::operator*=(const Integer& other) {
  std::int64_t r;
  if (!big_ && !other.big_ &&
      !__builtin_mul_overflow(small_, other.small_, &r)) {
    small_ = r;
    return *this;
  }
  return *this = mul_slow(*this, other);
}

inline bool operator==(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

Integer abs(const Integer& a);
// Always nonnegative; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer floor_div(const Integer& a, const Integer& b);
// Remainder of floor division; lies in [0, b) for b > 0.
Integer floor_mod(const Integer& a, const Integer& b);
// a / b when b is known to divide a.
Integer divexact(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;  // nonnegative
  Integer s;
  Integer t;  // s * a + t * b == g
};
ExtendedGcd xgcd(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& value);

}  // namespace explab

template <>
struct std::hash<explab::Integer> {
  std::size_t operator()(const explab::Integer& value) const noexcept {
    return value.hash();
  }
};

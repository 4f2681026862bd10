#include "explab/exactla/integer.hpp"

#include <cctype>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace explab {
namespace {

static_assert(sizeof(long) == sizeof(std::int64_t),
              "GMP si conversions assume a 64-bit long");

bool fits_int64(const mpz_class& value) {
  return mpz_fits_slong_p(value.get_mpz_t()) != 0;
}

}  // namespace

Integer::Integer(const mpz_class& value) {
  if (fits_int64(value)) {
    small_ = mpz_get_si(value.get_mpz_t());
  } else {
    big_ = std::make_unique<mpz_class>(value);
  }
}

Integer Integer::from_mpz(const mpz_class& value) { return Integer(value); }

std::optional<Integer> Integer::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(mpz_class(digits, 10));
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits");
  return small_;
}

mpz_class Integer::to_mpz() const {
  if (big_) return *big_;
  mpz_class out;
  mpz_set_si(out.get_mpz_t(), small_);
  return out;
}

std::string Integer::to_string() const {
  if (big_) return big_->get_str();
  return std::to_string(small_);
}

std::size_t Integer::hash() const noexcept {
  if (!big_) return std::hash<std::int64_t>{}(small_);
  return std::hash<std::string>{}(big_->get_str(16));
}

Integer Integer::add_slow(const Integer& a, const Integer& b) {
  return from_mpz(a.to_mpz() + b.to_mpz());
}

Integer Integer::sub_slow(const Integer& a, const Integer& b) {
  return from_mpz(a.to_mpz() - b.to_mpz());
}

Integer Integer::mul_slow(const Integer& a, const Integer& b) {
  return from_mpz(a.to_mpz() * b.to_mpz());
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  if (!a.big_ && !b.big_ &&
      !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
    return Integer(a.small_ / b.small_);
  }
  mpz_class q;
  mpz_class an = a.to_mpz();
  mpz_class bn = b.to_mpz();
  mpz_tdiv_q(q.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
  return Integer(q);
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  if (!a.big_ && !b.big_) {
    if (b.small_ == -1) return Integer(0);
    return Integer(a.small_ % b.small_);
  }
  mpz_class r;
  mpz_class an = a.to_mpz();
  mpz_class bn = b.to_mpz();
  mpz_tdiv_r(r.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
  return Integer(r);
}

Integer operator-(const Integer& a) {
  if (!a.big_ && a.small_ != std::numeric_limits<std::int64_t>::min()) {
    return Integer(-a.small_);
  }
  return Integer(mpz_class(-a.to_mpz()));
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c;
  if (a.big_ && b.big_) {
    c = mpz_cmp(a.big_->get_mpz_t(), b.big_->get_mpz_t());
  } else if (a.big_) {
    c = mpz_cmp_si(a.big_->get_mpz_t(), b.small_);
  } else {
    c = -mpz_cmp_si(b.big_->get_mpz_t(), a.small_);
  }
  return c <=> 0;
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    std::uint64_t x = a.small_ < 0 ? 0 - static_cast<std::uint64_t>(a.small_)
                                   : static_cast<std::uint64_t>(a.small_);
    std::uint64_t y = b.small_ < 0 ? 0 - static_cast<std::uint64_t>(b.small_)
                                   : static_cast<std::uint64_t>(b.small_);
    while (y != 0) {
      std::uint64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  mpz_class g;
  mpz_class an = a.to_mpz();
  mpz_class bn = b.to_mpz();
  mpz_gcd(g.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
  return Integer(g);
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  if (!a.big_ && !b.big_ &&
      !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
    std::int64_t q = a.small_ / b.small_;
    std::int64_t r = a.small_ % b.small_;
    if (r != 0 && ((r < 0) != (b.small_ < 0))) --q;
    return Integer(q);
  }
  mpz_class q;
  mpz_class an = a.to_mpz();
  mpz_class bn = b.to_mpz();
  mpz_fdiv_q(q.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
  return Integer(q);
}

Integer floor_mod(const Integer& a, const Integer& b) {
  return a - floor_div(a, b) * b;
}

Integer divexact(const Integer& a, const Integer& b) { return a / b; }

ExtendedGcd xgcd(const Integer& a, const Integer& b) {
  // Iterative extended Euclid; coefficients stay bounded by the inputs.
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = floor_div(old_r, r);
    Integer next_r = old_r - q * r;
    old_r = std::move(r);
    r = std::move(next_r);
    Integer next_s = old_s - q * s;
    old_s = std::move(s);
    s = std::move(next_s);
    Integer next_t = old_t - q * t;
    old_t = std::move(t);
    t = std::move(next_t);
  }
  if (old_r.sign() < 0) {
    return {-old_r, -old_s, -old_t};
  }
  return {old_r, old_s, old_t};
}

std::ostream& operator<<(std::ostream& os, const Integer& value) {
  return os << value.to_string();
}

}  // namespace explab

#include "explab/expansion/modq.hpp"

#include <string>

namespace explab {
namespace {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % q);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t q) {
  // a^(q-2) for prime q.
  std::uint64_t result = 1, base = a % q;
  for (std::uint64_t e = q - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

Rational weight_ratio(std::size_t num, std::size_t den) {
  return Rational(Integer(static_cast<std::int64_t>(num)),
                  Integer(static_cast<std::int64_t>(den)));
}

RatVector to_witness(const ModQVector& u) {
  RatVector out;
  out.reserve(u.size());
  for (auto e : u) out.emplace_back(static_cast<std::int64_t>(e));
  return out;
}

}  // namespace

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

ModQMatrix::ModQMatrix(std::uint32_t q, std::size_t rows, std::size_t cols, ModQVector entries)
    : q_(q), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (q >= (1u << 31) || !is_prime(q)) throw NotPrimeError(std::to_string(q) + " is not a prime");
  if (data_.size() != rows * cols) throw DimensionError("mod-q matrix entry count mismatch");
  for (auto e : data_)
    if (e >= q) throw DimensionError("mod-q matrix entry not reduced");
}

ModQVector ModQMatrix::apply(std::span<const std::uint32_t> x) const {
  if (x.size() != cols_) throw DimensionError("mod-q vector length mismatch");
  ModQVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = (acc + std::uint64_t{(*this)(i, j)} * x[j]) % q_;
    out[i] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

ModQMatrix reduce_mod_q(const IntMatrix& a, std::uint32_t q) {
  if (q >= (1u << 31) || !is_prime(q)) throw NotPrimeError(std::to_string(q) + " is not a prime");
  ModQVector entries;
  entries.reserve(a.rows() * a.cols());
  for (const auto& e : a.entries())
    entries.push_back(static_cast<std::uint32_t>(floor_mod(e, Integer(q)).to_int64()));
  return ModQMatrix(q, a.rows(), a.cols(), std::move(entries));
}

ModQVector reduce_mod_q(std::span<const Integer> v, std::uint32_t q) {
  if (q >= (1u << 31) || !is_prime(q)) throw NotPrimeError(std::to_string(q) + " is not a prime");
  ModQVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(static_cast<std::uint32_t>(floor_mod(e, Integer(q)).to_int64()));
  return out;
}

IntVector lift_section(std::span<const std::uint32_t> u) {
  IntVector out;
  out.reserve(u.size());
  for (auto e : u) out.emplace_back(static_cast<std::int64_t>(e));
  return out;
}

std::size_t hamming_weight(std::span<const std::uint32_t> v) {
  std::size_t w = 0;
  for (auto e : v) w += e != 0;
  return w;
}

ModQSystem::ModQSystem(ModQMatrix a) : a_(std::move(a)) {
  const std::uint32_t q = a_.modulus();
  const std::size_t m = a_.rows(), n = a_.cols();
  // Augment with the identity to track row operations.
  std::vector<ModQVector> rows(m, ModQVector(n + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a_(i, j);
    rows[i][n + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[r], rows[p]);
    const std::uint32_t inv = inverse_mod(rows[r][c], q);
    for (auto& e : rows[r]) e = mul_mod(e, inv, q);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint32_t f = rows[i][c];
      for (std::size_t j = 0; j < n + m; ++j)
        rows[i][j] = static_cast<std::uint32_t>((rows[i][j] + std::uint64_t{q - f} * rows[r][j]) % q);
    }
    pivots_.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < m; ++i) {
    ModQVector left(rows[i].begin(), rows[i].begin() + static_cast<std::ptrdiff_t>(n));
    ModQVector right(rows[i].begin() + static_cast<std::ptrdiff_t>(n), rows[i].end());
    if (i < r) {
      rref_.push_back(std::move(left));
      transform_.push_back(std::move(right));
    } else {
      left_null_.push_back(std::move(right));
    }
  }
  // Kernel basis: one vector per free column.
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots_) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    ModQVector k(n, 0);
    k[f] = 1;
    for (std::size_t i = 0; i < r; ++i) k[pivots_[i]] = (q - rref_[i][f]) % q;
    kernel_.push_back(std::move(k));
  }
}

std::optional<ModQVector> ModQSystem::solve(std::span<const std::uint32_t> w) const {
  const std::uint32_t q = a_.modulus();
  if (w.size() != a_.rows()) throw DimensionError("mod-q target length mismatch");
  auto dot = [q](const ModQVector& row, std::span<const std::uint32_t> x) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < row.size(); ++i) acc = (acc + std::uint64_t{row[i]} * x[i]) % q;
    return static_cast<std::uint32_t>(acc);
  };
  for (const auto& y : left_null_)
    if (dot(y, w) != 0) return std::nullopt;
  ModQVector u(a_.cols(), 0);
  for (std::size_t i = 0; i < pivots_.size(); ++i) u[pivots_[i]] = dot(transform_[i], w);
  return u;
}

ExpansionResult xi_zq_at(const ModQMatrix& a, std::span<const std::uint32_t> w,
                         const ModQLimits& limits) {
  const std::uint32_t q = a.modulus();
  if (w.size() != a.rows()) throw DimensionError("mod-q target length mismatch");
  for (auto e : w)
    if (e >= q) throw DimensionError("mod-q target entry not reduced");
  const std::size_t wt = hamming_weight(w);
  if (wt == 0) throw ZeroTargetError();
  ModQSystem system(a);
  auto u0 = system.solve(w);
  if (!u0) throw NotInImageError("target is not in the image of the mod-" + std::to_string(q) + " map");
  const auto& kernel = system.kernel();
  const std::size_t d = kernel.size();
  if (checked_power(q, d, limits.coset_cap) > limits.coset_cap) {
    throw CapExceededError("coset enumeration needs " + std::to_string(q) + "^" +
                           std::to_string(d) + " elements, above " +
                           std::to_string(limits.coset_cap));
  }
  // Odometer over kernel coefficients; stepping digit j adds kernel[j] once
  // (wrapping from q-1 to 0 also adds it, since q * kernel[j] = 0).
  ModQVector u = *u0;
  ModQVector best = u;
  std::size_t best_weight = hamming_weight(u);
  std::vector<std::uint32_t> digits(d, 0);
  while (best_weight > 1) {
    std::size_t j = 0;
    while (j < d) {
      for (std::size_t i = 0; i < u.size(); ++i)
        if (kernel[j][i]) u[i] = (u[i] + kernel[j][i]) % q;
      if (++digits[j] < q) break;
      digits[j] = 0;
      ++j;
    }
    if (j == d) break;
    const std::size_t weight = hamming_weight(u);
    if (weight < best_weight) {
      best_weight = weight;
      best = u;
    }
  }
  ExpansionResult out;
  out.value = weight_ratio(best_weight, wt);
  out.target = lift_section(w);
  out.witness = to_witness(best);
  out.ring = Ring::mod(q);
  out.solver = SolverTag::coset_bruteforce;
  return out;
}

CosetLeaders::CosetLeaders(const ModQMatrix& a, std::uint64_t cap) : q_(a.modulus()) {
  const std::size_t n = a.cols(), m = a.rows();
  if (checked_power(q_, n, cap) > cap) {
    throw CapExceededError("coset sweep needs " + std::to_string(q_) + "^" + std::to_string(n) +
                           " vectors, above " + std::to_string(cap));
  }
  if (checked_power(q_, m, std::uint64_t{1} << 62) > (std::uint64_t{1} << 62)) {
    throw CapExceededError("image vectors too long to index");
  }
  ModQVector u(n, 0), image(m, 0);
  std::size_t weight = 0;
  for (;;) {
    const std::uint64_t code = encode(image);
    auto it = table_.find(code);
    if (it == table_.end()) {
      table_.emplace(code, Entry{weight, u});
      images_.push_back(image);
    } else if (weight < it->second.weight) {
      it->second = Entry{weight, u};
    }
    std::size_t j = 0;
    for (; j < n; ++j) {
      const bool was_zero = u[j] == 0;
      u[j] = (u[j] + 1) % q_;
      for (std::size_t i = 0; i < m; ++i) image[i] = (image[i] + a(i, j)) % q_;
      if (u[j] != 0) {
        if (was_zero) ++weight;
        break;
      }
      --weight;
    }
    if (j == n) break;
  }
}

std::uint64_t CosetLeaders::encode(std::span<const std::uint32_t> w) const {
  std::uint64_t code = 0;
  for (auto e : w) code = code * q_ + e;
  return code;
}

const CosetLeaders::Entry& CosetLeaders::at(std::span<const std::uint32_t> w) const {
  auto it = table_.find(encode(w));
  if (it == table_.end()) throw NotInImageError("target is not in the image of the mod-q map");
  return it->second;
}

GlobalExpansion xi_zq_global(const ModQMatrix& a, const ModQLimits& limits) {
  const std::uint32_t q = a.modulus();
  ModQSystem system(a);
  const std::size_t rank = system.rank();
  if (rank == 0) throw UndefinedSupremumError();
  if (checked_power(q, rank, limits.image_cap) > limits.image_cap) {
    throw CapExceededError("image has " + std::to_string(q) + "^" + std::to_string(rank) +
                           " elements, above " + std::to_string(limits.image_cap));
  }
  GlobalExpansion out;
  out.exact = true;
  auto consider = [&](const ModQVector& w, std::size_t weight) {
    const std::size_t wt = hamming_weight(w);
    if (wt == 0) return;
    ++out.candidates;
    const Rational value = weight_ratio(weight, wt);
    if (out.attaining_target.empty() || value > out.value) {
      out.value = value;
      out.attaining_target = lift_section(w);
    }
  };
  if (checked_power(q, a.cols(), limits.sweep_cap) <= limits.sweep_cap) {
    CosetLeaders leaders(a, limits.sweep_cap);
    for (const auto& w : leaders.images()) consider(w, leaders.at(w).weight);
    return out;
  }
  // Enumerate the image through combinations of the pivot columns.
  const auto& pivots = system.pivot_cols();
  std::vector<std::uint32_t> digits(rank, 0);
  for (;;) {
    std::size_t j = 0;
    while (j < rank && ++digits[j] == q) digits[j++] = 0;
    if (j == rank) break;
    ModQVector x(a.cols(), 0);
    for (std::size_t i = 0; i < rank; ++i) x[pivots[i]] = digits[i];
    const ModQVector w = a.apply(x);
    const ExpansionResult r = xi_zq_at(a, w, limits);
    std::size_t weight = 0;
    for (const auto& e : r.witness) weight += !e.is_zero();
    consider(w, weight);
  }
  return out;
}

}  // namespace explab

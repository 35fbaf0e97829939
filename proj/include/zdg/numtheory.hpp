#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zdg {

using integer = std::uint64_t;

struct PrimePower {
  integer prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n together with its prime-power decomposition, primes ascending.
struct Factorization {
  integer n = 1;
  std::vector<PrimePower> factors;

  bool is_prime() const noexcept { return factors.size() == 1 && factors[0].exponent == 1; }
  bool is_prime_power() const noexcept { return factors.size() == 1; }
  // n = pq with p != q.
  bool is_two_distinct_primes() const noexcept {
    return factors.size() == 2 && factors[0].exponent == 1 && factors[1].exponent == 1;
  }
  integer smallest_prime() const noexcept { return factors.empty() ? 0 : factors.front().prime; }
  // Number of divisors, prod(n_i + 1).
  integer divisor_count() const noexcept {
    integer count = 1;
    for (const auto& f : factors) count *= f.exponent + 1;
    return count;
  }
};

inline integer checked_mul(integer a, integer b) {
  integer out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

inline integer checked_pow(integer base, unsigned exponent) {
  integer out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

inline integer gcd(std::int64_t a, std::int64_t b) {
  auto ua = static_cast<integer>(a < 0 ? -static_cast<__int128>(a) : a);
  auto ub = static_cast<integer>(b < 0 ? -static_cast<__int128>(b) : b);
  return std::gcd(ua, ub);
}

// Trial division up to sqrt(n).
inline Factorization factorize(integer n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  out.n = n;
  integer rest = n;
  for (integer p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (rest > 1) out.factors.push_back({rest, 1});
  return out;
}

inline bool is_prime(integer n) { return n >= 2 && factorize(n).is_prime(); }

inline integer euler_phi(const Factorization& f) {
  integer phi = f.n;
  if (phi == 0) throw std::invalid_argument("euler_phi: n must be positive");
  for (const auto& [p, e] : f.factors) phi = phi / p * (p - 1);
  return phi;
}

inline integer euler_phi(integer n) { return euler_phi(factorize(n)); }

// All divisors of n in increasing order, including 1 and n.
inline std::vector<integer> divisors(const Factorization& f) {
  std::vector<integer> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    integer power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power = checked_mul(power, p);
      for (std::size_t j = 0; j < base; ++j) out.push_back(checked_mul(out[j], power));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<integer> divisors(integer n) { return divisors(factorize(n)); }

// Divisors d with 1 < d < n, ascending.
inline std::vector<integer> proper_divisors(const Factorization& f) {
  auto all = divisors(f);
  if (all.size() <= 2) return {};
  return {all.begin() + 1, all.end() - 1};
}

inline std::vector<integer> proper_divisors(integer n) {
  if (n < 2) throw std::invalid_argument("proper_divisors: n must be at least 2");
  return proper_divisors(factorize(n));
}

// Number of zero divisors of Z_n other than 0, i.e. n - phi(n) - 1.
inline integer zero_divisor_count(const Factorization& f) {
  if (f.n < 2) return 0;
  return f.n - euler_phi(f) - 1;
}

inline integer zero_divisor_count(integer n) { return zero_divisor_count(factorize(n)); }

// Z_n has nonzero zero divisors iff n is composite.
inline bool has_zero_divisors(const Factorization& f) { return f.n >= 4 && !f.is_prime(); }

}  // namespace zdg

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zdg/dense_matrix.hpp"
#include "zdg/errors.hpp"

namespace zdg {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial with arbitrary-precision integer coefficients. Stored lowest
// degree first; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  // Coefficients listed from the highest degree down, e.g. {1, -2, 0} is x^2 - 2x.
  IntPolynomial(std::initializer_list<BigInt> highest_first)
      : coeffs_(std::rbegin(highest_first), std::rend(highest_first)) {
    trim();
  }

  static IntPolynomial from_highest_first(const std::vector<BigInt>& coeffs) {
    IntPolynomial p;
    p.coeffs_.assign(coeffs.rbegin(), coeffs.rend());
    p.trim();
    return p;
  }

  static IntPolynomial constant(BigInt c) {
    IntPolynomial p;
    p.coeffs_.push_back(std::move(c));
    p.trim();
    return p;
  }

  static IntPolynomial x() { return IntPolynomial{1, 0}; }

  // (x - root)
  static IntPolynomial linear(const BigInt& root) { return IntPolynomial{1, -root}; }

  // prod (x - r)^m over the given (root, multiplicity) pairs.
  static IntPolynomial from_roots(const std::vector<std::pair<std::int64_t, std::size_t>>& roots) {
    IntPolynomial out = constant(1);
    for (const auto& [r, m] : roots) out *= linear(r).pow(m);
    return out;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  // Coefficient of x^i.
  BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt{0}; }

  std::vector<BigInt> coefficients() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

  BigInt evaluate(const BigInt& at) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  // p(x - shift), by repeated synthetic division (Taylor shift).
  IntPolynomial shifted(const BigInt& shift) const {
    IntPolynomial out;
    out.coeffs_ = coeffs_;
    const std::size_t n = out.coeffs_.size();
    const BigInt a = -shift;
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) out.coeffs_[j - 1] += a * out.coeffs_[j];
    return out;
  }

  IntPolynomial pow(std::size_t e) const {
    IntPolynomial out = constant(1);
    IntPolynomial base = *this;
    while (e > 0) {
      if (e & 1u) out *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return out;
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator*=(const IntPolynomial& o) {
    if (is_zero() || o.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Quotient and remainder of division by a monic polynomial.
  std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& divisor) const {
    if (!divisor.is_monic()) throw std::invalid_argument("divmod_monic: divisor must be monic");
    IntPolynomial rem = *this;
    IntPolynomial quot;
    if (rem.degree() < divisor.degree()) return {quot, rem};
    const std::size_t dd = divisor.coeffs_.size();
    quot.coeffs_.assign(rem.coeffs_.size() - dd + 1, 0);
    for (std::size_t i = rem.coeffs_.size(); i-- >= dd;) {
      const BigInt lead = rem.coeffs_[i];
      if (lead == 0) continue;
      const std::size_t shift = i - (dd - 1);
      quot.coeffs_[shift] = lead;
      for (std::size_t j = 0; j < dd; ++j) rem.coeffs_[shift + j] -= lead * divisor.coeffs_[j];
    }
    quot.trim();
    rem.trim();
    return {quot, rem};
  }

  // Exact division; throws invariant_violation when the remainder is nonzero.
  IntPolynomial exact_div(const IntPolynomial& divisor) const {
    auto [q, r] = divmod_monic(divisor);
    if (!r.is_zero()) throw invariant_violation("polynomial division left a nonzero remainder");
    return q;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      const BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (mag != 1 || i == 0) os << mag;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

// det(xI - M) by fraction-free (Bareiss) elimination over Z[x]. The pivots
// are leading principal minors of xI - M, which are monic, so every division
// is exact and no pivoting is needed.
inline IntPolynomial char_poly_integer(const DenseMatrix<std::int64_t>& m) {
  const std::size_t n = m.order();
  if (n == 0) return IntPolynomial::constant(1);
  std::vector<IntPolynomial> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i * n + j] = i == j ? IntPolynomial::linear(m(i, j)) : IntPolynomial::constant(-BigInt(m(i, j)));

  IntPolynomial previous = IntPolynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const IntPolynomial& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPolynomial v = pivot * a[i * n + j] - a[i * n + k] * a[k * n + j];
        a[i * n + j] = v.exact_div(previous);
      }
    previous = pivot;
  }
  return a[(n - 1) * n + (n - 1)];
}

struct IntegerRoots {
  std::vector<std::pair<BigInt, std::size_t>> roots;  // ascending, with multiplicity
  bool fully_factored = false;
  IntPolynomial remainder;  // what is left after deflating every root found

  std::size_t count() const {
    std::size_t c = 0;
    for (const auto& r : roots) c += r.second;
    return c;
  }
};

namespace detail {

// Fujiwara's bound on the moduli of the roots of a monic polynomial.
inline long double root_modulus_bound(const IntPolynomial& p) {
  const int d = p.degree();
  long double best = 0.0L;
  for (int i = 1; i <= d; ++i) {
    BigInt c = p.coefficient(static_cast<std::size_t>(d - i));
    if (c == 0) continue;
    if (c < 0) c = -c;
    long double mag = c.convert_to<long double>();
    if (i == d) mag /= 2.0L;
    best = std::max(best, std::pow(mag, 1.0L / static_cast<long double>(i)));
  }
  return 2.0L * best;
}

}  // namespace detail

// Nonnegative integer roots of a monic polynomial, found by testing 0 and the
// positive divisors of the trailing nonzero coefficient up to a root bound and
// deflating by synthetic division. Negative roots are never searched.
inline IntegerRoots integer_roots_complete(const IntPolynomial& p) {
  if (!p.is_monic()) throw std::invalid_argument("integer_roots_complete: polynomial must be monic");
  IntegerRoots out;
  IntPolynomial rest = p;

  std::size_t zeros = 0;
  while (rest.degree() > 0 && rest.coefficient(0) == 0) {
    rest = rest.exact_div(IntPolynomial::x());
    ++zeros;
  }
  if (zeros > 0) out.roots.emplace_back(0, zeros);

  if (rest.degree() > 0) {
    const long double bound = detail::root_modulus_bound(rest);
    if (!(bound < 1e9L)) throw std::domain_error("integer_roots_complete: root bound too large to search");
    const auto limit = static_cast<std::int64_t>(std::ceil(bound));
    for (std::int64_t r = 1; r <= limit && rest.degree() > 0; ++r) {
      std::size_t mult = 0;
      while (rest.degree() > 0 && rest.coefficient(0) % r == 0 && rest.evaluate(r) == 0) {
        rest = rest.exact_div(IntPolynomial::linear(r));
        ++mult;
      }
      if (mult > 0) out.roots.emplace_back(r, mult);
    }
  }
  out.fully_factored = rest.degree() == 0;
  out.remainder = std::move(rest);
  return out;
}

// Laplacian characteristic polynomial of a join from those of its parts:
// x (x - n1 - n2) theta1(x - n2) theta2(x - n1) / ((x - n1)(x - n2)).
inline IntPolynomial join_char_poly(const IntPolynomial& theta1, std::size_t n1, const IntPolynomial& theta2,
                                    std::size_t n2) {
  if (theta1.degree() != static_cast<int>(n1) || theta2.degree() != static_cast<int>(n2) || n1 == 0 || n2 == 0)
    throw std::invalid_argument("join_char_poly: degrees must match positive vertex counts");
  const BigInt a = n1;
  const BigInt b = n2;
  IntPolynomial numerator = IntPolynomial::x() * IntPolynomial::linear(a + b) * theta1.shifted(b) * theta2.shifted(a);
  return numerator.exact_div(IntPolynomial::linear(a) * IntPolynomial::linear(b));
}

// Laplacian characteristic polynomials of K_m and its complement.
inline IntPolynomial complete_graph_char_poly(std::size_t m) {
  if (m == 0) return IntPolynomial::constant(1);
  return IntPolynomial::x() * IntPolynomial::linear(static_cast<std::int64_t>(m)).pow(m - 1);
}

inline IntPolynomial null_graph_char_poly(std::size_t m) { return IntPolynomial::x().pow(m); }

}  // namespace zdg

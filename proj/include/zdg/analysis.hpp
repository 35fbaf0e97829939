#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include "zdg/divisor_graph.hpp"
#include "zdg/eigen/polynomial.hpp"
#include "zdg/eigen/spectrum.hpp"
#include "zdg/join_spectrum.hpp"
#include "zdg/numtheory.hpp"

namespace zdg {

// Tolerance for numeric cross-checks of the closed-form predicates.
inline bool approx_equal(double a, double b, double rel_tol = 1e-8) {
  return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Second smallest eigenvalue counting multiplicity; empty for a single vertex.
inline std::optional<double> algebraic_connectivity(const SpectrumMultiset& spectrum) {
  if (spectrum.total_multiplicity() < 2) return std::nullopt;
  return spectrum.nth_smallest(1);
}

inline double spectral_radius(const SpectrumMultiset& spectrum) { return spectrum.max(); }

inline std::optional<double> algebraic_connectivity(integer n) {
  return algebraic_connectivity(reduced_spectrum(n).total);
}

inline double spectral_radius(integer n) { return spectral_radius(reduced_spectrum(n).total); }

namespace detail {
inline Factorization composite_factorization(integer n) {
  auto f = factorize(n);
  if (!has_zero_divisors(f)) throw empty_graph_error("Z_" + std::to_string(n) + " has no zero divisors");
  return f;
}
}  // namespace detail

// Closed form with p the smallest prime factor: p - 2 when n = p^2, else p - 1.
inline integer vertex_connectivity(const Factorization& f) {
  const integer p = f.smallest_prime();
  if (f.is_prime_power() && f.factors[0].exponent == 2) return p - 2;
  return p - 1;
}

inline integer vertex_connectivity(integer n) { return vertex_connectivity(detail::composite_factorization(n)); }

// The complement of Gamma(Z_n) is disconnected iff n = pq or n is a prime power other than 4.
inline bool complement_disconnected(const Factorization& f) {
  return f.is_two_distinct_primes() || (f.is_prime_power() && f.n != 4);
}

inline bool complement_disconnected(integer n) { return complement_disconnected(detail::composite_factorization(n)); }

// lambda equals the vertex count under the same condition.
inline bool lambda_equals_order(const Factorization& f) { return complement_disconnected(f); }

inline bool lambda_equals_order(integer n) { return lambda_equals_order(detail::composite_factorization(n)); }

// mu equals kappa iff n = pq or n = p^t with t >= 3. For n = p^2 the graph is
// complete and mu = kappa + 1, so the answer there is false.
inline bool mu_equals_kappa(const Factorization& f) {
  return f.is_two_distinct_primes() || (f.is_prime_power() && f.factors[0].exponent >= 3);
}

inline bool mu_equals_kappa(integer n) { return mu_equals_kappa(detail::composite_factorization(n)); }

// Laplacian integrality decided exactly on the characteristic polynomial of the
// weighted Laplacian; the class contributions are always integers.
inline bool is_laplacian_integral(const WeightedDivisorGraph& g) {
  return integer_roots_complete(char_poly_integer(weighted_laplacian(g))).fully_factored;
}

inline bool is_laplacian_integral(integer n) { return is_laplacian_integral(build_divisor_graph(n)); }

struct QuotientExtremes {
  bool mu_from_quotient = false;
  bool lambda_from_quotient = false;
};

// Whether mu(Gamma) is the second smallest eigenvalue of C and whether
// lambda(Gamma) is its largest.
inline QuotientExtremes quotient_extremes_check(const SpectrumAssembly& a) {
  QuotientExtremes out;
  const auto& q = a.quotient_spectrum;
  const double lambda = a.total.max();
  out.lambda_from_quotient = approx_equal(lambda, q.max());
  if (const auto mu = algebraic_connectivity(a.total); mu && q.total_multiplicity() >= 2)
    out.mu_from_quotient = approx_equal(*mu, q.nth_smallest(1));
  return out;
}

inline QuotientExtremes quotient_extremes_check(integer n) { return quotient_extremes_check(reduced_spectrum(n)); }

struct AnalysisReport {
  integer n = 0;
  integer vertex_count = 0;
  SpectrumMultiset spectrum;
  std::optional<double> mu;
  double lambda = 0.0;
  integer kappa = 0;
  integer delta_min = 0;
  integer delta_max = 0;
  bool laplacian_integral = false;
  bool complement_disconnected = false;
  bool lambda_equals_order = false;
  bool mu_equals_kappa = false;
  bool mu_from_quotient = false;
  bool lambda_from_quotient = false;
};

// Report for n from the reduced spectrum. Degrees come from the class
// structure rather than the explicit graph.
inline AnalysisReport analyze(integer n) {
  const auto g = build_divisor_graph(n);
  const auto& f = g.factorization();
  const auto assembly = reduced_spectrum(g);
  const auto degs = zero_divisor_degrees_by_class(g);

  AnalysisReport r;
  r.n = n;
  r.vertex_count = zero_divisor_count(f);
  r.spectrum = assembly.total;
  r.mu = algebraic_connectivity(assembly.total);
  r.lambda = spectral_radius(assembly.total);
  r.kappa = vertex_connectivity(f);
  r.delta_min = *std::min_element(degs.begin(), degs.end());
  r.delta_max = *std::max_element(degs.begin(), degs.end());
  r.laplacian_integral = is_laplacian_integral(g);
  r.complement_disconnected = complement_disconnected(f);
  r.lambda_equals_order = lambda_equals_order(f);
  r.mu_equals_kappa = mu_equals_kappa(f);
  const auto extremes = quotient_extremes_check(assembly);
  r.mu_from_quotient = extremes.mu_from_quotient;
  r.lambda_from_quotient = extremes.lambda_from_quotient;
  return r;
}

}  // namespace zdg

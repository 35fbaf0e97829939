#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "zdg/divisor_graph.hpp"
#include "zdg/eigen/jacobi.hpp"
#include "zdg/eigen/polynomial.hpp"
#include "zdg/eigen/spectrum.hpp"
#include "zdg/errors.hpp"
#include "zdg/numtheory.hpp"
#include "zdg/zero_divisor_graph.hpp"

namespace zdg {

inline constexpr std::size_t kDefaultOracleCap = 1200;

// Oracle vertex cap, overridable through ZDG_ORACLE_CAP.
inline std::size_t oracle_cap_from_env() {
  if (const char* env = std::getenv("ZDG_ORACLE_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultOracleCap;
}

// Laplacian spectrum of K_m ({0:1, m:m-1}) or of its complement ({0:m}).
inline SpectrumMultiset class_spectrum(ClassKind kind, std::size_t size) {
  if (size == 0) throw std::invalid_argument("class_spectrum: size must be positive");
  std::vector<SpectrumEntry> entries;
  if (kind == ClassKind::Null || size == 1) {
    entries.push_back({0.0, size, true});
  } else {
    entries.push_back({0.0, 1, true});
    entries.push_back({static_cast<double>(size), size - 1, true});
  }
  return {std::move(entries), kCoalesceTolerance};
}

// One class A_{d_j} after removing one zero from its Laplacian spectrum and
// shifting the rest by M_{d_j}.
struct ClassContribution {
  integer divisor = 0;
  ClassKind kind = ClassKind::Null;
  std::size_t size = 0;
  integer shift = 0;  // M_{d_j}
  std::vector<std::pair<integer, std::size_t>> values;  // exact, with multiplicity
};

struct SpectrumAssembly {
  integer n = 0;
  std::vector<ClassContribution> class_contributions;
  SpectrumMultiset quotient_spectrum;  // spectrum of C (equivalently of the weighted Laplacian)
  SpectrumMultiset total;
};

inline ClassContribution class_contribution(integer divisor, ClassKind kind, std::size_t size, integer shift) {
  ClassContribution c{divisor, kind, size, shift, {}};
  const auto spectrum = class_spectrum(kind, size);
  bool zero_removed = false;
  for (const auto& e : spectrum.entries()) {
    std::size_t mult = e.multiplicity;
    if (!zero_removed && e.value == 0.0) {
      --mult;
      zero_removed = true;
    }
    if (mult > 0) c.values.emplace_back(shift + static_cast<integer>(e.value), mult);
  }
  return c;
}

// Laplacian spectrum of Gamma(Z_n) through the divisor-graph reduction: the
// shifted class spectra together with the eigenvalues of the k x k matrix C.
inline SpectrumAssembly reduced_spectrum(const WeightedDivisorGraph& g, double tol = kCoalesceTolerance) {
  SpectrumAssembly out;
  out.n = g.n();
  const auto shifts = class_degrees(g);
  std::vector<std::pair<double, std::size_t>> all;
  for (std::size_t j = 0; j < g.order(); ++j) {
    const auto kind = g.class_is_complete(j) ? ClassKind::Complete : ClassKind::Null;
    auto c = class_contribution(g.vertices()[j], kind, g.weights()[j], shifts[j]);
    for (const auto& [v, m] : c.values) all.emplace_back(static_cast<double>(v), m);
    out.class_contributions.push_back(std::move(c));
  }
  const auto quotient = symmetric_eigenvalues(symmetric_form(g), tol);
  out.quotient_spectrum = coalesce(quotient, tol);
  for (double v : quotient) all.emplace_back(v, 1);
  out.total = coalesce_weighted(std::move(all), tol);
  return out;
}

inline SpectrumAssembly reduced_spectrum(integer n, double tol = kCoalesceTolerance) {
  return reduced_spectrum(build_divisor_graph(n), tol);
}

// Closed-form Laplacian spectrum of Gamma(Z_{p^t}), t >= 2.
inline SpectrumMultiset prime_power_spectrum(integer p, unsigned t) {
  if (!is_prime(p)) throw std::invalid_argument("prime_power_spectrum: p must be prime");
  if (t < 2) throw std::invalid_argument("prime_power_spectrum: exponent must be at least 2");
  auto phi_pow = [p](unsigned e) { return e == 0 ? integer{1} : checked_pow(p, e - 1) * (p - 1); };
  auto value = [p](unsigned e) { return checked_pow(p, e) - 1; };

  std::vector<std::pair<double, std::size_t>> entries{{0.0, 1}};
  auto add = [&](integer v, integer mult) {
    if (mult > 0) entries.emplace_back(static_cast<double>(v), static_cast<std::size_t>(mult));
  };
  if (t == 2) {
    add(p - 1, p - 2);
  } else if (t % 2 == 0) {
    const unsigned m = t / 2;
    for (unsigned i = 1; i < m; ++i) add(value(2 * m - i), phi_pow(i));
    add(value(m), phi_pow(m) - 1);
    for (unsigned i = 1; i < m; ++i) add(value(m - i), phi_pow(m + i));
  } else {
    const unsigned m = t / 2;
    for (unsigned i = 1; i <= m; ++i) add(value(2 * m + 1 - i), phi_pow(i));
    add(value(m), phi_pow(m + 1) - 1);
    for (unsigned i = 1; i < m; ++i) add(value(m - i), phi_pow(m + 1 + i));
  }
  return coalesce_weighted(std::move(entries));
}

// Laplacian characteristic polynomial of Gamma(Z_{p^t}) built by nesting joins:
// start from the middle class (or the two middle classes for odd t), then
// repeatedly take K_{phi(p^{lo})} joined with the disjoint union of a null
// class and the graph built so far.
inline IntPolynomial prime_power_char_poly(integer p, unsigned t) {
  if (!is_prime(p) || t < 2) throw std::invalid_argument("prime_power_char_poly: need prime p and t >= 2");
  auto phi_pow = [p](unsigned e) { return static_cast<std::size_t>(checked_pow(p, e - 1) * (p - 1)); };
  const unsigned m = t / 2;
  IntPolynomial theta;
  std::size_t vertices = 0;
  if (t % 2 == 0) {
    vertices = phi_pow(m);
    theta = complete_graph_char_poly(vertices);
  } else {
    const std::size_t a = phi_pow(m);
    const std::size_t b = phi_pow(m + 1);
    theta = join_char_poly(complete_graph_char_poly(a), a, null_graph_char_poly(b), b);
    vertices = a + b;
  }
  for (unsigned i = 1; i < m; ++i) {
    const std::size_t hub = phi_pow(m - i);
    const std::size_t leaf = phi_pow(t - m + i);
    const IntPolynomial side = null_graph_char_poly(leaf) * theta;
    theta = join_char_poly(complete_graph_char_poly(hub), hub, side, leaf + vertices);
    vertices += hub + leaf;
  }
  return theta;
}

// Combinatorial Laplacian D - A of an explicit graph.
inline DenseMatrix<double> laplacian_matrix(const SimpleGraph& g) {
  DenseMatrix<double> out(g.order());
  const auto deg = degrees(g);
  for (std::size_t i = 0; i < g.order(); ++i) {
    out(i, i) = static_cast<double>(deg[i]);
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j)) out(i, j) = out(j, i) = -1.0;
  }
  return out;
}

// Oracle: eigenvalues of the Laplacian of the explicit graph. Uses Eigen's
// tridiagonal QR solver so it shares no code with the reduced path.
inline SpectrumMultiset brute_spectrum(integer n, std::size_t cap = kDefaultOracleCap,
                                       double tol = kCoalesceTolerance) {
  const integer z = zero_divisor_count(factorize(n));
  if (has_zero_divisors(factorize(n)) && z > cap) throw oracle_cap_error(z, cap);
  const auto g = build_zero_divisor_graph(n);
  const auto deg = degrees(g);
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.order()), static_cast<Eigen::Index>(g.order()));
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    l(ii, ii) = static_cast<double>(deg[i]);
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j)) l(ii, static_cast<Eigen::Index>(j)) = l(static_cast<Eigen::Index>(j), ii) = -1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("brute_spectrum: eigensolver failed");
  const auto& ev = solver.eigenvalues();
  return coalesce(std::vector<double>(ev.data(), ev.data() + ev.size()), tol);
}

}  // namespace zdg

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zdg/dense_matrix.hpp"

namespace zdg {

struct JacobiOptions {
  // Converged once the off-diagonal Frobenius norm is at most this times ||A||_F.
  double relative_off_norm = 1e-12;
  int max_sweeps = 60;
  bool want_vectors = false;
};

struct SymmetricEigenResult {
  std::vector<double> values;                 // ascending
  std::optional<DenseMatrix<double>> vectors; // column j pairs with values[j]
  int sweeps = 0;
  double off_norm = 0.0;                      // bounds the eigenvalue error (Weyl)
};

namespace detail {

inline double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += a[i * n + j] * a[i * n + j];
  return std::sqrt(2.0 * sum);
}

}  // namespace detail

// Cyclic Jacobi rotations on a dense symmetric matrix. The full matrix is kept
// symmetric in storage; each rotation rewrites rows and columns p and q.
inline SymmetricEigenResult jacobi_eigen(const DenseMatrix<double>& m, const JacobiOptions& opts = {}) {
  const std::size_t n = m.order();
  if (n == 0) throw std::invalid_argument("jacobi_eigen: empty matrix");
  if (!is_symmetric(m, 1e-12)) throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");

  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (m(i, j) + m(j, i));

  std::vector<double> v;
  if (opts.want_vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }

  const double target = opts.relative_off_norm * frobenius_norm(m);
  SymmetricEigenResult out;
  out.off_norm = detail::off_diagonal_norm(a, n);

  while (out.off_norm > target) {
    if (out.sweeps == opts.max_sweeps) throw std::runtime_error("jacobi_eigen: no convergence");
    ++out.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      double* row_p = &a[p * n];
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = row_p[q];
        if (apq == 0.0) continue;
        double* row_q = &a[q * n];
        const double app = row_p[p];
        const double aqq = row_q[q];
        // Skip rotations that would not change the diagonal at working precision.
        if (out.sweeps > 4 && std::abs(apq) * 1e18 < std::abs(app) && std::abs(apq) * 1e18 < std::abs(aqq)) {
          row_p[q] = row_q[p] = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        row_p[p] = app - t * apq;
        row_q[q] = aqq + t * apq;
        row_p[q] = row_q[p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = row_p[r];
          const double h = row_q[r];
          const double gp = g - s * (h + g * tau);
          const double hq = h + s * (g - h * tau);
          row_p[r] = gp;
          row_q[r] = hq;
          a[r * n + p] = gp;
          a[r * n + q] = hq;
        }
        if (!v.empty()) {
          for (std::size_t r = 0; r < n; ++r) {
            const double g = v[r * n + p];
            const double h = v[r * n + q];
            v[r * n + p] = g - s * (h + g * tau);
            v[r * n + q] = h + s * (g - h * tau);
          }
        }
      }
    }
    out.off_norm = detail::off_diagonal_norm(a, n);
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });
  out.values.reserve(n);
  for (auto i : order) out.values.push_back(a[i * n + i]);
  if (!v.empty()) {
    DenseMatrix<double> vec(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j) vec(r, j) = v[r * n + order[j]];
    out.vectors = std::move(vec);
  }
  return out;
}

// All eigenvalues ascending. Throws if the off-diagonal residual, which bounds
// the eigenvalue error, ends above tol.
inline std::vector<double> symmetric_eigenvalues(const DenseMatrix<double>& m, double tol = 1e-8) {
  auto result = jacobi_eigen(m);
  if (result.off_norm > tol) throw std::runtime_error("symmetric_eigenvalues: residual above tolerance");
  return std::move(result.values);
}

}  // namespace zdg

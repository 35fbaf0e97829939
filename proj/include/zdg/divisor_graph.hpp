#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zdg/dense_matrix.hpp"
#include "zdg/errors.hpp"
#include "zdg/numtheory.hpp"

namespace zdg {

// The divisor graph of n: proper divisors d_1 < ... < d_k, d_i ~ d_j iff n | d_i d_j.
// Vertex d_i carries the weight phi(n / d_i), the size of the class of
// residues x with gcd(x, n) = d_i.
class WeightedDivisorGraph {
 public:
  explicit WeightedDivisorGraph(integer n) : factorization_(factorize(n)) {
    if (!has_zero_divisors(factorization_))
      throw empty_graph_error("Z_" + std::to_string(n) + " has no zero divisors");
    vertices_ = proper_divisors(factorization_);
    const std::size_t k = vertices_.size();
    weights_.reserve(k);
    for (integer d : vertices_) weights_.push_back(euler_phi(n / d));
    adjacency_.assign(k * k, false);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (checked_mul(vertices_[i], vertices_[j]) % n == 0) adjacency_[i * k + j] = adjacency_[j * k + i] = true;
  }

  integer n() const noexcept { return factorization_.n; }
  const Factorization& factorization() const noexcept { return factorization_; }
  std::size_t order() const noexcept { return vertices_.size(); }
  const std::vector<integer>& vertices() const noexcept { return vertices_; }
  const std::vector<integer>& weights() const noexcept { return weights_; }

  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i * order() + j]; }

  // Index of divisor d in vertices(), or order() if d is not a proper divisor.
  std::size_t index_of(integer d) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), d);
    return (it != vertices_.end() && *it == d) ? static_cast<std::size_t>(it - vertices_.begin()) : order();
  }

  // The class of divisor d_i induces a complete graph iff n | d_i^2, otherwise a null graph.
  // A singleton class is both; it is reported as K_1.
  bool class_is_complete(std::size_t i) const {
    return weights_[i] == 1 || checked_mul(vertices_[i], vertices_[i]) % n() == 0;
  }

  std::vector<std::pair<integer, integer>> edges() const {
    std::vector<std::pair<integer, integer>> out;
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = i + 1; j < order(); ++j)
        if (adjacent(i, j)) out.emplace_back(vertices_[i], vertices_[j]);
    return out;
  }

 private:
  Factorization factorization_;
  std::vector<integer> vertices_;
  std::vector<integer> weights_;
  std::vector<bool> adjacency_;
};

inline WeightedDivisorGraph build_divisor_graph(integer n) { return WeightedDivisorGraph(n); }

// M_j: total weight of the neighbours of d_j; 0 for an isolated vertex.
inline std::vector<integer> class_degrees(const WeightedDivisorGraph& g) {
  std::vector<integer> out(g.order(), 0);
  for (std::size_t j = 0; j < g.order(); ++j)
    for (std::size_t i = 0; i < g.order(); ++i)
      if (g.adjacent(i, j)) out[j] += g.weights()[i];
  return out;
}

// Vertex-weighted Laplacian: -m_j off the diagonal on edges, M_i on the diagonal.
// Zero row sums, not symmetric in general.
inline DenseMatrix<std::int64_t> weighted_laplacian(const WeightedDivisorGraph& g) {
  const auto degrees = class_degrees(g);
  DenseMatrix<std::int64_t> out(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    out(i, i) = static_cast<std::int64_t>(degrees[i]);
    for (std::size_t j = 0; j < g.order(); ++j)
      if (g.adjacent(i, j)) out(i, j) = -static_cast<std::int64_t>(g.weights()[j]);
  }
  return out;
}

// C = W^{1/2} L W^{-1/2}: symmetric, same spectrum as weighted_laplacian(g).
inline DenseMatrix<double> symmetric_form(const WeightedDivisorGraph& g) {
  const auto degrees = class_degrees(g);
  DenseMatrix<double> out(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    out(i, i) = static_cast<double>(degrees[i]);
    for (std::size_t j = 0; j < g.order(); ++j)
      if (g.adjacent(i, j))
        out(i, j) = -std::sqrt(static_cast<double>(g.weights()[i]) * static_cast<double>(g.weights()[j]));
  }
  return out;
}

// Degree in Gamma(Z_n) of any vertex of class i: M_i, plus |A_{d_i}| - 1 for complete classes.
inline std::vector<integer> zero_divisor_degrees_by_class(const WeightedDivisorGraph& g) {
  auto out = class_degrees(g);
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.class_is_complete(i)) out[i] += g.weights()[i] - 1;
  return out;
}

// 2|E(Gamma(Z_n))| counted through the class structure.
inline integer zero_divisor_degree_sum(const WeightedDivisorGraph& g) {
  const auto deg = zero_divisor_degrees_by_class(g);
  integer sum = 0;
  for (std::size_t i = 0; i < g.order(); ++i) sum += deg[i] * g.weights()[i];
  return sum;
}

}  // namespace zdg

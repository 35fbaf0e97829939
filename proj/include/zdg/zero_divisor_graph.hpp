#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zdg/divisor_graph.hpp"
#include "zdg/errors.hpp"
#include "zdg/numtheory.hpp"

namespace zdg {

// Undirected simple graph on labelled vertices. Adjacency is a packed
// upper-triangular bit set, so memory is z(z-1)/2 bits.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<integer> labels)
      : labels_(std::move(labels)), bits_((pair_count() + 63) / 64, 0) {}

  std::size_t order() const noexcept { return labels_.size(); }
  const std::vector<integer>& labels() const noexcept { return labels_; }

  bool adjacent(std::size_t i, std::size_t j) const {
    if (i == j) return false;
    const std::size_t b = bit(i, j);
    return (bits_[b / 64] >> (b % 64)) & 1u;
  }

  void add_edge(std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("SimpleGraph: loops are not allowed");
    const std::size_t b = bit(i, j);
    bits_[b / 64] |= std::uint64_t{1} << (b % 64);
  }

  std::size_t edge_count() const {
    std::size_t count = 0;
    for (auto word : bits_) count += static_cast<std::size_t>(__builtin_popcountll(word));
    return count;
  }

  // Edges as label pairs (x, y) with x < y, ascending.
  std::vector<std::pair<integer, integer>> edges() const {
    std::vector<std::pair<integer, integer>> out;
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = i + 1; j < order(); ++j)
        if (adjacent(i, j)) out.emplace_back(labels_[i], labels_[j]);
    return out;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t pair_count() const noexcept { return order() * (order() - (order() > 0)) / 2; }

  std::size_t bit(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * order() - i * (i + 1) / 2 + (j - i - 1);
  }

  std::vector<integer> labels_;
  std::vector<std::uint64_t> bits_;
};

enum class ClassKind { Complete, Null };

struct ResidueClass {
  integer divisor = 0;
  std::vector<integer> members;  // ascending
  ClassKind kind = ClassKind::Null;
};

// Partition of the zero divisors of Z_n into A_d = {x : gcd(x, n) = d}, d ascending.
struct ClassPartition {
  integer n = 0;
  std::vector<ResidueClass> classes;
};

namespace detail {
inline void require_zero_divisors(integer n) {
  if (n == 0 || !has_zero_divisors(factorize(n)))
    throw empty_graph_error("Z_" + std::to_string(n) + " has no zero divisors");
}
}  // namespace detail

inline std::vector<integer> zero_divisors(integer n) {
  detail::require_zero_divisors(n);
  std::vector<integer> out;
  for (integer x = 2; x < n; ++x)
    if (std::gcd(x, n) > 1) out.push_back(x);
  return out;
}

// Gamma(Z_n) by brute force: x ~ y iff n | xy.
inline SimpleGraph build_zero_divisor_graph(integer n) {
  SimpleGraph g(zero_divisors(n));
  const auto& x = g.labels();
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (checked_mul(x[i], x[j]) % n == 0) g.add_edge(i, j);
  return g;
}

inline ClassPartition class_partition(integer n) {
  detail::require_zero_divisors(n);
  ClassPartition out;
  out.n = n;
  for (integer d : proper_divisors(n)) {
    ResidueClass c;
    c.divisor = d;
    // K_1 and its complement coincide; singletons (d = n/2, n/2 odd) are labelled complete.
    c.kind = checked_mul(d, d) % n == 0 || euler_phi(n / d) == 1 ? ClassKind::Complete : ClassKind::Null;
    out.classes.push_back(std::move(c));
  }
  for (integer x = 2; x < n; ++x) {
    const integer d = std::gcd(x, n);
    if (d == 1) continue;
    auto it = std::lower_bound(out.classes.begin(), out.classes.end(), d,
                               [](const ResidueClass& c, integer v) { return c.divisor < v; });
    it->members.push_back(x);
  }
  return out;
}

// Degree sequence in label order.
inline std::vector<integer> degrees(const SimpleGraph& g) {
  std::vector<integer> out(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j)) {
        ++out[i];
        ++out[j];
      }
  return out;
}

namespace detail {
// Class index per vertex of g, following the partition's class order.
inline std::vector<std::size_t> class_of_vertices(const SimpleGraph& g, const ClassPartition& p) {
  std::vector<std::size_t> out(g.order(), p.classes.size());
  for (std::size_t c = 0; c < p.classes.size(); ++c)
    for (integer x : p.classes[c].members) {
      auto it = std::lower_bound(g.labels().begin(), g.labels().end(), x);
      if (it == g.labels().end() || *it != x) throw std::invalid_argument("class member is not a graph vertex");
      out[static_cast<std::size_t>(it - g.labels().begin())] = c;
    }
  for (auto c : out)
    if (c == p.classes.size()) throw std::invalid_argument("graph vertex missing from the class partition");
  return out;
}
}  // namespace detail

// Every vertex of a class sees the same number of neighbours in each class,
// and across distinct classes that number is either 0 or the whole class.
inline bool verify_equitable(const SimpleGraph& g, const ClassPartition& p) {
  if (g.order() != zero_divisor_count(p.n) || (g.order() > 0 && g.labels().back() >= p.n))
    throw std::invalid_argument("verify_equitable: graph and partition come from different n");
  const auto cls = detail::class_of_vertices(g, p);
  const std::size_t k = p.classes.size();
  std::vector<std::size_t> reference(k * k, 0);
  std::vector<bool> seen(k, false);
  std::vector<std::size_t> counts(k);
  for (std::size_t v = 0; v < g.order(); ++v) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t u = 0; u < g.order(); ++u)
      if (g.adjacent(v, u)) ++counts[cls[u]];
    const std::size_t c = cls[v];
    if (!seen[c]) {
      seen[c] = true;
      std::copy(counts.begin(), counts.end(), reference.begin() + static_cast<std::ptrdiff_t>(c * k));
      for (std::size_t j = 0; j < k; ++j)
        if (j != c && counts[j] != 0 && counts[j] != p.classes[j].members.size()) return false;
    } else if (!std::equal(counts.begin(), counts.end(), reference.begin() + static_cast<std::ptrdiff_t>(c * k))) {
      return false;
    }
  }
  return true;
}

// Expands the generalized join of the divisor graph over the class graphs:
// complete classes get all internal edges, and adjacent divisors get all
// cross edges. Vertex labels follow the ring elements.
inline SimpleGraph expand_generalized_join(const WeightedDivisorGraph& dg, const ClassPartition& p) {
  if (dg.n() != p.n || dg.order() != p.classes.size())
    throw std::invalid_argument("expand_generalized_join: mismatched n");
  std::vector<integer> labels;
  for (const auto& c : p.classes) labels.insert(labels.end(), c.members.begin(), c.members.end());
  std::sort(labels.begin(), labels.end());
  SimpleGraph g(labels);
  auto index = [&](integer x) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
  };
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    const auto& a = p.classes[i].members;
    if (p.classes[i].kind == ClassKind::Complete)
      for (std::size_t s = 0; s < a.size(); ++s)
        for (std::size_t t = s + 1; t < a.size(); ++t) g.add_edge(index(a[s]), index(a[t]));
    for (std::size_t j = i + 1; j < p.classes.size(); ++j) {
      if (!dg.adjacent(i, j)) continue;
      for (integer x : a)
        for (integer y : p.classes[j].members) g.add_edge(index(x), index(y));
    }
  }
  return g;
}

}  // namespace zdg

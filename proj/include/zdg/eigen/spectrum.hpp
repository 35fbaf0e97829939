#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zdg {

struct SpectrumEntry {
  double value = 0.0;
  std::size_t multiplicity = 0;
  bool exact = false;  // value is an integer held exactly
};

// Default tolerances for grouping numerically equal eigenvalues.
inline constexpr double kCoalesceTolerance = 1e-8;
inline constexpr double kIntegerSnapTolerance = 1e-6;

// Eigenvalues with multiplicities, values strictly increasing.
class SpectrumMultiset {
 public:
  SpectrumMultiset() = default;
  SpectrumMultiset(std::vector<SpectrumEntry> entries, double coalesce_tol)
      : entries_(std::move(entries)), coalesce_tol_(coalesce_tol) {}

  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  double coalesce_tol() const noexcept { return coalesce_tol_; }
  bool empty() const noexcept { return entries_.empty(); }

  std::size_t total_multiplicity() const {
    std::size_t sum = 0;
    for (const auto& e : entries_) sum += e.multiplicity;
    return sum;
  }

  double weighted_sum() const {
    double sum = 0.0;
    for (const auto& e : entries_) sum += e.value * static_cast<double>(e.multiplicity);
    return sum;
  }

  double min() const { return entries_.front().value; }
  double max() const { return entries_.back().value; }

  // Multiplicity of the entry within the coalescing tolerance of value, or 0.
  std::size_t multiplicity_of(double value) const {
    for (const auto& e : entries_)
      if (std::abs(e.value - value) <= std::max(coalesce_tol_, coalesce_tol_ * std::abs(value))) return e.multiplicity;
    return 0;
  }

  // k-th smallest value counting multiplicity, k starting at 0.
  double nth_smallest(std::size_t k) const {
    for (const auto& e : entries_) {
      if (k < e.multiplicity) return e.value;
      k -= e.multiplicity;
    }
    throw std::out_of_range("SpectrumMultiset::nth_smallest");
  }

  bool all_exact() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const SpectrumEntry& e) { return e.exact; });
  }

  // Every value with its multiplicity spelled out, ascending.
  std::vector<double> expanded() const {
    std::vector<double> out;
    out.reserve(total_multiplicity());
    for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
    return out;
  }

 private:
  std::vector<SpectrumEntry> entries_;
  double coalesce_tol_ = kCoalesceTolerance;
};

// Groups weighted values whose successive gaps are at most max(tol, tol*|value|).
// The representative is the weighted mean; it is snapped to the nearest
// integer (and marked exact) when within the snap tolerance.
inline SpectrumMultiset coalesce_weighted(std::vector<std::pair<double, std::size_t>> values,
                                          double tol = kCoalesceTolerance,
                                          double snap_tol = kIntegerSnapTolerance) {
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SpectrumEntry> entries;
  std::size_t i = 0;
  while (i < values.size()) {
    if (values[i].second == 0) {
      ++i;
      continue;
    }
    double weighted = values[i].first * static_cast<double>(values[i].second);
    std::size_t count = values[i].second;
    std::size_t j = i + 1;
    for (; j < values.size(); ++j) {
      const double gap = values[j].first - values[j - 1].first;
      if (gap > std::max(tol, tol * std::abs(values[j].first))) break;
      weighted += values[j].first * static_cast<double>(values[j].second);
      count += values[j].second;
    }
    if (count > 0) {
      double mean = weighted / static_cast<double>(count);
      const double nearest = std::round(mean);
      const bool snap = std::abs(mean - nearest) <= snap_tol;
      if (snap) mean = nearest == 0.0 ? 0.0 : nearest;
      entries.push_back({mean, count, snap});
    }
    i = j;
  }
  return {std::move(entries), tol};
}

inline SpectrumMultiset coalesce(const std::vector<double>& values, double tol = kCoalesceTolerance) {
  std::vector<std::pair<double, std::size_t>> weighted;
  weighted.reserve(values.size());
  for (double v : values) weighted.emplace_back(v, 1);
  return coalesce_weighted(std::move(weighted), tol);
}

struct SpectrumComparison {
  bool match = false;
  double max_deviation = 0.0;  // over paired entries; meaningful only when the shapes agree
};

// Same number of entries, equal multiplicities, and every paired value within
// rel_tol * max(1, |value|).
inline SpectrumComparison compare_spectra(const SpectrumMultiset& a, const SpectrumMultiset& b,
                                          double rel_tol = 1e-8) {
  SpectrumComparison out;
  if (a.entries().size() != b.entries().size()) return out;
  out.match = true;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    const auto& x = a.entries()[i];
    const auto& y = b.entries()[i];
    const double dev = std::abs(x.value - y.value);
    out.max_deviation = std::max(out.max_deviation, dev);
    if (x.multiplicity != y.multiplicity || dev > rel_tol * std::max(1.0, std::abs(x.value))) out.match = false;
  }
  return out;
}

}  // namespace zdg

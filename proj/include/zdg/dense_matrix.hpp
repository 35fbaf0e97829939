#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace zdg {

// Square, row-major matrix. Small enough that value semantics are fine.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t order, T fill = T{}) : order_(order), data_(order * order, fill) {}

  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) : order_(rows.size()) {
    data_.reserve(order_ * order_);
    for (const auto& row : rows) {
      if (row.size() != order_) throw std::invalid_argument("DenseMatrix: rows must form a square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t order() const noexcept { return order_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

  T trace() const {
    T sum{};
    for (std::size_t i = 0; i < order_; ++i) sum += (*this)(i, i);
    return sum;
  }

  template <class U>
  DenseMatrix<U> cast() const {
    DenseMatrix<U> out(order_);
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j) out(i, j) = static_cast<U>((*this)(i, j));
    return out;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<T> data_;
};

template <class T>
double frobenius_norm(const DenseMatrix<T>& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) {
      const double v = static_cast<double>(m(i, j));
      sum += v * v;
    }
  return std::sqrt(sum);
}

// Symmetric up to rel_tol * max|entry|.
template <class T>
bool is_symmetric(const DenseMatrix<T>& m, double rel_tol) {
  double scale = 0.0;
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) scale = std::max(scale, std::abs(static_cast<double>(m(i, j))));
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = i + 1; j < m.order(); ++j)
      if (std::abs(static_cast<double>(m(i, j)) - static_cast<double>(m(j, i))) > rel_tol * scale) return false;
  return true;
}

}  // namespace zdg

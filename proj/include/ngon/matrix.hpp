#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ngon/error.hpp"
#include "ngon/rat.hpp"

namespace ngon {

/// Dense row-major matrix over an exact field T (T{} is zero, T{1} is one).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw InvalidInput("matrix data size does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InvalidInput("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::span<const T> data() const { return data_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const T> row(std::size_t r) const {
    return std::span<const T>(data_).subspan(r * cols_, cols_);
  }

  [[nodiscard]] T row_sum(std::size_t r) const {
    T s{};
    for (const auto& x : row(r)) s += x;
    return s;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using DenseMatrix = Matrix<Rat>;

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw InvalidInput("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                       " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

/// Same shape and entrywise equal.
template <class T>
bool mat_eq(const Matrix<T>& a, const Matrix<T>& b) {
  return a == b;
}

namespace detail {

// Row echelon form in place; returns the rank and the determinant sign flips.
template <class T>
std::pair<std::size_t, bool> echelon(Matrix<T>& m) {
  std::size_t rank = 0;
  bool odd_swaps = false;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == T{}) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
      odd_swaps = !odd_swaps;
    }
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == T{}) continue;
      T factor = m(r, col) / m(rank, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  return {rank, odd_swaps};
}

}  // namespace detail

/// Exact rank by Gaussian elimination (first nonzero pivot).
template <class T>
std::size_t mat_rank(Matrix<T> a) {
  return detail::echelon(a).first;
}

template <class T>
T determinant(Matrix<T> a) {
  if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
  auto [rank, odd_swaps] = detail::echelon(a);
  if (rank < a.rows()) return T{};
  T det{1};
  for (std::size_t i = 0; i < a.rows(); ++i) det *= a(i, i);
  return odd_swaps ? T{} - det : det;
}

}  // namespace ngon

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jetinv/scalar.hpp"

namespace jetinv {

/// Small dense row-major matrix over an exact or binary64 scalar.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix&) const = default;

  double max_norm() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

template <class T>
T determinant(const Matrix<T>& a);

/// Throws DomainError(singular) when the matrix is not invertible (exactly
/// for rationals, relative to `tol.regularity` for binary64).
template <class T>
Matrix<T> inverse(const Matrix<T>& a, const Tolerance& tol = {});

/// True when |det| clears the regularity threshold (exact nonzero for rationals).
template <class T>
bool is_nonsingular(const Matrix<T>& a, const T& det, const Tolerance& tol = {});

template <class T>
bool approx_equal(const Matrix<T>& a, const Matrix<T>& b, const Tolerance& tol = {});

}  // namespace jetinv

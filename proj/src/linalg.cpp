#include "jetinv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "jetinv/errors.hpp"

namespace jetinv {

template <class T>
Matrix<T> Matrix<T>::identity(int n) {
  Matrix<T> out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = ScalarTraits<T>::from_int(1);
  return out;
}

template <class T>
Matrix<T> Matrix<T>::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw_domain(ErrorCode::dimension_mismatch, "matrix product shape mismatch");
  Matrix<T> out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const T& lhs = (*this)(i, k);
      if (lhs == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += lhs * rhs(k, j);
    }
  }
  return out;
}

template <class T>
double Matrix<T>::max_norm() const {
  double best = 0.0;
  for (const T& x : data_) best = std::max(best, std::abs(ScalarTraits<T>::to_double(x)));
  return best;
}

namespace {

// Row index of the pivot for column `col`: first nonzero for exact scalars,
// largest magnitude otherwise. Returns -1 when the column is exactly zero.
template <class T>
int choose_pivot(const Matrix<T>& m, int col) {
  int pivot = -1;
  double best = 0.0;
  for (int row = col; row < m.rows(); ++row) {
    if (m(row, col) == 0) continue;
    if constexpr (ScalarTraits<T>::exact) {
      return row;
    } else {
      const double mag = std::abs(m(row, col));
      if (pivot < 0 || mag > best) {
        pivot = row;
        best = mag;
      }
    }
  }
  return pivot;
}

template <class T>
void swap_rows(Matrix<T>& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

template <class T>
T determinant(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw_domain(ErrorCode::dimension_mismatch, "determinant of a non-square matrix");
  Matrix<T> m = a;
  const int n = m.rows();
  T det = ScalarTraits<T>::from_int(1);
  for (int col = 0; col < n; ++col) {
    const int pivot = choose_pivot(m, col);
    if (pivot < 0) return ScalarTraits<T>::from_int(0);
    if (pivot != col) {
      swap_rows(m, pivot, col);
      det = -det;
    }
    det *= m(col, col);
    for (int row = col + 1; row < n; ++row) {
      if (m(row, col) == 0) continue;
      const T factor = m(row, col) / m(col, col);
      for (int j = col; j < n; ++j) m(row, j) -= factor * m(col, j);
    }
  }
  return det;
}

template <class T>
bool is_nonsingular(const Matrix<T>& a, const T& det, const Tolerance& tol) {
  if constexpr (ScalarTraits<T>::exact) {
    (void)a;
    (void)tol;
    return det != 0;
  } else {
    const double scale = std::pow(std::max(a.max_norm(), 1e-300), a.rows());
    return std::abs(det) > tol.regularity * scale;
  }
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a, const Tolerance& tol) {
  if (a.rows() != a.cols()) throw_domain(ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
  if (!is_nonsingular(a, determinant(a), tol)) throw_domain(ErrorCode::singular, "matrix is singular");
  const int n = a.rows();
  Matrix<T> m = a;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    const int pivot = choose_pivot(m, col);
    if (pivot < 0) throw_domain(ErrorCode::singular, "matrix is singular");
    swap_rows(m, pivot, col);
    swap_rows(inv, pivot, col);
    const T diag = m(col, col);
    for (int j = 0; j < n; ++j) {
      m(col, j) /= diag;
      inv(col, j) /= diag;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || m(row, col) == 0) continue;
      const T factor = m(row, col);
      for (int j = 0; j < n; ++j) {
        m(row, j) -= factor * m(col, j);
        inv(row, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

template <class T>
bool approx_equal(const Matrix<T>& a, const Matrix<T>& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (!scalar_equal(a(i, j), b(i, j), tol)) return false;
    }
  }
  return true;
}

#define JETINV_INSTANTIATE(T)                                                  \
  template class Matrix<T>;                                                    \
  template T determinant(const Matrix<T>&);                                    \
  template Matrix<T> inverse(const Matrix<T>&, const Tolerance&);              \
  template bool is_nonsingular(const Matrix<T>&, const T&, const Tolerance&);  \
  template bool approx_equal(const Matrix<T>&, const Matrix<T>&, const Tolerance&);

JETINV_INSTANTIATE(Rational)
JETINV_INSTANTIATE(double)

#undef JETINV_INSTANTIATE

}  // namespace jetinv

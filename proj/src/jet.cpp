#include "jetinv/jet.hpp"

#include <string>

#include "jetinv/errors.hpp"

namespace jetinv {

template <class T>
JetTable<T> JetTable<T>::truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw_domain(ErrorCode::out_of_range, "truncation order " + std::to_string(order) + " outside [0, " +
                                              std::to_string(this->order()) + "]");
  }
  JetTable<T> out(components_, IndexSpace(dim(), order));
  // ranks of the shorter space coincide with the prefix of this one
  for (int c = 0; c < components_; ++c) {
    for (std::size_t k = 0; k < out.space().size(); ++k) out(c, k) = (*this)(c, k);
  }
  return out;
}

template <class T>
bool approx_equal(const JetTable<T>& a, const JetTable<T>& b, const Tolerance& tol) {
  if (a.components() != b.components() || !(a.space() == b.space())) return false;
  const auto va = a.values();
  const auto vb = b.values();
  for (std::size_t k = 0; k < va.size(); ++k) {
    if (!scalar_equal(va[k], vb[k], tol)) return false;
  }
  return true;
}

template <class T>
Velocity<T>::Velocity(int m, JetTable<T> coords) : m_(m), coords_(std::move(coords)) {
  if (m_ < 0 || coords_.components() != coords_.dim() + m_) {
    throw_domain(ErrorCode::dimension_mismatch, "velocity table must have n + m components");
  }
}

template <class T>
Matrix<T> Velocity<T>::block(std::span<const int> nu) const {
  const int n = this->n();
  if (static_cast<int>(nu.size()) != n) throw_domain(ErrorCode::dimension_mismatch, "chart selector must have n entries");
  if (r() < 1) throw_domain(ErrorCode::order_mismatch, "velocity of order 0 has no derivative block");
  Matrix<T> out(n, n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) out(k, j) = coords_(nu[static_cast<std::size_t>(k)], static_cast<std::size_t>(1 + j));
  }
  return out;
}

template <class T>
Matrix<T> Velocity<T>::first_derivatives() const {
  Matrix<T> out(target_dim(), n());
  if (r() < 1) return out;
  for (int a = 0; a < target_dim(); ++a) {
    for (int j = 0; j < n(); ++j) out(a, j) = coords_(a, static_cast<std::size_t>(1 + j));
  }
  return out;
}

template <class T>
bool approx_equal(const Velocity<T>& a, const Velocity<T>& b, const Tolerance& tol) {
  return a.m() == b.m() && approx_equal(a.table(), b.table(), tol);
}

template <class T>
GroupJet<T>::GroupJet(JetTable<T> coords) : coords_(std::move(coords)) {
  if (coords_.components() != coords_.dim()) {
    throw_domain(ErrorCode::dimension_mismatch, "group jet table must have n components over n variables");
  }
  for (int j = 0; j < coords_.components(); ++j) {
    if (coords_(j, 0) != 0) throw_domain(ErrorCode::out_of_range, "group jets have target 0");
  }
}

template <class T>
GroupJet<T> GroupJet<T>::identity(int n, int r) {
  return scaling(n, r, ScalarTraits<T>::from_int(1));
}

template <class T>
GroupJet<T> GroupJet<T>::scaling(int n, int r, const T& tau) {
  GroupJet<T> out(n, r);
  if (r >= 1) {
    for (int j = 0; j < n; ++j) out.coords_(j, static_cast<std::size_t>(1 + j)) = tau;
  }
  return out;
}

template <class T>
GroupJet<T> GroupJet<T>::linear(const Matrix<T>& a, int r) {
  if (a.rows() != a.cols()) throw_domain(ErrorCode::dimension_mismatch, "linear jet needs a square matrix");
  GroupJet<T> out(a.rows(), r);
  if (r >= 1) {
    for (int j = 0; j < a.rows(); ++j) {
      for (int i = 0; i < a.cols(); ++i) out.coords_(j, static_cast<std::size_t>(1 + i)) = a(j, i);
    }
  }
  return out;
}

template <class T>
Matrix<T> GroupJet<T>::linear_part() const {
  Matrix<T> out(n(), n());
  if (r() < 1) return out;
  for (int j = 0; j < n(); ++j) {
    for (int i = 0; i < n(); ++i) out(j, i) = coords_(j, static_cast<std::size_t>(1 + i));
  }
  return out;
}

template <class T>
bool GroupJet<T>::is_invertible(const Tolerance& tol) const {
  if (r() < 1) return true;
  const Matrix<T> a = linear_part();
  return is_nonsingular(a, determinant(a), tol);
}

template <class T>
bool approx_equal(const GroupJet<T>& a, const GroupJet<T>& b, const Tolerance& tol) {
  return approx_equal(a.table(), b.table(), tol);
}

#define JETINV_INSTANTIATE(T)                                                          \
  template class JetTable<T>;                                                          \
  template class Velocity<T>;                                                          \
  template class GroupJet<T>;                                                          \
  template bool approx_equal(const JetTable<T>&, const JetTable<T>&, const Tolerance&); \
  template bool approx_equal(const Velocity<T>&, const Velocity<T>&, const Tolerance&); \
  template bool approx_equal(const GroupJet<T>&, const GroupJet<T>&, const Tolerance&);

JETINV_INSTANTIATE(Rational)
JETINV_INSTANTIATE(double)

#undef JETINV_INSTANTIATE

}  // namespace jetinv

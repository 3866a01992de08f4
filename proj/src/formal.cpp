#include "jetinv/formal.hpp"

#include <string>

#include "jetinv/errors.hpp"
#include "jetinv/invariants.hpp"

namespace jetinv {

namespace {

template <class T>
Matrix<T> leading_inverse(const Velocity<T>& v, const Tolerance& tol) {
  if (v.r() < 1) throw_domain(ErrorCode::order_mismatch, "delta operators need order >= 1");
  std::vector<int> leading(static_cast<std::size_t>(v.n()));
  for (int k = 0; k < v.n(); ++k) leading[static_cast<std::size_t>(k)] = k;
  return inverse(v.block(leading), tol);
}

void check_direction(int i, int n) {
  if (i < 0 || i >= n) throw_domain(ErrorCode::out_of_range, "direction " + std::to_string(i) + " outside [0, n)");
}

}  // namespace

template <class T>
JetPolynomial<T> d_formal(const JetPolynomial<T>& f, int i, int r) {
  check_direction(i, f.n());
  if (f.order() >= r) {
    throw_domain(ErrorCode::order_overflow, "formal derivative of an order " + std::to_string(f.order()) +
                                                " function does not fit in order " + std::to_string(r));
  }
  JetPolynomial<T> out(f.n(), f.target_dim(), f.order() + 1);
  for (const JetVariable& var : f.variables()) {
    const JetVariable raised{var.component, var.index.with(i)};
    out = out + JetPolynomial<T>::variable(f.n(), f.target_dim(), raised) * f.partial(var);
  }
  return out;
}

template <class T>
T evaluate(const JetPolynomial<T>& f, const Velocity<T>& v) {
  if (f.n() != v.n() || f.target_dim() != v.target_dim()) {
    throw_domain(ErrorCode::dimension_mismatch, "polynomial and velocity live over different jet spaces");
  }
  if (f.max_variable_order() > v.r()) {
    throw_domain(ErrorCode::order_mismatch, "polynomial uses coordinates of order " +
                                                std::to_string(f.max_variable_order()) + " but velocity has order " +
                                                std::to_string(v.r()));
  }
  T total = ScalarTraits<T>::from_int(0);
  for (const auto& [mono, coeff] : f.terms()) {
    T term = coeff;
    for (const JetVariable& var : mono.factors) term *= v(var.component, var.index);
    total += term;
  }
  return total;
}

template <class T>
T delta_apply(const JetPolynomial<T>& f, int i, const Velocity<T>& v, const Tolerance& tol) {
  check_direction(i, v.n());
  const Matrix<T> z = leading_inverse(v, tol);
  T total = ScalarTraits<T>::from_int(0);
  for (int s = 0; s < v.n(); ++s) {
    if (z(s, i) == 0) continue;
    total += z(s, i) * evaluate(d_formal(f, s, v.r()), v);
  }
  return total;
}

template <class T>
JetTable<T> delta_vector(const Velocity<T>& v, int i, const Tolerance& tol) {
  check_direction(i, v.n());
  const Matrix<T> z = leading_inverse(v, tol);
  JetTable<T> out(v.target_dim(), IndexSpace(v.n(), v.r() - 1));
  const IndexSpace& space = out.space();
  for (std::size_t k = 0; k < space.size(); ++k) {
    for (int s = 0; s < v.n(); ++s) {
      if (z(s, i) == 0) continue;
      const std::size_t raised = v.space().rank(space.at(k).with(s));
      for (int a = 0; a < v.target_dim(); ++a) out(a, k) += z(s, i) * v(a, raised);
    }
  }
  return out;
}

template <class T>
DeltaComponents<T> delta_components(const Velocity<T>& v, int i, const Tolerance& tol) {
  check_direction(i, v.n());
  const int n = v.n();
  const int r = v.r();
  const Matrix<T> z = leading_inverse(v, tol);
  std::vector<int> leading(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) leading[static_cast<std::size_t>(k)] = k;
  const GrassmannPoint<T> p = extract_recurrence(v, leading, tol);

  DeltaComponents<T> out;
  out.base.assign(static_cast<std::size_t>(n), ScalarTraits<T>::from_int(0));
  out.base[static_cast<std::size_t>(i)] = ScalarTraits<T>::from_int(1);
  const IndexSpace lower(n, r - 1);
  out.w = JetTable<T>(v.m(), lower);
  out.y = JetTable<T>(n, lower);
  for (std::size_t k = 0; k < lower.size(); ++k) {
    const MultiIndex& index = lower.at(k);
    const std::size_t raised_i = v.space().rank(index.with(i));
    for (int sigma = 0; sigma < v.m(); ++sigma) out.w(sigma, k) = p.w(sigma, raised_i);
    if (index.empty()) continue;
    for (int s = 0; s < n; ++s) {
      if (z(s, i) == 0) continue;
      const std::size_t raised = v.space().rank(index.with(s));
      for (int c = 0; c < n; ++c) out.y(c, k) += z(s, i) * v(c, raised);
    }
  }
  return out;
}

#define JETINV_INSTANTIATE(T)                                                                          \
  template JetPolynomial<T> d_formal(const JetPolynomial<T>&, int, int);                               \
  template T evaluate(const JetPolynomial<T>&, const Velocity<T>&);                                    \
  template T delta_apply(const JetPolynomial<T>&, int, const Velocity<T>&, const Tolerance&);          \
  template JetTable<T> delta_vector(const Velocity<T>&, int, const Tolerance&);                        \
  template struct DeltaComponents<T>;                                                                  \
  template DeltaComponents<T> delta_components(const Velocity<T>&, int, const Tolerance&);

JETINV_INSTANTIATE(Rational)
JETINV_INSTANTIATE(double)

#undef JETINV_INSTANTIATE

}  // namespace jetinv

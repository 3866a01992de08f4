#pragma once

#include <vector>

#include "jetinv/jet.hpp"
#include "jetinv/jet_polynomial.hpp"

namespace jetinv {

/// i-th formal (total) derivative sum_{A,J} y^A_{J i} df/dy^A_J of a function
/// on the order r-1 jet space; the result lives on the order r jet space.
/// Throws DomainError(order_overflow) when f is declared of order >= r.
template <class T>
JetPolynomial<T> d_formal(const JetPolynomial<T>& f, int i, int r);

/// f at the coordinates of v.
template <class T>
T evaluate(const JetPolynomial<T>& f, const Velocity<T>& v);

/// (Delta_i f)(v) = z^s_i (d_s f)(v), z the inverse of the leading n x n block.
template <class T>
T delta_apply(const JetPolynomial<T>& f, int i, const Velocity<T>& v, const Tolerance& tol = {});

/// Components of Delta_i at v in the plain jet coordinates y^A_J, |J| <= r-1:
/// z^s_i y^A_{J s}.
template <class T>
JetTable<T> delta_vector(const Velocity<T>& v, int i, const Tolerance& tol = {});

/// Delta_i expressed in the adapted chart (y^i, w^sigma_P, y^k_P).
template <class T>
struct DeltaComponents {
  /// coefficient on d/dy^k for k < n: the unit vector e_i
  std::vector<T> base;
  /// w^sigma_{P i} on d/dw^sigma_P, |P| <= r-1
  JetTable<T> w;
  /// z^s_i y^k_{P s} on d/dy^k_P, 1 <= |P| <= r-1; order-0 slots stay zero
  JetTable<T> y;
};

/// Requires the leading n x n block of v to be invertible.
template <class T>
DeltaComponents<T> delta_components(const Velocity<T>& v, int i, const Tolerance& tol = {});

}  // namespace jetinv

#pragma once

#include <span>

#include "jetinv/jet.hpp"
#include "jetinv/jet_polynomial.hpp"
#include "jetinv/polynomial.hpp"

// References built from plain polynomial algebra (expand, differentiate,
// evaluate), independent of the partition-sum kernel.
namespace jetinv::checks {

/// table(A, I) = D_I f^A (point) for |I| <= r.
template <class T>
JetTable<T> taylor_table(const PolynomialMap<T>& f, std::span<const T> point, int r);

/// r-jet at `point` of outer o inner, from the expanded composite polynomial.
template <class T>
JetTable<T> composite_taylor(const PolynomialMap<T>& outer, const PolynomialMap<T>& inner, std::span<const T> point,
                             int r);

/// t -> f(T^k gamma (t)) as a polynomial in t: every y^A_J is replaced by D_J gamma^A.
template <class T>
Polynomial<T> along_prolongation(const JetPolynomial<T>& f, const PolynomialMap<T>& gamma);

}  // namespace jetinv::checks

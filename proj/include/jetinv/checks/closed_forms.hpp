#pragma once

#include "jetinv/charts.hpp"
#include "jetinv/invariants.hpp"
#include "jetinv/jet.hpp"

// Hand-expanded order-2 formulas, written index by index. They share no code
// with the partition-sum kernel and serve as independent references.
namespace jetinv::checks {

/// c^k_i = b^p_i a^k_p,  c^k_ij = b^p_ij a^k_p + b^p_i b^q_j a^k_pq
template <class T>
GroupJet<T> compose_order2(const GroupJet<T>& a, const GroupJet<T>& b);

/// x^i_r = z^i_r,  x^i_rs = -z^i_p z^j_r z^k_s a^p_jk  with z the inverse of a^j_i
template <class T>
GroupJet<T> invert_order2(const GroupJet<T>& a, const Tolerance& tol = {});

/// ybar^A_i = y^A_s a^s_i,  ybar^A_ij = y^A_pq a^p_i a^q_j + y^A_p a^p_ij
template <class T>
Velocity<T> act_order2(const Velocity<T>& v, const GroupJet<T>& a);

/// w^s_i = z^p_i y^s_p,  w^s_ij = z^p_i z^q_j (y^s_pq - z^k_t y^s_k y^t_pq), leading chart
template <class T>
GrassmannPoint<T> invariants_order2(const Velocity<T>& v, const Tolerance& tol = {});

/// ybar^A_i = F^A_B y^B_i,  ybar^A_ij = F^A_BC y^B_i y^C_j + F^A_B y^B_ij
template <class T>
Velocity<T> transform_order2(const ChartJet<T>& f, const Velocity<T>& v);

/// Induced transformation of order-2 Grassmann coordinates, leading chart on
/// both sides, through the matrices P^q_s and Q = P^{-1}.
template <class T>
GrassmannPoint<T> transform_grassmann_order2(const ChartJet<T>& f, const GrassmannPoint<T>& p,
                                             const Tolerance& tol = {});

}  // namespace jetinv::checks

#pragma once

#include "jetinv/jet.hpp"

namespace jetinv {

/// Jet of alpha o beta, where `a` holds the coordinates of alpha (applied
/// second) and `b` those of beta (applied first).
template <class T>
GroupJet<T> compose_group(const GroupJet<T>& a, const GroupJet<T>& b);

/// Two-sided inverse. The order-1 block is the matrix inverse; each higher
/// order is solved from compose_group(a, x) = id, where the unknown order-s
/// block enters only through x^p_I a^k_p.
template <class T>
GroupJet<T> invert_group(const GroupJet<T>& a, const Tolerance& tol = {});

template <class T>
GroupJet<T> truncate_group(const GroupJet<T>& a, int s);

}  // namespace jetinv

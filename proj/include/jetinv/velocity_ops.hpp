#pragma once

#include <optional>
#include <span>
#include <vector>

#include "jetinv/jet.hpp"
#include "jetinv/polynomial.hpp"

namespace jetinv {

/// Right action v o a: base point kept, derivatives transformed by the chain rule.
template <class T>
Velocity<T> act(const Velocity<T>& v, const GroupJet<T>& a, const Tolerance& tol = {});

/// Drops all coordinates of order > s.
template <class T>
Velocity<T> truncate(const Velocity<T>& v, int s);

/// Action of t -> tau * t, i.e. coordinates of order s multiplied by tau^s.
/// tau = 0 is allowed and collapses the velocity onto its base point.
template <class T>
Velocity<T> scale_velocity(const Velocity<T>& v, const T& tau);

/// Witness that the n x n block selected by `nu` (strictly increasing target
/// components, 0-based) is invertible.
template <class T>
struct RegularityCertificate {
  std::vector<int> nu;
  T det;
};

/// Rational mode returns the lexicographically first invertible block; binary64
/// mode the block of largest |det| among those clearing the threshold.
/// std::nullopt means rank(y^A_i) < n.
template <class T>
std::optional<RegularityCertificate<T>> is_regular(const Velocity<T>& v, const Tolerance& tol = {});

/// True when the block selected by `nu` clears the regularity threshold.
template <class T>
bool is_regular_in(const Velocity<T>& v, std::span<const int> nu, const Tolerance& tol = {});

/// Every strictly increasing length-k subsequence of 0..count-1, lexicographic.
std::vector<std::vector<int>> chart_selectors(int count, int k);

/// Components of nu in order, followed by the remaining ones ascending.
std::vector<int> chart_permutation(std::span<const int> nu, int target_dim);

/// Velocity whose component k is component `order[k]` of v.
template <class T>
Velocity<T> permute_components(const Velocity<T>& v, std::span<const int> order);

/// r-jet at 0 of gamma o tr_t: y^A_I = D_I gamma^A (t).
template <class T>
Velocity<T> prolong(const PolynomialMap<T>& gamma, std::span<const T> t, int r);

}  // namespace jetinv

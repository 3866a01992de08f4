#include "jetinv/velocity_ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jetinv/errors.hpp"
#include "jetinv/faa_di_bruno.hpp"

namespace jetinv {

template <class T>
Velocity<T> act(const Velocity<T>& v, const GroupJet<T>& a, const Tolerance& tol) {
  if (v.n() != a.n() || v.r() != a.r()) {
    throw_domain(ErrorCode::dimension_mismatch, "velocity and group jet differ in dimension or order");
  }
  if (!a.is_invertible(tol)) throw_domain(ErrorCode::singular, "group jet is not invertible");
  return Velocity<T>(v.m(), compose_jets(v.table(), a.table(), v.r()));
}

template <class T>
Velocity<T> truncate(const Velocity<T>& v, int s) {
  return Velocity<T>(v.m(), v.table().truncated(s));
}

template <class T>
Velocity<T> scale_velocity(const Velocity<T>& v, const T& tau) {
  Velocity<T> out = v;
  const IndexSpace& space = v.space();
  T factor = ScalarTraits<T>::from_int(1);
  for (int s = 1; s <= v.r(); ++s) {
    factor *= tau;
    for (std::size_t k = space.begin_of_order(s); k < space.end_of_order(s); ++k) {
      for (int a = 0; a < v.target_dim(); ++a) out(a, k) = v(a, k) * factor;
    }
  }
  return out;
}

std::vector<std::vector<int>> chart_selectors(int count, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > count) return out;
  std::vector<int> current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) current[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(current);
    int pos = k - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == count - k + pos) --pos;
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q) current[static_cast<std::size_t>(q)] = current[static_cast<std::size_t>(q) - 1] + 1;
  }
  return out;
}

namespace {

// |det| measured against the whole first-derivative matrix, so a block that
// is negligible next to the other components does not count as a chart
template <class T>
bool clears_threshold(const T& det, double scale, int n, const Tolerance& tol) {
  if constexpr (ScalarTraits<T>::exact) {
    (void)scale;
    (void)n;
    (void)tol;
    return det != 0;
  } else {
    return std::abs(det) > tol.regularity * std::pow(std::max(scale, 1e-300), n);
  }
}

}  // namespace

template <class T>
bool is_regular_in(const Velocity<T>& v, std::span<const int> nu, const Tolerance& tol) {
  if (v.r() < 1) return false;
  return clears_threshold(determinant(v.block(nu)), v.first_derivatives().max_norm(), v.n(), tol);
}

template <class T>
std::optional<RegularityCertificate<T>> is_regular(const Velocity<T>& v, const Tolerance& tol) {
  if (v.r() < 1) return std::nullopt;
  std::optional<RegularityCertificate<T>> best;
  double best_margin = 0.0;
  const double scale = v.first_derivatives().max_norm();
  for (auto& nu : chart_selectors(v.target_dim(), v.n())) {
    const T det = determinant(v.block(nu));
    if (!clears_threshold(det, scale, v.n(), tol)) continue;
    if constexpr (ScalarTraits<T>::exact) {
      return RegularityCertificate<T>{std::move(nu), det};
    } else {
      const double margin = std::abs(det);
      if (!best || margin > best_margin) {
        best = RegularityCertificate<T>{std::move(nu), det};
        best_margin = margin;
      }
    }
  }
  return best;
}

std::vector<int> chart_permutation(std::span<const int> nu, int target_dim) {
  std::vector<int> order(nu.begin(), nu.end());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] < 0 || order[k] >= target_dim || (k > 0 && order[k] <= order[k - 1])) {
      throw_domain(ErrorCode::out_of_range, "chart selector must be strictly increasing within the target dimension");
    }
  }
  for (int a = 0; a < target_dim; ++a) {
    if (!std::binary_search(nu.begin(), nu.end(), a)) order.push_back(a);
  }
  return order;
}

template <class T>
Velocity<T> permute_components(const Velocity<T>& v, std::span<const int> order) {
  if (static_cast<int>(order.size()) != v.target_dim()) {
    throw_domain(ErrorCode::dimension_mismatch, "permutation size differs from the target dimension");
  }
  Velocity<T> out(v.n(), v.m(), v.r());
  for (int k = 0; k < v.target_dim(); ++k) {
    const auto src = v.table().row(order[static_cast<std::size_t>(k)]);
    std::copy(src.begin(), src.end(), out.table().row(k).begin());
  }
  return out;
}

template <class T>
Velocity<T> prolong(const PolynomialMap<T>& gamma, std::span<const T> t, int r) {
  const int n = gamma.source_dim;
  const int m = gamma.target_dim() - n;
  if (m < 0) throw_domain(ErrorCode::dimension_mismatch, "target dimension smaller than source dimension");
  if (static_cast<int>(t.size()) != n) throw_domain(ErrorCode::dimension_mismatch, "prolongation point has wrong size");
  if (r < 0) throw_domain(ErrorCode::out_of_range, "negative order");
  Velocity<T> out(n, m, r);
  const IndexSpace& space = out.space();
  for (int a = 0; a < gamma.target_dim(); ++a) {
    const Polynomial<T>& component = gamma.components[static_cast<std::size_t>(a)];
    if (component.vars() != n) throw_domain(ErrorCode::dimension_mismatch, "component has wrong variable count");
    for (std::size_t k = 0; k < space.size(); ++k) out(a, k) = component.derivative(space.at(k)).evaluate(t);
  }
  return out;
}

#define JETINV_INSTANTIATE(T)                                                                               \
  template Velocity<T> act(const Velocity<T>&, const GroupJet<T>&, const Tolerance&);                       \
  template Velocity<T> truncate(const Velocity<T>&, int);                                                   \
  template Velocity<T> scale_velocity(const Velocity<T>&, const T&);                                        \
  template struct RegularityCertificate<T>;                                                                 \
  template std::optional<RegularityCertificate<T>> is_regular(const Velocity<T>&, const Tolerance&);       \
  template bool is_regular_in(const Velocity<T>&, std::span<const int>, const Tolerance&);                 \
  template Velocity<T> permute_components(const Velocity<T>&, std::span<const int>);                       \
  template Velocity<T> prolong(const PolynomialMap<T>&, std::span<const T>, int);

JETINV_INSTANTIATE(Rational)
JETINV_INSTANTIATE(double)

#undef JETINV_INSTANTIATE

}  // namespace jetinv

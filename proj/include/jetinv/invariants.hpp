#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jetinv/jet.hpp"

namespace jetinv {

/// Invariant coordinates (y^i, w^sigma_I) of a contact element in the chart
/// selected by `nu`. Component sigma of `w` refers to the sigma-th target
/// component not in `nu` (ascending), and w(sigma, ()) = y^sigma.
template <class T>
struct GrassmannPoint {
  std::vector<int> nu;
  std::vector<T> base;
  JetTable<T> w;

  int n() const { return w.dim(); }
  int m() const { return w.components(); }
  int r() const { return w.order(); }
  /// Always m * C(n+r, n) + n.
  std::size_t coordinate_count() const { return base.size() + w.values().size(); }
  /// Target components carrying the w's, in order.
  std::vector<int> free_components() const;

  bool operator==(const GrassmannPoint&) const = default;
};

template <class T>
bool approx_equal(const GrassmannPoint<T>& a, const GrassmannPoint<T>& b, const Tolerance& tol = {});

/// Normalized representative: y^{nu_k}_j = delta, higher nu-derivatives zero,
/// remaining components carrying the w table.
template <class T>
Velocity<T> lift(const GrassmannPoint<T>& p);

/// Invariants by the triangular recurrence: at each order k the all-singleton
/// term of y^sigma_P = sum_q sum_partitions y..y w_{j_1..j_q} is the only one
/// containing order-k w's, and it is inverted with z = (y^{nu_k}_j)^{-1}.
template <class T>
GrassmannPoint<T> extract_recurrence(const Velocity<T>& v, std::span<const int> nu, const Tolerance& tol = {});

/// Invariants by normalization: act with the inverse of the group jet built
/// from the nu-components and read off the remaining components. Throws
/// InternalError if the nu-components do not come out as the identity jet.
template <class T>
GrassmannPoint<T> extract_normalize(const Velocity<T>& v, std::span<const int> nu, const Tolerance& tol = {});

template <class T>
struct Transporter {
  GroupJet<T> jet;
  std::vector<int> nu;
};

/// Group element g with v2 = act(v1, g), solved order by order from the
/// nu-components and then verified on every component. std::nullopt when the
/// two velocities lie in different orbits.
template <class T>
std::optional<Transporter<T>> solve_transporter(const Velocity<T>& v1, const Velocity<T>& v2, std::span<const int> nu,
                                                const Tolerance& tol = {});

template <class T>
struct OrbitCheck {
  bool equal = false;
  std::optional<Transporter<T>> transporter;
  std::optional<std::vector<int>> nu;
  std::string diagnostic;
};

/// Decides orbit equivalence in a chart where both velocities are regular.
/// The transporter criterion and the invariant comparison are both evaluated
/// and must agree; a disagreement raises InternalError. Velocities with no
/// common chart are never equivalent (each chart set is invariant).
template <class T>
OrbitCheck<T> orbit_equal(const Velocity<T>& v1, const Velocity<T>& v2, const Tolerance& tol = {});

/// Common chart used by orbit_equal, if any.
template <class T>
std::optional<std::vector<int>> common_chart(const Velocity<T>& v1, const Velocity<T>& v2, const Tolerance& tol = {});

template <class T>
struct ScalingSample {
  T tau;
  Velocity<T> scaled;
  bool regular = false;
  /// det of the nu-block of the scaled velocity, tau^n times the original one
  T det_margin{};
  /// max |y^A_I| over |I| >= 1
  double derivative_size = 0.0;
  std::optional<GrassmannPoint<T>> invariants{};
};

template <class T>
struct NonextendabilityReport {
  std::vector<int> nu;
  std::vector<ScalingSample<T>> samples;
  /// invariants identical for every regular sample
  bool invariants_constant = false;
  /// order-s coordinates equal tau^s times the original ones
  bool scaling_law = false;
  /// tau = 0 samples are not regular and have vanishing derivatives
  bool degenerate_at_zero = true;
  /// det_margin = tau^n * det for every sample
  bool det_law = false;

  bool holds() const { return invariants_constant && scaling_law && degenerate_at_zero && det_law; }
};

/// Scales v by each tau: the invariants stay fixed while the scaled jets
/// approach the degenerate jet (y^A, 0, ..., 0), so no invariant continuous
/// on the whole fiber can separate orbits.
template <class T>
NonextendabilityReport<T> nonextendability_demo(const Velocity<T>& v, std::span<const T> taus,
                                                const Tolerance& tol = {});

}  // namespace jetinv

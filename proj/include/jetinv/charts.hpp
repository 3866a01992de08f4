#pragma once

#include <optional>
#include <span>
#include <vector>

#include "jetinv/invariants.hpp"
#include "jetinv/jet.hpp"
#include "jetinv/polynomial.hpp"

namespace jetinv {

/// Truncated Taylor data of a chart change ybar^A = F^A(y^B) at one base
/// point: derivs(A, ()) = F^A(base), derivs(A, B_1..B_p) = d^p F^A / dy^B_1..dy^B_p.
template <class T>
struct ChartJet {
  std::vector<T> base;
  JetTable<T> derivs;

  ChartJet() = default;
  ChartJet(std::vector<T> base_point, JetTable<T> derivatives);

  /// Jet of a polynomial chart change at `base_point`.
  static ChartJet from_polynomial(const PolynomialMap<T>& f, std::span<const T> base_point, int r);
  static ChartJet identity(std::span<const T> base_point, int r);

  int dim() const { return derivs.components(); }
  int r() const { return derivs.order(); }
  std::vector<T> image() const;
  /// dF^A/dy^B as matrix (row A, column B).
  Matrix<T> jacobian() const;
  bool is_invertible(const Tolerance& tol = {}) const;
};

/// Lifts the chart change to velocities by the target-side chain rule.
template <class T>
Velocity<T> transform_velocity(const ChartJet<T>& f, const Velocity<T>& v, const Tolerance& tol = {});

/// Jet of F o G at G's base point; F must be based at G's image.
template <class T>
ChartJet<T> compose_charts(const ChartJet<T>& f, const ChartJet<T>& g, const Tolerance& tol = {});

/// Lift to the normalized representative, transform, re-extract in
/// `target_nu` (defaults to the chart of p). Throws DomainError(chart_overlap)
/// when the transformed point is not regular in the target chart.
template <class T>
GrassmannPoint<T> transform_grassmann(const ChartJet<T>& f, const GrassmannPoint<T>& p,
                                      std::optional<std::vector<int>> target_nu = std::nullopt,
                                      const Tolerance& tol = {});

template <class T>
struct PQPair {
  /// P^q_s = dF^q/dy^s + dF^q/dy^sigma w^sigma_s
  Matrix<T> p;
  Matrix<T> q;
};

template <class T>
PQPair<T> pq_matrices(const ChartJet<T>& f, const GrassmannPoint<T>& p,
                      std::optional<std::vector<int>> target_nu = std::nullopt, const Tolerance& tol = {});

}  // namespace jetinv

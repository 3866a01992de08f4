#include "jetinv/charts.hpp"

#include <string>

#include "jetinv/errors.hpp"
#include "jetinv/faa_di_bruno.hpp"
#include "jetinv/velocity_ops.hpp"

namespace jetinv {

template <class T>
ChartJet<T>::ChartJet(std::vector<T> base_point, JetTable<T> derivatives)
    : base(std::move(base_point)), derivs(std::move(derivatives)) {
  if (derivs.components() != derivs.dim() || static_cast<int>(base.size()) != derivs.dim()) {
    throw_domain(ErrorCode::dimension_mismatch, "chart jet must map R^N to R^N with an N-dimensional base point");
  }
}

template <class T>
ChartJet<T> ChartJet<T>::from_polynomial(const PolynomialMap<T>& f, std::span<const T> base_point, int r) {
  const int dim = f.source_dim;
  if (f.target_dim() != dim || static_cast<int>(base_point.size()) != dim) {
    throw_domain(ErrorCode::dimension_mismatch, "chart change must map R^N to R^N");
  }
  JetTable<T> table(dim, IndexSpace(dim, r));
  for (int a = 0; a < dim; ++a) {
    for (std::size_t k = 0; k < table.space().size(); ++k) {
      table(a, k) = f.components[static_cast<std::size_t>(a)].derivative(table.space().at(k)).evaluate(base_point);
    }
  }
  return ChartJet<T>(std::vector<T>(base_point.begin(), base_point.end()), std::move(table));
}

template <class T>
ChartJet<T> ChartJet<T>::identity(std::span<const T> base_point, int r) {
  const int dim = static_cast<int>(base_point.size());
  JetTable<T> table(dim, IndexSpace(dim, r));
  for (int a = 0; a < dim; ++a) {
    table(a, 0) = base_point[static_cast<std::size_t>(a)];
    if (r >= 1) table(a, static_cast<std::size_t>(1 + a)) = ScalarTraits<T>::from_int(1);
  }
  return ChartJet<T>(std::vector<T>(base_point.begin(), base_point.end()), std::move(table));
}

template <class T>
std::vector<T> ChartJet<T>::image() const {
  std::vector<T> out;
  for (int a = 0; a < dim(); ++a) out.push_back(derivs(a, 0));
  return out;
}

template <class T>
Matrix<T> ChartJet<T>::jacobian() const {
  Matrix<T> out(dim(), dim());
  if (r() < 1) return out;
  for (int a = 0; a < dim(); ++a) {
    for (int b = 0; b < dim(); ++b) out(a, b) = derivs(a, static_cast<std::size_t>(1 + b));
  }
  return out;
}

template <class T>
bool ChartJet<T>::is_invertible(const Tolerance& tol) const {
  if (r() < 1) return false;
  const Matrix<T> jac = jacobian();
  return is_nonsingular(jac, determinant(jac), tol);
}

template <class T>
Velocity<T> transform_velocity(const ChartJet<T>& f, const Velocity<T>& v, const Tolerance& tol) {
  if (f.dim() != v.target_dim()) throw_domain(ErrorCode::dimension_mismatch, "chart dimension differs from the target dimension");
  if (f.r() < v.r()) throw_domain(ErrorCode::order_mismatch, "chart jet order is below the velocity order");
  for (int a = 0; a < f.dim(); ++a) {
    if (!scalar_equal(f.base[static_cast<std::size_t>(a)], v(a, std::size_t{0}), tol)) {
      throw_domain(ErrorCode::base_point_mismatch, "chart base point differs from the velocity's base point in component " +
                                                       std::to_string(a + 1));
    }
  }
  if (!f.is_invertible(tol)) throw_domain(ErrorCode::singular, "chart change has a singular Jacobian");
  return Velocity<T>(v.m(), compose_jets(f.derivs, v.table(), v.r()));
}

template <class T>
ChartJet<T> compose_charts(const ChartJet<T>& f, const ChartJet<T>& g, const Tolerance& tol) {
  if (f.dim() != g.dim()) throw_domain(ErrorCode::dimension_mismatch, "chart jets differ in dimension");
  const int r = std::min(f.r(), g.r());
  const auto image = g.image();
  for (int a = 0; a < f.dim(); ++a) {
    if (!scalar_equal(f.base[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(a)], tol)) {
      throw_domain(ErrorCode::base_point_mismatch, "outer chart is not based at the image of the inner chart");
    }
  }
  return ChartJet<T>(g.base, compose_jets(f.derivs, g.derivs.truncated(r), r));
}

template <class T>
GrassmannPoint<T> transform_grassmann(const ChartJet<T>& f, const GrassmannPoint<T>& p,
                                      std::optional<std::vector<int>> target_nu, const Tolerance& tol) {
  const std::vector<int> nu = target_nu ? *target_nu : p.nu;
  const Velocity<T> moved = transform_velocity(f, lift(p), tol);
  chart_permutation(nu, moved.target_dim());
  if (static_cast<int>(nu.size()) != moved.n()) {
    throw_domain(ErrorCode::dimension_mismatch, "target chart selector must have n entries");
  }
  if (moved.r() >= 1 && !is_regular_in(moved, nu, tol)) {
    throw_domain(ErrorCode::chart_overlap, "transformed contact element leaves the target chart");
  }
  return extract_recurrence(moved, nu, tol);
}

template <class T>
PQPair<T> pq_matrices(const ChartJet<T>& f, const GrassmannPoint<T>& p, std::optional<std::vector<int>> target_nu,
                      const Tolerance& tol) {
  const int n = p.n();
  const std::vector<int> nu_bar = target_nu ? *target_nu : p.nu;
  if (f.dim() != n + p.m()) throw_domain(ErrorCode::dimension_mismatch, "chart dimension differs from n + m");
  if (f.r() < 1 || p.r() < 1) throw_domain(ErrorCode::order_mismatch, "P and Q need first derivatives");
  chart_permutation(nu_bar, f.dim());
  const auto free = p.free_components();
  PQPair<T> out{Matrix<T>(n, n), Matrix<T>(n, n)};
  for (int q = 0; q < n; ++q) {
    const int row = nu_bar[static_cast<std::size_t>(q)];
    for (int s = 0; s < n; ++s) {
      T value = f.derivs(row, static_cast<std::size_t>(1 + p.nu[static_cast<std::size_t>(s)]));
      for (int sigma = 0; sigma < p.m(); ++sigma) {
        value += f.derivs(row, static_cast<std::size_t>(1 + free[static_cast<std::size_t>(sigma)])) *
                 p.w(sigma, static_cast<std::size_t>(1 + s));
      }
      out.p(q, s) = value;
    }
  }
  try {
    out.q = inverse(out.p, tol);
  } catch (const DomainError&) {
    throw_domain(ErrorCode::chart_overlap, "P is singular: the contact element leaves the target chart");
  }
  return out;
}

#define JETINV_INSTANTIATE(T)                                                                                    \
  template struct ChartJet<T>;                                                                                   \
  template Velocity<T> transform_velocity(const ChartJet<T>&, const Velocity<T>&, const Tolerance&);             \
  template ChartJet<T> compose_charts(const ChartJet<T>&, const ChartJet<T>&, const Tolerance&);                 \
  template GrassmannPoint<T> transform_grassmann(const ChartJet<T>&, const GrassmannPoint<T>&,                   \
                                                 std::optional<std::vector<int>>, const Tolerance&);             \
  template struct PQPair<T>;                                                                                     \
  template PQPair<T> pq_matrices(const ChartJet<T>&, const GrassmannPoint<T>&, std::optional<std::vector<int>>, \
                                 const Tolerance&);

JETINV_INSTANTIATE(Rational)
JETINV_INSTANTIATE(double)

#undef JETINV_INSTANTIATE

}  // namespace jetinv

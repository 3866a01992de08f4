#include "jetinv/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jetinv/errors.hpp"
#include "jetinv/faa_di_bruno.hpp"
#include "jetinv/group.hpp"
#include "jetinv/velocity_ops.hpp"

namespace jetinv {

namespace {

std::string describe(std::span<const int> nu) {
  std::string out = "(";
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(nu[k] + 1);
  }
  return out + ")";
}

void check_selector(std::span<const int> nu, int n) {
  if (static_cast<int>(nu.size()) != n) {
    throw_domain(ErrorCode::dimension_mismatch, "chart selector " + describe(nu) + " must have n = " +
                                                    std::to_string(n) + " entries");
  }
}

// Rows [first, first + count) of `v` as a standalone table.
template <class T>
JetTable<T> rows(const Velocity<T>& v, int first, int count) {
  JetTable<T> out(count, v.space());
  for (int c = 0; c < count; ++c) {
    const auto src = v.table().row(first + c);
    std::copy(src.begin(), src.end(), out.row(c).begin());
  }
  return out;
}

template <class T>
Matrix<T> inverse_block(const Velocity<T>& u, std::span<const int> nu, const Tolerance& tol) {
  std::vector<int> leading(static_cast<std::size_t>(u.n()));
  for (int k = 0; k < u.n(); ++k) leading[static_cast<std::size_t>(k)] = k;
  try {
    return inverse(u.block(leading), tol);
  } catch (const DomainError& e) {
    if (e.code() != ErrorCode::singular) throw;
    throw_domain(ErrorCode::singular, "derivative block of chart " + describe(nu) + " is singular");
  }
}

template <class T>
GrassmannPoint<T> empty_point(const Velocity<T>& u, std::span<const int> nu) {
  GrassmannPoint<T> p;
  p.nu.assign(nu.begin(), nu.end());
  p.w = JetTable<T>(u.m(), u.space());
  for (int k = 0; k < u.n(); ++k) p.base.push_back(u(k, std::size_t{0}));
  return p;
}

}  // namespace

template <class T>
std::vector<int> GrassmannPoint<T>::free_components() const {
  const auto order = chart_permutation(nu, n() + m());
  return std::vector<int>(order.begin() + n(), order.end());
}

template <class T>
bool approx_equal(const GrassmannPoint<T>& a, const GrassmannPoint<T>& b, const Tolerance& tol) {
  if (a.nu != b.nu || a.base.size() != b.base.size()) return false;
  for (std::size_t k = 0; k < a.base.size(); ++k) {
    if (!scalar_equal(a.base[k], b.base[k], tol)) return false;
  }
  return approx_equal(a.w, b.w, tol);
}

template <class T>
Velocity<T> lift(const GrassmannPoint<T>& p) {
  const int n = p.n();
  const int m = p.m();
  check_selector(p.nu, n);
  if (static_cast<int>(p.base.size()) != n) throw_domain(ErrorCode::dimension_mismatch, "base has wrong size");
  const auto order = chart_permutation(p.nu, n + m);
  Velocity<T> v(n, m, p.r());
  for (int k = 0; k < n; ++k) {
    const int component = order[static_cast<std::size_t>(k)];
    v(component, std::size_t{0}) = p.base[static_cast<std::size_t>(k)];
    if (p.r() >= 1) v(component, static_cast<std::size_t>(1 + k)) = ScalarTraits<T>::from_int(1);
  }
  for (int sigma = 0; sigma < m; ++sigma) {
    const auto src = p.w.row(sigma);
    std::copy(src.begin(), src.end(), v.table().row(order[static_cast<std::size_t>(n + sigma)]).begin());
  }
  return v;
}

template <class T>
GrassmannPoint<T> extract_recurrence(const Velocity<T>& v, std::span<const int> nu, const Tolerance& tol) {
  const int n = v.n();
  const int m = v.m();
  const int r = v.r();
  check_selector(nu, n);
  const Velocity<T> u = permute_components(v, chart_permutation(nu, v.target_dim()));
  GrassmannPoint<T> p = empty_point(u, nu);
  for (int sigma = 0; sigma < m; ++sigma) p.w(sigma, 0) = u(n + sigma, std::size_t{0});
  if (r == 0) return p;

  const Matrix<T> z = inverse_block(u, nu, tol);
  const JetTable<T> top = rows(u, 0, n);
  const JetTable<T> dependent = rows(u, n, m);
  const GroupJet<T> z_jet = GroupJet<T>::linear(z, r);

  const IndexSpace& space = u.space();
  JetTable<T> lower(m, space);
  JetTable<T> residual(m, space);
  for (int k = 1; k <= r; ++k) {
    // order-k w's are still zero, so this is the sum over partitions with fewer than k blocks
    faa_di_bruno_order(p.w, top, k, lower);
    for (int sigma = 0; sigma < m; ++sigma) {
      for (std::size_t idx = space.begin_of_order(k); idx < space.end_of_order(k); ++idx) {
        residual(sigma, idx) = dependent(sigma, idx) - lower(sigma, idx);
      }
    }
    // w_L = z^{p_1}_{l_1} ... z^{p_k}_{l_k} residual_{p_1..p_k}
    faa_di_bruno_order(residual, z_jet.table(), k, p.w, BlockRange{k, k});
  }
  return p;
}

template <class T>
GrassmannPoint<T> extract_normalize(const Velocity<T>& v, std::span<const int> nu, const Tolerance& tol) {
  const int n = v.n();
  const int m = v.m();
  check_selector(nu, n);
  const Velocity<T> u = permute_components(v, chart_permutation(nu, v.target_dim()));
  if (v.r() == 0) {
    GrassmannPoint<T> p = empty_point(u, nu);
    for (int sigma = 0; sigma < m; ++sigma) p.w(sigma, 0) = u(n + sigma, std::size_t{0});
    return p;
  }
  inverse_block(u, nu, tol);  // singular chart check with a chart-specific message

  JetTable<T> alpha_table = rows(u, 0, n);
  for (int k = 0; k < n; ++k) alpha_table(k, 0) = ScalarTraits<T>::from_int(0);
  const GroupJet<T> alpha(std::move(alpha_table));
  const Velocity<T> normalized = act(u, invert_group(alpha, tol), tol);

  const IndexSpace& space = u.space();
  for (int k = 0; k < n; ++k) {
    for (std::size_t idx = 1; idx < space.size(); ++idx) {
      const bool diagonal = idx == static_cast<std::size_t>(1 + k);
      const T expected = ScalarTraits<T>::from_int(diagonal ? 1 : 0);
      if (!scalar_equal(normalized(k, idx), expected, tol)) {
        throw InternalError("normalization left chart component " + std::to_string(nu[static_cast<std::size_t>(k)] + 1) +
                            " off the identity jet");
      }
    }
  }
  GrassmannPoint<T> p = empty_point(normalized, nu);
  p.w = rows(normalized, n, m);
  return p;
}

template <class T>
std::optional<Transporter<T>> solve_transporter(const Velocity<T>& v1, const Velocity<T>& v2, std::span<const int> nu,
                                                const Tolerance& tol) {
  if (v1.n() != v2.n() || v1.m() != v2.m() || v1.r() != v2.r()) {
    throw_domain(ErrorCode::dimension_mismatch, "velocities differ in shape");
  }
  const int n = v1.n();
  const int r = v1.r();
  check_selector(nu, n);
  const auto order = chart_permutation(nu, v1.target_dim());
  const Velocity<T> u1 = permute_components(v1, order);
  const Velocity<T> u2 = permute_components(v2, order);
  GroupJet<T> a(n, r);
  if (r >= 1) {
    const Matrix<T> z = inverse_block(u1, nu, tol);
    inverse_block(u2, nu, tol);
    const JetTable<T> top = rows(u1, 0, n);
    const IndexSpace& space = u1.space();
    JetTable<T> lower(n, space);
    for (int s = 1; s <= r; ++s) {
      faa_di_bruno_order(top, a.table(), s, lower, BlockRange{2});
      for (std::size_t idx = space.begin_of_order(s); idx < space.end_of_order(s); ++idx) {
        for (int q = 0; q < n; ++q) {
          T value = ScalarTraits<T>::from_int(0);
          for (int k = 0; k < n; ++k) value += z(q, k) * (u2(k, idx) - lower(k, idx));
          a.table()(q, idx) = value;
        }
      }
    }
    if (!a.is_invertible(tol)) return std::nullopt;
  }
  if (!approx_equal(act(v1, a, tol), v2, tol)) return std::nullopt;
  return Transporter<T>{std::move(a), std::vector<int>(nu.begin(), nu.end())};
}

template <class T>
std::optional<std::vector<int>> common_chart(const Velocity<T>& v1, const Velocity<T>& v2, const Tolerance& tol) {
  if (v1.n() != v2.n() || v1.target_dim() != v2.target_dim()) {
    throw_domain(ErrorCode::dimension_mismatch, "velocities differ in shape");
  }
  if (v1.r() < 1) return std::nullopt;
  std::optional<std::vector<int>> best;
  double best_margin = 0.0;
  for (auto& nu : chart_selectors(v1.target_dim(), v1.n())) {
    const Matrix<T> b1 = v1.block(nu);
    const Matrix<T> b2 = v2.block(nu);
    const T d1 = determinant(b1);
    const T d2 = determinant(b2);
    if (!is_nonsingular(b1, d1, tol) || !is_nonsingular(b2, d2, tol)) continue;
    if constexpr (ScalarTraits<T>::exact) {
      return nu;
    } else {
      const double margin = std::min(std::abs(d1), std::abs(d2));
      if (!best || margin > best_margin) {
        best = nu;
        best_margin = margin;
      }
    }
  }
  return best;
}

template <class T>
OrbitCheck<T> orbit_equal(const Velocity<T>& v1, const Velocity<T>& v2, const Tolerance& tol) {
  if (v1.n() != v2.n() || v1.m() != v2.m() || v1.r() != v2.r()) {
    throw_domain(ErrorCode::dimension_mismatch, "velocities differ in shape");
  }
  if (!is_regular(v1, tol)) throw_domain(ErrorCode::not_regular, "first velocity is not regular");
  if (!is_regular(v2, tol)) throw_domain(ErrorCode::not_regular, "second velocity is not regular");

  OrbitCheck<T> result;
  result.nu = common_chart(v1, v2, tol);
  if (!result.nu) {
    result.diagnostic = "no chart in which both velocities are regular";
    return result;
  }
  const auto& nu = *result.nu;
  result.transporter = solve_transporter(v1, v2, nu, tol);
  const bool invariants_agree = approx_equal(extract_recurrence(v1, nu, tol), extract_recurrence(v2, nu, tol), tol);
  if (result.transporter.has_value() != invariants_agree) {
    throw InternalError("transporter and invariant criteria disagree in chart " + describe(nu));
  }
  result.equal = invariants_agree;
  if (!result.equal) result.diagnostic = "invariants differ in chart " + describe(nu);
  return result;
}

template <class T>
NonextendabilityReport<T> nonextendability_demo(const Velocity<T>& v, std::span<const T> taus, const Tolerance& tol) {
  const auto certificate = is_regular(v, tol);
  if (!certificate) throw_domain(ErrorCode::not_regular, "velocity is not regular");
  NonextendabilityReport<T> report;
  report.nu = certificate->nu;
  report.invariants_constant = true;
  report.scaling_law = true;
  report.det_law = true;
  const GrassmannPoint<T> reference = extract_recurrence(v, report.nu, tol);
  const IndexSpace& space = v.space();
  const int n = v.n();

  for (const T& tau : taus) {
    ScalingSample<T> sample{tau, scale_velocity(v, tau)};
    sample.regular = is_regular(sample.scaled, tol).has_value();
    sample.det_margin = determinant(sample.scaled.block(report.nu));
    T tau_n = ScalarTraits<T>::from_int(1);
    for (int k = 0; k < n; ++k) tau_n *= tau;
    if (!scalar_equal(sample.det_margin, T(tau_n * certificate->det), tol)) report.det_law = false;

    T power = ScalarTraits<T>::from_int(1);
    for (int s = 1; s <= v.r(); ++s) {
      power *= tau;
      for (std::size_t k = space.begin_of_order(s); k < space.end_of_order(s); ++k) {
        for (int a = 0; a < v.target_dim(); ++a) {
          const T& value = sample.scaled(a, k);
          sample.derivative_size = std::max(sample.derivative_size, std::abs(ScalarTraits<T>::to_double(value)));
          if (!scalar_equal(value, T(power * v(a, k)), tol)) report.scaling_law = false;
        }
      }
    }
    if (is_regular_in(sample.scaled, report.nu, tol)) {
      sample.invariants = extract_recurrence(sample.scaled, report.nu, tol);
      if (!approx_equal(*sample.invariants, reference, tol)) report.invariants_constant = false;
    }
    if (scalar_is_zero(tau, tol) && (sample.regular || sample.derivative_size != 0.0)) report.degenerate_at_zero = false;
    report.samples.push_back(std::move(sample));
  }
  return report;
}

#define JETINV_INSTANTIATE(T)                                                                                         \
  template struct GrassmannPoint<T>;                                                                                  \
  template bool approx_equal(const GrassmannPoint<T>&, const GrassmannPoint<T>&, const Tolerance&);                  \
  template Velocity<T> lift(const GrassmannPoint<T>&);                                                                \
  template GrassmannPoint<T> extract_recurrence(const Velocity<T>&, std::span<const int>, const Tolerance&);         \
  template GrassmannPoint<T> extract_normalize(const Velocity<T>&, std::span<const int>, const Tolerance&);          \
  template std::optional<Transporter<T>> solve_transporter(const Velocity<T>&, const Velocity<T>&,                   \
                                                           std::span<const int>, const Tolerance&);                  \
  template std::optional<std::vector<int>> common_chart(const Velocity<T>&, const Velocity<T>&, const Tolerance&);  \
  template OrbitCheck<T> orbit_equal(const Velocity<T>&, const Velocity<T>&, const Tolerance&);                     \
  template NonextendabilityReport<T> nonextendability_demo(const Velocity<T>&, std::span<const T>, const Tolerance&);

JETINV_INSTANTIATE(Rational)
JETINV_INSTANTIATE(double)

#undef JETINV_INSTANTIATE

}  // namespace jetinv

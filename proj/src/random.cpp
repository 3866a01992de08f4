#include "jetinv/random.hpp"

#include "jetinv/errors.hpp"
#include "jetinv/velocity_ops.hpp"

namespace jetinv {

int RandomSource::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

bool RandomSource::chance(double p) { return std::bernoulli_distribution(p)(engine_); }

template <class T>
T RandomSource::scalar() {
  const int num = uniform(-bound_, bound_);
  const int den = uniform(1, den_bound_);
  return ScalarTraits<T>::from_ratio(num, den);
}

template <class T>
T RandomSource::nonzero_scalar() {
  while (true) {
    T value = scalar<T>();
    if (value != 0) return value;
  }
}

namespace {

constexpr int kMaxAttempts = 1000;

}  // namespace

template <class T>
GroupJet<T> random_group(RandomSource& rng, int n, int r) {
  if (n < 1 || r < 1) throw_domain(ErrorCode::out_of_range, "random group jets need n >= 1 and r >= 1");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    GroupJet<T> a(n, r);
    for (int j = 0; j < n; ++j) {
      for (std::size_t k = 1; k < a.table().space().size(); ++k) a.table()(j, k) = rng.scalar<T>();
    }
    if (a.is_invertible()) return a;
  }
  throw InternalError("could not draw an invertible group jet");
}

template <class T>
Velocity<T> random_velocity(RandomSource& rng, int n, int m, int r) {
  if (n < 1 || m < 0 || r < 1) throw_domain(ErrorCode::out_of_range, "random velocities need n >= 1, m >= 0, r >= 1");
  std::vector<int> leading(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) leading[static_cast<std::size_t>(k)] = k;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Velocity<T> v(n, m, r);
    for (int a = 0; a < n + m; ++a) {
      for (std::size_t k = 0; k < v.space().size(); ++k) v(a, k) = rng.scalar<T>();
    }
    if (is_regular_in(v, std::span<const int>(leading))) return v;
  }
  throw InternalError("could not draw a regular velocity");
}

template <class T>
PolynomialMap<T> random_polynomial_map(RandomSource& rng, int source_dim, int target_dim, int degree, double density) {
  PolynomialMap<T> out{source_dim, {}};
  const IndexSpace monomials(source_dim, degree);
  for (int a = 0; a < target_dim; ++a) {
    Polynomial<T> p(source_dim);
    for (std::size_t k = 0; k < monomials.size(); ++k) {
      if (!rng.chance(density)) continue;
      std::vector<int> exponents(static_cast<std::size_t>(source_dim), 0);
      for (int var : monomials.at(k).entries()) ++exponents[static_cast<std::size_t>(var)];
      p.add_term(exponents, rng.scalar<T>());
    }
    out.components.push_back(std::move(p));
  }
  return out;
}

template <class T>
ChartJet<T> random_chart(RandomSource& rng, const std::vector<T>& base, int r) {
  const int dim = static_cast<int>(base.size());
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    JetTable<T> table(dim, IndexSpace(dim, r));
    for (int a = 0; a < dim; ++a) {
      for (std::size_t k = 0; k < table.space().size(); ++k) table(a, k) = rng.scalar<T>();
    }
    ChartJet<T> chart(base, std::move(table));
    if (chart.is_invertible()) return chart;
  }
  throw InternalError("could not draw an invertible chart jet");
}

template <class T>
JetPolynomial<T> random_jet_polynomial(RandomSource& rng, int n, int target_dim, int order, int terms, int degree) {
  const IndexSpace space(n, order);
  JetPolynomial<T> out(n, target_dim, order);
  for (int t = 0; t < terms; ++t) {
    Monomial mono;
    const int d = rng.uniform(0, degree);
    for (int q = 0; q < d; ++q) {
      const int component = rng.uniform(0, target_dim - 1);
      const auto rank = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(space.size()) - 1));
      mono.factors.push_back(JetVariable{component, space.at(rank)});
    }
    out.add_term(std::move(mono), rng.scalar<T>());
  }
  return out;
}

#define JETINV_INSTANTIATE(T)                                                                                 \
  template T RandomSource::scalar<T>();                                                                       \
  template T RandomSource::nonzero_scalar<T>();                                                               \
  template GroupJet<T> random_group(RandomSource&, int, int);                                                 \
  template Velocity<T> random_velocity(RandomSource&, int, int, int);                                         \
  template PolynomialMap<T> random_polynomial_map(RandomSource&, int, int, int, double);                      \
  template ChartJet<T> random_chart(RandomSource&, const std::vector<T>&, int);                               \
  template JetPolynomial<T> random_jet_polynomial(RandomSource&, int, int, int, int, int);

JETINV_INSTANTIATE(Rational)
JETINV_INSTANTIATE(double)

#undef JETINV_INSTANTIATE

}  // namespace jetinv

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jetinv/charts.hpp"
#include "jetinv/jet.hpp"
#include "jetinv/jet_polynomial.hpp"
#include "jetinv/polynomial.hpp"

namespace jetinv {

/// Seeded source of small rationals (numerator in [-bound, bound],
/// denominator in [1, den_bound]); binary64 values are their conversions, so
/// both scalar modes see the same inputs for a given seed.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, int bound = 5, int den_bound = 4)
      : engine_(seed), bound_(bound), den_bound_(den_bound) {}

  int uniform(int lo, int hi);
  bool chance(double p);

  template <class T>
  T scalar();
  template <class T>
  T nonzero_scalar();

 private:
  std::mt19937_64 engine_;
  int bound_;
  int den_bound_;
};

/// Invertible by construction: redrawn until the first-order block is regular.
template <class T>
GroupJet<T> random_group(RandomSource& rng, int n, int r);

/// Regular in the leading chart (1..n) by construction.
template <class T>
Velocity<T> random_velocity(RandomSource& rng, int n, int m, int r);

/// Dense random polynomial map of total degree <= degree; each monomial is
/// kept with probability `density`.
template <class T>
PolynomialMap<T> random_polynomial_map(RandomSource& rng, int source_dim, int target_dim, int degree,
                                       double density = 0.6);

/// Random chart change jet at `base` with invertible Jacobian.
template <class T>
ChartJet<T> random_chart(RandomSource& rng, const std::vector<T>& base, int r);

/// Random polynomial in jet coordinates of order <= order with up to `terms`
/// monomials of degree <= degree.
template <class T>
JetPolynomial<T> random_jet_polynomial(RandomSource& rng, int n, int target_dim, int order, int terms, int degree);

}  // namespace jetinv

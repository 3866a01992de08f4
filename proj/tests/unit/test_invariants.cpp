#include <doctest.h>

#include "helpers.hpp"
#include "jetinv/errors.hpp"
#include "jetinv/group.hpp"
#include "jetinv/invariants.hpp"
#include "jetinv/random.hpp"
#include "jetinv/set_partition.hpp"
#include "jetinv/velocity_ops.hpp"

using namespace jetinv;
using namespace jetinv::test;

namespace {

Velocity<Q> fixture() {
  return velocity(1, 1, 2, {{0, {0}, q(2)}, {0, {0, 0}, q(3)}, {1, {0}, q(4)}, {1, {0, 0}, q(10)}});
}

Velocity<Q> curve_jet(int power) {
  PolynomialMap<Q> gamma{1, {Polynomial<Q>::variable(1, 0), Polynomial<Q>(1)}};
  gamma.components[1].add_term({power}, q(1));
  const std::vector<Q> origin{q(0)};
  return prolong(gamma, std::span<const Q>(origin), 2);
}

}  // namespace

TEST_CASE("invariants of the order-2 fixture") {
  const auto v = fixture();
  for (const auto& p : {extract_recurrence(v, leading(1)), extract_normalize(v, leading(1))}) {
    CHECK(p.nu == std::vector<int>{0});
    CHECK(p.w.at(0, ix(1, {0})) == q(2));
    CHECK(p.w.at(0, ix(1, {0, 0})) == q(1));
  }
}

TEST_CASE("normalized velocities are their own invariants") {
  auto v = velocity(2, 2, 3, {{0, {}, q(1, 3)}, {0, {0}, q(1)}, {1, {1}, q(1)}});
  RandomSource rng(8);
  for (int s = 2; s < 4; ++s) {
    for (std::size_t k = 0; k < v.space().size(); ++k) v(s, k) = rng.scalar<Q>();
  }
  const auto p = extract_recurrence(v, leading(2));
  CHECK(p.base == std::vector<Q>{q(1, 3), q(0)});
  for (int s = 0; s < 2; ++s) {
    for (std::size_t k = 0; k < v.space().size(); ++k) CHECK(p.w(s, k) == v(2 + s, k));
  }
  CHECK(extract_normalize(v, leading(2)) == p);
}

TEST_CASE("first-order invariants are z y") {
  RandomSource rng(19);
  const auto v = random_velocity<Q>(rng, 2, 1, 1);
  const auto z = inverse(v.block(leading(2)));
  const auto p = extract_recurrence(v, leading(2));
  for (int i = 0; i < 2; ++i) {
    CHECK(p.w.at(0, ix(2, {i})) == z(0, i) * v(2, ix(2, {0})) + z(1, i) * v(2, ix(2, {1})));
  }
}

TEST_CASE("both algorithms agree and are invariant in every chart") {
  RandomSource rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 2;
    const int m = 1 + (trial / 2) % 2;
    const int r = 1 + trial % 3;
    const auto v = random_velocity<Q>(rng, n, m, r);
    const auto g = random_group<Q>(rng, n, r);
    for (const auto& nu : chart_selectors(n + m, n)) {
      if (!is_regular_in(v, std::span<const int>(nu))) continue;
      const auto p = extract_recurrence(v, nu);
      CHECK(p.nu == nu);
      CHECK(extract_normalize(v, nu) == p);
      CHECK(extract_recurrence(act(v, g), nu) == p);
      CHECK(p.coordinate_count() == grassmann_dim(n, m, r));
    }
  }
}

TEST_CASE("a singular chart block is rejected") {
  const auto v = velocity(1, 1, 2, {{1, {0}, q(1)}});
  try {
    extract_recurrence(v, leading(1));
    FAIL("expected an exception");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::singular);
  }
  CHECK_THROWS_AS(extract_normalize(v, leading(1)), DomainError);
  const std::vector<int> other{1};
  CHECK(extract_recurrence(v, other).base == std::vector<Q>{q(0)});
}

TEST_CASE("lift is a normalized representative") {
  RandomSource rng(53);
  const auto v = random_velocity<Q>(rng, 2, 1, 3);
  const std::vector<int> nu{0, 2};
  if (is_regular_in(v, std::span<const int>(nu))) {
    const auto p = extract_recurrence(v, nu);
    const auto u = lift(p);
    CHECK(extract_recurrence(u, nu) == p);
    CHECK(orbit_equal(u, v).equal);
  }
}

TEST_CASE("solve_transporter") {
  RandomSource rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 2;
    const int r = 1 + trial % 3;
    const auto v = random_velocity<Q>(rng, n, 2, r);
    const auto g = random_group<Q>(rng, n, r);
    const auto t = solve_transporter(v, act(v, g), leading(n));
    REQUIRE(t.has_value());
    CHECK(t->jet == g);
    const auto self = solve_transporter(v, v, leading(n));
    REQUIRE(self.has_value());
    CHECK(self->jet == GroupJet<Q>::identity(n, r));
  }

  auto v = fixture();
  auto w = fixture();
  w(1, ix(1, {0, 0})) = q(11);
  CHECK_FALSE(solve_transporter(v, w, leading(1)).has_value());
}

TEST_CASE("orbit_equal") {
  RandomSource rng(67);
  const auto v = random_velocity<Q>(rng, 2, 1, 3);
  const auto g = random_group<Q>(rng, 2, 3);
  const auto same = orbit_equal(v, act(v, g));
  CHECK(same.equal);
  REQUIRE(same.transporter.has_value());
  CHECK(same.transporter->jet == g);

  CHECK(orbit_equal(v, scale_velocity(v, q(2))).equal);

  const auto different = orbit_equal(curve_jet(2), curve_jet(3));
  CHECK_FALSE(different.equal);
  CHECK_FALSE(different.transporter.has_value());
  CHECK(extract_recurrence(curve_jet(2), leading(1)).w.at(0, ix(1, {0, 0})) == q(2));
  CHECK(extract_recurrence(curve_jet(3), leading(1)).w.at(0, ix(1, {0, 0})) == q(0));

  auto w = v;
  w(2, ix(2, {0, 1})) += q(1);
  CHECK_FALSE(orbit_equal(v, w).equal);
}

TEST_CASE("orbit_equal without a common chart") {
  const auto a = velocity(1, 1, 1, {{0, {0}, q(1)}});
  const auto b = velocity(1, 1, 1, {{1, {0}, q(1)}});
  const auto check = orbit_equal(a, b);
  CHECK_FALSE(check.equal);
  CHECK_FALSE(check.nu.has_value());
  CHECK_FALSE(check.diagnostic.empty());
}

TEST_CASE("orbit_equal requires regular inputs") {
  const auto degenerate = Velocity<Q>(1, 1, 2);
  try {
    orbit_equal(fixture(), degenerate);
    FAIL("expected an exception");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::not_regular);
  }
}

TEST_CASE("invariants of graphs are derivatives of the graph function") {
  // gamma(t) = (t, g(t)) is already normalized, so w_J(t) = D_J g(t)
  RandomSource rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 2;
    const auto g = random_polynomial_map<Q>(rng, n, 1, 4);
    PolynomialMap<Q> gamma{n, {}};
    for (int i = 0; i < n; ++i) gamma.components.push_back(Polynomial<Q>::variable(n, i));
    gamma.components.push_back(g.components[0]);
    std::vector<Q> t;
    for (int i = 0; i < n; ++i) t.push_back(rng.scalar<Q>());
    const auto p = extract_recurrence(prolong(gamma, std::span<const Q>(t), 3), leading(n));
    for (std::size_t k = 0; k < p.w.space().size(); ++k) {
      CHECK(p.w(0, k) == g.components[0].derivative(p.w.space().at(k)).evaluate(t));
    }
  }
}

TEST_CASE("nonextendability report") {
  RandomSource rng(73);
  const auto v = random_velocity<Q>(rng, 2, 1, 2);
  const std::vector<Q> taus{q(1), q(1, 2), q(1, 4), q(0)};
  const auto report = nonextendability_demo(v, std::span<const Q>(taus));
  CHECK(report.holds());
  REQUIRE(report.samples.size() == 4);
  const auto reference = extract_recurrence(v, report.nu);
  for (const auto& sample : report.samples) {
    if (sample.tau == 0) {
      CHECK_FALSE(sample.regular);
      CHECK_FALSE(sample.invariants.has_value());
      CHECK(sample.det_margin == q(0));
      CHECK(sample.derivative_size == 0.0);
    } else {
      REQUIRE(sample.invariants.has_value());
      CHECK(*sample.invariants == reference);
      CHECK(sample.det_margin == sample.tau * sample.tau * determinant(v.block(report.nu)));
    }
  }
}

#include <doctest.h>

#include "helpers.hpp"
#include "jetinv/checks/oracles.hpp"
#include "jetinv/errors.hpp"
#include "jetinv/faa_di_bruno.hpp"
#include "jetinv/group.hpp"
#include "jetinv/random.hpp"
#include "jetinv/set_partition.hpp"
#include "jetinv/velocity_ops.hpp"

using namespace jetinv;
using namespace jetinv::test;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

}  // namespace

TEST_CASE("chain rule kernel: square of t + t^2") {
  JetTable<Q> outer(1, IndexSpace(1, 2));
  outer(0, 2) = q(2);  // u^2 at 0: u' = 0, u'' = 2
  JetTable<Q> inner(1, IndexSpace(1, 2));
  inner(0, 1) = q(1);
  inner(0, 2) = q(2);
  const auto out = faa_di_bruno_contract(outer, inner, 2);
  CHECK(out(0, 2) == q(2));
}

TEST_CASE("chain rule kernel: order 1 is a matrix-vector product") {
  JetTable<Q> outer(1, IndexSpace(2, 1));
  outer(0, 1) = q(3);
  outer(0, 2) = q(-2);
  JetTable<Q> inner(2, IndexSpace(1, 1));
  inner(0, 1) = q(5);
  inner(1, 1) = q(7);
  CHECK(faa_di_bruno_contract(outer, inner, 1)(0, 1) == q(3 * 5 - 2 * 7));
}

TEST_CASE("chain rule kernel: all ones at order 3 counts partitions") {
  JetTable<Q> outer(1, IndexSpace(1, 3));
  JetTable<Q> inner(1, IndexSpace(1, 3));
  for (std::size_t k = 1; k <= 3; ++k) {
    outer(0, k) = q(1);
    inner(0, k) = q(1);
  }
  CHECK(faa_di_bruno_contract(outer, inner, 3)(0, 3) == q(static_cast<long>(bell(3))));
}

TEST_CASE("chain rule kernel rejects short jets") {
  JetTable<Q> outer(1, IndexSpace(1, 1));
  JetTable<Q> inner(1, IndexSpace(1, 3));
  CHECK(code_of([&] { faa_di_bruno_contract(outer, inner, 3); }) == ErrorCode::order_mismatch);
}

TEST_CASE("compose_group at order 2, n = 1") {
  const auto a = group(1, 2, {{0, {0}, q(1)}, {0, {0, 0}, q(3, 2)}});
  const auto b = group(1, 2, {{0, {0}, q(1)}, {0, {0, 0}, q(-5)}});
  const auto c = compose_group(a, b);
  CHECK(c(0, ix(1, {0})) == q(1));
  CHECK(c(0, ix(1, {0, 0})) == q(3, 2) + q(-5));
}

TEST_CASE("compose_group at order 1 is the matrix product") {
  RandomSource rng(7);
  const auto a = random_group<Q>(rng, 3, 1);
  const auto b = random_group<Q>(rng, 3, 1);
  CHECK(compose_group(a, b).linear_part() == a.linear_part() * b.linear_part());
}

TEST_CASE("identity laws") {
  RandomSource rng(11);
  for (int n = 1; n <= 3; ++n) {
    for (int r = 1; r <= 4; ++r) {
      const auto a = random_group<Q>(rng, n, r);
      const auto id = GroupJet<Q>::identity(n, r);
      CHECK(compose_group(a, id) == a);
      CHECK(compose_group(id, a) == a);
    }
  }
}

TEST_CASE("invert_group") {
  const auto a = group(1, 2, {{0, {0}, q(2)}, {0, {0, 0}, q(4)}});
  const auto x = invert_group(a);
  CHECK(x(0, ix(1, {0})) == q(1, 2));
  CHECK(x(0, ix(1, {0, 0})) == q(-1, 2));

  CHECK(invert_group(GroupJet<Q>::identity(2, 3)) == GroupJet<Q>::identity(2, 3));

  RandomSource rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_group<Q>(rng, 2, 3);
    const auto inv = invert_group(g);
    CHECK(compose_group(g, inv) == GroupJet<Q>::identity(2, 3));
    CHECK(compose_group(inv, g) == GroupJet<Q>::identity(2, 3));
  }

  const auto singular = group(2, 2, {{0, {0}, q(1)}, {0, {1}, q(2)}, {1, {0}, q(2)}, {1, {1}, q(4)}});
  CHECK(code_of([&] { invert_group(singular); }) == ErrorCode::singular);
}

TEST_CASE("group jets carry target 0") {
  JetTable<Q> table(1, IndexSpace(1, 1));
  table(0, 0) = q(1);
  table(0, 1) = q(1);
  CHECK_THROWS_AS(GroupJet<Q>{table}, DomainError);
}

TEST_CASE("act examples") {
  const auto v = velocity(1, 1, 1, {{0, {0}, q(1)}, {1, {0}, q(5)}});
  const auto a = group(1, 1, {{0, {0}, q(2)}});
  const auto moved = act(v, a);
  CHECK(moved(0, MultiIndex{}) == q(0));
  CHECK(moved(1, MultiIndex{}) == q(0));
  CHECK(moved(0, ix(1, {0})) == q(2));
  CHECK(moved(1, ix(1, {0})) == q(10));

  RandomSource rng(5);
  const auto w = random_velocity<Q>(rng, 2, 2, 3);
  CHECK(act(w, GroupJet<Q>::identity(2, 3)) == w);
}

TEST_CASE("act is a right action and commutes with truncation") {
  RandomSource rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const int r = 1 + trial % 4;
    const auto v = random_velocity<Q>(rng, n, 2, r);
    const auto a = random_group<Q>(rng, n, r);
    const auto b = random_group<Q>(rng, n, r);
    CHECK(act(act(v, a), b) == act(v, compose_group(a, b)));
    for (int s = 1; s <= r; ++s) CHECK(truncate(act(v, a), s) == act(truncate(v, s), truncate_group(a, s)));
  }
}

TEST_CASE("act rejects a singular group jet") {
  const auto v = velocity(1, 1, 1, {{0, {0}, q(1)}});
  CHECK(code_of([&] { act(v, GroupJet<Q>(1, 1)); }) == ErrorCode::singular);
}

TEST_CASE("truncate") {
  RandomSource rng(2);
  const auto v = random_velocity<Q>(rng, 2, 1, 3);
  CHECK(truncate(v, 3) == v);
  const auto base = truncate(v, 0);
  CHECK(base.r() == 0);
  for (int a = 0; a < 3; ++a) CHECK(base(a, MultiIndex{}) == v(a, MultiIndex{}));
  CHECK_THROWS_AS(truncate(v, 4), DomainError);
  CHECK_THROWS_AS(truncate(v, -1), DomainError);
}

TEST_CASE("prolong of (t, t^2)") {
  PolynomialMap<Q> gamma{1, {Polynomial<Q>::variable(1, 0), Polynomial<Q>(1)}};
  gamma.components[1].add_term({2}, q(1));

  const std::vector<Q> zero{q(0)};
  const auto v = prolong(gamma, std::span<const Q>(zero), 2);
  CHECK(v(0, MultiIndex{}) == q(0));
  CHECK(v(1, MultiIndex{}) == q(0));
  CHECK(v(0, ix(1, {0})) == q(1));
  CHECK(v(1, ix(1, {0})) == q(0));
  CHECK(v(0, ix(1, {0, 0})) == q(0));
  CHECK(v(1, ix(1, {0, 0})) == q(2));

  const std::vector<Q> one{q(1)};
  const auto w = prolong(gamma, std::span<const Q>(one), 2);
  CHECK(w(1, MultiIndex{}) == q(1));
  CHECK(w(1, ix(1, {0})) == q(2));
  CHECK(w(1, ix(1, {0, 0})) == q(2));
}

TEST_CASE("prolong of a constant curve is not regular") {
  PolynomialMap<Q> gamma{1, {Polynomial<Q>::constant(1, q(3)), Polynomial<Q>::constant(1, q(-1))}};
  const std::vector<Q> t{q(2)};
  const auto v = prolong(gamma, std::span<const Q>(t), 3);
  for (std::size_t k = 1; k < v.space().size(); ++k) {
    CHECK(v(0, k) == q(0));
    CHECK(v(1, k) == q(0));
  }
  CHECK_FALSE(is_regular(v).has_value());
}

TEST_CASE("prolongation follows reparametrization") {
  // T(gamma o alpha)(t) = T gamma (alpha(t)) acted on by the jet of s -> alpha(t+s) - alpha(t)
  RandomSource rng(23);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 2;
    const int r = 1 + trial % 3;
    const auto gamma = random_polynomial_map<Q>(rng, n, n + 1, 3);
    const auto alpha = random_polynomial_map<Q>(rng, n, n, 2, 0.9);
    std::vector<Q> t;
    for (int i = 0; i < n; ++i) t.push_back(rng.scalar<Q>());
    auto table = checks::taylor_table(alpha, std::span<const Q>(t), r);
    for (int j = 0; j < n; ++j) table(j, 0) = q(0);
    const GroupJet<Q> jet(table);
    if (!jet.is_invertible()) continue;
    ++checked;
    const auto image = alpha.evaluate(t);
    CHECK(prolong(gamma.compose(alpha), std::span<const Q>(t), r) ==
          act(prolong(gamma, std::span<const Q>(image), r), jet));
  }
  CHECK(checked >= 10);
}

TEST_CASE("is_regular") {
  const auto column = velocity(1, 1, 1, {{1, {0}, q(7)}});
  const auto cert = is_regular(column);
  REQUIRE(cert.has_value());
  CHECK(cert->nu == std::vector<int>{1});
  CHECK(cert->det == q(7));

  CHECK_FALSE(is_regular(Velocity<Q>(2, 1, 2)).has_value());

  const auto rows = velocity(2, 1, 1,
                             {{0, {0}, q(1)}, {1, {1}, q(1)}, {2, {0}, q(3)}, {2, {1}, q(4)}});
  const auto c = is_regular(rows);
  REQUIRE(c.has_value());
  CHECK(c->nu == std::vector<int>{0, 1});
  CHECK(c->det == q(1));
}

TEST_CASE("float mode picks the best conditioned chart") {
  Velocity<double> v(1, 2, 1);
  v(0, ix(1, {0})) = 1e-3;
  v(1, ix(1, {0})) = 5.0;
  v(2, ix(1, {0})) = -2.0;
  const auto cert = is_regular(v);
  REQUIRE(cert.has_value());
  CHECK(cert->nu == std::vector<int>{1});

  Velocity<double> tiny(1, 1, 1);
  tiny(0, ix(1, {0})) = 1e-14;
  tiny(1, ix(1, {0})) = 1.0;
  const std::vector<int> first{0};
  CHECK_FALSE(is_regular_in(tiny, std::span<const int>(first)));
  CHECK(is_regular_in(tiny, std::span<const int>(first), Tolerance{1e-9, 1e-16}));

  // the threshold is relative, so a uniformly small velocity stays regular
  Velocity<double> small(1, 1, 1);
  small(0, ix(1, {0})) = 1e-14;
  CHECK(is_regular(small).has_value());
}

TEST_CASE("regularity is invariant under the action") {
  RandomSource rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = random_velocity<Q>(rng, 2, 1, 2);
    const auto g = random_group<Q>(rng, 2, 2);
    CHECK(is_regular(act(v, g)).has_value());
  }
}

TEST_CASE("scale_velocity") {
  RandomSource rng(41);
  const auto v = random_velocity<Q>(rng, 2, 1, 3);
  CHECK(scale_velocity(v, q(1)) == v);

  const auto collapsed = scale_velocity(v, q(0));
  for (int a = 0; a < 3; ++a) {
    CHECK(collapsed(a, MultiIndex{}) == v(a, MultiIndex{}));
    for (std::size_t k = 1; k < v.space().size(); ++k) CHECK(collapsed(a, k) == q(0));
  }

  const auto half = scale_velocity(v, q(1, 2));
  CHECK(half(2, ix(2, {0, 1})) == v(2, ix(2, {0, 1})) * q(1, 4));
  for (std::size_t k = 0; k < v.space().size(); ++k) {
    Q factor = q(1);
    for (std::size_t s = 0; s < v.space().at(k).order(); ++s) factor *= q(1, 2);
    CHECK(half(1, k) == v(1, k) * factor);
  }
  CHECK(scale_velocity(v, q(-3, 2)) == act(v, GroupJet<Q>::scaling(2, 3, q(-3, 2))));
}

TEST_CASE("chart selectors and permutations") {
  CHECK(chart_selectors(3, 2) == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  const std::vector<int> nu{1, 3};
  CHECK(chart_permutation(nu, 4) == std::vector<int>{1, 3, 0, 2});
  const std::vector<int> unsorted{2, 1};
  CHECK_THROWS_AS(chart_permutation(unsorted, 4), DomainError);
}

TEST_CASE("float and rational action agree") {
  RandomSource exact(5);
  RandomSource approx(5);
  const auto vq = random_velocity<Q>(exact, 2, 1, 3);
  const auto gq = random_group<Q>(exact, 2, 3);
  const auto vd = random_velocity<double>(approx, 2, 1, 3);
  const auto gd = random_group<double>(approx, 2, 3);
  const auto moved_q = act(vq, gq);
  const auto moved_d = act(vd, gd);
  for (int a = 0; a < 3; ++a) {
    for (std::size_t k = 0; k < vq.space().size(); ++k) {
      CHECK(scalar_equal(moved_d(a, k), moved_q(a, k).get_d()));
    }
  }
}

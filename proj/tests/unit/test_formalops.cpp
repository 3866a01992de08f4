#include <doctest.h>

#include "helpers.hpp"
#include "jetinv/errors.hpp"
#include "jetinv/formal.hpp"
#include "jetinv/invariants.hpp"
#include "jetinv/random.hpp"

using namespace jetinv;
using namespace jetinv::test;

namespace {

JetPolynomial<Q> var(int n, int target, int component, std::vector<int> index) {
  return JetPolynomial<Q>::variable(n, target, JetVariable{component, ix(n, std::move(index))});
}

}  // namespace

TEST_CASE("d_formal on coordinate functions") {
  const auto y2 = var(1, 2, 1, {});
  CHECK(d_formal(y2, 0, 1) == var(1, 2, 1, {0}));

  const auto y1_2 = var(2, 3, 0, {1});
  CHECK(d_formal(y1_2, 0, 2) == var(2, 3, 0, {0, 1}));
  CHECK(d_formal(y1_2, 1, 2) == var(2, 3, 0, {1, 1}));
}

TEST_CASE("d_formal of a constant vanishes") {
  const auto c = JetPolynomial<Q>::constant(2, 3, q(5));
  CHECK(d_formal(c, 1, 1).is_zero());
}

TEST_CASE("d_formal product rule example") {
  const auto f = var(1, 2, 0, {0}) * var(1, 2, 1, {0});
  const auto expected = var(1, 2, 0, {0, 0}) * var(1, 2, 1, {0}) + var(1, 2, 0, {0}) * var(1, 2, 1, {0, 0});
  CHECK(d_formal(f, 0, 2) == expected);
}

TEST_CASE("d_formal refuses to exceed the order") {
  const auto f = var(1, 2, 0, {0, 0});
  try {
    d_formal(f, 0, 2);
    FAIL("expected an exception");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::order_overflow);
  }
}

TEST_CASE("d_formal is a derivation and derivatives commute") {
  RandomSource rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 2;
    const int target = n + 1;
    const auto f = random_jet_polynomial<Q>(rng, n, target, 1, 4, 2);
    const auto g = random_jet_polynomial<Q>(rng, n, target, 1, 4, 2);
    for (int i = 0; i < n; ++i) {
      CHECK(d_formal(f * g, i, 2) == d_formal(f, i, 2) * g + f * d_formal(g, i, 2));
      for (int j = 0; j < n; ++j) CHECK(d_formal(d_formal(f, i, 2), j, 3) == d_formal(d_formal(f, j, 2), i, 3));
    }
  }
}

TEST_CASE("evaluate") {
  RandomSource rng(3);
  const auto v = random_velocity<Q>(rng, 1, 1, 2);
  CHECK(evaluate(var(1, 2, 1, {0}), v) == v(1, ix(1, {0})));
  CHECK(evaluate(JetPolynomial<Q>::constant(1, 2, q(1)), v) == q(1));
  const auto f = var(1, 2, 0, {0}) * var(1, 2, 1, {0, 0}) + JetPolynomial<Q>::constant(1, 2, q(-2));
  CHECK(evaluate(f, v) == v(0, ix(1, {0})) * v(1, ix(1, {0, 0})) - q(2));

  const auto too_high = var(1, 2, 0, {0, 0, 0});
  CHECK_THROWS_AS(evaluate(too_high, v), DomainError);
}

TEST_CASE("delta_apply") {
  RandomSource rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 2;
    const auto v = random_velocity<Q>(rng, n, 2, 2);
    const auto p = extract_recurrence(v, leading(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(delta_apply(var(n, n + 2, i, {}), j, v) == (i == j ? q(1) : q(0)));
      }
      for (int s = 0; s < 2; ++s) CHECK(delta_apply(var(n, n + 2, n + s, {}), i, v) == p.w.at(s, ix(n, {i})));
      CHECK(delta_apply(JetPolynomial<Q>::constant(n, n + 2, q(4)), i, v) == q(0));
    }
  }
}

TEST_CASE("delta_apply rejects a singular leading block") {
  const auto v = velocity(1, 1, 1, {{1, {0}, q(1)}});
  CHECK_THROWS_AS(delta_apply(var(1, 2, 1, {}), 0, v), DomainError);
}

TEST_CASE("delta_components at order 1") {
  const auto v = velocity(1, 1, 1, {{0, {}, q(2)}, {1, {}, q(3)}, {0, {0}, q(2)}, {1, {0}, q(5)}});
  const auto d = delta_components(v, 0);
  REQUIRE(d.base.size() == 1);
  CHECK(d.base[0] == q(1));
  CHECK(d.w.components() == 1);
  CHECK(d.w.space().size() == 1);
  CHECK(d.w(0, 0) == q(5, 2));
  for (Q x : d.y.values()) CHECK(x == q(0));
}

TEST_CASE("delta_components of a normalized velocity have no y part") {
  auto v = velocity(2, 1, 3, {{0, {0}, q(1)}, {1, {1}, q(1)}});
  v(2, ix(2, {0})) = q(3);
  v(2, ix(2, {0, 1})) = q(-1, 2);
  v(2, ix(2, {1, 1, 1})) = q(7);
  for (int i = 0; i < 2; ++i) {
    const auto d = delta_components(v, i);
    for (Q x : d.y.values()) CHECK(x == q(0));
    CHECK(d.base[static_cast<std::size_t>(i)] == q(1));
    CHECK(d.base[static_cast<std::size_t>(1 - i)] == q(0));
    for (std::size_t k = 0; k < d.w.space().size(); ++k) {
      CHECK(d.w(0, k) == v(2, d.w.space().at(k).with(i)));
    }
  }
}

TEST_CASE("delta_vector matches delta_apply on coordinate functions") {
  RandomSource rng(29);
  const auto v = random_velocity<Q>(rng, 2, 1, 3);
  for (int i = 0; i < 2; ++i) {
    const auto field = delta_vector(v, i);
    for (int a = 0; a < 3; ++a) {
      for (std::size_t k = 0; k < field.space().size(); ++k) {
        const auto index = field.space().at(k);
        const JetPolynomial<Q> coordinate = JetPolynomial<Q>::variable(2, 3, JetVariable{a, index});
        CHECK(field(a, k) == delta_apply(coordinate, i, v));
      }
    }
  }
}

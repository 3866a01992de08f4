#include "jetinv/checks/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

#include "jetinv/charts.hpp"
#include "jetinv/checks/closed_forms.hpp"
#include "jetinv/checks/oracles.hpp"
#include "jetinv/errors.hpp"
#include "jetinv/faa_di_bruno.hpp"
#include "jetinv/formal.hpp"
#include "jetinv/group.hpp"
#include "jetinv/invariants.hpp"
#include "jetinv/random.hpp"
#include "jetinv/set_partition.hpp"
#include "jetinv/velocity_ops.hpp"

namespace jetinv::checks {

namespace {

using Q = Rational;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::vector<int> leading(int n) {
  std::vector<int> nu(static_cast<std::size_t>(n));
  std::iota(nu.begin(), nu.end(), 0);
  return nu;
}

Q rat(long num, long den = 1) { return ScalarTraits<Q>::from_ratio(num, den); }

std::string shape(int n, int m, int r) {
  return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " r=" + std::to_string(r);
}

Outcome compose_closed_form(RandomSource& rng) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    const auto a = random_group<Q>(rng, n, 2);
    const auto b = random_group<Q>(rng, n, 2);
    if (!(compose_group(a, b) == compose_order2(a, b))) out.fail("pair " + std::to_string(trial) + " differs");
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 5.0) out.fail("took " + std::to_string(seconds) + "s");
  if (out.passed) out.detail = "200 pairs, n in {1,2,3}, r=2";
  return out;
}

Outcome act_closed_form(RandomSource& rng) {
  Outcome out;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    const int m = rng.uniform(0, 2);
    const auto v = random_velocity<Q>(rng, n, m, 2);
    const auto a = random_group<Q>(rng, n, 2);
    if (!(act(v, a) == act_order2(v, a))) out.fail("pair " + std::to_string(trial) + " differs (" + shape(n, m, 2) + ")");
  }
  if (out.passed) out.detail = "200 pairs, n<=3, m<=2, r=2";
  return out;
}

Outcome invariants_closed_form(RandomSource& rng) {
  Outcome out;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    const int m = rng.uniform(1, 2);
    const auto v = random_velocity<Q>(rng, n, m, 2);
    const auto nu = leading(n);
    const auto expected = invariants_order2(v);
    const auto by_recurrence = extract_recurrence(v, nu);
    const auto by_normalization = extract_normalize(v, nu);
    if (!(by_recurrence == expected)) out.fail("recurrence differs at velocity " + std::to_string(trial));
    if (!(by_normalization == expected)) out.fail("normalization differs at velocity " + std::to_string(trial));
  }
  if (out.passed) out.detail = "200 velocities, r=2, both algorithms";
  return out;
}

Outcome group_axioms(RandomSource& rng) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    const int r = 1 + (trial / 3) % 4;
    const auto a = random_group<Q>(rng, n, r);
    const auto b = random_group<Q>(rng, n, r);
    const auto c = random_group<Q>(rng, n, r);
    const auto id = GroupJet<Q>::identity(n, r);
    const std::string where = " (triple " + std::to_string(trial) + ", n=" + std::to_string(n) + " r=" + std::to_string(r) + ")";
    if (!(compose_group(compose_group(a, b), c) == compose_group(a, compose_group(b, c)))) out.fail("associativity" + where);
    if (!(compose_group(a, id) == a) || !(compose_group(id, a) == a)) out.fail("identity" + where);
    const auto inv = invert_group(a);
    if (!(compose_group(a, inv) == id) || !(compose_group(inv, a) == id)) out.fail("inverse" + where);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 30.0) out.fail("took " + std::to_string(seconds) + "s");
  if (out.passed) out.detail = "100 triples, n<=3, r<=4";
  return out;
}

Outcome invariance_completeness(RandomSource& rng) {
  Outcome out;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform(1, 2);
    const int m = rng.uniform(1, 2);
    const int r = rng.uniform(1, 3);
    const auto v = random_velocity<Q>(rng, n, m, r);
    const auto g = random_group<Q>(rng, n, r);
    const auto moved = act(v, g);
    const std::string where = " (case " + std::to_string(trial) + ", " + shape(n, m, r) + ")";
    if (!(extract_recurrence(moved, leading(n)) == extract_recurrence(v, leading(n)))) out.fail("invariants moved" + where);
    const auto check = orbit_equal(v, moved);
    if (!check.equal) out.fail("orbit not recognised" + where);
    else if (!check.transporter || !(check.transporter->jet == g)) out.fail("transporter differs from g" + where);
  }

  PolynomialMap<Q> square{1, {Polynomial<Q>::variable(1, 0), Polynomial<Q>(1)}};
  square.components[1].add_term({2}, rat(1));
  PolynomialMap<Q> cube{1, {Polynomial<Q>::variable(1, 0), Polynomial<Q>(1)}};
  cube.components[1].add_term({3}, rat(1));
  const std::vector<Q> origin{rat(0)};
  const auto v2 = prolong(square, std::span<const Q>(origin), 2);
  const auto v3 = prolong(cube, std::span<const Q>(origin), 2);
  if (orbit_equal(v2, v3).equal) out.fail("(t,t^2) and (t,t^3) reported equivalent");
  if (out.passed) out.detail = "100 cases, n<=2, m<=2, r<=3; (t,t^2) vs (t,t^3) separated";
  return out;
}

Outcome dimension_counts(RandomSource& rng) {
  Outcome out;
  int cases = 0;
  if (grassmann_dim(2, 1, 2) != 8 || grassmann_dim(1, 1, 1) != 3 || grassmann_dim(3, 2, 0) != 5) {
    out.fail("grassmann_dim reference values");
  }
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      for (int r = 1; r <= 4; ++r) {
        const auto v = random_velocity<Q>(rng, n, m, r);
        const auto p = extract_recurrence(v, leading(n));
        const auto q = extract_normalize(v, leading(n));
        ++cases;
        if (p.coordinate_count() != grassmann_dim(n, m, r) || q.coordinate_count() != grassmann_dim(n, m, r)) {
          out.fail("count mismatch at " + shape(n, m, r));
        }
      }
    }
  }
  if (out.passed) out.detail = std::to_string(cases) + " shapes, n<=3, m<=3, r<=4";
  return out;
}

Outcome formal_derivative_identity(RandomSource& rng) {
  Outcome out;
  int evaluations = 0;
  for (int c = 0; c < 20; ++c) {
    const int n = rng.uniform(1, 2);
    const int target = n + rng.uniform(1, 2);
    const auto gamma = random_polynomial_map<Q>(rng, n, target, 3);
    for (int k = 0; k < 20; ++k) {
      const int r = rng.uniform(1, 3);
      const auto f = random_jet_polynomial<Q>(rng, n, target, r - 1, 4, 3);
      const Polynomial<Q> along = along_prolongation(f, gamma);
      for (int sample = 0; sample < 5; ++sample) {
        std::vector<Q> t;
        for (int i = 0; i < n; ++i) t.push_back(rng.scalar<Q>());
        const auto v = prolong(gamma, std::span<const Q>(t), r);
        for (int i = 0; i < n; ++i) {
          ++evaluations;
          if (evaluate(d_formal(f, i, r), v) != along.derivative(i).evaluate(t)) {
            out.fail("curve " + std::to_string(c) + ", function " + std::to_string(k) + ", direction " +
                     std::to_string(i + 1));
          }
        }
      }
    }
  }
  if (out.passed) out.detail = "20 curves x 20 functions x 5 points (" + std::to_string(evaluations) + " evaluations)";
  return out;
}

Outcome faa_di_bruno_oracle(RandomSource& rng) {
  Outcome out;
  constexpr int r = 4;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform(1, 2);
    const int mid = rng.uniform(1, 3);
    const int target = rng.uniform(1, 2);
    const auto inner = random_polynomial_map<Q>(rng, n, mid, 3);
    const auto outer = random_polynomial_map<Q>(rng, mid, target, 3);
    std::vector<Q> t(static_cast<std::size_t>(n), rat(0));
    if (trial % 2 == 1) {
      for (Q& x : t) x = rng.scalar<Q>();
    }
    const auto image = inner.evaluate(t);
    const auto by_kernel = compose_jets(taylor_table(outer, std::span<const Q>(image), r),
                                        taylor_table(inner, std::span<const Q>(t), r), r);
    if (!(by_kernel == composite_taylor(outer, inner, std::span<const Q>(t), r))) {
      out.fail("pair " + std::to_string(trial) + " differs");
    }
  }
  if (out.passed) out.detail = "50 pairs, orders 0..4";
  return out;
}

Outcome chart_coherence(RandomSource& rng) {
  Outcome out;
  int grassmann_cases = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform(1, 2);
    const int m = rng.uniform(1, 2);
    const auto v = random_velocity<Q>(rng, n, m, 2);
    std::vector<Q> base;
    for (int a = 0; a < n + m; ++a) base.push_back(v(a, MultiIndex{}));
    const auto f = random_chart<Q>(rng, base, 2);
    const std::string where = " (chart " + std::to_string(trial) + ", " + shape(n, m, 2) + ")";

    const auto moved = transform_velocity(f, v);
    if (!(moved == transform_order2(f, v))) out.fail("velocity transform" + where);

    const auto p = extract_recurrence(v, leading(n));
    if (!is_regular_in(moved, std::span<const int>(p.nu))) continue;
    ++grassmann_cases;
    const auto numeric = transform_grassmann(f, p);
    if (!(numeric == transform_grassmann_order2(f, p))) out.fail("Grassmann closed form" + where);
    if (!(extract_recurrence(moved, leading(n)) == numeric)) out.fail("quotient compatibility" + where);
  }
  if (grassmann_cases < 25) out.fail("only " + std::to_string(grassmann_cases) + " charts stayed in the leading chart");
  if (out.passed) {
    out.detail = "50 charts, r=2; " + std::to_string(grassmann_cases) + " with Grassmann and quotient checks";
  }
  return out;
}

Outcome nonextendability(RandomSource& rng) {
  Outcome out;
  const auto v = random_velocity<Q>(rng, 2, 1, 3);
  const std::vector<Q> taus{rat(1), rat(1, 2), rat(1, 4), rat(1, 8), rat(0)};
  const auto report = nonextendability_demo(v, std::span<const Q>(taus));
  if (!report.invariants_constant) out.fail("invariants change with tau");
  if (!report.scaling_law) out.fail("order-s coordinates do not scale by tau^s");
  if (!report.degenerate_at_zero) out.fail("tau=0 is regular or not degenerate");
  if (!report.det_law) out.fail("determinant does not scale by tau^n");
  for (const auto& sample : report.samples) {
    if ((sgn(sample.tau) != 0) != sample.regular) out.fail("regularity wrong at tau=" + sample.tau.get_str());
  }
  if (out.passed) out.detail = "tau in {1,1/2,1/4,1/8,0}, n=2 m=1 r=3";
  return out;
}

// Delta_q pushed through the prolonged chart change, coefficient by coefficient.
JetTable<Q> push_forward(const std::vector<std::vector<JetPolynomial<Q>>>& ybar, const JetTable<Q>& field,
                         const Velocity<Q>& v) {
  JetTable<Q> out(field.components(), field.space());
  for (int a = 0; a < field.components(); ++a) {
    for (std::size_t k = 0; k < field.space().size(); ++k) {
      const auto& f = ybar[static_cast<std::size_t>(a)][k];
      Q sum = 0;
      for (const JetVariable& var : f.variables()) {
        sum += evaluate(f.partial(var), v) * field.at(var.component, var.index);
      }
      out(a, k) = sum;
    }
  }
  return out;
}

Outcome delta_covariance(RandomSource& rng) {
  Outcome out;
  int checked = 0;
  int skipped = 0;
  for (int c = 0; c < 20; ++c) {
    const int n = rng.uniform(1, 2);
    const int m = rng.uniform(1, 2);
    const int r = rng.uniform(1, 3);
    const int N = n + m;
    const auto chart = random_polynomial_map<Q>(rng, N, N, 2);

    // ybar^A_J as polynomials in the jet coordinates, |J| <= r-1
    const IndexSpace lower(n, r - 1);
    std::vector<std::vector<JetPolynomial<Q>>> ybar(static_cast<std::size_t>(N));
    for (int a = 0; a < N; ++a) {
      auto& row = ybar[static_cast<std::size_t>(a)];
      row.push_back(JetPolynomial<Q>::from_base_polynomial(n, chart.components[static_cast<std::size_t>(a)]));
      for (std::size_t k = 1; k < lower.size(); ++k) {
        const auto entries = lower.at(k).entries();
        const MultiIndex parent = MultiIndex::canonical(std::vector<int>(entries.begin(), entries.end() - 1), n);
        row.push_back(d_formal(row[lower.rank(parent)], entries.back(), static_cast<int>(entries.size())));
      }
    }

    for (int k = 0; k < 20; ++k) {
      const auto v = random_velocity<Q>(rng, n, m, r);
      std::vector<Q> base;
      for (int a = 0; a < N; ++a) base.push_back(v(a, MultiIndex{}));
      const auto jet = ChartJet<Q>::from_polynomial(chart, std::span<const Q>(base), r);
      if (!jet.is_invertible()) {
        ++skipped;
        continue;
      }
      const auto vbar = transform_velocity(jet, v);
      if (!is_regular_in(vbar, std::span<const int>(leading(n)))) {
        ++skipped;
        continue;
      }
      ++checked;
      const std::string where = " (chart " + std::to_string(c) + ", point " + std::to_string(k) + ")";
      for (int a = 0; a < N; ++a) {
        for (std::size_t q = 0; q < lower.size(); ++q) {
          if (evaluate(ybar[static_cast<std::size_t>(a)][q], v) != vbar(a, q)) out.fail("prolonged chart" + where);
        }
      }

      std::vector<JetTable<Q>> pushed;
      for (int q = 0; q < n; ++q) pushed.push_back(push_forward(ybar, delta_vector(v, q), v));
      const Matrix<Q> y = v.block(leading(n));
      const Matrix<Q> zbar = inverse(vbar.block(leading(n)));
      for (int i = 0; i < n; ++i) {
        JetTable<Q> expected(N, lower);
        for (int q = 0; q < n; ++q) {
          Q coeff = 0;
          for (int s = 0; s < n; ++s) coeff += zbar(s, i) * y(q, s);
          for (int a = 0; a < N; ++a)
            for (std::size_t idx = 0; idx < lower.size(); ++idx) expected(a, idx) += coeff * pushed[static_cast<std::size_t>(q)](a, idx);
        }
        if (!(delta_vector(vbar, i) == expected)) out.fail("Delta_" + std::to_string(i + 1) + where);
      }
    }
  }
  if (checked < 200) out.fail("only " + std::to_string(checked) + " usable chart/point pairs");
  if (out.passed) {
    out.detail = "20 charts x 20 points, n<=2, r<=3 (" + std::to_string(checked) + " checked, " +
                 std::to_string(skipped) + " outside the chart)";
  }
  return out;
}

struct Criterion {
  const char* name;
  std::function<Outcome(RandomSource&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table{
      {"composition matches the order-2 closed form", compose_closed_form},
      {"action matches the order-2 closed form", act_closed_form},
      {"invariants match the order-2 closed form", invariants_closed_form},
      {"group axioms", group_axioms},
      {"invariance and orbit separation", invariance_completeness},
      {"Grassmann coordinate count", dimension_counts},
      {"formal derivative along prolongations", formal_derivative_identity},
      {"chain rule vs polynomial composition", faa_di_bruno_oracle},
      {"chart change coherence", chart_coherence},
      {"scaling family and non-extendability", nonextendability},
      {"Delta covariance under chart changes", delta_covariance},
  };
  return table;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw_domain(ErrorCode::out_of_range, "no criterion " + std::to_string(id));
  const Criterion& criterion = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult result;
  result.id = id;
  result.name = criterion.name;
  RandomSource rng(seed + static_cast<std::uint64_t>(id) * 7919u);
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome outcome = criterion.body(rng);
    result.passed = outcome.passed;
    result.detail = outcome.detail;
  } catch (const Error& e) {
    result.passed = false;
    result.detail = std::string(to_string(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) results.push_back(run_criterion(id, seed));
  return results;
}

std::string format_result(const CriterionResult& result) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.2fs", result.seconds);
  std::ostringstream line;
  line << (result.passed ? "PASS" : "FAIL") << "  " << (result.id < 10 ? " " : "") << result.id << "  " << result.name
       << " (" << result.detail << ") " << seconds;
  return line.str();
}

}  // namespace jetinv::checks

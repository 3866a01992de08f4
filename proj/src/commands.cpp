#include "jetinv/commands.hpp"

#include <sstream>

#include "jetinv/charts.hpp"
#include "jetinv/checks/acceptance.hpp"
#include "jetinv/errors.hpp"
#include "jetinv/group.hpp"
#include "jetinv/invariants.hpp"
#include "jetinv/random.hpp"
#include "jetinv/set_partition.hpp"
#include "jetinv/velocity_ops.hpp"

namespace jetinv {

namespace {

constexpr std::uint64_t kRandomSeed = 1;
constexpr std::uint64_t kSelftestSeed = 20240101;

std::vector<int> zero_based(const std::vector<int>& chart) {
  std::vector<int> out;
  for (int c : chart) {
    if (c < 1) throw ParseError("chart entries are 1-based");
    out.push_back(c - 1);
  }
  return out;
}

std::vector<int> one_based(const std::vector<int>& nu) {
  std::vector<int> out;
  for (int c : nu) out.push_back(c + 1);
  return out;
}

void expect_documents(const std::string& command, const std::vector<Json>& docs) {
  const std::size_t arity = command_arity(command);
  if (docs.size() != arity) {
    throw ParseError(command + " expects " + std::to_string(arity) + " document(s), got " +
                     std::to_string(docs.size()));
  }
}

template <class T>
ChartJet<T> chart_at(const Json& doc, const std::vector<T>& base, int r) {
  if (document_kind(doc) == DocumentKind::polynomial_map) {
    return ChartJet<T>::from_polynomial(polynomial_map_from_json<T>(doc), std::span<const T>(base), r);
  }
  return chart_from_json<T>(doc);
}

template <class T>
Json invariants_command(const CommandOptions& opt, const std::vector<Json>& docs) {
  const Tolerance tol = tolerance_from(opt.tol);
  const auto v = velocity_from_json<T>(docs.at(0));
  std::vector<int> nu;
  if (!opt.chart.empty()) {
    nu = zero_based(opt.chart);
    chart_permutation(nu, v.target_dim());
    if (!is_regular_in(v, std::span<const int>(nu), tol)) {
      throw_domain(ErrorCode::not_regular, "velocity is not regular in the requested chart");
    }
  } else {
    const auto certificate = is_regular(v, tol);
    if (!certificate) throw_domain(ErrorCode::not_regular, "velocity is not regular");
    nu = certificate->nu;
  }
  return to_json(extract_recurrence(v, nu, tol));
}

template <class T>
Json orbit_check_command(const CommandOptions& opt, const std::vector<Json>& docs) {
  const auto check =
      orbit_equal(velocity_from_json<T>(docs.at(0)), velocity_from_json<T>(docs.at(1)), tolerance_from(opt.tol));
  Json out = Json::object();
  out["equal"] = check.equal;
  out["chart"] = check.nu ? Json(one_based(*check.nu)) : Json(nullptr);
  if (check.transporter) out["transporter"] = to_json(check.transporter->jet);
  if (!check.diagnostic.empty()) out["diagnostic"] = check.diagnostic;
  return out;
}

template <class T>
Json transform_command(const CommandOptions& opt, const std::vector<Json>& docs) {
  const Tolerance tol = tolerance_from(opt.tol);
  const Json& target = docs.at(1);
  switch (document_kind(target)) {
    case DocumentKind::velocity: {
      const auto v = velocity_from_json<T>(target);
      std::vector<T> base;
      for (int a = 0; a < v.target_dim(); ++a) base.push_back(v(a, MultiIndex{}));
      return to_json(transform_velocity(chart_at<T>(docs.at(0), base, v.r()), v, tol));
    }
    case DocumentKind::grassmann: {
      const auto p = grassmann_from_json<T>(target);
      const auto u = lift(p);
      std::vector<T> base;
      for (int a = 0; a < u.target_dim(); ++a) base.push_back(u(a, MultiIndex{}));
      std::optional<std::vector<int>> target_nu;
      if (!opt.chart.empty()) target_nu = zero_based(opt.chart);
      return to_json(transform_grassmann(chart_at<T>(docs.at(0), base, p.r()), p, target_nu, tol));
    }
    default:
      throw ParseError("transform expects a velocity or grassmann document");
  }
}

template <class T>
Json prolong_command(const CommandOptions& opt, const std::vector<Json>& docs) {
  const auto gamma = polynomial_map_from_json<T>(docs.at(0));
  if (opt.order < 0) throw ParseError("prolong needs a non-negative order");
  std::vector<T> t;
  for (const auto& text : opt.at) t.push_back(ScalarTraits<T>::parse(text));
  if (t.empty()) t.assign(static_cast<std::size_t>(gamma.source_dim), ScalarTraits<T>::from_int(0));
  if (static_cast<int>(t.size()) != gamma.source_dim) {
    throw ParseError("the evaluation point needs " + std::to_string(gamma.source_dim) + " values");
  }
  return to_json(prolong(gamma, std::span<const T>(t), opt.order));
}

template <class T>
Json random_command(const CommandOptions& opt) {
  RandomSource rng(opt.seed.value_or(kRandomSeed));
  if (opt.kind == "velocity") return to_json(random_velocity<T>(rng, opt.n, opt.m, opt.r));
  if (opt.kind == "group") return to_json(random_group<T>(rng, opt.n, opt.r));
  throw ParseError("random kind must be velocity or group");
}

template <class T>
Json dispatch(const std::string& command, const CommandOptions& opt, const std::vector<Json>& docs) {
  const Tolerance tol = tolerance_from(opt.tol);
  if (command == "invariants") return invariants_command<T>(opt, docs);
  if (command == "compose") return to_json(compose_group(group_from_json<T>(docs.at(0)), group_from_json<T>(docs.at(1))));
  if (command == "invert") return to_json(invert_group(group_from_json<T>(docs.at(0)), tol));
  if (command == "act") return to_json(act(velocity_from_json<T>(docs.at(0)), group_from_json<T>(docs.at(1)), tol));
  if (command == "orbit-check") return orbit_check_command<T>(opt, docs);
  if (command == "transform") return transform_command<T>(opt, docs);
  if (command == "prolong") return prolong_command<T>(opt, docs);
  if (command == "random") return random_command<T>(opt);
  throw ParseError("unknown command '" + command + "'");
}

}  // namespace

const std::vector<std::string>& document_commands() {
  static const std::vector<std::string> names{"invariants", "compose",   "invert",  "act",
                                              "orbit-check", "transform", "prolong"};
  return names;
}

std::size_t command_arity(const std::string& command) {
  if (command == "invariants" || command == "invert" || command == "prolong") return 1;
  if (command == "compose" || command == "act" || command == "orbit-check" || command == "transform") return 2;
  return 0;
}

ScalarMode resolve_mode(const std::optional<std::string>& requested, const std::vector<Json>& docs) {
  std::optional<ScalarMode> mode;
  if (requested) mode = parse_scalar_mode(*requested);
  for (const Json& doc : docs) {
    if (!doc.is_object() || !doc.contains("scalar_mode")) continue;
    const ScalarMode declared = document_mode(doc);
    if (!mode) mode = declared;
    if (*mode != declared) {
      throw ParseError("scalar mode mismatch: " + std::string(to_string(*mode)) + " vs " +
                       std::string(to_string(declared)));
    }
  }
  return mode.value_or(ScalarMode::rational);
}

Tolerance tolerance_from(const std::optional<double>& tol) {
  Tolerance out;
  if (tol) {
    if (!(*tol > 0.0)) throw ParseError("tolerance must be positive");
    out.equal = *tol;
    out.regularity = *tol;
  }
  return out;
}

Json run_command(const std::string& command, const std::vector<Json>& docs, const CommandOptions& opt) {
  if (command == "dim") return grassmann_dim(opt.n, opt.m, opt.r);
  expect_documents(command, docs);
  const ScalarMode mode = resolve_mode(opt.scalar, docs);
  return mode == ScalarMode::rational ? dispatch<Rational>(command, opt, docs) : dispatch<double>(command, opt, docs);
}

SelftestReport run_selftest(std::optional<std::uint64_t> seed_option) {
  const std::uint64_t seed = seed_option.value_or(kSelftestSeed);
  std::ostringstream report;
  int failures = 0;
  for (const auto& result : checks::run_acceptance(seed)) {
    report << checks::format_result(result) << '\n';
    if (!result.passed) ++failures;
  }

  RandomSource rng(seed);
  const auto v = random_velocity<Rational>(rng, 2, 1, 3);
  std::vector<Rational> taus;
  for (long den : {1, 2, 4, 8}) taus.push_back(ScalarTraits<Rational>::from_ratio(1, den));
  taus.push_back(Rational(0));
  const auto demo = nonextendability_demo(v, std::span<const Rational>(taus));
  report << "\nscaling family in chart " << Json(one_based(demo.nu)).dump() << '\n';
  for (const auto& sample : demo.samples) {
    report << "  tau=" << sample.tau.get_str() << "  regular=" << (sample.regular ? "yes" : "no")
           << "  det=" << sample.det_margin.get_str() << "  max|y_I|=" << sample.derivative_size << "  invariants="
           << (sample.invariants ? "unchanged" : "undefined") << '\n';
  }
  report << "  invariants constant: " << (demo.invariants_constant ? "yes" : "no")
         << ", order-s coordinates scale by tau^s: " << (demo.scaling_law ? "yes" : "no")
         << ", tau=0 degenerate: " << (demo.degenerate_at_zero ? "yes" : "no") << '\n';
  if (!demo.holds()) ++failures;
  report << (failures == 0 ? "selftest passed" : "selftest FAILED");
  return {report.str(), failures == 0};
}

}  // namespace jetinv

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jetinv {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Comparison thresholds for binary64 computations. Ignored by exact scalars.
struct Tolerance {
  /// |a - b| <= equal * max(1, |a|, |b|)
  double equal = 1e-9;
  /// a square block is regular when |det| > regularity * (max-norm)^n
  double regularity = 1e-9;
};

enum class ScalarMode { rational, floating };

std::string_view to_string(ScalarMode mode);
ScalarMode parse_scalar_mode(std::string_view text);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr ScalarMode mode = ScalarMode::rational;

  static Rational from_int(long value) { return Rational(value); }
  static Rational from_ratio(long num, long den);
  static bool is_zero(const Rational& x, const Tolerance&) { return sgn(x) == 0; }
  static bool equal(const Rational& a, const Rational& b, const Tolerance&) { return a == b; }
  static double to_double(const Rational& x) { return x.get_d(); }
  /// Accepts "p" or "p/q" with optional sign; throws ParseError otherwise.
  static Rational parse(std::string_view text);
  static std::string format(const Rational& x) { return x.get_str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr ScalarMode mode = ScalarMode::floating;

  static double from_int(long value) { return static_cast<double>(value); }
  static double from_ratio(long num, long den);
  static bool is_zero(const double& x, const Tolerance& tol);
  static bool equal(const double& a, const double& b, const Tolerance& tol);
  static double to_double(const double& x) { return x; }
  static double parse(std::string_view text);
  /// Shortest representation that round-trips.
  static std::string format(const double& x);
};

template <class T>
bool scalar_equal(const T& a, const T& b, const Tolerance& tol = {}) {
  return ScalarTraits<T>::equal(a, b, tol);
}

template <class T>
bool scalar_is_zero(const T& x, const Tolerance& tol = {}) {
  return ScalarTraits<T>::is_zero(x, tol);
}

}  // namespace jetinv

#include "jetinv/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "jetinv/errors.hpp"

namespace jetinv {

std::string_view to_string(ScalarMode mode) {
  return mode == ScalarMode::rational ? "rational" : "float";
}

ScalarMode parse_scalar_mode(std::string_view text) {
  if (text == "rational") return ScalarMode::rational;
  if (text == "float") return ScalarMode::floating;
  throw ParseError("unknown scalar mode '" + std::string(text) + "'");
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational ScalarTraits<Rational>::from_ratio(long num, long den) {
  if (den == 0) throw_domain(ErrorCode::out_of_range, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational ScalarTraits<Rational>::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  const auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  mpz_class n(strip_plus(num), 10);
  mpz_class d(strip_plus(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

double ScalarTraits<double>::from_ratio(long num, long den) {
  if (den == 0) throw_domain(ErrorCode::out_of_range, "zero denominator");
  return static_cast<double>(num) / static_cast<double>(den);
}

bool ScalarTraits<double>::is_zero(const double& x, const Tolerance& tol) {
  return std::abs(x) <= tol.equal;
}

bool ScalarTraits<double>::equal(const double& a, const double& b, const Tolerance& tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol.equal * scale;
}

namespace {

double parse_decimal(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (first == last || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError("malformed decimal '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

double ScalarTraits<double>::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text, text);
  const double den = parse_decimal(text.substr(slash + 1), text);
  if (den == 0.0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return parse_decimal(text.substr(0, slash), text) / den;
}

std::string ScalarTraits<double>::format(const double& x) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, ptr);
}

}  // namespace jetinv

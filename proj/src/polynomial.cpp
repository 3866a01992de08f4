#include "jetinv/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "jetinv/errors.hpp"

namespace jetinv {

template <class T>
Polynomial<T> Polynomial<T>::constant(int vars, const T& value) {
  Polynomial<T> out(vars);
  out.add_term(Exponents(static_cast<std::size_t>(vars), 0), value);
  return out;
}

template <class T>
Polynomial<T> Polynomial<T>::variable(int vars, int index) {
  if (index < 0 || index >= vars) throw_domain(ErrorCode::out_of_range, "polynomial variable out of range");
  Exponents e(static_cast<std::size_t>(vars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  Polynomial<T> out(vars);
  out.add_term(e, ScalarTraits<T>::from_int(1));
  return out;
}

template <class T>
int Polynomial<T>::degree() const {
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

template <class T>
void Polynomial<T>::add_term(const Exponents& exponents, const T& coeff) {
  if (static_cast<int>(exponents.size()) != vars_) {
    throw_domain(ErrorCode::dimension_mismatch, "monomial has " + std::to_string(exponents.size()) +
                                                    " exponents, polynomial has " + std::to_string(vars_) +
                                                    " variables");
  }
  if (std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 0; })) {
    throw_domain(ErrorCode::out_of_range, "negative exponent");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

template <class T>
Polynomial<T>& Polynomial<T>::operator+=(const Polynomial& rhs) {
  if (rhs.vars_ != vars_) throw_domain(ErrorCode::dimension_mismatch, "polynomial variable counts differ");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

template <class T>
Polynomial<T>& Polynomial<T>::operator-=(const Polynomial& rhs) {
  if (rhs.vars_ != vars_) throw_domain(ErrorCode::dimension_mismatch, "polynomial variable counts differ");
  for (const auto& [e, c] : rhs.terms_) add_term(e, T(-c));
  return *this;
}

template <class T>
Polynomial<T> Polynomial<T>::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += rhs;
  return out;
}

template <class T>
Polynomial<T> Polynomial<T>::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  out -= rhs;
  return out;
}

template <class T>
Polynomial<T> Polynomial<T>::operator*(const Polynomial& rhs) const {
  if (rhs.vars_ != vars_) throw_domain(ErrorCode::dimension_mismatch, "polynomial variable counts differ");
  Polynomial out(vars_);
  Exponents e(static_cast<std::size_t>(vars_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, T(ca * cb));
    }
  }
  return out;
}

template <class T>
Polynomial<T> Polynomial<T>::scaled(const T& factor) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, T(c * factor));
  return out;
}

template <class T>
Polynomial<T> Polynomial<T>::derivative(int var) const {
  if (var < 0 || var >= vars_) throw_domain(ErrorCode::out_of_range, "derivative variable out of range");
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    const int power = e[static_cast<std::size_t>(var)];
    if (power == 0) continue;
    Exponents lowered = e;
    --lowered[static_cast<std::size_t>(var)];
    out.add_term(lowered, T(c * ScalarTraits<T>::from_int(power)));
  }
  return out;
}

template <class T>
Polynomial<T> Polynomial<T>::derivative(const MultiIndex& index) const {
  Polynomial out = *this;
  for (int var : index.entries()) out = out.derivative(var);
  return out;
}

template <class T>
T Polynomial<T>::evaluate(std::span<const T> point) const {
  if (static_cast<int>(point.size()) != vars_) throw_domain(ErrorCode::dimension_mismatch, "evaluation point has wrong size");
  T total = ScalarTraits<T>::from_int(0);
  for (const auto& [e, c] : terms_) {
    T term = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (int q = 0; q < e[k]; ++q) term *= point[k];
    }
    total += term;
  }
  return total;
}

template <class T>
Polynomial<T> Polynomial<T>::compose(std::span<const Polynomial> substitutions) const {
  if (static_cast<int>(substitutions.size()) != vars_) {
    throw_domain(ErrorCode::dimension_mismatch, "composition needs one substitution per variable");
  }
  const int out_vars = substitutions.empty() ? 0 : substitutions.front().vars();
  for (const auto& s : substitutions) {
    if (s.vars() != out_vars) throw_domain(ErrorCode::dimension_mismatch, "substitutions disagree on variables");
  }
  // powers[k][q] = substitutions[k]^q, built lazily
  std::vector<std::vector<Polynomial>> powers(substitutions.size());
  const auto power = [&](std::size_t k, int q) -> const Polynomial& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(constant(out_vars, ScalarTraits<T>::from_int(1)));
    while (static_cast<int>(cache.size()) <= q) cache.push_back(cache.back() * substitutions[k]);
    return cache[static_cast<std::size_t>(q)];
  };
  Polynomial out(out_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(out_vars, c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] > 0) term = term * power(k, e[k]);
    }
    out += term;
  }
  return out;
}

template <class T>
std::vector<T> PolynomialMap<T>::evaluate(std::span<const T> point) const {
  std::vector<T> out;
  out.reserve(components.size());
  for (const auto& p : components) out.push_back(p.evaluate(point));
  return out;
}

template <class T>
PolynomialMap<T> PolynomialMap<T>::compose(const PolynomialMap& inner) const {
  if (inner.target_dim() != source_dim) throw_domain(ErrorCode::dimension_mismatch, "polynomial maps do not compose");
  PolynomialMap out{inner.source_dim, {}};
  for (const auto& p : components) out.components.push_back(p.compose(inner.components));
  return out;
}

template class Polynomial<Rational>;
template class Polynomial<double>;
template struct PolynomialMap<Rational>;
template struct PolynomialMap<double>;

}  // namespace jetinv

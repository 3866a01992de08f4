#include "jetinv/jet_polynomial.hpp"

#include <algorithm>
#include <string>

#include "jetinv/errors.hpp"

namespace jetinv {

template <class T>
JetPolynomial<T> JetPolynomial<T>::constant(int n, int target_dim, const T& value) {
  JetPolynomial out(n, target_dim, 0);
  out.add_term(Monomial{}, value);
  return out;
}

template <class T>
JetPolynomial<T> JetPolynomial<T>::variable(int n, int target_dim, const JetVariable& var) {
  JetPolynomial out(n, target_dim, static_cast<int>(var.index.order()));
  out.check_variable(var);
  out.add_term(Monomial{{var}}, ScalarTraits<T>::from_int(1));
  return out;
}

template <class T>
JetPolynomial<T> JetPolynomial<T>::from_base_polynomial(int n, const Polynomial<T>& p) {
  JetPolynomial out(n, p.vars(), 0);
  for (const auto& [exponents, coeff] : p.terms()) {
    Monomial mono;
    for (std::size_t a = 0; a < exponents.size(); ++a) {
      for (int q = 0; q < exponents[a]; ++q) mono.factors.push_back(JetVariable{static_cast<int>(a), MultiIndex{}});
    }
    out.add_term(std::move(mono), coeff);
  }
  return out;
}

template <class T>
void JetPolynomial<T>::check_variable(const JetVariable& var) const {
  if (var.component < 0 || var.component >= target_dim_) {
    throw_domain(ErrorCode::out_of_range, "jet variable component out of range");
  }
  for (int e : var.index.entries()) {
    if (e < 0 || e >= n_) throw_domain(ErrorCode::out_of_range, "jet variable index out of range");
  }
  if (static_cast<int>(var.index.order()) > order_) {
    throw_domain(ErrorCode::order_overflow, "jet variable exceeds the declared order " + std::to_string(order_));
  }
}

template <class T>
void JetPolynomial<T>::check_compatible(const JetPolynomial& rhs) const {
  if (n_ != rhs.n_ || target_dim_ != rhs.target_dim_) {
    throw_domain(ErrorCode::dimension_mismatch, "jet polynomials live over different jet spaces");
  }
}

template <class T>
std::set<JetVariable> JetPolynomial<T>::variables() const {
  std::set<JetVariable> out;
  for (const auto& [mono, coeff] : terms_) out.insert(mono.factors.begin(), mono.factors.end());
  return out;
}

template <class T>
int JetPolynomial<T>::max_variable_order() const {
  int best = 0;
  for (const auto& [mono, coeff] : terms_) {
    for (const auto& var : mono.factors) best = std::max(best, static_cast<int>(var.index.order()));
  }
  return best;
}

template <class T>
void JetPolynomial<T>::add_term(Monomial monomial, const T& coeff) {
  for (const auto& var : monomial.factors) check_variable(var);
  if (coeff == 0) return;
  std::sort(monomial.factors.begin(), monomial.factors.end());
  auto [it, inserted] = terms_.try_emplace(std::move(monomial), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

template <class T>
JetPolynomial<T> JetPolynomial<T>::operator+(const JetPolynomial& rhs) const {
  check_compatible(rhs);
  JetPolynomial out(n_, target_dim_, std::max(order_, rhs.order_));
  out.terms_ = terms_;
  for (const auto& [mono, coeff] : rhs.terms_) out.add_term(mono, coeff);
  return out;
}

template <class T>
JetPolynomial<T> JetPolynomial<T>::operator-(const JetPolynomial& rhs) const {
  return *this + rhs.scaled(ScalarTraits<T>::from_int(-1));
}

template <class T>
JetPolynomial<T> JetPolynomial<T>::operator*(const JetPolynomial& rhs) const {
  check_compatible(rhs);
  JetPolynomial out(n_, target_dim_, std::max(order_, rhs.order_));
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial mono;
      mono.factors.reserve(ma.degree() + mb.degree());
      std::merge(ma.factors.begin(), ma.factors.end(), mb.factors.begin(), mb.factors.end(),
                 std::back_inserter(mono.factors));
      out.add_term(std::move(mono), T(ca * cb));
    }
  }
  return out;
}

template <class T>
JetPolynomial<T> JetPolynomial<T>::scaled(const T& factor) const {
  JetPolynomial out(n_, target_dim_, order_);
  for (const auto& [mono, coeff] : terms_) out.add_term(mono, T(coeff * factor));
  return out;
}

template <class T>
JetPolynomial<T> JetPolynomial<T>::partial(const JetVariable& var) const {
  JetPolynomial out(n_, target_dim_, order_);
  for (const auto& [mono, coeff] : terms_) {
    const auto [lo, hi] = std::equal_range(mono.factors.begin(), mono.factors.end(), var);
    const long multiplicity = static_cast<long>(hi - lo);
    if (multiplicity == 0) continue;
    Monomial lowered = mono;
    lowered.factors.erase(lowered.factors.begin() + (lo - mono.factors.begin()));
    out.add_term(std::move(lowered), T(coeff * ScalarTraits<T>::from_int(multiplicity)));
  }
  return out;
}

template class JetPolynomial<Rational>;
template class JetPolynomial<double>;

}  // namespace jetinv

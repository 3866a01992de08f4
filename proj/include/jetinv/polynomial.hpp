#pragma once

#include <map>
#include <span>
#include <vector>

#include "jetinv/multiindex.hpp"
#include "jetinv/scalar.hpp"

namespace jetinv {

/// Sparse multivariate polynomial keyed by exponent vectors. Zero
/// coefficients are never stored.
template <class T>
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(int vars = 0) : vars_(vars) {}

  static Polynomial constant(int vars, const T& value);
  static Polynomial variable(int vars, int index);

  int vars() const { return vars_; }
  const std::map<Exponents, T>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  /// Adds `coeff` to the coefficient of the monomial with `exponents`.
  void add_term(const Exponents& exponents, const T& coeff);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(const T& factor) const;

  Polynomial derivative(int var) const;
  /// D_I applied variable by variable.
  Polynomial derivative(const MultiIndex& index) const;
  T evaluate(std::span<const T> point) const;
  /// Substitutes `substitutions[i]` for variable i. All substitutions must
  /// share one variable count, which becomes the result's.
  Polynomial compose(std::span<const Polynomial> substitutions) const;

  bool operator==(const Polynomial&) const = default;

 private:
  int vars_;
  std::map<Exponents, T> terms_;
};

/// Polynomial map from R^source_dim to R^components.
template <class T>
struct PolynomialMap {
  int source_dim = 0;
  std::vector<Polynomial<T>> components;

  int target_dim() const { return static_cast<int>(components.size()); }
  std::vector<T> evaluate(std::span<const T> point) const;
  /// this o inner
  PolynomialMap compose(const PolynomialMap& inner) const;
};

}  // namespace jetinv

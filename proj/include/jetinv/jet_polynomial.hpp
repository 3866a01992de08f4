#pragma once

#include <compare>
#include <map>
#include <set>
#include <vector>

#include "jetinv/multiindex.hpp"
#include "jetinv/polynomial.hpp"
#include "jetinv/scalar.hpp"

namespace jetinv {

/// Coordinate function y^A_I (0-based component, canonical index).
struct JetVariable {
  int component = 0;
  MultiIndex index;

  std::strong_ordering operator<=>(const JetVariable& other) const {
    if (auto c = component <=> other.component; c != 0) return c;
    if (auto c = index.order() <=> other.index.order(); c != 0) return c;
    return index <=> other.index;
  }
  bool operator==(const JetVariable&) const = default;
};

/// Multiset of variables, kept sorted; repeated entries encode powers.
/// Ordered by total degree, then lexicographically.
struct Monomial {
  std::vector<JetVariable> factors;

  std::size_t degree() const { return factors.size(); }
  std::strong_ordering operator<=>(const Monomial& other) const {
    if (auto c = factors.size() <=> other.factors.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(factors.begin(), factors.end(), other.factors.begin(),
                                                  other.factors.end());
  }
  bool operator==(const Monomial&) const = default;
};

/// Polynomial in the jet coordinates of (n source, target_dim target)
/// velocities, with a declared maximal jet order.
template <class T>
class JetPolynomial {
 public:
  JetPolynomial(int n, int target_dim, int order) : n_(n), target_dim_(target_dim), order_(order) {}

  static JetPolynomial constant(int n, int target_dim, const T& value);
  /// y^A_I, declared order |I|.
  static JetPolynomial variable(int n, int target_dim, const JetVariable& var);
  /// Lifts a polynomial in the base coordinates y^1..y^{target_dim}.
  static JetPolynomial from_base_polynomial(int n, const Polynomial<T>& p);

  int n() const { return n_; }
  int target_dim() const { return target_dim_; }
  int order() const { return order_; }
  const std::map<Monomial, T>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::set<JetVariable> variables() const;
  /// Largest |I| among variables that actually occur (0 if constant).
  int max_variable_order() const;

  void add_term(Monomial monomial, const T& coeff);

  JetPolynomial operator+(const JetPolynomial& rhs) const;
  JetPolynomial operator-(const JetPolynomial& rhs) const;
  JetPolynomial operator*(const JetPolynomial& rhs) const;
  JetPolynomial scaled(const T& factor) const;

  /// Partial derivative with respect to one coordinate function.
  JetPolynomial partial(const JetVariable& var) const;

  bool operator==(const JetPolynomial&) const = default;

 private:
  void check_compatible(const JetPolynomial& rhs) const;
  void check_variable(const JetVariable& var) const;

  int n_;
  int target_dim_;
  int order_;
  std::map<Monomial, T> terms_;
};

}  // namespace jetinv

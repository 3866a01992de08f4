#include "jetinv/checks/oracles.hpp"

#include <map>

#include "jetinv/errors.hpp"

namespace jetinv::checks {

template <class T>
JetTable<T> taylor_table(const PolynomialMap<T>& f, std::span<const T> point, int r) {
  if (static_cast<int>(point.size()) != f.source_dim) {
    throw_domain(ErrorCode::dimension_mismatch, "point dimension differs from the source dimension");
  }
  JetTable<T> table(f.target_dim(), IndexSpace(f.source_dim, r));
  for (int a = 0; a < f.target_dim(); ++a) {
    for (std::size_t k = 0; k < table.space().size(); ++k) {
      table(a, k) = f.components[static_cast<std::size_t>(a)].derivative(table.space().at(k)).evaluate(point);
    }
  }
  return table;
}

template <class T>
JetTable<T> composite_taylor(const PolynomialMap<T>& outer, const PolynomialMap<T>& inner, std::span<const T> point,
                             int r) {
  return taylor_table(outer.compose(inner), point, r);
}

template <class T>
Polynomial<T> along_prolongation(const JetPolynomial<T>& f, const PolynomialMap<T>& gamma) {
  if (gamma.source_dim != f.n() || gamma.target_dim() != f.target_dim()) {
    throw_domain(ErrorCode::dimension_mismatch, "curve and jet polynomial have different shapes");
  }
  const int n = gamma.source_dim;
  std::map<JetVariable, Polynomial<T>> cache;
  auto lookup = [&](const JetVariable& var) -> const Polynomial<T>& {
    auto it = cache.find(var);
    if (it == cache.end()) {
      it = cache.emplace(var, gamma.components[static_cast<std::size_t>(var.component)].derivative(var.index)).first;
    }
    return it->second;
  };
  Polynomial<T> out(n);
  for (const auto& [monomial, coeff] : f.terms()) {
    Polynomial<T> term = Polynomial<T>::constant(n, coeff);
    for (const JetVariable& var : monomial.factors) term = term * lookup(var);
    out += term;
  }
  return out;
}

#define JETINV_INSTANTIATE(T)                                                                                \
  template JetTable<T> taylor_table(const PolynomialMap<T>&, std::span<const T>, int);                       \
  template JetTable<T> composite_taylor(const PolynomialMap<T>&, const PolynomialMap<T>&, std::span<const T>, \
                                        int);                                                                \
  template Polynomial<T> along_prolongation(const JetPolynomial<T>&, const PolynomialMap<T>&);

JETINV_INSTANTIATE(Rational)
JETINV_INSTANTIATE(double)

#undef JETINV_INSTANTIATE

}  // namespace jetinv::checks

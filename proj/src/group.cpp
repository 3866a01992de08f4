#include "jetinv/group.hpp"

#include "jetinv/errors.hpp"
#include "jetinv/faa_di_bruno.hpp"

namespace jetinv {

template <class T>
GroupJet<T> compose_group(const GroupJet<T>& a, const GroupJet<T>& b) {
  if (a.n() != b.n() || a.r() != b.r()) {
    throw_domain(ErrorCode::dimension_mismatch, "group jets differ in dimension or order");
  }
  return GroupJet<T>(compose_jets(a.table(), b.table(), a.r()));
}

template <class T>
GroupJet<T> invert_group(const GroupJet<T>& a, const Tolerance& tol) {
  const int n = a.n();
  const int r = a.r();
  GroupJet<T> x(n, r);
  if (r == 0) return x;

  Matrix<T> linear;
  try {
    linear = inverse(a.linear_part(), tol);
  } catch (const DomainError&) {
    throw_domain(ErrorCode::singular, "group jet has a singular first-order block");
  }
  JetTable<T>& xt = x.table();
  for (int p = 0; p < n; ++p) {
    for (int i = 0; i < n; ++i) xt(p, static_cast<std::size_t>(1 + i)) = linear(p, i);
  }

  // With the order-s block of x still zero, the chain rule at order s yields
  // exactly the terms with at least two blocks.
  JetTable<T> rest(n, xt.space());
  const IndexSpace& space = xt.space();
  for (int s = 2; s <= r; ++s) {
    faa_di_bruno_order(a.table(), xt, s, rest, BlockRange{2});
    for (std::size_t k = space.begin_of_order(s); k < space.end_of_order(s); ++k) {
      for (int p = 0; p < n; ++p) {
        T value = ScalarTraits<T>::from_int(0);
        for (int q = 0; q < n; ++q) value -= linear(p, q) * rest(q, k);
        xt(p, k) = value;
      }
    }
  }
  return x;
}

template <class T>
GroupJet<T> truncate_group(const GroupJet<T>& a, int s) {
  return GroupJet<T>(a.table().truncated(s));
}

#define JETINV_INSTANTIATE(T)                                                  \
  template GroupJet<T> compose_group(const GroupJet<T>&, const GroupJet<T>&);  \
  template GroupJet<T> invert_group(const GroupJet<T>&, const Tolerance&);     \
  template GroupJet<T> truncate_group(const GroupJet<T>&, int);

JETINV_INSTANTIATE(Rational)
JETINV_INSTANTIATE(double)

#undef JETINV_INSTANTIATE

}  // namespace jetinv

#pragma once

#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "jetinv/jet.hpp"

namespace jetinv::test {

using Q = Rational;

inline Q q(long num, long den = 1) { return ScalarTraits<Q>::from_ratio(num, den); }

/// 0-based index over `dim` variables.
inline MultiIndex ix(int dim, std::vector<int> entries = {}) { return MultiIndex::canonical(std::move(entries), dim); }

inline std::vector<int> leading(int n) {
  std::vector<int> nu(static_cast<std::size_t>(n));
  std::iota(nu.begin(), nu.end(), 0);
  return nu;
}

struct Entry {
  int component;
  std::vector<int> index;
  Q value;
};

/// Velocity with the listed coordinates, zero elsewhere.
inline Velocity<Q> velocity(int n, int m, int r, std::initializer_list<Entry> entries) {
  Velocity<Q> v(n, m, r);
  for (const auto& e : entries) v(e.component, ix(n, e.index)) = e.value;
  return v;
}

inline GroupJet<Q> group(int n, int r, std::initializer_list<Entry> entries) {
  GroupJet<Q> a(n, r);
  for (const auto& e : entries) a(e.component, ix(n, e.index)) = e.value;
  return a;
}

}  // namespace jetinv::test

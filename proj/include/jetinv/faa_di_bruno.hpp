#pragma once

#include <limits>

#include "jetinv/jet.hpp"

namespace jetinv {

/// Restricts the number of partition blocks summed over. Recurrences that
/// isolate the single-block or all-singleton term use it to drop that term.
struct BlockRange {
  int min_blocks = 1;
  int max_blocks = std::numeric_limits<int>::max();
};

/// Higher-order chain rule at one order. For every output index I of length s
/// over `inner.dim()` source variables, writes
///
///   out(c, I) = sum_p sum_{(I_1..I_p)} inner(j_1, I_1) ... inner(j_p, I_p) * outer(c, j_1...j_p)
///
/// where the inner sum runs over unordered partitions of the positions of I
/// and j_1..j_p over the `inner.components()` intermediate variables. `outer`
/// holds derivatives of the outer map with respect to those variables.
/// Only the order-s entries of `out` are touched.
template <class T>
void faa_di_bruno_order(const JetTable<T>& outer, const JetTable<T>& inner, int s, JetTable<T>& out,
                        BlockRange range = {});

/// Order-s entries of the composite, returned in a table of order s.
template <class T>
JetTable<T> faa_di_bruno_contract(const JetTable<T>& outer, const JetTable<T>& inner, int s);

/// Full r-jet of outer o inner: order 0 copied from `outer`, orders 1..r from
/// the chain rule. Order-0 entries of `inner` are never read.
template <class T>
JetTable<T> compose_jets(const JetTable<T>& outer, const JetTable<T>& inner, int r);

}  // namespace jetinv

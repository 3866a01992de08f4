#include "jetinv/faa_di_bruno.hpp"

#include <algorithm>
#include <string>

#include "jetinv/errors.hpp"
#include "jetinv/set_partition.hpp"

namespace jetinv {

namespace {

template <class T>
struct PartitionSum {
  const JetTable<T>& outer;
  const JetTable<T>& inner;
  JetTable<T>& out;
  std::size_t out_rank = 0;
  int intermediates = 0;
  std::vector<std::size_t> block_rank{};
  const std::vector<std::size_t>* tuple_rank = nullptr;
  std::vector<T> partial{};  // partial[b] = product of the first b inner factors

  void run(int block, std::size_t tuple) {
    const int blocks = static_cast<int>(block_rank.size());
    if (block == blocks) {
      const std::size_t outer_rank = (*tuple_rank)[tuple];
      const T& coeff = partial[static_cast<std::size_t>(blocks)];
      for (int c = 0; c < outer.components(); ++c) {
        const T& f = outer(c, outer_rank);
        if (f == 0) continue;
        out(c, out_rank) += coeff * f;
      }
      return;
    }
    for (int j = 0; j < intermediates; ++j) {
      const T& factor = inner(j, block_rank[static_cast<std::size_t>(block)]);
      if (factor == 0) continue;
      partial[static_cast<std::size_t>(block) + 1] = partial[static_cast<std::size_t>(block)] * factor;
      run(block + 1, tuple * static_cast<std::size_t>(intermediates) + static_cast<std::size_t>(j));
    }
  }
};

}  // namespace

template <class T>
void faa_di_bruno_order(const JetTable<T>& outer, const JetTable<T>& inner, int s, JetTable<T>& out,
                        BlockRange range) {
  const int d = inner.components();
  if (s < 1) throw_domain(ErrorCode::order_mismatch, "chain rule order must be >= 1");
  if (outer.dim() != d) {
    throw_domain(ErrorCode::dimension_mismatch, "outer jet has " + std::to_string(outer.dim()) +
                                                    " variables but inner jet has " + std::to_string(d) +
                                                    " components");
  }
  if (out.dim() != inner.dim() || out.components() != outer.components()) {
    throw_domain(ErrorCode::dimension_mismatch, "output table shape does not match the composite");
  }
  const int p_lo = std::max(1, range.min_blocks);
  const int p_hi = std::min(s, range.max_blocks);
  if (out.order() < s || inner.order() < s - p_lo + 1 || (p_hi >= p_lo && outer.order() < p_hi)) {
    throw_domain(ErrorCode::order_mismatch, "jet orders too small for chain rule at order " + std::to_string(s));
  }

  const IndexSpace& out_space = out.space();
  const std::size_t first = out_space.begin_of_order(s);
  const std::size_t last = out_space.end_of_order(s);
  for (int c = 0; c < out.components(); ++c) {
    for (std::size_t k = first; k < last; ++k) out(c, k) = ScalarTraits<T>::from_int(0);
  }

  PartitionSum<T> sum{outer, inner, out};
  sum.intermediates = d;
  std::vector<int> digits;
  std::vector<int> values;
  for (int p = p_lo; p <= p_hi; ++p) {
    const auto partitions = set_partitions(s, p);

    // rank in `outer` of the sorted tuple j_1..j_p, tuples encoded base d
    std::size_t tuples = 1;
    for (int b = 0; b < p; ++b) tuples *= static_cast<std::size_t>(d);
    std::vector<std::size_t> tuple_rank(tuples);
    digits.assign(static_cast<std::size_t>(p), 0);
    for (std::size_t t = 0; t < tuples; ++t) {
      std::size_t code = t;
      for (int b = p - 1; b >= 0; --b) {
        digits[static_cast<std::size_t>(b)] = static_cast<int>(code % static_cast<std::size_t>(d));
        code /= static_cast<std::size_t>(d);
      }
      values = digits;
      std::sort(values.begin(), values.end());
      tuple_rank[t] = outer.space().rank(values);
    }
    sum.tuple_rank = &tuple_rank;
    sum.block_rank.assign(static_cast<std::size_t>(p), 0);
    sum.partial.assign(static_cast<std::size_t>(p) + 1, ScalarTraits<T>::from_int(0));
    sum.partial[0] = ScalarTraits<T>::from_int(1);

    for (std::size_t k = first; k < last; ++k) {
      const MultiIndex& index = out_space.at(k);
      sum.out_rank = k;
      for (const SetPartition& partition : partitions) {
        for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
          values.clear();
          for (int pos : partition.blocks[b]) values.push_back(index[static_cast<std::size_t>(pos)]);
          sum.block_rank[b] = inner.space().rank(values);
        }
        sum.run(0, 0);
      }
    }
  }
}

template <class T>
JetTable<T> faa_di_bruno_contract(const JetTable<T>& outer, const JetTable<T>& inner, int s) {
  JetTable<T> out(outer.components(), IndexSpace(inner.dim(), s));
  faa_di_bruno_order(outer, inner, s, out);
  return out;
}

template <class T>
JetTable<T> compose_jets(const JetTable<T>& outer, const JetTable<T>& inner, int r) {
  JetTable<T> out(outer.components(), IndexSpace(inner.dim(), r));
  for (int c = 0; c < outer.components(); ++c) out(c, 0) = outer(c, 0);
  for (int s = 1; s <= r; ++s) faa_di_bruno_order(outer, inner, s, out);
  return out;
}

#define JETINV_INSTANTIATE(T)                                                                            \
  template void faa_di_bruno_order(const JetTable<T>&, const JetTable<T>&, int, JetTable<T>&, BlockRange); \
  template JetTable<T> faa_di_bruno_contract(const JetTable<T>&, const JetTable<T>&, int);              \
  template JetTable<T> compose_jets(const JetTable<T>&, const JetTable<T>&, int);

JETINV_INSTANTIATE(Rational)
JETINV_INSTANTIATE(double)

#undef JETINV_INSTANTIATE

}  // namespace jetinv

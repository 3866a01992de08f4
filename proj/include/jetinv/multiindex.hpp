#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace jetinv {

/// Symmetric derivative index (i_1 <= ... <= i_k). Entries are 0-based
/// variable numbers; the 1-based convention only appears on the wire.
class MultiIndex {
 public:
  MultiIndex() = default;

  /// Sorts `raw`; throws DomainError when an entry is outside [0, dim).
  static MultiIndex canonical(std::vector<int> raw, int dim);
  /// Same, for 1-based entries in [1, dim].
  static MultiIndex from_one_based(std::span<const int> raw, int dim);

  std::size_t order() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const int> entries() const { return entries_; }
  int operator[](std::size_t k) const { return entries_[k]; }
  std::vector<int> to_one_based() const;

  /// Index with `var` inserted at its sorted position.
  MultiIndex with(int var) const;

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

 private:
  explicit MultiIndex(std::vector<int> sorted) : entries_(std::move(sorted)) {}
  std::vector<int> entries_;
};

/// Sorted copy of 1-based `raw`; entries must lie in [1, n].
MultiIndex canonicalize(std::span<const int> raw, int n);

/// All nondecreasing length-k indices over n variables in lexicographic order.
std::vector<MultiIndex> enumerate_multiindices(int n, int k);

std::uint64_t binomial(int n, int k);

/// Dense numbering of every canonical index of length 0..order over `dim`
/// variables: grouped by length, lexicographic within a length.
class IndexSpace {
 public:
  IndexSpace() : IndexSpace(0, 0) {}
  IndexSpace(int dim, int order);

  int dim() const;
  int order() const;
  std::size_t size() const;

  std::size_t rank(const MultiIndex& index) const { return rank(index.entries()); }
  /// `sorted` must be nondecreasing with entries in [0, dim) and length <= order.
  std::size_t rank(std::span<const int> sorted) const;
  const MultiIndex& at(std::size_t rank) const;

  std::size_t begin_of_order(int k) const;
  std::size_t end_of_order(int k) const;

  bool operator==(const IndexSpace& other) const { return dim() == other.dim() && order() == other.order(); }

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

}  // namespace jetinv

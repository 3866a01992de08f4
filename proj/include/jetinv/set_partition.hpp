#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace jetinv {

/// Unordered partition of the positions {0, ..., s-1} into nonempty blocks.
/// Blocks are stored by increasing smallest element, each block ascending.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  std::size_t size() const { return blocks.size(); }
  bool operator==(const SetPartition&) const = default;
};

/// Every partition of {0, ..., s-1} into exactly p blocks, in lexicographic
/// order of restricted growth strings. Throws DomainError unless 1 <= p <= s.
std::vector<SetPartition> set_partitions(int s, int p);

/// Every partition of {0, ..., s-1}, grouped by number of blocks.
std::vector<SetPartition> all_set_partitions(int s);

std::uint64_t stirling2(int s, int p);
std::uint64_t bell(int s);

/// Number of coordinates of the order-r Grassmann bundle of n-dimensional
/// submanifolds of an (n+m)-manifold: m * C(n+r, n) + n.
std::uint64_t grassmann_dim(int n, int m, int r);

}  // namespace jetinv

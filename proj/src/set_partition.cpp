#include "jetinv/set_partition.hpp"

#include <algorithm>
#include <string>

#include "jetinv/errors.hpp"
#include "jetinv/multiindex.hpp"

namespace jetinv {

namespace {

SetPartition from_growth_string(const std::vector<int>& growth, int blocks) {
  SetPartition out;
  out.blocks.resize(static_cast<std::size_t>(blocks));
  for (std::size_t pos = 0; pos < growth.size(); ++pos) {
    out.blocks[static_cast<std::size_t>(growth[pos])].push_back(static_cast<int>(pos));
  }
  return out;
}

// Restricted growth strings a_0 = 0, a_k <= 1 + max(a_0..a_{k-1}), visited in lex order.
template <class Visit>
void for_each_growth_string(int s, Visit&& visit) {
  std::vector<int> growth(static_cast<std::size_t>(s), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(s), 0);
  while (true) {
    visit(growth, prefix_max.back() + 1);
    int k = s - 1;
    while (k > 0 && growth[static_cast<std::size_t>(k)] > prefix_max[static_cast<std::size_t>(k) - 1]) --k;
    if (k == 0) return;
    ++growth[static_cast<std::size_t>(k)];
    prefix_max[static_cast<std::size_t>(k)] =
        std::max(prefix_max[static_cast<std::size_t>(k) - 1], growth[static_cast<std::size_t>(k)]);
    for (int q = k + 1; q < s; ++q) {
      growth[static_cast<std::size_t>(q)] = 0;
      prefix_max[static_cast<std::size_t>(q)] = prefix_max[static_cast<std::size_t>(k)];
    }
  }
}

}  // namespace

std::vector<SetPartition> set_partitions(int s, int p) {
  if (s < 1 || p < 1 || p > s) {
    throw_domain(ErrorCode::out_of_range,
                 "set_partitions requires 1 <= p <= s, got s=" + std::to_string(s) + " p=" + std::to_string(p));
  }
  std::vector<SetPartition> out;
  out.reserve(static_cast<std::size_t>(stirling2(s, p)));
  for_each_growth_string(s, [&](const std::vector<int>& growth, int blocks) {
    if (blocks == p) out.push_back(from_growth_string(growth, blocks));
  });
  return out;
}

std::vector<SetPartition> all_set_partitions(int s) {
  std::vector<SetPartition> out;
  for (int p = 1; p <= s; ++p) {
    auto level = set_partitions(s, p);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::uint64_t stirling2(int s, int p) {
  if (s == 0 && p == 0) return 1;
  if (s <= 0 || p <= 0 || p > s) return 0;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(p) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= s; ++i) {
    for (int k = std::min(i, p); k >= 1; --k) {
      row[static_cast<std::size_t>(k)] =
          static_cast<std::uint64_t>(k) * row[static_cast<std::size_t>(k)] + row[static_cast<std::size_t>(k) - 1];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(p)];
}

std::uint64_t bell(int s) {
  std::uint64_t total = s == 0 ? 1 : 0;
  for (int p = 1; p <= s; ++p) total += stirling2(s, p);
  return total;
}

std::uint64_t grassmann_dim(int n, int m, int r) {
  if (n < 1 || m < 1 || r < 0) {
    throw_domain(ErrorCode::out_of_range, "grassmann_dim requires n >= 1, m >= 1, r >= 0");
  }
  return static_cast<std::uint64_t>(m) * binomial(n + r, n) + static_cast<std::uint64_t>(n);
}

}  // namespace jetinv

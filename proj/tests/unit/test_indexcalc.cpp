#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "jetinv/errors.hpp"
#include "jetinv/multiindex.hpp"
#include "jetinv/set_partition.hpp"

using namespace jetinv;
using jetinv::test::ix;

namespace {

std::vector<int> one_based(const MultiIndex& index) { return index.to_one_based(); }

std::vector<std::vector<int>> blocks_one_based(const SetPartition& p) {
  std::vector<std::vector<int>> out;
  for (const auto& block : p.blocks) {
    std::vector<int> b;
    for (int x : block) b.push_back(x + 1);
    out.push_back(b);
  }
  return out;
}

}  // namespace

TEST_CASE("canonicalize sorts 1-based indices") {
  const std::vector<int> a{3, 1, 2};
  CHECK(one_based(canonicalize(a, 3)) == std::vector<int>{1, 2, 3});
  CHECK(canonicalize(std::vector<int>{}, 3).empty());
  const std::vector<int> b{2, 2, 1};
  CHECK(one_based(canonicalize(b, 2)) == std::vector<int>{1, 2, 2});
  const auto once = canonicalize(a, 3);
  CHECK(canonicalize(once.to_one_based(), 3) == once);
}

TEST_CASE("canonicalize rejects entries outside 1..n") {
  const std::vector<int> zero{0, 1};
  const std::vector<int> big{1, 4};
  CHECK_THROWS_AS(canonicalize(zero, 3), DomainError);
  CHECK_THROWS_AS(canonicalize(big, 3), DomainError);
  try {
    canonicalize(big, 3);
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::out_of_range);
  }
}

TEST_CASE("enumerate_multiindices") {
  const auto two = enumerate_multiindices(2, 2);
  REQUIRE(two.size() == 3);
  CHECK(one_based(two[0]) == std::vector<int>{1, 1});
  CHECK(one_based(two[1]) == std::vector<int>{1, 2});
  CHECK(one_based(two[2]) == std::vector<int>{2, 2});

  const auto single = enumerate_multiindices(1, 3);
  REQUIRE(single.size() == 1);
  CHECK(one_based(single[0]) == std::vector<int>{1, 1, 1});

  const auto empty = enumerate_multiindices(3, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());

  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= 5; ++k) {
      const auto all = enumerate_multiindices(n, k);
      CHECK(all.size() == binomial(n + k - 1, k));
      CHECK(std::is_sorted(all.begin(), all.end()));
    }
  }
}

TEST_CASE("index space ranks every canonical index once") {
  for (int dim = 1; dim <= 4; ++dim) {
    for (int order = 0; order <= 4; ++order) {
      const IndexSpace space(dim, order);
      CHECK(space.size() == binomial(dim + order, order));
      for (std::size_t k = 0; k < space.size(); ++k) CHECK(space.rank(space.at(k)) == k);
      for (int s = 0; s <= order; ++s) {
        CHECK(space.end_of_order(s) - space.begin_of_order(s) == binomial(dim + s - 1, s));
      }
    }
  }
  const IndexSpace space(2, 2);
  CHECK(space.rank(ix(2, {1})) == 2);
  CHECK_THROWS_AS(space.rank(ix(2, {0, 0, 1})), DomainError);
}

TEST_CASE("set_partitions examples") {
  const auto two = set_partitions(2, 2);
  REQUIRE(two.size() == 1);
  CHECK(blocks_one_based(two[0]) == std::vector<std::vector<int>>{{1}, {2}});

  const auto three = set_partitions(3, 2);
  REQUIRE(three.size() == 3);
  CHECK(blocks_one_based(three[0]) == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(blocks_one_based(three[1]) == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(blocks_one_based(three[2]) == std::vector<std::vector<int>>{{1}, {2, 3}});

  CHECK(set_partitions(4, 2).size() == 7);
  CHECK_THROWS_AS(set_partitions(3, 0), DomainError);
  CHECK_THROWS_AS(set_partitions(3, 4), DomainError);
}

TEST_CASE("partitions cover positions and sum to Bell numbers") {
  const std::uint64_t bell_numbers[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int s = 1; s <= 7; ++s) {
    std::uint64_t total = 0;
    std::set<std::vector<std::vector<int>>> distinct;
    for (int p = 1; p <= s; ++p) {
      const auto parts = set_partitions(s, p);
      CHECK(parts.size() == stirling2(s, p));
      total += parts.size();
      for (const auto& part : parts) {
        CHECK(part.size() == static_cast<std::size_t>(p));
        std::vector<int> seen(static_cast<std::size_t>(s), 0);
        int previous_head = -1;
        for (const auto& block : part.blocks) {
          REQUIRE_FALSE(block.empty());
          CHECK(std::is_sorted(block.begin(), block.end()));
          CHECK(block.front() > previous_head);
          previous_head = block.front();
          for (int x : block) ++seen[static_cast<std::size_t>(x)];
        }
        for (int c : seen) CHECK(c == 1);
        distinct.insert(part.blocks);
      }
    }
    CHECK(total == bell_numbers[s]);
    CHECK(bell(s) == bell_numbers[s]);
    CHECK(distinct.size() == total);
    CHECK(all_set_partitions(s).size() == total);
  }
}

TEST_CASE("grassmann_dim") {
  CHECK(grassmann_dim(2, 1, 2) == 8);
  CHECK(grassmann_dim(1, 1, 1) == 3);
  CHECK(grassmann_dim(3, 2, 0) == 5);
  CHECK_THROWS_AS(grassmann_dim(0, 1, 1), DomainError);
  CHECK_THROWS_AS(grassmann_dim(1, 0, 1), DomainError);
}

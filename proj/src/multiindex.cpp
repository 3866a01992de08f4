#include "jetinv/multiindex.hpp"

#include <algorithm>
#include <string>

#include "jetinv/errors.hpp"

namespace jetinv {

MultiIndex MultiIndex::canonical(std::vector<int> raw, int dim) {
  for (int v : raw) {
    if (v < 0 || v >= dim) {
      throw_domain(ErrorCode::out_of_range,
                   "index entry " + std::to_string(v) + " outside [0, " + std::to_string(dim) + ")");
    }
  }
  std::sort(raw.begin(), raw.end());
  return MultiIndex(std::move(raw));
}

MultiIndex MultiIndex::from_one_based(std::span<const int> raw, int dim) {
  std::vector<int> shifted;
  shifted.reserve(raw.size());
  for (int v : raw) {
    if (v < 1 || v > dim) {
      throw_domain(ErrorCode::out_of_range,
                   "index entry " + std::to_string(v) + " outside [1, " + std::to_string(dim) + "]");
    }
    shifted.push_back(v - 1);
  }
  std::sort(shifted.begin(), shifted.end());
  return MultiIndex(std::move(shifted));
}

std::vector<int> MultiIndex::to_one_based() const {
  std::vector<int> out(entries_);
  for (int& v : out) ++v;
  return out;
}

MultiIndex MultiIndex::with(int var) const {
  std::vector<int> out(entries_);
  out.insert(std::upper_bound(out.begin(), out.end(), var), var);
  return MultiIndex(std::move(out));
}

MultiIndex canonicalize(std::span<const int> raw, int n) { return MultiIndex::from_one_based(raw, n); }

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::vector<MultiIndex> enumerate_multiindices(int n, int k) {
  std::vector<MultiIndex> out;
  if (n < 1 || k < 0) return out;
  std::vector<int> current(static_cast<std::size_t>(k), 0);
  while (true) {
    out.push_back(MultiIndex::canonical(current, n));
    // odometer over nondecreasing sequences
    int pos = k - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - 1) --pos;
    if (pos < 0) break;
    const int next = current[static_cast<std::size_t>(pos)] + 1;
    for (int q = pos; q < k; ++q) current[static_cast<std::size_t>(q)] = next;
  }
  return out;
}

struct IndexSpace::Data {
  int dim = 0;
  int order = 0;
  std::vector<MultiIndex> indices;
  std::vector<std::size_t> offsets;  // offsets[k] = first rank of length k, size order + 2
  // count[v][l]: nondecreasing length-l sequences with entries in [v, dim)
  std::vector<std::vector<std::size_t>> count;
};

IndexSpace::IndexSpace(int dim, int order) {
  if (dim < 0 || order < 0) throw_domain(ErrorCode::out_of_range, "negative index space shape");
  auto data = std::make_shared<Data>();
  data->dim = dim;
  data->order = order;
  data->offsets.push_back(0);
  for (int k = 0; k <= order; ++k) {
    if (dim == 0 && k > 0) {
      data->offsets.push_back(data->indices.size());
      continue;
    }
    auto level = enumerate_multiindices(std::max(dim, 1), k);
    if (dim == 0) level.resize(1);
    data->indices.insert(data->indices.end(), level.begin(), level.end());
    data->offsets.push_back(data->indices.size());
  }
  data->count.assign(static_cast<std::size_t>(dim) + 1, std::vector<std::size_t>(static_cast<std::size_t>(order) + 1, 0));
  for (int v = 0; v <= dim; ++v) {
    for (int l = 0; l <= order; ++l) {
      data->count[static_cast<std::size_t>(v)][static_cast<std::size_t>(l)] =
          l == 0 ? 1 : static_cast<std::size_t>(binomial(dim - v + l - 1, l));
    }
  }
  data_ = std::move(data);
}

int IndexSpace::dim() const { return data_->dim; }
int IndexSpace::order() const { return data_->order; }
std::size_t IndexSpace::size() const { return data_->indices.size(); }
const MultiIndex& IndexSpace::at(std::size_t rank) const { return data_->indices.at(rank); }

std::size_t IndexSpace::begin_of_order(int k) const { return data_->offsets.at(static_cast<std::size_t>(k)); }
std::size_t IndexSpace::end_of_order(int k) const { return data_->offsets.at(static_cast<std::size_t>(k) + 1); }

std::size_t IndexSpace::rank(std::span<const int> sorted) const {
  const auto length = static_cast<int>(sorted.size());
  if (length > data_->order) {
    throw_domain(ErrorCode::order_overflow, "index of order " + std::to_string(length) +
                                                " exceeds space order " + std::to_string(data_->order));
  }
  std::size_t r = data_->offsets[static_cast<std::size_t>(length)];
  int floor = 0;
  for (int t = 0; t < length; ++t) {
    const int value = sorted[static_cast<std::size_t>(t)];
    const auto remaining = static_cast<std::size_t>(length - t - 1);
    for (int v = floor; v < value; ++v) r += data_->count[static_cast<std::size_t>(v)][remaining];
    floor = value;
  }
  return r;
}

}  // namespace jetinv

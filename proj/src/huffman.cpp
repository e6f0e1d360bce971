#include "fwcodec/huffman.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "fwcodec/codec.hpp"

namespace fwc {

HuffmanResult huffman(const ElementDistribution& dist) {
  const std::size_t n = dist.size();
  HuffmanResult result;
  if (n == 1) {
    result.lengths = {0};
    result.code = canonical_prefix_from_lengths(result.lengths);
    return result;
  }

  // (weight, creation id); ids 0..n-1 are the leaves.
  using Node = std::tuple<double, std::size_t>;
  std::priority_queue<Node, std::vector<Node>, std::greater<>> heap;
  std::vector<std::size_t> parent(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) heap.emplace(dist.prob(i), i);
  std::size_t next_id = n;
  while (heap.size() > 1) {
    auto [wa, a] = heap.top();
    heap.pop();
    auto [wb, b] = heap.top();
    heap.pop();
    parent[a] = next_id;
    parent[b] = next_id;
    heap.emplace(wa + wb, next_id++);
  }

  const std::size_t root = next_id - 1;
  std::vector<int> depth(2 * n - 1, 0);
  for (std::size_t id = root; id-- > 0;) depth[id] = depth[parent[id]] + 1;

  std::vector<int> leaf_depths(depth.begin(), depth.begin() + static_cast<std::ptrdiff_t>(n));
  std::sort(leaf_depths.begin(), leaf_depths.end());
  result.lengths.assign(leaf_depths.begin(), leaf_depths.end());
  for (std::size_t i = 0; i < n; ++i) result.expected_length += dist.prob(i) * leaf_depths[i];
  result.code = canonical_prefix_from_lengths(result.lengths);
  return result;
}

double huffman_pair_success(const EntryDistribution& dist, int width) {
  return success_probability(huffman(dist.first).lengths, huffman(dist.second).lengths, dist, width);
}

}  // namespace fwc

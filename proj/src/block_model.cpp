#include "bfly/block_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfly {

std::int64_t g_select(std::int64_t x, std::int64_t y, std::int64_t u, std::int64_t v) {
  if (x == y) throw std::invalid_argument("g_select: undefined for x == y");
  return x > y ? u : v;
}

BlockDecomposition::BlockDecomposition(Permutation rho, std::vector<BstSummary> internal)
    : rho_(std::move(rho)), internal_(std::move(internal)), external_(rho_) {
  if (static_cast<int>(internal_.size()) != rho_.size())
    throw std::invalid_argument("BlockDecomposition: need one internal summary per external key");
  for (const auto& s : internal_)
    if (s.size != internal_.front().size)
      throw std::invalid_argument("BlockDecomposition: internal summaries differ in size");
}

BlockDecomposition BlockDecomposition::from_blocks(const Permutation& rho,
                                                   std::span<const Permutation> blocks) {
  if (static_cast<int>(blocks.size()) != rho.size())
    throw std::invalid_argument("from_blocks: need one block per external key");
  std::vector<BstSummary> internal;
  internal.reserve(blocks.size());
  for (const auto& b : blocks) internal.push_back(summary(b));
  return {rho, std::move(internal)};
}

std::int64_t block_node_depth(const BlockDecomposition& d, int external_key,
                              std::int64_t internal_depth) {
  const auto& tree = d.external_tree();
  if (external_key < 1 || external_key > tree.size())
    throw std::out_of_range("block_node_depth: invalid external key");
  const auto& internal = d.internal();
  if (internal_depth < 0 || internal_depth > internal[static_cast<std::size_t>(external_key - 1)].height)
    throw std::out_of_range("block_node_depth: internal depth exceeds the block height");

  std::int64_t depth = internal_depth;
  // Walk up from j; each edge parent -> child contributes through the parent's top edge.
  int child = external_key;
  for (auto parent = tree.parent(child); parent; child = *parent, parent = tree.parent(child)) {
    const auto& ps = internal[static_cast<std::size_t>(*parent - 1)];
    depth += g_select(*parent, child, ps.left_edge + 1, ps.right_edge + 1);
  }
  return depth;
}

std::int64_t block_height(const BlockDecomposition& d) {
  std::int64_t best = 0;
  for (int j = 1; j <= d.rho().size(); ++j)
    best = std::max(best, block_node_depth(d, j, d.internal()[static_cast<std::size_t>(j - 1)].height));
  return best;
}

}  // namespace bfly

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bfly/bst.hpp"
#include "bfly/perm.hpp"

namespace bfly {

/// `u` if x > y, `v` if x < y. Throws std::invalid_argument when x == y.
std::int64_t g_select(std::int64_t x, std::int64_t y, std::int64_t u, std::int64_t v);

/// A block BST seen as an external tree T(rho) whose node j carries an
/// internal tree described only by its summary. `internal[j-1]` belongs to
/// external key j, i.e. to the block holding values (j-1)n+1..jn.
class BlockDecomposition {
 public:
  BlockDecomposition(Permutation rho, std::vector<BstSummary> internal);

  /// Decomposition of assemble_wreath(rho, blocks).
  static BlockDecomposition from_blocks(const Permutation& rho, std::span<const Permutation> blocks);

  const Permutation& rho() const { return rho_; }
  const Bst& external_tree() const { return external_; }
  const std::vector<BstSummary>& internal() const { return internal_; }
  int block_size() const { return static_cast<int>(internal_.front().size); }

 private:
  Permutation rho_;
  std::vector<BstSummary> internal_;
  Bst external_;
};

/// Depth in the assembled tree of a node at `internal_depth` inside block j:
/// the internal depth plus, for each external edge y -> y' on the root-to-j
/// path, l(y)+1 when y' < y and r(y)+1 when y' > y.
std::int64_t block_node_depth(const BlockDecomposition& d, int external_key,
                              std::int64_t internal_depth);

/// Max over external keys j of block_node_depth(d, j, h(j)).
std::int64_t block_height(const BlockDecomposition& d);

}  // namespace bfly

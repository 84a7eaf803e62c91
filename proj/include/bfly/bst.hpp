#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfly/perm.hpp"

namespace bfly {

/// Height and top-edge lengths of a tree built from a permutation.
/// `left_edge` is the depth of key 1, `right_edge` the depth of key n.
struct BstSummary {
  std::int64_t height = 0;
  std::int64_t left_edge = 0;
  std::int64_t right_edge = 0;
  std::int64_t size = 0;

  friend bool operator==(const BstSummary&, const BstSummary&) = default;
};

/// Binary search tree obtained by inserting the word of a permutation left to
/// right. Nodes are addressed by key 1..n; no balancing, no deletion.
class Bst {
 public:
  explicit Bst(const Permutation& p);

  int size() const { return static_cast<int>(depth_.size()) - 1; }
  int root() const { return root_; }

  std::optional<int> left(int key) const;
  std::optional<int> right(int key) const;
  std::optional<int> parent(int key) const;

  /// Edge count from the root. Throws std::out_of_range for keys outside 1..n.
  int depth(int key) const;
  int height() const { return height_; }

  BstSummary summary() const;

  /// One "key,parent,side" line per key in ascending key order, side in {L,R,root};
  /// the root's parent field is 0.
  std::string dump() const;

 private:
  void check_key(int key) const;

  int root_ = 0;
  int height_ = 0;
  // Indexed by key; slot 0 unused, 0 also means "no node".
  std::vector<int> left_;
  std::vector<int> right_;
  std::vector<int> parent_;
  std::vector<int> depth_;
};

BstSummary summary(const Permutation& p);

}  // namespace bfly

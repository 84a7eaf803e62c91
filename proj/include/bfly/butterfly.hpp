#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "bfly/bst.hpp"
#include "bfly/perm.hpp"

namespace bfly {

enum class ShapeKind { Simple, Nonsimple };

/// Recursion choices behind a butterfly permutation. A set bit means the
/// swap 21 at that factor/node, a clear bit the identity 12.
///
/// Simple shapes hold n bits, `bits[0]` the innermost Kronecker factor and
/// `bits[n-1]` the outermost. Nonsimple shapes hold 2^n - 1 bits of a full
/// binary tree in level order (node i has children 2i+1 and 2i+2, root 0);
/// the last 2^(n-1) nodes are the S_2 leaves.
class ButterflyShape {
 public:
  static ButterflyShape simple(std::vector<std::uint8_t> bits);
  static ButterflyShape nonsimple(int depth, std::vector<std::uint8_t> bits);

  /// Decodes bit `i` of `mask` into bit i of a shape with the required length.
  static ButterflyShape from_mask(ShapeKind kind, int depth, std::uint64_t mask);

  /// Bit strings list the root (outermost factor) first: "101" is a depth-2
  /// nonsimple shape with root 21 and children (12, 21); the simple "100"
  /// reads as 21 (x) 12 (x) 12.
  static ButterflyShape parse(ShapeKind kind, std::string_view bits);
  std::string to_string() const;

  ShapeKind kind() const { return kind_; }
  int depth() const { return depth_; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const ButterflyShape&, const ButterflyShape&) = default;

 private:
  ButterflyShape(ShapeKind kind, int depth, std::vector<std::uint8_t> bits)
      : kind_(kind), depth_(depth), bits_(std::move(bits)) {}

  ShapeKind kind_;
  int depth_;
  std::vector<std::uint8_t> bits_;
};

/// Left fold of Kronecker products; the outermost factor is the last bit.
Permutation build_simple(const ButterflyShape& shape);

/// Root bit 12 gives (w1 | w2 + M), root bit 21 gives (w1 + M | w2), where
/// w1, w2 are the recursively built children of size M.
Permutation build_nonsimple(const ButterflyShape& shape);

Permutation build(const ButterflyShape& shape);

/// Non-power-of-two lengths are not members and return false.
bool is_simple_butterfly(const Permutation& p);
bool is_nonsimple_butterfly(const Permutation& p);

/// All 2^n simple (or 2^(2^n - 1) nonsimple) butterfly permutations, one per
/// shape, generated lazily in mask order.
class ButterflyRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const ButterflyRange* range, std::uint64_t index) : range_(range), index_(index) {}

    Permutation operator*() const { return build(range_->shape_at(index_)); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++index_;
      return copy;
    }
    std::uint64_t index() const { return index_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const ButterflyRange* range_ = nullptr;
    std::uint64_t index_ = 0;
  };

  ButterflyRange(ShapeKind kind, int depth);

  ShapeKind kind() const { return kind_; }
  int depth() const { return depth_; }
  std::uint64_t size() const { return count_; }
  ButterflyShape shape_at(std::uint64_t index) const {
    return ButterflyShape::from_mask(kind_, depth_, index);
  }

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }

 private:
  ShapeKind kind_;
  int depth_;
  std::uint64_t count_;
};

ButterflyRange enumerate_simple(int n);

/// Throws std::invalid_argument when n exceeds `cap` (2^31 shapes at n = 5).
ButterflyRange enumerate_nonsimple(int n, int cap = 4);

/// Folds (h, l, r) += (r+1)(1,0,1) for a 12 factor and (l+1)(1,1,0) for 21.
BstSummary stats_recursion_simple(const ButterflyShape& shape);

/// Evaluates the nonsimple (H, L, R) recursion from the leaves, matching the
/// word convention of build_nonsimple.
BstSummary stats_recursion_nonsimple(const ButterflyShape& shape);

}  // namespace bfly

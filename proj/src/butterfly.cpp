#include "bfly/butterfly.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfly {

namespace {

std::size_t nonsimple_bit_count(int depth) { return (std::size_t{1} << depth) - 1; }

void check_depth(int depth) {
  if (depth < 1) throw std::invalid_argument("butterfly depth must be >= 1");
  if (depth > 30) throw std::invalid_argument("butterfly depth must be <= 30");
}

void check_bits(const std::vector<std::uint8_t>& bits) {
  for (auto b : bits)
    if (b > 1) throw std::invalid_argument("shape bits must be 0 or 1");
}

}  // namespace

ButterflyShape ButterflyShape::simple(std::vector<std::uint8_t> bits) {
  if (bits.empty()) throw std::invalid_argument("simple shape needs at least one bit");
  check_depth(static_cast<int>(bits.size()));
  check_bits(bits);
  const int n = static_cast<int>(bits.size());
  return {ShapeKind::Simple, n, std::move(bits)};
}

ButterflyShape ButterflyShape::nonsimple(int depth, std::vector<std::uint8_t> bits) {
  check_depth(depth);
  if (depth > 24) throw std::invalid_argument("nonsimple shape depth must be <= 24");
  if (bits.size() != nonsimple_bit_count(depth))
    throw std::invalid_argument("nonsimple shape of depth n needs 2^n - 1 bits");
  check_bits(bits);
  return {ShapeKind::Nonsimple, depth, std::move(bits)};
}

ButterflyShape ButterflyShape::from_mask(ShapeKind kind, int depth, std::uint64_t mask) {
  check_depth(depth);
  const std::size_t len =
      kind == ShapeKind::Simple ? static_cast<std::size_t>(depth) : nonsimple_bit_count(depth);
  if (len > 64) throw std::invalid_argument("from_mask: shape has more than 64 bits");
  std::vector<std::uint8_t> bits(len);
  for (std::size_t i = 0; i < len; ++i) bits[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
  return kind == ShapeKind::Simple ? simple(std::move(bits)) : nonsimple(depth, std::move(bits));
}

ButterflyShape ButterflyShape::parse(ShapeKind kind, std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("shape string must contain only 0/1");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (kind == ShapeKind::Simple) {
    std::reverse(bits.begin(), bits.end());
    return simple(std::move(bits));
  }
  int depth = 0;
  while (nonsimple_bit_count(depth) < bits.size() && depth < 25) ++depth;
  if (nonsimple_bit_count(depth) != bits.size())
    throw std::invalid_argument("nonsimple shape string length must be 2^n - 1");
  return nonsimple(depth, std::move(bits));
}

std::string ButterflyShape::to_string() const {
  std::string s;
  for (auto b : bits_) s += static_cast<char>('0' + b);
  if (kind_ == ShapeKind::Simple) std::reverse(s.begin(), s.end());
  return s;
}

Permutation build_simple(const ButterflyShape& shape) {
  if (shape.kind() != ShapeKind::Simple) throw std::invalid_argument("build_simple: nonsimple shape");
  const Permutation id2 = Permutation::identity(2);
  const Permutation swap2({2, 1});
  Permutation acc = Permutation::identity(1);
  for (auto b : shape.bits()) acc = kron(b ? swap2 : id2, acc);
  return acc;
}

namespace {

std::vector<int> build_nonsimple_word(const std::vector<std::uint8_t>& bits, std::size_t node,
                                      int level, int depth) {
  const bool swap = bits[node] != 0;
  if (level == depth - 1) return swap ? std::vector<int>{2, 1} : std::vector<int>{1, 2};
  auto first = build_nonsimple_word(bits, 2 * node + 1, level + 1, depth);
  auto second = build_nonsimple_word(bits, 2 * node + 2, level + 1, depth);
  const int half = static_cast<int>(first.size());
  std::vector<int> w;
  w.reserve(2 * first.size());
  for (int v : first) w.push_back(swap ? v + half : v);
  for (int v : second) w.push_back(swap ? v : v + half);
  return w;
}

BstSummary nonsimple_stats(const std::vector<std::uint8_t>& bits, std::size_t node, int level,
                           int depth) {
  const bool swap = bits[node] != 0;
  if (level == depth - 1) return swap ? BstSummary{1, 1, 0, 2} : BstSummary{1, 0, 1, 2};
  const auto a = nonsimple_stats(bits, 2 * node + 1, level + 1, depth);
  const auto b = nonsimple_stats(bits, 2 * node + 2, level + 1, depth);
  BstSummary out;
  out.size = a.size + b.size;
  if (!swap) {
    // Second child hangs off the bottom of the first child's right edge.
    out.left_edge = a.left_edge;
    out.right_edge = a.right_edge + 1 + b.right_edge;
    out.height = std::max(a.height, a.right_edge + 1 + b.height);
  } else {
    out.left_edge = a.left_edge + 1 + b.left_edge;
    out.right_edge = a.right_edge;
    out.height = std::max(a.height, a.left_edge + 1 + b.height);
  }
  return out;
}

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Checks w[0..len) is a butterfly word over values {1..len}; `simple`
// additionally requires equal halves at every level.
bool butterfly_member(std::span<const int> w, bool simple) {
  const auto len = w.size();
  if (len == 1) return w[0] == 1;
  const auto half = len / 2;
  const int h = static_cast<int>(half);
  auto lo = w.subspan(0, half);
  auto hi = w.subspan(half);
  const bool first_low = lo[0] <= h;
  std::vector<int> a(half), b(half);
  for (std::size_t i = 0; i < half; ++i) {
    const bool in_low = lo[i] <= h;
    if (in_low != first_low) return false;
    a[i] = first_low ? lo[i] : lo[i] - h;
  }
  for (std::size_t i = 0; i < half; ++i) {
    const bool in_low = hi[i] <= h;
    if (in_low == first_low) return false;
    b[i] = first_low ? hi[i] - h : hi[i];
  }
  if (simple && a != b) return false;
  return butterfly_member(a, simple) && (simple || butterfly_member(b, simple));
}

}  // namespace

Permutation build_nonsimple(const ButterflyShape& shape) {
  if (shape.kind() != ShapeKind::Nonsimple) throw std::invalid_argument("build_nonsimple: simple shape");
  return Permutation(build_nonsimple_word(shape.bits(), 0, 0, shape.depth()));
}

Permutation build(const ButterflyShape& shape) {
  return shape.kind() == ShapeKind::Simple ? build_simple(shape) : build_nonsimple(shape);
}

bool is_simple_butterfly(const Permutation& p) {
  return is_pow2(p.size()) && butterfly_member(p.word(), true);
}

bool is_nonsimple_butterfly(const Permutation& p) {
  return is_pow2(p.size()) && butterfly_member(p.word(), false);
}

ButterflyRange::ButterflyRange(ShapeKind kind, int depth) : kind_(kind), depth_(depth) {
  check_depth(depth);
  const std::size_t bits =
      kind == ShapeKind::Simple ? static_cast<std::size_t>(depth) : nonsimple_bit_count(depth);
  if (bits > 63) throw std::invalid_argument("enumeration would exceed 2^63 elements");
  count_ = std::uint64_t{1} << bits;
}

ButterflyRange enumerate_simple(int n) { return {ShapeKind::Simple, n}; }

ButterflyRange enumerate_nonsimple(int n, int cap) {
  if (n > cap)
    throw std::invalid_argument("enumerate_nonsimple: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  return {ShapeKind::Nonsimple, n};
}

BstSummary stats_recursion_simple(const ButterflyShape& shape) {
  if (shape.kind() != ShapeKind::Simple) throw std::invalid_argument("stats_recursion_simple: nonsimple shape");
  const auto& bits = shape.bits();
  BstSummary s = bits[0] ? BstSummary{1, 1, 0, 2} : BstSummary{1, 0, 1, 2};
  for (std::size_t i = 1; i < bits.size(); ++i) {
    if (bits[i]) {
      const auto step = s.left_edge + 1;
      s.height += step;
      s.left_edge += step;
    } else {
      const auto step = s.right_edge + 1;
      s.height += step;
      s.right_edge += step;
    }
    s.size *= 2;
  }
  return s;
}

BstSummary stats_recursion_nonsimple(const ButterflyShape& shape) {
  if (shape.kind() != ShapeKind::Nonsimple)
    throw std::invalid_argument("stats_recursion_nonsimple: simple shape");
  return nonsimple_stats(shape.bits(), 0, 0, shape.depth());
}

}  // namespace bfly

#include "bfly/bst.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfly {

// The insertion tree of a word is the Cartesian tree over keys 1..n with the
// insertion position as heap priority, so it can be built with one stack pass
// over the keys instead of n root-to-leaf descents.
Bst::Bst(const Permutation& p) {
  const int n = p.size();
  const auto slots = static_cast<std::size_t>(n) + 1;
  left_.assign(slots, 0);
  right_.assign(slots, 0);
  parent_.assign(slots, 0);
  depth_.assign(slots, 0);

  std::vector<int> pos(slots, 0);
  for (int j = 1; j <= n; ++j) pos[static_cast<std::size_t>(p(j))] = j;

  std::vector<int> stack;
  stack.reserve(64);
  for (int k = 1; k <= n; ++k) {
    int last = 0;
    while (!stack.empty() && pos[static_cast<std::size_t>(stack.back())] > pos[static_cast<std::size_t>(k)]) {
      last = stack.back();
      stack.pop_back();
    }
    left_[static_cast<std::size_t>(k)] = last;
    if (last) parent_[static_cast<std::size_t>(last)] = k;
    if (!stack.empty()) {
      right_[static_cast<std::size_t>(stack.back())] = k;
      parent_[static_cast<std::size_t>(k)] = stack.back();
    }
    stack.push_back(k);
  }
  root_ = stack.front();
  parent_[static_cast<std::size_t>(root_)] = 0;

  // Parents are inserted before their children, so one pass in word order suffices.
  for (int j = 2; j <= n; ++j) {
    const auto key = static_cast<std::size_t>(p(j));
    depth_[key] = depth_[static_cast<std::size_t>(parent_[key])] + 1;
    height_ = std::max(height_, depth_[key]);
  }
}

void Bst::check_key(int key) const {
  if (key < 1 || key > size()) throw std::out_of_range("key outside 1..n");
}

std::optional<int> Bst::left(int key) const {
  check_key(key);
  const int c = left_[static_cast<std::size_t>(key)];
  return c ? std::optional<int>(c) : std::nullopt;
}

std::optional<int> Bst::right(int key) const {
  check_key(key);
  const int c = right_[static_cast<std::size_t>(key)];
  return c ? std::optional<int>(c) : std::nullopt;
}

std::optional<int> Bst::parent(int key) const {
  check_key(key);
  const int c = parent_[static_cast<std::size_t>(key)];
  return c ? std::optional<int>(c) : std::nullopt;
}

int Bst::depth(int key) const {
  check_key(key);
  return depth_[static_cast<std::size_t>(key)];
}

BstSummary Bst::summary() const {
  return {height_, depth_[1], depth_[static_cast<std::size_t>(size())], size()};
}

std::string Bst::dump() const {
  std::string out;
  for (int k = 1; k <= size(); ++k) {
    const int par = parent_[static_cast<std::size_t>(k)];
    const char* side = par == 0 ? "root" : (k < par ? "L" : "R");
    out += std::to_string(k) + ',' + std::to_string(par) + ',' + side + '\n';
  }
  return out;
}

BstSummary summary(const Permutation& p) { return Bst(p).summary(); }

}  // namespace bfly

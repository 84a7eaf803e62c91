#include "bfly/perm.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace bfly {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const auto n = word_.size();
  if (n == 0) throw std::invalid_argument("permutation must have length >= 1");
  std::vector<char> seen(n + 1, 0);
  for (int v : word_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("word is not a bijection of {1..n}");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity: n must be >= 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  while (true) {
    auto comma = text.find(',');
    auto tok = text.substr(0, comma);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\n' ||
                            tok.back() == '\r'))
      tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("cannot parse permutation entry '" + std::string(tok) + "'");
    w.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t j = 0; j < word_.size(); ++j)
    inv[static_cast<std::size_t>(word_[j] - 1)] = static_cast<int>(j + 1);
  return Permutation(std::move(inv), Unchecked{});
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < word_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(word_[j]);
  }
  return s;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("compose: length mismatch");
  std::vector<int> w(inner.word_.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = outer(inner.word_[j]);
  return Permutation(std::move(w), Permutation::Unchecked{});
}

Permutation kron(const Permutation& pi, const Permutation& sigma) {
  const int n = pi.size();
  const int m = sigma.size();
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) w.push_back((pi(i) - 1) * m + sigma(j));
  return Permutation(std::move(w), Permutation::Unchecked{});
}

Permutation shifted_concat(std::span<const int> first, int first_shift,
                           std::span<const int> second, int second_shift) {
  std::vector<int> w;
  w.reserve(first.size() + second.size());
  for (int v : first) w.push_back(v + first_shift);
  for (int v : second) w.push_back(v + second_shift);
  return Permutation(std::move(w));
}

Permutation direct_sum(const Permutation& p1, const Permutation& p2) {
  std::vector<int> w(p1.word_);
  w.reserve(w.size() + p2.word_.size());
  for (int v : p2.word_) w.push_back(v + p1.size());
  return Permutation(std::move(w), Permutation::Unchecked{});
}

Permutation skew_sum(const Permutation& p1, const Permutation& p2) {
  std::vector<int> w;
  w.reserve(p1.word_.size() + p2.word_.size());
  for (int v : p1.word_) w.push_back(v + p2.size());
  w.insert(w.end(), p2.word_.begin(), p2.word_.end());
  return Permutation(std::move(w), Permutation::Unchecked{});
}

Permutation assemble_wreath(const Permutation& rho, std::span<const Permutation> blocks) {
  if (static_cast<int>(blocks.size()) != rho.size())
    throw std::invalid_argument("assemble_wreath: need exactly one block per external key");
  const int n = blocks.front().size();
  for (const auto& b : blocks)
    if (b.size() != n) throw std::invalid_argument("assemble_wreath: blocks differ in size");
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n) * blocks.size());
  for (int i = 1; i <= rho.size(); ++i) {
    const int k = rho(i);
    const int shift = (k - 1) * n;
    for (int v : blocks[static_cast<std::size_t>(k - 1)].word_) w.push_back(v + shift);
  }
  return Permutation(std::move(w), Permutation::Unchecked{});
}

namespace {

// Patience sorting: tails[k] is the smallest tail of an increasing run of length k+1.
int longest_increasing(std::span<const int> w, bool decreasing) {
  std::vector<int> tails;
  for (int v : w) {
    const int key = decreasing ? -v : v;
    auto it = std::lower_bound(tails.begin(), tails.end(), key);
    if (it == tails.end())
      tails.push_back(key);
    else
      *it = key;
  }
  return static_cast<int>(tails.size());
}

}  // namespace

int lis(const Permutation& p) { return longest_increasing(p.word(), false); }

int lds(const Permutation& p) { return longest_increasing(p.word(), true); }

int cycle_count(const Permutation& p) {
  const int n = p.size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int cycles = 0;
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++cycles;
    for (int j = s; !seen[static_cast<std::size_t>(j)]; j = p(j)) seen[static_cast<std::size_t>(j)] = 1;
  }
  return cycles;
}

int ltr_maxima_len(const Permutation& p) {
  int best = 0;
  int count = 0;
  for (int v : p.word())
    if (v > best) {
      best = v;
      ++count;
    }
  return count;
}

int ltr_minima_len(const Permutation& p) {
  int best = p.size() + 1;
  int count = 0;
  for (int v : p.word())
    if (v < best) {
      best = v;
      ++count;
    }
  return count;
}

}  // namespace bfly

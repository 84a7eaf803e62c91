#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bfly {

/// A bijection of {1..n} stored as its one-line word: `p(j) == word[j-1]`.
///
/// The associated 0/1 matrix has a one in row p(j) of column j, so
/// `compose(a, b)` is the matrix product P_a P_b. All indices at the
/// interface are 1-based.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `word` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  /// Parses "2,1,6,5,3,4". Whitespace around entries is ignored.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }

  /// 1-based evaluation; no range check.
  int operator()(int j) const { return word_[static_cast<std::size_t>(j - 1)]; }

  std::span<const int> word() const { return word_; }

  Permutation inverse() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> word, Unchecked) : word_(std::move(word)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation kron(const Permutation&, const Permutation&);
  friend Permutation direct_sum(const Permutation&, const Permutation&);
  friend Permutation skew_sum(const Permutation&, const Permutation&);
  friend Permutation assemble_wreath(const Permutation&, std::span<const Permutation>);

  std::vector<int> word_;
};

/// result(j) = outer(inner(j)).
Permutation compose(const Permutation& outer, const Permutation& inner);

/// Kronecker product: result((i-1)m + j) = (pi(i)-1)m + sigma(j).
Permutation kron(const Permutation& pi, const Permutation& sigma);

/// Block-diagonal sum: (p1 | p2 + n1).
Permutation direct_sum(const Permutation& p1, const Permutation& p2);

/// Anti-diagonal sum with p1 in the bottom-left block: (p1 + n2 | p2).
Permutation skew_sum(const Permutation& p1, const Permutation& p2);

/// Wreath assembly: position block i holds blocks[rho(i)] shifted by
/// (rho(i)-1)*n. All blocks must share one size n and there must be exactly
/// rho.size() of them.
Permutation assemble_wreath(const Permutation& rho, std::span<const Permutation> blocks);

/// (first + first_shift | second + second_shift), validated.
Permutation shifted_concat(std::span<const int> first, int first_shift,
                           std::span<const int> second, int second_shift);

int lis(const Permutation& p);
int lds(const Permutation& p);
int cycle_count(const Permutation& p);
int ltr_maxima_len(const Permutation& p);
int ltr_minima_len(const Permutation& p);

}  // namespace bfly

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bfly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Stirling numbers of the first kind and the cycle/record law.

/// Rows 0..n of |s(n,k)| built from |s(n+1,k)| = n|s(n,k)| + |s(n,k-1)|.
class StirlingTable {
 public:
  explicit StirlingTable(int n);

  int max_n() const { return static_cast<int>(rows_.size()) - 1; }
  /// Throws std::invalid_argument unless 0 <= k <= n <= max_n().
  const BigInt& at(int n, int k) const;
  const std::vector<BigInt>& row(int n) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

BigInt stirling1_unsigned(int n, int k);

/// P(k records) = |s(n,k)| / n! for k = 1..n; element i is k = i + 1.
std::vector<Rational> stirling1_pmf(int n);

BigInt factorial(int n);

/// Generalized harmonic number sum_{j<=n} 1/j^order.
Rational harmonic(int n, int order = 1);

// ---------------------------------------------------------------------------
// Simple butterfly height law.

/// Height law over B_{n,s}: P(h = 2^k + 2^(n-k) - 2) from k ~ Binom(n, 1/2).
std::map<std::int64_t, Rational> simple_height_pmf(int n);
std::map<std::int64_t, BigInt> simple_height_counts(int n);
/// 2 (3/2)^n - 2.
Rational simple_height_mean(int n);

// ---------------------------------------------------------------------------
// Constants.

/// Root of x log(2e/x) = 1 on [2, 10] by bisection, stopped once |g| <= tol.
double devroye_constant(double tol = 1e-12);

struct Constants {
  double cstar;   // Devroye constant
  double alpha;   // log2(3/2)
  double lambda;  // 3/2
  double Cstar;   // 1 + sqrt(8 sqrt 2 - 11)
  double xi;      // (1 + sqrt 2 + sqrt(2 sqrt 2 - 1)) / 2 = 1 + sqrt(2 Cstar) / 2
  double beta;    // log2(xi)
  double d;       // 2 / (sqrt(2 Cstar) - 1) = 1 / (xi - lambda)
};

Constants constants();

// ---------------------------------------------------------------------------
// Edge and cycle moments for nonsimple butterflies.

/// (E L_n, E L_n^2) = ((3/2)^n - 1, (4/3)(3/2)^{2n} - (7/3)(3/2)^n + 1).
std::pair<Rational, Rational> edge_moments(int n);

/// m_0 = m_1 = 1, m_k = (lambda-1)/(lambda^k-1) sum_{j=1}^{k-1} C(k,j) m_j m_{k-j}, lambda = 3/2.
Rational cycle_moment(int k);
std::vector<Rational> cycle_moments(int k_max);

// ---------------------------------------------------------------------------
// Mean-height bound sequences.

struct BoundSequences {
  std::vector<double> a;
  std::vector<double> b;
};

/// a_{n+1} = l^n + a_n + sqrt(2 b_n)/2,
/// b_{n+1} = b_n + (13/12) l^{2n} + l^n + (l^n + 1) a_n / 2 + sqrt(1/3) l^n sqrt(b_n + a_n^2),
/// from a_0 = b_0 = 0, l = 3/2.
BoundSequences bound_sequences(int n_max);

/// (2 (3/2)^n - 2, (xi^n - lambda^n) / (xi - lambda)).
std::pair<double, double> nonsimple_mean_bounds(int n);

// ---------------------------------------------------------------------------
// Exact joint (H, L, R) law of nonsimple butterfly trees.

struct Triple {
  std::int64_t h;
  std::int64_t l;
  std::int64_t r;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Dyadic law: P(t) = weights[t] / 2^denominator_exponent. Weights are the
/// number of elements of B_n with that triple.
struct TripleDistribution {
  int level = 0;
  int denominator_exponent = 0;
  std::map<Triple, BigInt> weights;

  BigInt total() const;
  std::map<std::int64_t, BigInt> height_counts() const;
  std::map<std::int64_t, BigInt> left_counts() const;
  std::map<std::int64_t, BigInt> right_counts() const;
  Rational mean_height() const;
};

inline constexpr std::size_t kDefaultSupportCap = 5'000'000;

/// Level-n law by convolving two iid level-(n-1) copies through the nonsimple
/// recursion with a fair root bit. Throws SupportCapExceeded if the support
/// grows beyond `support_cap`.
TripleDistribution triple_dist_nonsimple(int n, std::size_t support_cap = kDefaultSupportCap);

Rational exact_mean_height(int n, std::size_t support_cap = kDefaultSupportCap);

class SupportCapExceeded : public std::runtime_error {
 public:
  SupportCapExceeded(int level, std::size_t attained, std::size_t cap);
  int level() const { return level_; }
  std::size_t attained() const { return attained_; }

 private:
  int level_;
  std::size_t attained_;
};

/// Probability of a dyadic or general exact value as a double.
double to_double(const Rational& q);

}  // namespace bfly

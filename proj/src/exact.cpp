#include "bfly/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace bfly {

StirlingTable::StirlingTable(int n) {
  if (n < 0) throw std::invalid_argument("StirlingTable: n must be >= 0");
  rows_.reserve(static_cast<std::size_t>(n) + 1);
  rows_.push_back({BigInt(1)});
  for (int m = 0; m < n; ++m) {
    const auto& prev = rows_.back();
    std::vector<BigInt> next(static_cast<std::size_t>(m) + 2, BigInt(0));
    for (int k = 0; k <= m + 1; ++k) {
      BigInt v = 0;
      if (k <= m) v += BigInt(m) * prev[static_cast<std::size_t>(k)];
      if (k >= 1) v += prev[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k)] = std::move(v);
    }
    rows_.push_back(std::move(next));
  }
}

const std::vector<BigInt>& StirlingTable::row(int n) const {
  if (n < 0 || n > max_n()) throw std::invalid_argument("StirlingTable: row out of range");
  return rows_[static_cast<std::size_t>(n)];
}

const BigInt& StirlingTable::at(int n, int k) const {
  if (k < 0 || k > n) throw std::invalid_argument("stirling: need 0 <= k <= n");
  return row(n)[static_cast<std::size_t>(k)];
}

BigInt stirling1_unsigned(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("stirling1_unsigned: need 0 <= k <= n");
  return StirlingTable(n).at(n, k);
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Rational> stirling1_pmf(int n) {
  if (n < 1) throw std::invalid_argument("stirling1_pmf: n must be >= 1");
  const StirlingTable table(n);
  const BigInt nf = factorial(n);
  std::vector<Rational> pmf;
  pmf.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) pmf.emplace_back(table.at(n, k), nf);
  return pmf;
}

Rational harmonic(int n, int order) {
  if (n < 0 || order < 1) throw std::invalid_argument("harmonic: need n >= 0 and order >= 1");
  Rational h = 0;
  for (int j = 1; j <= n; ++j) h += Rational(BigInt(1), boost::multiprecision::pow(BigInt(j), static_cast<unsigned>(order)));
  return h;
}

namespace {

void check_simple_n(int n) {
  if (n < 1 || n > 62) throw std::invalid_argument("simple butterfly level must be in 1..62");
}

BigInt binomial(int n, int k) {
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

Rational pow_rational(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

std::map<std::int64_t, BigInt> simple_height_counts(int n) {
  check_simple_n(n);
  std::map<std::int64_t, BigInt> counts;
  for (int k = 0; k <= n; ++k) {
    const std::int64_t h = (std::int64_t{1} << k) + (std::int64_t{1} << (n - k)) - 2;
    counts[h] += binomial(n, k);
  }
  return counts;
}

std::map<std::int64_t, Rational> simple_height_pmf(int n) {
  const BigInt total = BigInt(1) << n;
  std::map<std::int64_t, Rational> pmf;
  for (const auto& [h, c] : simple_height_counts(n)) pmf.emplace(h, Rational(c, total));
  return pmf;
}

Rational simple_height_mean(int n) {
  check_simple_n(n);
  return 2 * pow_rational(Rational(3, 2), n) - 2;
}

double devroye_constant(double tol) {
  if (!(tol > 0)) throw std::invalid_argument("devroye_constant: tol must be positive");
  const auto g = [](double x) { return x * (std::log(2.0) + 1.0 - std::log(x)) - 1.0; };
  double lo = 2.0;  // g > 0
  double hi = 10.0; // g < 0
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (std::abs(gm) <= tol) break;
    (gm > 0 ? lo : hi) = mid;
  }
  return mid;
}

Constants constants() {
  Constants c{};
  c.cstar = devroye_constant(1e-14);
  c.lambda = 1.5;
  c.alpha = std::log2(1.5);
  c.Cstar = 1.0 + std::sqrt(8.0 * std::sqrt(2.0) - 11.0);
  c.xi = 0.5 * (1.0 + std::sqrt(2.0) + std::sqrt(2.0 * std::sqrt(2.0) - 1.0));
  c.beta = std::log2(c.xi);
  c.d = 2.0 / (std::sqrt(2.0 * c.Cstar) - 1.0);
  return c;
}

std::pair<Rational, Rational> edge_moments(int n) {
  if (n < 0) throw std::invalid_argument("edge_moments: n must be >= 0");
  const Rational p = pow_rational(Rational(3, 2), n);
  return {p - 1, Rational(4, 3) * p * p - Rational(7, 3) * p + 1};
}

std::vector<Rational> cycle_moments(int k_max) {
  if (k_max < 0) throw std::invalid_argument("cycle_moments: k must be >= 0");
  std::vector<Rational> m(static_cast<std::size_t>(std::max(k_max, 1)) + 1);
  m[0] = 1;
  m[1] = 1;
  const Rational lambda(3, 2);
  for (int k = 2; k <= k_max; ++k) {
    Rational sum = 0;
    for (int j = 1; j < k; ++j)
      sum += Rational(binomial(k, j)) * m[static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(k - j)];
    m[static_cast<std::size_t>(k)] = (lambda - 1) / (pow_rational(lambda, k) - 1) * sum;
  }
  m.resize(static_cast<std::size_t>(k_max) + 1);
  return m;
}

Rational cycle_moment(int k) { return cycle_moments(k).back(); }

BoundSequences bound_sequences(int n_max) {
  if (n_max < 0) throw std::invalid_argument("bound_sequences: n_max must be >= 0");
  BoundSequences s;
  s.a.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  s.b.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (int n = 0; n < n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const double ln = std::pow(1.5, n);
    const double a = s.a[i];
    const double b = s.b[i];
    s.a[i + 1] = ln + a + 0.5 * std::sqrt(2.0 * b);
    s.b[i + 1] = b + 13.0 / 12.0 * ln * ln + ln + 0.5 * (ln + 1.0) * a +
                 std::sqrt(1.0 / 3.0) * ln * std::sqrt(b + a * a);
  }
  return s;
}

std::pair<double, double> nonsimple_mean_bounds(int n) {
  if (n < 0) throw std::invalid_argument("nonsimple_mean_bounds: n must be >= 0");
  const auto c = constants();
  const double lower = 2.0 * std::pow(c.lambda, n) - 2.0;
  const double upper = (std::pow(c.xi, n) - std::pow(c.lambda, n)) / (c.xi - c.lambda);
  return {lower, upper};
}

// ---------------------------------------------------------------------------

SupportCapExceeded::SupportCapExceeded(int level, std::size_t attained, std::size_t cap)
    : std::runtime_error("triple distribution support reached " + std::to_string(attained) +
                         " at level " + std::to_string(level) + " (cap " + std::to_string(cap) + ")"),
      level_(level),
      attained_(attained) {}

BigInt TripleDistribution::total() const {
  BigInt t = 0;
  for (const auto& [_, w] : weights) t += w;
  return t;
}

namespace {

template <typename Proj>
std::map<std::int64_t, BigInt> marginal(const std::map<Triple, BigInt>& weights, Proj proj) {
  std::map<std::int64_t, BigInt> out;
  for (const auto& [t, w] : weights) out[proj(t)] += w;
  return out;
}

constexpr int kFieldBits = 21;
constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kFieldBits) - 1;

std::uint64_t pack(std::int64_t x, std::int64_t y, std::int64_t z) {
  return (static_cast<std::uint64_t>(x) << (2 * kFieldBits)) |
         (static_cast<std::uint64_t>(y) << kFieldBits) | static_cast<std::uint64_t>(z);
}

}  // namespace

std::map<std::int64_t, BigInt> TripleDistribution::height_counts() const {
  return marginal(weights, [](const Triple& t) { return t.h; });
}
std::map<std::int64_t, BigInt> TripleDistribution::left_counts() const {
  return marginal(weights, [](const Triple& t) { return t.l; });
}
std::map<std::int64_t, BigInt> TripleDistribution::right_counts() const {
  return marginal(weights, [](const Triple& t) { return t.r; });
}

Rational TripleDistribution::mean_height() const {
  BigInt num = 0;
  for (const auto& [t, w] : weights) num += w * t.h;
  return Rational(num, BigInt(1) << denominator_exponent);
}

TripleDistribution triple_dist_nonsimple(int n, std::size_t support_cap) {
  if (n < 1) throw std::invalid_argument("triple_dist_nonsimple: n must be >= 1");
  if (n > kFieldBits - 1) throw std::invalid_argument("triple_dist_nonsimple: n too large");
  TripleDistribution dist;
  dist.level = 1;
  dist.denominator_exponent = 1;
  dist.weights = {{Triple{1, 0, 1}, BigInt(1)}, {Triple{1, 1, 0}, BigInt(1)}};

  while (dist.level < n) {
    // The second child only enters through (H, R) under 12 and (H, L) under 21.
    std::map<std::pair<std::int64_t, std::int64_t>, BigInt> by_hr, by_hl;
    for (const auto& [t, w] : dist.weights) {
      by_hr[{t.h, t.r}] += w;
      by_hl[{t.h, t.l}] += w;
    }
    std::unordered_map<std::uint64_t, BigInt> next;
    const auto add = [&](std::int64_t h, std::int64_t l, std::int64_t r, const BigInt& w) {
      next[pack(h, l, r)] += w;
      if (next.size() > support_cap) throw SupportCapExceeded(dist.level + 1, next.size(), support_cap);
    };
    for (const auto& [a, wa] : dist.weights) {
      for (const auto& [hr, wb] : by_hr) {
        const auto [bh, br] = hr;
        add(std::max(a.h, a.r + 1 + bh), a.l, a.r + 1 + br, wa * wb);
      }
      for (const auto& [hl, wb] : by_hl) {
        const auto [bh, bl] = hl;
        add(std::max(a.h, a.l + 1 + bh), a.l + 1 + bl, a.r, wa * wb);
      }
    }
    TripleDistribution out;
    out.level = dist.level + 1;
    out.denominator_exponent = 2 * dist.denominator_exponent + 1;
    for (auto& [key, w] : next) {
      const Triple t{static_cast<std::int64_t>(key >> (2 * kFieldBits)),
                     static_cast<std::int64_t>((key >> kFieldBits) & kFieldMask),
                     static_cast<std::int64_t>(key & kFieldMask)};
      out.weights.emplace(t, std::move(w));
    }
    dist = std::move(out);
  }
  return dist;
}

Rational exact_mean_height(int n, std::size_t support_cap) {
  return triple_dist_nonsimple(n, support_cap).mean_height();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace bfly

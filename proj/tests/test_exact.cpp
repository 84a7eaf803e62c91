#include <cmath>
#include <map>
#include <stdexcept>

#include "bfly/butterfly.hpp"
#include "bfly/exact.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bfly;

namespace {
Rational Q(long long a, long long b = 1) { return Rational(a, b); }
}  // namespace

TEST_CASE("stirling numbers") {
  CHECK(stirling1_unsigned(3, 2) == 3);
  for (int n = 0; n <= 10; ++n) CHECK(stirling1_unsigned(n, n) == 1);
  CHECK(stirling1_unsigned(4, 0) == 0);
  CHECK(stirling1_unsigned(0, 0) == 1);
  const StirlingTable t(30);
  for (int n = 0; n <= 30; ++n) {
    BigInt sum = 0;
    for (const auto& v : t.row(n)) sum += v;
    REQUIRE(sum == factorial(n));
  }
  CHECK(t.at(4, 2) == 11);
  CHECK_THROWS_AS(t.at(31, 1), std::invalid_argument);
  CHECK_THROWS_AS(t.at(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(stirling1_unsigned(-1, 0), std::invalid_argument);
}

TEST_CASE("stirling pmf and harmonic numbers") {
  CHECK(stirling1_pmf(3) == std::vector{Q(1, 3), Q(1, 2), Q(1, 6)});
  CHECK(stirling1_pmf(1) == std::vector{Q(1)});
  Rational mean = 0;
  const auto pmf = stirling1_pmf(3);
  for (std::size_t k = 0; k < pmf.size(); ++k) mean += static_cast<long long>(k + 1) * pmf[k];
  CHECK(mean == Q(11, 6));
  CHECK(harmonic(3) == Q(11, 6));
  CHECK(harmonic(2, 2) == Q(5, 4));
  CHECK(harmonic(0) == 0);
}

TEST_CASE("record counts over S_n follow the Stirling law, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    std::map<int, BigInt> maxima, cycles;
    Rational total = 0;
    for (const auto& p : oracle::all_perms(n)) {
      maxima[ltr_maxima_len(p)] += 1;
      cycles[cycle_count(p)] += 1;
      total += ltr_maxima_len(p);
    }
    for (int k = 1; k <= n; ++k) {
      REQUIRE(maxima[k] == stirling1_unsigned(n, k));
      REQUIRE(cycles[k] == stirling1_unsigned(n, k));
    }
    CHECK(total / Rational(factorial(n)) == harmonic(n));
  }
}

TEST_CASE("simple height law") {
  const auto pmf10 = simple_height_pmf(10);
  CHECK(pmf10.at(62) == Q(252, 1024));
  CHECK(simple_height_mean(10) == Q(116050, 1024));
  CHECK(to_double(simple_height_mean(10)) == 113.330078125);
  CHECK(simple_height_pmf(1) == std::map<std::int64_t, Rational>{{1, Q(1)}});
  const std::map<std::int64_t, BigInt> c10{{1023, 2}, {512, 20}, {258, 90}, {134, 240}, {78, 420}, {62, 252}};
  CHECK(simple_height_counts(10) == c10);
  CHECK(simple_height_counts(2) == std::map<std::int64_t, BigInt>{{3, 2}, {2, 2}});
  for (int n = 1; n <= 40; ++n) {
    BigInt sum = 0;
    for (const auto& [h, c] : simple_height_counts(n)) sum += c;
    REQUIRE(sum == BigInt(1) << n);
    Rational mean = 0;
    for (const auto& [h, q] : simple_height_pmf(n)) mean += h * q;
    REQUIRE(mean == simple_height_mean(n));
  }
  CHECK_THROWS_AS(simple_height_counts(0), std::invalid_argument);
}

TEST_CASE("simple height law matches enumeration, n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    std::map<std::int64_t, BigInt> seen;
    for (const auto& p : enumerate_simple(n)) seen[summary(p).height] += 1;
    REQUIRE(seen == simple_height_counts(n));
  }
}

TEST_CASE("constants") {
  const double c = devroye_constant(1e-10);
  CHECK(std::abs(c - 4.31107) <= 1e-4);
  CHECK(c > 4.31);
  CHECK(c < 4.32);
  CHECK(std::abs(c * std::log(2 * std::exp(1.0) / c) - 1) <= 1e-10);
  CHECK_THROWS_AS(devroye_constant(0), std::invalid_argument);

  const auto k = constants();
  const auto near = [](double x, double want, double tol) { return std::abs(x - want) <= tol; };
  CHECK(near(k.alpha, 0.58496, 5e-6));
  CHECK(near(k.lambda, 1.5, 0));
  CHECK(near(k.Cstar, 1.5601, 5e-5));
  CHECK(near(k.xi, 1.88320, 5e-6));
  CHECK(near(k.beta, 0.913189, 5e-7));
  CHECK(near(k.d, 2.60958, 5e-6));
  CHECK(near(k.xi, 1 + std::sqrt(2 * k.Cstar) / 2, 1e-14));
  CHECK(near(k.d, 1 / (k.xi - k.lambda), 1e-12));
  // C* is the root of sqrt2 - x/2 - sqrt(2/x)(x - 1).
  CHECK(near(std::sqrt(2.0) - k.Cstar / 2 - std::sqrt(2 / k.Cstar) * (k.Cstar - 1), 0, 1e-12));
}

TEST_CASE("edge moments") {
  CHECK(edge_moments(1) == std::pair{Q(1, 2), Q(1, 2)});
  CHECK(edge_moments(2) == std::pair{Q(5, 4), Q(5, 2)});
  for (int n = 1; n <= 4; ++n) {
    Rational l1 = 0, l2 = 0, r1 = 0, r2 = 0;
    const auto range = enumerate_nonsimple(n);
    for (const auto& p : range) {
      const auto s = summary(p);
      l1 += s.left_edge;
      l2 += s.left_edge * s.left_edge;
      r1 += s.right_edge;
      r2 += s.right_edge * s.right_edge;
    }
    const Rational size(BigInt(range.size()));
    const auto [m1, m2] = edge_moments(n);
    REQUIRE(l1 / size == m1);
    REQUIRE(l2 / size == m2);
    REQUIRE(r1 / size == m1);
    REQUIRE(r2 / size == m2);
  }
}

TEST_CASE("cycle moment recursion as printed") {
  CHECK(cycle_moment(0) == 1);
  CHECK(cycle_moment(1) == 1);
  CHECK(cycle_moment(2) == Q(4, 5));
  CHECK(cycle_moment(3) == Q(96, 95));
  const auto ms = cycle_moments(5);
  CHECK(ms.size() == 6);
  CHECK(ms[3] == cycle_moment(3));
}

TEST_CASE("normalized cycle second moment tends to 4/3, not the printed m_2") {
  // E C(pi_n)^2 = (4/3) lambda^{2n} - (1/3) lambda^n, from Y_{n+1} = Y + eta Y'.
  const Rational lambda = Q(3, 2);
  for (int n = 1; n <= 4; ++n) {
    Rational c2 = 0;
    const auto range = enumerate_nonsimple(n);
    for (const auto& p : range) c2 += cycle_count(p) * cycle_count(p);
    c2 /= Rational(BigInt(range.size()));
    Rational ln = 1;
    for (int i = 0; i < n; ++i) ln *= lambda;
    REQUIRE(c2 == Q(4, 3) * ln * ln - Q(1, 3) * ln);
  }
  CHECK(cycle_moment(2) != Q(4, 3));
}

TEST_CASE("bound sequences") {
  const auto s = bound_sequences(60);
  CHECK(s.a[0] == 0);
  CHECK(s.b[0] == 0);
  CHECK(s.a[1] == 1);
  CHECK(s.b[1] == doctest::Approx(25.0 / 12).epsilon(1e-15));
  const double cstar = constants().Cstar;
  // b_n <= C* a_n^2 holds from n = 2; at n = 1 the ratio is 25/12.
  CHECK(s.b[1] > cstar * s.a[1] * s.a[1]);
  for (int n = 2; n <= 60; ++n) REQUIRE(s.b[static_cast<std::size_t>(n)] <= cstar * s.a[static_cast<std::size_t>(n)] * s.a[static_cast<std::size_t>(n)]);
  // Consequently a_n <= (xi^n - lambda^n)/(xi - lambda) fails only at n = 2.
  CHECK(s.a[2] > nonsimple_mean_bounds(2).second);
  for (int n = 3; n <= 60; ++n) REQUIRE(s.a[static_cast<std::size_t>(n)] <= nonsimple_mean_bounds(n).second);

  const auto [lo10, hi10] = nonsimple_mean_bounds(10);
  CHECK(lo10 == 113.330078125);
  CHECK(std::round(hi10 * 100) / 100 == 1313.53);
  CHECK(nonsimple_mean_bounds(2).second == doctest::Approx(constants().xi + 1.5));
  for (int n = 1; n <= 60; ++n) REQUIRE(nonsimple_mean_bounds(n).first <= nonsimple_mean_bounds(n).second);
}

TEST_CASE("triple distribution") {
  const auto d1 = triple_dist_nonsimple(1);
  CHECK(d1.denominator_exponent == 1);
  CHECK(d1.weights == std::map<Triple, BigInt>{{{1, 0, 1}, 1}, {{1, 1, 0}, 1}});
  CHECK_THROWS_AS(triple_dist_nonsimple(0), std::invalid_argument);
  CHECK(exact_mean_height(1) == 1);
  CHECK(exact_mean_height(2) == Q(5, 2));
  CHECK(exact_mean_height(3) == Q(19, 4));
  CHECK(exact_mean_height(4) == Q(4203, 512));
  CHECK_THROWS_AS(triple_dist_nonsimple(6, 100), SupportCapExceeded);
}

TEST_CASE("triple distribution equals enumeration, n <= 4") {
  const auto seq = bound_sequences(4);
  for (int n = 1; n <= 4; ++n) {
    std::map<Triple, BigInt> seen;
    Rational hsum = 0;
    const auto range = enumerate_nonsimple(n);
    for (const auto& p : range) {
      const auto s = summary(p);
      seen[{s.height, s.left_edge, s.right_edge}] += 1;
      hsum += s.height;
    }
    const auto d = triple_dist_nonsimple(n);
    REQUIRE(d.weights == seen);
    REQUIRE(d.total() == BigInt(range.size()));
    CHECK(d.left_counts() == d.right_counts());
    const auto mean = hsum / Rational(BigInt(range.size()));
    CHECK(d.mean_height() == mean);
    const auto [lo, hi] = nonsimple_mean_bounds(n);
    CHECK(lo <= to_double(mean));
    CHECK(to_double(mean) <= hi);
    CHECK(to_double(mean) <= seq.a[static_cast<std::size_t>(n)]);
  }
}

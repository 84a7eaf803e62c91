#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "bfly/butterfly.hpp"
#include "bfly/experiments.hpp"
#include "bfly/gof.hpp"
#include "bfly/rng.hpp"
#include "bfly/samplers.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bfly;

namespace {

constexpr double kPBand = 1e-3;

// Chi-square of sampled permutations against the uniform law on `support`;
// a sample outside the support fails outright.
ChiSquareResult uniform_fit(const std::vector<Permutation>& support, auto&& draw, int samples) {
  std::map<Permutation, std::uint64_t> counts;
  for (const auto& p : support) counts[p] = 0;
  for (int i = 0; i < samples; ++i) {
    const auto p = draw();
    const auto it = counts.find(p);
    REQUIRE_MESSAGE(it != counts.end(), "sample outside support: " << p.to_string());
    ++it->second;
  }
  std::vector<std::uint64_t> obs;
  for (const auto& [p, c] : counts) obs.push_back(c);
  return chi_square_uniform(obs);
}

}  // namespace

TEST_CASE("rng determinism and streams") {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(Rng(42).next_u64() != c.next_u64());
  CHECK(Rng(42, 1).next_u64() != Rng(42, 2).next_u64());
  const Rng base(7);
  auto s1 = base.substream(3), s2 = base.substream(3), s3 = base.substream(4);
  CHECK(s1.next_u64() == s2.next_u64());
  CHECK(base.substream(3).next_u64() != s3.next_u64());
  // Drawing from a stream does not move the parent's substreams.
  Rng parent(7);
  parent.next_u64();
  CHECK(parent.substream(3).next_u64() == Rng(7).substream(3).next_u64());
}

TEST_CASE("rng ranges") {
  Rng r(1);
  CHECK_THROWS_AS(r.below(0), std::invalid_argument);
  for (int i = 0; i < 10000; ++i) {
    REQUIRE(r.below(7) < 7);
    const double u = r.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
  CHECK(r.below(1) == 0);
  std::vector<std::uint64_t> faces(6);
  for (int i = 0; i < 60000; ++i) ++faces[r.below(6)];
  CHECK(chi_square_uniform(faces).p_value > kPBand);
  std::vector<std::uint64_t> bits(2);
  for (int i = 0; i < 100000; ++i) ++bits[r.fair_bit()];
  CHECK(chi_square_uniform(bits).p_value > kPBand);
}

TEST_CASE("uniform_permutation") {
  Rng r(kDefaultSeed);
  CHECK(uniform_permutation(1, r) == Permutation::identity(1));
  CHECK(uniform_permutation(3, r).size() == 3);
  CHECK(uniform_fit(oracle::all_perms(3), [&] { return uniform_permutation(3, r); }, 60000).p_value > kPBand);
  Rng x(5), y(5);
  CHECK(uniform_permutation(20, x) == uniform_permutation(20, y));
}

TEST_CASE("sample_wreath and sample_kron") {
  Rng r(kDefaultSeed, 1);
  CHECK(uniform_fit(oracle::all_perms(4), [&] { return sample_wreath(1, 4, r); }, 48000).p_value > kPBand);
  const std::vector<Permutation> b2(enumerate_nonsimple(2).begin(), enumerate_nonsimple(2).end());
  CHECK(uniform_fit(b2, [&] { return sample_wreath(2, 2, r); }, 80000).p_value > kPBand);
  const std::vector<Permutation> s22{Permutation::parse("1,2,3,4"), Permutation::parse("2,1,4,3"),
                                     Permutation::parse("3,4,1,2"), Permutation::parse("4,3,2,1")};
  CHECK(uniform_fit(s22, [&] { return sample_kron(2, 2, r); }, 40000).p_value > kPBand);
  CHECK(sample_wreath(3, 5, r).size() == 15);
  CHECK(sample_kron(3, 5, r).size() == 15);
}

TEST_CASE("butterfly samplers") {
  Rng r(kDefaultSeed, 2);
  const std::vector<Permutation> s1{Permutation::parse("1,2"), Permutation::parse("2,1")};
  CHECK(uniform_fit(s1, [&] { return sample_simple_butterfly(1, r); }, 20000).p_value > kPBand);
  CHECK(uniform_fit(s1, [&] { return sample_nonsimple_butterfly(1, r); }, 20000).p_value > kPBand);
  const std::vector<Permutation> bs3(enumerate_simple(3).begin(), enumerate_simple(3).end());
  CHECK(uniform_fit(bs3, [&] { return sample_simple_butterfly(3, r); }, 80000).p_value > kPBand);
  const std::vector<Permutation> b2(enumerate_nonsimple(2).begin(), enumerate_nonsimple(2).end());
  CHECK(uniform_fit(b2, [&] { return sample_nonsimple_butterfly(2, r); }, 80000).p_value > kPBand);
  for (int i = 0; i < 50; ++i) REQUIRE(is_nonsimple_butterfly(sample_nonsimple_butterfly(6, r)));
}

TEST_CASE("law samplers at the base") {
  Rng r(3);
  for (int i = 0; i < 100; ++i) {
    REQUIRE(sample_lis_law(0, r) == 1);
    REQUIRE(sample_cycle_law(0, r) == 1);
  }
  std::set<std::int64_t> lis1, cyc1;
  for (int i = 0; i < 200; ++i) {
    lis1.insert(sample_lis_law(1, r));
    cyc1.insert(sample_cycle_law(1, r));
  }
  CHECK(lis1 == std::set<std::int64_t>{1, 2});
  CHECK(cyc1 == std::set<std::int64_t>{1, 2});
  CHECK(enumerate_law("lis", 1) == std::map<std::int64_t, std::uint64_t>{{1, 1}, {2, 1}});
  CHECK(enumerate_law("cycle", 1) == std::map<std::int64_t, std::uint64_t>{{1, 1}, {2, 1}});
}

TEST_CASE("law samplers match enumeration") {
  const auto lis3 = run_law_hist("lis", 3, 100000, kDefaultSeed);
  REQUIRE(lis3.chi_square.has_value());
  CHECK(lis3.chi_square->p_value > kPBand);
  const auto cyc4 = run_law_hist("cycle", 4, 100000, kDefaultSeed);
  REQUIRE(cyc4.chi_square.has_value());
  CHECK(cyc4.chi_square->p_value > kPBand);
  CHECK_THROWS_AS(run_law_hist("height", 3, 10, 1), std::invalid_argument);
}

TEST_CASE("goodness-of-fit helpers") {
  // Oracle: two classes 60/40 against 1/2 gives (10^2 + 10^2)/50 = 4.
  const std::vector<std::uint64_t> obs{60, 40};
  const auto cs = chi_square_uniform(obs);
  CHECK(cs.statistic == doctest::Approx(4.0));
  CHECK(cs.dof == 1);
  CHECK(cs.p_value == doctest::Approx(0.0455).epsilon(1e-3));

  // Pooling merges the sparse tail into its neighbour.
  const std::vector<std::uint64_t> o{50, 46, 3, 1};
  const std::vector<double> pr{0.5, 0.46, 0.03, 0.01};
  CHECK(chi_square_pooled(o, pr).dof == 1);

  CHECK(half_normal_cdf(-1) == 0.0);
  CHECK(half_normal_cdf(1.959963985) == doctest::Approx(0.95).epsilon(1e-9));
  // One point at 0 against a CDF that is 0.5 there: both sides of the jump are 0.5 away.
  CHECK(ks_distance({0.0}, [](double) { return 0.5; }) == doctest::Approx(0.5));
  // Ties are grouped: {0,0,1,1} against the uniform CDF on [0,1].
  CHECK(ks_distance({0, 0, 1, 1}, [](double x) { return std::clamp(x, 0.0, 1.0); }) == doctest::Approx(0.5));
}

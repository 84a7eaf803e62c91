#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bfly/exact.hpp"
#include "bfly/gepp.hpp"
#include "bfly/table.hpp"

namespace bfly {

inline constexpr std::uint64_t kDefaultSeed = 20250711;

// Every runner is deterministic in its arguments: trial t draws from
// Rng(seed).substream(t), so results do not depend on evaluation order.

// ---------------------------------------------------------------------------
struct SimpleCountRow {
  int k;
  std::int64_t height;  // 2^k + 2^(n-k) - 2
  BigInt pmf_count;
  BigInt enumerated_count;
};

struct SimpleCountsResult {
  int n;
  std::vector<SimpleCountRow> rows;  // k = 0..floor(n/2)
  bool all_equal() const;
};

/// Simple butterfly height counts from the closed form and from building all 2^n trees.
SimpleCountsResult run_simple_counts(int n = 10);
Table to_table(const SimpleCountsResult& r);

// ---------------------------------------------------------------------------
struct NonsimpleHeightsResult {
  int n;
  std::uint64_t trials;
  std::uint64_t seed;
  std::map<std::int64_t, std::uint64_t> histogram;
  double mean;
  double stddev;
  std::int64_t min;
  std::int64_t max;
  double lower_bound;
  double upper_bound;
};

/// Heights of `trials` uniform nonsimple butterfly trees with 2^n nodes.
NonsimpleHeightsResult run_nonsimple_heights(int n, std::uint64_t trials, std::uint64_t seed);
Table to_table(const NonsimpleHeightsResult& r);

// ---------------------------------------------------------------------------
struct BlockDiffResult {
  int n;
  int m;
  std::uint64_t trials;
  std::uint64_t seed;
  double block_mean;    // E h(S_n wr S_m) / log(nm)
  double uniform_mean;  // E h(S_nm) / log(nm)
  double difference;
  double difference_stderr;
  std::optional<std::pair<double, double>> band;  // acceptance band when one is defined for m
};

/// Paired comparison of block-tree and uniform-tree heights, both scaled by log(nm).
BlockDiffResult run_block_diff(int n, int m, std::uint64_t trials, std::uint64_t seed);
Table to_table(const BlockDiffResult& r);

// ---------------------------------------------------------------------------
struct CltResult {
  int n;
  std::uint64_t samples;
  std::uint64_t seed;
  std::int64_t offset;
  double ks;             // sampled standardized log-heights vs half-normal
  double ks_population;  // exact height law vs half-normal
};

/// (log2(h + offset) - n/2) / (sqrt(n)/2) for h = 2^X + 2^(n-X) - 2, X ~ Binom(n, 1/2)
/// drawn as a sum of n fair bits.
double standardized_log_height(int n, int x, std::int64_t offset = 0);
CltResult run_clt_simple(int n, std::uint64_t samples, std::uint64_t seed, std::int64_t offset = 0);
Table to_table(const CltResult& r);

// ---------------------------------------------------------------------------
struct BoundsRow {
  int n;
  double lower;
  std::optional<Rational> exact;
  double upper;
  double a;
  double b;
};

/// Per-level lower/upper mean-height bounds plus the exact mean where the
/// joint-law DP finishes for n <= exact_max.
std::vector<BoundsRow> run_bounds(int n_max, int exact_max = 4, std::size_t support_cap = kDefaultSupportCap);
Table to_table(const std::vector<BoundsRow>& rows, int n_max);

// ---------------------------------------------------------------------------
struct BlockGridRow {
  int n;
  int m;
  double mean_height;
  double ratio;        // mean h / (log n log m); nan when degenerate
  bool degenerate;     // log n or log m is zero
  double threshold;    // c* H_n log m
  double exceedance;   // fraction of trials with h >= threshold
};

/// Exploratory: no acceptance band is attached.
std::vector<BlockGridRow> run_block_grid(const std::vector<std::pair<int, int>>& grid,
                                                  std::uint64_t trials, std::uint64_t seed);
Table to_table(const std::vector<BlockGridRow>& rows, std::uint64_t trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
struct GeppCheckResult {
  int n;
  ButterflyFamily family;
  std::uint64_t trials;
  std::uint64_t seed;
  std::uint64_t nonmembers;           // GEPP permutations failing the family membership test
  double max_reconstruction_error;    // max |P A - L U| over the first reconstruction_trials
  std::uint64_t reconstruction_trials;
  std::optional<UniformityReport> uniformity;  // only within the enumeration caps
};

/// Membership and PA = LU reconstruction for `trials` random butterfly
/// matrices, plus the chi-square uniformity test when n is small enough to
/// enumerate the group.
GeppCheckResult run_gepp_check(int n, std::uint64_t trials, std::uint64_t seed, ButterflyFamily family,
                               std::uint64_t reconstruction_trials = 200);
Table to_table(const GeppCheckResult& r);

// ---------------------------------------------------------------------------
Table lattice_degrees_table(int n);

/// Exact law export: kind is one of stirling, simple-height, nonsimple-height,
/// edge-moments, cycle-moments. Columns value,numerator,denominator,probability.
Table pmf_table(const std::string& kind, int n);

// ---------------------------------------------------------------------------
struct LawHistResult {
  std::string law;  // "lis" or "cycle"
  int n;
  std::uint64_t trials;
  std::uint64_t seed;
  std::map<std::int64_t, std::uint64_t> sampled;
  std::map<std::int64_t, std::uint64_t> enumerated;  // empty unless n <= 4
  std::optional<ChiSquareResult> chi_square;
};

/// Histogram of the recursive LIS or cycle-count sampler, compared with the
/// exact histogram over B_n when n <= 4.
LawHistResult run_law_hist(const std::string& law, int n, std::uint64_t trials, std::uint64_t seed);
Table to_table(const LawHistResult& r);

/// Exact LIS (or cycle count) histogram over all of B_n.
std::map<std::int64_t, std::uint64_t> enumerate_law(const std::string& law, int n);

}  // namespace bfly

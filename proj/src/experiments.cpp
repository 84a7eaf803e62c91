#include "bfly/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "bfly/bst.hpp"
#include "bfly/butterfly.hpp"
#include "bfly/gof.hpp"
#include "bfly/lattice.hpp"
#include "bfly/rng.hpp"
#include "bfly/samplers.hpp"

namespace bfly {

namespace {

std::string str(const BigInt& x) { return x.str(); }
std::string str(std::int64_t x) { return std::to_string(x); }
std::string str(std::uint64_t x) { return std::to_string(x); }
std::string str(int x) { return std::to_string(x); }
std::string str(double x) { return format_double(x); }

struct Moments {
  double mean = 0;
  double stddev = 0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  if (xs.empty()) return m;
  m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return m;
}

std::string family_name(ButterflyFamily f) { return f == ButterflyFamily::Simple ? "simple" : "nonsimple"; }

}  // namespace

// ---------------------------------------------------------------------------

bool SimpleCountsResult::all_equal() const {
  BigInt total = 0;
  for (const auto& r : rows) {
    if (r.pmf_count != r.enumerated_count) return false;
    total += r.enumerated_count;
  }
  return total == (BigInt(1) << n);
}

SimpleCountsResult run_simple_counts(int n) {
  const auto counts = simple_height_counts(n);
  std::map<std::int64_t, BigInt> seen;
  for (const auto& p : enumerate_simple(n)) seen[Bst(p).height()] += 1;

  SimpleCountsResult r{n, {}};
  for (int k = 0; k <= n / 2; ++k) {
    const std::int64_t h = (std::int64_t{1} << k) + (std::int64_t{1} << (n - k)) - 2;
    const auto pc = counts.find(h);
    const auto ec = seen.find(h);
    r.rows.push_back({k, h, pc == counts.end() ? BigInt(0) : pc->second,
                      ec == seen.end() ? BigInt(0) : ec->second});
  }
  return r;
}

Table to_table(const SimpleCountsResult& r) {
  Table t;
  t.meta = {{"subcommand", "table1"}, {"n", str(r.n)}};
  t.columns = {"k", "height", "count_pmf", "count_enumerated", "equal"};
  for (const auto& row : r.rows)
    t.add_row({str(row.k), str(row.height), str(row.pmf_count), str(row.enumerated_count),
               row.pmf_count == row.enumerated_count ? "1" : "0"});
  return t;
}

// ---------------------------------------------------------------------------

NonsimpleHeightsResult run_nonsimple_heights(int n, std::uint64_t trials, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("fig8: n must be >= 1");
  if (trials == 0) throw std::invalid_argument("fig8: trials must be positive");
  const Rng base(seed);
  NonsimpleHeightsResult r{};
  r.n = n;
  r.trials = trials;
  r.seed = seed;
  r.min = std::numeric_limits<std::int64_t>::max();
  r.max = 0;
  std::vector<double> heights;
  heights.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = base.substream(t);
    const std::int64_t h = Bst(sample_nonsimple_butterfly(n, rng)).height();
    ++r.histogram[h];
    r.min = std::min(r.min, h);
    r.max = std::max(r.max, h);
    heights.push_back(static_cast<double>(h));
  }
  const auto m = moments(heights);
  r.mean = m.mean;
  r.stddev = m.stddev;
  std::tie(r.lower_bound, r.upper_bound) = nonsimple_mean_bounds(n);
  return r;
}

Table to_table(const NonsimpleHeightsResult& r) {
  Table t;
  t.meta = {{"subcommand", "fig8"},     {"n", str(r.n)},
            {"trials", str(r.trials)}, {"seed", str(r.seed)},
            {"mean", str(r.mean)},     {"stddev", str(r.stddev)},
            {"min", str(r.min)},       {"max", str(r.max)},
            {"lower_bound", str(r.lower_bound)}, {"upper_bound", str(r.upper_bound)}};
  if (r.n == 10) t.meta.emplace_back("mean_band", "[113,126]");
  t.columns = {"height", "count"};
  for (const auto& [h, c] : r.histogram) t.add_row({str(h), str(c)});
  return t;
}

// ---------------------------------------------------------------------------

BlockDiffResult run_block_diff(int n, int m, std::uint64_t trials, std::uint64_t seed) {
  if (n < 2 || m < 1) throw std::invalid_argument("theorem2-diff: need n >= 2, m >= 1");
  if (trials < 2) throw std::invalid_argument("theorem2-diff: need at least 2 trials");
  const Rng base(seed);
  const double scale = std::log(static_cast<double>(n) * static_cast<double>(m));
  std::vector<double> block, uniform, diff;
  block.reserve(trials);
  uniform.reserve(trials);
  diff.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = base.substream(t);
    const double hb = Bst(sample_wreath(n, m, rng)).height() / scale;
    const double hu = Bst(uniform_permutation(n * m, rng)).height() / scale;
    block.push_back(hb);
    uniform.push_back(hu);
    diff.push_back(hb - hu);
  }
  BlockDiffResult r{};
  r.n = n;
  r.m = m;
  r.trials = trials;
  r.seed = seed;
  r.block_mean = moments(block).mean;
  r.uniform_mean = moments(uniform).mean;
  const auto d = moments(diff);
  r.difference = d.mean;
  r.difference_stderr = d.stddev / std::sqrt(static_cast<double>(trials));
  if (m == 1) r.band = std::pair{-0.2, 0.2};
  if (m == 2) r.band = std::pair{0.6, 1.4};
  return r;
}

Table to_table(const BlockDiffResult& r) {
  Table t;
  t.meta = {{"subcommand", "theorem2-diff"}, {"n", str(r.n)}, {"m", str(r.m)},
            {"trials", str(r.trials)}, {"seed", str(r.seed)}};
  t.columns = {"block_mean", "uniform_mean", "difference", "stderr", "band_lo", "band_hi", "in_band"};
  const auto nan = std::numeric_limits<double>::quiet_NaN();
  const double lo = r.band ? r.band->first : nan;
  const double hi = r.band ? r.band->second : nan;
  const std::string in = r.band ? (r.difference >= lo && r.difference <= hi ? "1" : "0") : "";
  t.add_row({str(r.block_mean), str(r.uniform_mean), str(r.difference), str(r.difference_stderr), str(lo),
             str(hi), in});
  return t;
}

// ---------------------------------------------------------------------------

double standardized_log_height(int n, int x, std::int64_t offset) {
  const double hi = std::max(x, n - x);
  const double lo = std::min(x, n - x);
  // log2(2^hi + 2^lo - 2 + offset) without forming 2^hi.
  const double tail = std::exp2(lo - hi) + static_cast<double>(offset - 2) * std::exp2(-hi);
  const double log2h = hi + std::log1p(tail) / std::log(2.0);
  return (log2h - n / 2.0) / (std::sqrt(static_cast<double>(n)) / 2.0);
}

CltResult run_clt_simple(int n, std::uint64_t samples, std::uint64_t seed, std::int64_t offset) {
  if (n < 1) throw std::invalid_argument("clt-simple: n must be >= 1");
  if (samples == 0) throw std::invalid_argument("clt-simple: samples must be positive");
  if (offset < 0) throw std::invalid_argument("clt-simple: offset must be >= 0");
  const Rng base(seed);
  std::vector<double> z;
  z.reserve(samples);
  for (std::uint64_t s = 0; s < samples; ++s) {
    Rng rng = base.substream(s);
    int x = 0;
    for (int i = 0; i < n; ++i) x += rng.fair_bit();
    z.push_back(standardized_log_height(n, x, offset));
  }
  CltResult r{n, samples, seed, offset, ks_distance(std::move(z), half_normal_cdf), 0.0};

  // Exact law: atoms at z(k) with mass C(n,k)/2^n (k and n-k coincide).
  std::map<double, double> atoms;
  for (int k = 0; k <= n; ++k) {
    const double logp = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) - n * std::log(2.0);
    atoms[standardized_log_height(n, k, offset)] += std::exp(logp);
  }
  double cum = 0;
  for (const auto& [zk, p] : atoms) {
    const double f = half_normal_cdf(zk);
    r.ks_population = std::max(r.ks_population, std::abs(f - cum));
    cum += p;
    r.ks_population = std::max(r.ks_population, std::abs(cum - f));
  }
  return r;
}

Table to_table(const CltResult& r) {
  Table t;
  t.meta = {{"subcommand", "clt-simple"}, {"n", str(r.n)}, {"samples", str(r.samples)},
            {"seed", str(r.seed)}, {"offset", str(r.offset)}};
  t.columns = {"ks", "ks_population", "band_hi", "in_band"};
  t.add_row({str(r.ks), str(r.ks_population), "0.05", r.ks <= 0.05 ? "1" : "0"});
  return t;
}

// ---------------------------------------------------------------------------

std::vector<BoundsRow> run_bounds(int n_max, int exact_max, std::size_t support_cap) {
  if (n_max < 1) throw std::invalid_argument("bounds: n_max must be >= 1");
  const auto seq = bound_sequences(n_max);
  std::vector<BoundsRow> rows;
  bool dp_ok = true;
  for (int n = 1; n <= n_max; ++n) {
    BoundsRow row{};
    row.n = n;
    std::tie(row.lower, row.upper) = nonsimple_mean_bounds(n);
    row.a = seq.a[static_cast<std::size_t>(n)];
    row.b = seq.b[static_cast<std::size_t>(n)];
    if (dp_ok && n <= exact_max) {
      try {
        row.exact = exact_mean_height(n, support_cap);
      } catch (const SupportCapExceeded&) {
        dp_ok = false;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

Table to_table(const std::vector<BoundsRow>& rows, int n_max) {
  Table t;
  t.meta = {{"subcommand", "bounds"}, {"n_max", str(n_max)}};
  t.columns = {"n", "lower", "exact", "exact_fraction", "upper", "a_n", "b_n", "lower_le_upper"};
  for (const auto& r : rows) {
    const std::string ex = r.exact ? str(to_double(*r.exact)) : "";
    const std::string frac =
        r.exact ? str(BigInt(numerator(*r.exact))) + "/" + str(BigInt(denominator(*r.exact))) : "";
    t.add_row({str(r.n), str(r.lower), ex, frac, str(r.upper), str(r.a), str(r.b), r.lower <= r.upper ? "1" : "0"});
  }
  return t;
}

// ---------------------------------------------------------------------------

std::vector<BlockGridRow> run_block_grid(const std::vector<std::pair<int, int>>& grid,
                                                  std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("explore-conjecture: trials must be positive");
  const double cstar = constants().cstar;
  std::vector<BlockGridRow> rows;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const auto [n, m] = grid[g];
    if (n < 1 || m < 1) throw std::invalid_argument("explore-conjecture: n, m must be >= 1");
    const Rng base(seed, g);
    const double threshold = cstar * to_double(harmonic(n)) * std::log(static_cast<double>(m));
    double sum = 0;
    std::uint64_t exceed = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng rng = base.substream(t);
      const double h = Bst(sample_wreath(n, m, rng)).height();
      sum += h;
      if (h >= threshold) ++exceed;
    }
    BlockGridRow row{};
    row.n = n;
    row.m = m;
    row.mean_height = sum / static_cast<double>(trials);
    row.degenerate = n == 1 || m == 1;
    row.ratio = row.degenerate ? std::numeric_limits<double>::quiet_NaN()
                               : row.mean_height / (std::log(n) * std::log(m));
    row.threshold = threshold;
    row.exceedance = static_cast<double>(exceed) / static_cast<double>(trials);
    rows.push_back(row);
  }
  return rows;
}

Table to_table(const std::vector<BlockGridRow>& rows, std::uint64_t trials, std::uint64_t seed) {
  Table t;
  t.meta = {{"subcommand", "explore-conjecture"}, {"trials", str(trials)}, {"seed", str(seed)},
            {"note", "exploratory; no acceptance band"}};
  t.columns = {"n", "m", "mean_height", "ratio", "degenerate", "threshold", "exceedance"};
  for (const auto& r : rows)
    t.add_row({str(r.n), str(r.m), str(r.mean_height), str(r.ratio), r.degenerate ? "1" : "0", str(r.threshold),
               str(r.exceedance)});
  return t;
}

// ---------------------------------------------------------------------------

GeppCheckResult run_gepp_check(int n, std::uint64_t trials, std::uint64_t seed, ButterflyFamily family,
                               std::uint64_t reconstruction_trials) {
  if (n < 1) throw std::invalid_argument("gepp-check: n must be >= 1");
  if (trials == 0) throw std::invalid_argument("gepp-check: trials must be positive");
  const bool simple = family == ButterflyFamily::Simple;
  const Rng base(seed);
  GeppCheckResult r{};
  r.n = n;
  r.family = family;
  r.trials = trials;
  r.seed = seed;
  r.reconstruction_trials = std::min(trials, reconstruction_trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = base.substream(t);
    const auto a = simple ? random_simple_butterfly_matrix(n, rng) : random_nonsimple_butterfly_matrix(n, rng);
    const auto f = gepp(a);
    const bool member = simple ? is_simple_butterfly(f.perm) : is_nonsimple_butterfly(f.perm);
    if (!member) ++r.nonmembers;
    if (t < r.reconstruction_trials) {
      const auto err = (SquareMatrix::permutation(f.perm) * a).max_abs_diff(f.lower * f.upper);
      r.max_reconstruction_error = std::max(r.max_reconstruction_error, err);
    }
  }
  if (simple ? n <= 10 : n <= 3) r.uniformity = uniformity_check(n, trials, base, family);
  return r;
}

Table to_table(const GeppCheckResult& r) {
  Table t;
  t.meta = {{"subcommand", "gepp-check"}, {"n", str(r.n)}, {"family", family_name(r.family)},
            {"trials", str(r.trials)}, {"seed", str(r.seed)}};
  t.columns = {"nonmembers", "max_reconstruction_error", "reconstruction_band", "classes", "chi_square",
               "dof", "p_value", "p_band"};
  const auto& u = r.uniformity;
  t.add_row({str(r.nonmembers), str(r.max_reconstruction_error), "1e-9",
             u ? str(static_cast<std::uint64_t>(u->classes.size())) : "", u ? str(u->chi_square.statistic) : "",
             u ? str(u->chi_square.dof) : "", u ? str(u->chi_square.p_value) : "", "0.001"});
  return t;
}

// ---------------------------------------------------------------------------

Table lattice_degrees_table(int n) {
  if (n < 1) throw std::invalid_argument("lattice-degrees: n must be >= 1");
  const auto lattice = degree_multiset(n);
  const auto heights = simple_height_counts(n);
  Table t;
  t.meta = {{"subcommand", "lattice-degrees"}, {"n", str(n)}};
  t.columns = {"degree", "vertex_count", "simple_height_count", "equal"};
  for (const auto& [deg, count] : lattice) {
    const auto it = heights.find(deg);
    const BigInt hc = it == heights.end() ? BigInt(0) : it->second;
    t.add_row({str(deg), str(count), str(hc), hc == count ? "1" : "0"});
  }
  return t;
}

Table pmf_table(const std::string& kind, int n) {
  Table t;
  t.meta = {{"subcommand", "pmf"}, {"kind", kind}, {"n", str(n)}};
  t.columns = {"value", "numerator", "denominator", "probability"};
  const auto row = [&](const std::string& value, const Rational& q) {
    t.add_row({value, str(BigInt(numerator(q))), str(BigInt(denominator(q))), str(to_double(q))});
  };
  if (kind == "stirling") {
    const auto pmf = stirling1_pmf(n);
    for (std::size_t i = 0; i < pmf.size(); ++i) row(str(static_cast<int>(i + 1)), pmf[i]);
  } else if (kind == "simple-height") {
    for (const auto& [h, q] : simple_height_pmf(n)) row(str(h), q);
  } else if (kind == "nonsimple-height") {
    const auto dist = triple_dist_nonsimple(n);
    const BigInt den = BigInt(1) << dist.denominator_exponent;
    for (const auto& [h, w] : dist.height_counts()) row(str(h), Rational(w, den));
  } else if (kind == "edge-moments") {
    // value = moment order; probability column carries the moment as a float.
    const auto [m1, m2] = edge_moments(n);
    row("1", m1);
    row("2", m2);
  } else if (kind == "cycle-moments") {
    const auto ms = cycle_moments(n);
    for (std::size_t k = 0; k < ms.size(); ++k) row(str(static_cast<int>(k)), ms[k]);
  } else {
    throw std::invalid_argument("pmf: unknown kind '" + kind + "'");
  }
  return t;
}

// ---------------------------------------------------------------------------

std::map<std::int64_t, std::uint64_t> enumerate_law(const std::string& law, int n) {
  if (law != "lis" && law != "cycle") throw std::invalid_argument("unknown law '" + law + "'");
  std::map<std::int64_t, std::uint64_t> hist;
  if (n == 0) {
    hist[1] = 1;
    return hist;
  }
  for (const auto& p : enumerate_nonsimple(n)) ++hist[law == "lis" ? lis(p) : cycle_count(p)];
  return hist;
}

LawHistResult run_law_hist(const std::string& law, int n, std::uint64_t trials, std::uint64_t seed) {
  if (law != "lis" && law != "cycle") throw std::invalid_argument("unknown law '" + law + "'");
  if (n < 0 || n > 24) throw std::invalid_argument("law-hist: n must be in 0..24");
  if (trials == 0) throw std::invalid_argument("law-hist: trials must be positive");
  LawHistResult r{law, n, trials, seed, {}, {}, std::nullopt};
  const Rng base(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = base.substream(t);
    ++r.sampled[law == "lis" ? sample_lis_law(n, rng) : sample_cycle_law(n, rng)];
  }
  if (n <= 4) {
    r.enumerated = enumerate_law(law, n);
    if (r.enumerated.size() >= 2) {
      const double total = static_cast<double>(std::uint64_t{1} << ((1U << n) - 1));
      std::vector<std::uint64_t> obs;
      std::vector<double> probs;
      std::uint64_t outside = 0;
      for (const auto& [v, c] : r.sampled)
        if (!r.enumerated.contains(v)) outside += c;
      for (const auto& [v, c] : r.enumerated) {
        const auto it = r.sampled.find(v);
        obs.push_back(it == r.sampled.end() ? 0 : it->second);
        probs.push_back(static_cast<double>(c) / total);
      }
      auto cs = chi_square_pooled(obs, probs);
      if (outside) cs.p_value = 0;
      r.chi_square = cs;
    }
  }
  return r;
}

Table to_table(const LawHistResult& r) {
  Table t;
  t.meta = {{"subcommand", "law-hist"}, {"law", r.law}, {"n", str(r.n)}, {"trials", str(r.trials)},
            {"seed", str(r.seed)}};
  if (r.chi_square) {
    t.meta.emplace_back("chi_square", str(r.chi_square->statistic));
    t.meta.emplace_back("p_value", str(r.chi_square->p_value));
    t.meta.emplace_back("p_band", "0.001");
  }
  t.columns = {"value", "sampled", "enumerated"};
  std::map<std::int64_t, std::pair<std::uint64_t, std::uint64_t>> merged;
  for (const auto& [v, c] : r.sampled) merged[v].first = c;
  for (const auto& [v, c] : r.enumerated) merged[v].second = c;
  for (const auto& [v, cs] : merged)
    t.add_row({str(v), str(cs.first), r.enumerated.empty() ? "" : str(cs.second)});
  return t;
}

}  // namespace bfly

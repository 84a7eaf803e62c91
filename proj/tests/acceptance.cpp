// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bfly/block_model.hpp"
#include "bfly/butterfly.hpp"
#include "bfly/exact.hpp"
#include "bfly/experiments.hpp"
#include "bfly/gepp.hpp"
#include "bfly/lattice.hpp"
#include "bfly/samplers.hpp"

using namespace bfly;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    o.pass = false;
    o.detail += "; over time budget";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::vector<Permutation> all_perms(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

int main() {
  criterion(1, "simple height counts at n=10 by enumeration", 5, [] {
    std::map<std::int64_t, BigInt> seen;
    for (const auto& p : enumerate_simple(10)) seen[Bst(p).height()] += 1;
    const std::map<std::int64_t, BigInt> want{{1023, 2}, {512, 20}, {258, 90}, {134, 240}, {78, 420}, {62, 252}};
    std::ostringstream d;
    for (const auto& [h, c] : seen) d << h << ':' << c << ' ';
    return Outcome{seen == want && seen == simple_height_counts(10), d.str()};
  });

  criterion(2, "simple mean height 2(3/2)^n - 2 by enumeration, n <= 12", 0, [] {
    for (int n = 1; n <= 12; ++n) {
      BigInt total = 0;
      for (const auto& p : enumerate_simple(n)) total += Bst(p).height();
      const Rational mean(total, BigInt(1) << n);
      if (mean != simple_height_mean(n)) return Outcome{false, "mismatch at n=" + std::to_string(n)};
    }
    return Outcome{true, "n=12 mean " + simple_height_mean(12).str()};
  });

  criterion(3, "simple butterflies: h = l + r, {LIS,LDS} = {l+1,r+1}, LIS*LDS = 2^n, n <= 8", 10, [] {
    std::uint64_t checked = 0;
    for (int n = 1; n <= 8; ++n)
      for (const auto& p : enumerate_simple(n)) {
        const auto s = summary(p);
        const int a = lis(p), b = lds(p);
        const bool sets = (a == s.left_edge + 1 && b == s.right_edge + 1) || (a == s.right_edge + 1 && b == s.left_edge + 1);
        if (s.height != s.left_edge + s.right_edge || !sets || a * b != p.size())
          return Outcome{false, "counterexample " + p.to_string()};
        ++checked;
      }
    return Outcome{true, std::to_string(checked) + " permutations"};
  });

  criterion(4, "B_4 oracle: recursion = BST, cycle_count = r + 1, exact law = enumeration", 60, [] {
    std::map<Triple, BigInt> hist;
    std::map<std::int64_t, BigInt> cycles, edges;
    std::uint64_t recursion_bad = 0, cycle_bad = 0;
    std::string first_cycle_bad;
    const auto range = enumerate_nonsimple(4);
    for (std::uint64_t i = 0; i < range.size(); ++i) {
      const auto shape = range.shape_at(i);
      const auto p = build(shape);
      const auto s = summary(p);
      if (stats_recursion_nonsimple(shape) != s) ++recursion_bad;
      const int c = cycle_count(p);
      if (c != s.right_edge + 1 && cycle_bad++ == 0) first_cycle_bad = p.to_string();
      cycles[c] += 1;
      edges[s.right_edge + 1] += 1;
      hist[{s.height, s.left_edge, s.right_edge}] += 1;
    }
    const bool law = triple_dist_nonsimple(4).weights == hist;
    std::ostringstream d;
    d << "recursion mismatches " << recursion_bad << "; exact law " << (law ? "equal" : "differs")
      << "; cycle_count != r+1 for " << cycle_bad << "/" << range.size();
    if (cycle_bad) d << " (first " << first_cycle_bad << ")";
    d << "; in distribution " << (cycles == edges ? "equal" : "differs");
    return Outcome{recursion_bad == 0 && law && cycle_bad == 0, d.str()};
  });

  criterion(5, "mean height bounds and constants", 0, [] {
    std::ostringstream d;
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
      const auto mean = exact_mean_height(n);
      const auto [lo, hi] = nonsimple_mean_bounds(n);
      ok = ok && lo <= to_double(mean) && to_double(mean) <= hi;
      d << "n=" << n << " " << lo << "<=" << to_double(mean) << "<=" << hi << "; ";
    }
    BigInt total = 0;
    for (const auto& p : enumerate_nonsimple(2)) total += Bst(p).height();
    ok = ok && Rational(total, 8) == Rational(5, 2);
    const auto [lo10, hi10] = nonsimple_mean_bounds(10);
    ok = ok && fixed(lo10, 2) == "113.33" && fixed(hi10, 2) == "1313.53";
    d << "n=10 " << fixed(lo10, 2) << ", " << fixed(hi10, 2) << "; ";
    const auto k = constants();
    ok = ok && fixed(k.beta, 6) == "0.913189" && fixed(k.d, 5) == "2.60958" && fixed(k.xi, 5) == "1.88320" &&
         fixed(k.Cstar, 4) == "1.5601" && fixed(k.alpha, 5) == "0.58496" && std::abs(k.cstar - 4.31107) <= 1e-4;
    d << "beta " << fixed(k.beta, 6) << " d " << fixed(k.d, 5) << " xi " << fixed(k.xi, 5) << " C* "
      << fixed(k.Cstar, 4) << " alpha " << fixed(k.alpha, 5) << " c* " << fixed(k.cstar, 5);
    return Outcome{ok, d.str()};
  });

  criterion(6, "nonsimple heights at n=10, 10000 trials: mean in [113,126], min >= 62", 30, [] {
    const auto r = run_nonsimple_heights(10, 10000, kDefaultSeed);
    return Outcome{r.mean >= 113 && r.mean <= 126 && r.min >= 62,
                   "mean " + fixed(r.mean, 3) + " min " + std::to_string(r.min) + " max " + std::to_string(r.max)};
  });

  criterion(7, "left-to-right maxima over S_n follow the Stirling law, mean H_n, n <= 7", 0, [] {
    for (int n = 1; n <= 7; ++n) {
      std::map<int, BigInt> counts;
      BigInt sum = 0;
      for (const auto& p : all_perms(n)) {
        counts[ltr_maxima_len(p)] += 1;
        sum += ltr_maxima_len(p);
      }
      const auto pmf = stirling1_pmf(n);
      const Rational nf(factorial(n));
      for (int k = 1; k <= n; ++k)
        if (Rational(counts[k]) / nf != pmf[static_cast<std::size_t>(k - 1)])
          return Outcome{false, "pmf mismatch n=" + std::to_string(n)};
      if (Rational(sum) / nf != harmonic(n)) return Outcome{false, "mean mismatch n=" + std::to_string(n)};
    }
    return Outcome{true, "H_7 = " + harmonic(7).str()};
  });

  criterion(8, "block height equals built tree height", 0, [] {
    std::uint64_t cases = 0;
    const auto check = [&](const Permutation& rho, const std::vector<Permutation>& blocks) {
      ++cases;
      return block_height(BlockDecomposition::from_blocks(rho, blocks)) == Bst(assemble_wreath(rho, blocks)).height();
    };
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) {
        const auto sn = all_perms(n);
        const auto sm = all_perms(m);
        std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
        for (const auto& rho : sm) {
          std::fill(idx.begin(), idx.end(), 0);
          while (true) {
            std::vector<Permutation> blocks;
            for (auto i : idx) blocks.push_back(sn[i]);
            if (!check(rho, blocks)) return Outcome{false, "exhaustive mismatch"};
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == sn.size()) idx[pos++] = 0;
            if (pos == idx.size()) break;
          }
        }
      }
    const Rng base(kDefaultSeed, 8);
    for (std::uint64_t t = 0; t < 1000; ++t) {
      Rng r = base.substream(t);
      const int n = 1 + static_cast<int>(r.below(8));
      const int m = 1 + static_cast<int>(r.below(8));
      const auto rho = uniform_permutation(m, r);
      std::vector<Permutation> blocks;
      for (int i = 0; i < m; ++i) blocks.push_back(uniform_permutation(n, r));
      if (!check(rho, blocks)) return Outcome{false, "random mismatch at trial " + std::to_string(t)};
    }
    return Outcome{true, std::to_string(cases) + " cases"};
  });

  criterion(9, "block vs uniform scaled height difference at n=10^4, m=2 in [0.6,1.4]", 0, [] {
    const auto r = run_block_diff(10000, 2, 2000, kDefaultSeed);
    return Outcome{r.difference >= 0.6 && r.difference <= 1.4,
                   "difference " + fixed(r.difference, 4) + " +- " + fixed(r.difference_stderr, 4)};
  });

  criterion(10, "KS distance of standardized log-heights (n=400, 10^5 samples) <= 0.05", 0, [] {
    const auto r = run_clt_simple(400, 100000, kDefaultSeed);
    return Outcome{r.ks <= 0.05, "ks " + fixed(r.ks, 4) + ", exact-law ks " + fixed(r.ks_population, 4)};
  });

  criterion(11, "GEPP permutations: membership, uniformity, reconstruction", 0, [] {
    const auto m4 = run_gepp_check(4, 1000, kDefaultSeed, ButterflyFamily::Nonsimple, 1000);
    const Rng rng(kDefaultSeed);
    const auto u2 = uniformity_check(2, 80000, rng, ButterflyFamily::Nonsimple);
    const auto u3 = uniformity_check(3, 256000, rng, ButterflyFamily::Nonsimple);
    const bool ok = m4.nonmembers == 0 && m4.max_reconstruction_error <= 1e-9 && u2.nonmembers == 0 &&
                    u3.nonmembers == 0 && u2.chi_square.p_value > 1e-3 && u3.chi_square.p_value > 1e-3;
    std::ostringstream d;
    d << "n=4 nonmembers " << m4.nonmembers << " max |PB-LU| " << m4.max_reconstruction_error << "; B_2 p "
      << fixed(u2.chi_square.p_value, 4) << "; B_3 p " << fixed(u3.chi_square.p_value, 4);
    return Outcome{ok, d.str()};
  });

  criterion(12, "Boolean lattice degree multiset equals simple height counts, n <= 12", 0, [] {
    for (int n = 1; n <= 12; ++n) {
      std::map<std::int64_t, BigInt> dm;
      for (const auto& [deg, c] : degree_multiset(n)) dm[deg] = c;
      if (dm != simple_height_counts(n)) return Outcome{false, "mismatch at n=" + std::to_string(n)};
    }
    return Outcome{true, ""};
  });

  std::printf("%d criteria failed\n", failures);
  return failures ? 1 : 0;
}

// Experiment harness. Every subcommand writes one table (CSV or JSON) whose
// metadata records the subcommand, its parameters and the seed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "bfly/experiments.hpp"

namespace {

std::vector<std::pair<int, int>> parse_grid(const std::string& text) {
  std::vector<std::pair<int, int>> grid;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto x = cell.find('x');
    if (x == std::string::npos) throw CLI::ValidationError("--grid", "expected entries like 50x50");
    grid.emplace_back(std::stoi(cell.substr(0, x)), std::stoi(cell.substr(x + 1)));
  }
  if (grid.empty()) throw CLI::ValidationError("--grid", "empty grid");
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Butterfly permutation and binary search tree experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = bfly::kDefaultSeed;
  std::optional<std::uint64_t> trials;
  std::string out;
  std::string format = "csv";
  app.add_option("--seed", seed, "64-bit seed")->capture_default_str();
  app.add_option("--trials", trials, "Number of Monte Carlo trials (subcommand default if omitted)");
  app.add_option("--out", out, "Output path (stdout if omitted)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  // One size per subcommand: CLI11 writes defaults into the bound variable.
  struct {
    int table1 = 10, fig8 = 10, thm2 = 10000, clt = 400, bounds = 10;
    int gepp = 4, lattice = 10, pmf = 10, law = 4;
  } n;
  int m = 2;
  std::int64_t offset = 0;
  int exact_max = 4;
  std::size_t cap = bfly::kDefaultSupportCap;
  std::string grid = "50x50,3x100,3x1000,3x10000,1x10";
  std::string family = "nonsimple";
  std::string kind;
  std::string law;

  auto* table1 = app.add_subcommand("table1", "Simple butterfly height counts, closed form vs enumeration");
  table1->add_option("--n", n.table1, "Depth")->capture_default_str();

  auto* fig8 = app.add_subcommand("fig8", "Height histogram of random nonsimple butterfly trees");
  fig8->add_option("--n", n.fig8, "Depth")->capture_default_str();

  auto* thm2 = app.add_subcommand("theorem2-diff", "Block vs uniform tree height difference");
  thm2->add_option("--n", n.thm2, "Block size")->capture_default_str();
  thm2->add_option("--m", m, "Number of blocks")->capture_default_str();

  auto* clt = app.add_subcommand("clt-simple", "KS distance of standardized log-heights to the half-normal");
  clt->add_option("--n", n.clt, "Depth")->capture_default_str();
  clt->add_option("--offset", offset, "Added to h before taking log2")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "Mean height bounds and exact means");
  bounds->add_option("--n-max", n.bounds, "Largest depth")->capture_default_str();
  bounds->add_option("--exact-max", exact_max, "Largest depth for the exact mean")->capture_default_str();
  bounds->add_option("--cap", cap, "Support cap for the exact law")->capture_default_str();

  auto* conj = app.add_subcommand("explore-conjecture", "Exploratory block tree heights over an (n, m) grid");
  conj->add_option("--grid", grid, "Comma separated NxM pairs")->capture_default_str();

  auto* gepp = app.add_subcommand("gepp-check", "GEPP permutations of random butterfly matrices");
  gepp->add_option("--n", n.gepp, "Depth")->capture_default_str();
  gepp->add_option("--family", family, "Butterfly family")
      ->check(CLI::IsMember({"simple", "nonsimple"}))
      ->capture_default_str();

  auto* lattice = app.add_subcommand("lattice-degrees", "Boolean lattice degrees vs simple height counts");
  lattice->add_option("--n", n.lattice, "Dimension")->capture_default_str();

  auto* pmf = app.add_subcommand("pmf", "Exact law export");
  pmf->add_option("--kind", kind, "Law")
      ->required()
      ->check(CLI::IsMember({"stirling", "simple-height", "nonsimple-height", "edge-moments", "cycle-moments"}));
  pmf->add_option("--n", n.pmf, "Size or order")->capture_default_str();

  auto* lawh = app.add_subcommand("law-hist", "Histogram of the recursive LIS or cycle sampler");
  lawh->add_option("--law", law, "lis or cycle")->required()->check(CLI::IsMember({"lis", "cycle"}));
  lawh->add_option("--n", n.law, "Depth")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  const auto t = [&](std::uint64_t fallback) { return trials.value_or(fallback); };

  try {
    bfly::Table table;
    if (*table1) {
      table = bfly::to_table(bfly::run_simple_counts(n.table1));
    } else if (*fig8) {
      table = bfly::to_table(bfly::run_nonsimple_heights(n.fig8, t(10000), seed));
    } else if (*thm2) {
      table = bfly::to_table(bfly::run_block_diff(n.thm2, m, t(2000), seed));
    } else if (*clt) {
      table = bfly::to_table(bfly::run_clt_simple(n.clt, t(100000), seed, offset));
    } else if (*bounds) {
      table = bfly::to_table(bfly::run_bounds(n.bounds, exact_max, cap), n.bounds);
    } else if (*conj) {
      table = bfly::to_table(bfly::run_block_grid(parse_grid(grid), t(500), seed), t(500), seed);
    } else if (*gepp) {
      const auto fam = family == "simple" ? bfly::ButterflyFamily::Simple : bfly::ButterflyFamily::Nonsimple;
      table = bfly::to_table(bfly::run_gepp_check(n.gepp, t(1000), seed, fam));
    } else if (*lattice) {
      table = bfly::lattice_degrees_table(n.lattice);
    } else if (*pmf) {
      table = bfly::pmf_table(kind, n.pmf);
    } else if (*lawh) {
      table = bfly::to_table(bfly::run_law_hist(law, n.law, t(100000), seed));
    }

    const std::string text = format == "json" ? table.to_json() : table.to_csv();
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + out);
      f << text;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

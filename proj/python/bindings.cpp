#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bfly/block_model.hpp"
#include "bfly/bst.hpp"
#include "bfly/butterfly.hpp"
#include "bfly/exact.hpp"
#include "bfly/experiments.hpp"
#include "bfly/gepp.hpp"
#include "bfly/lattice.hpp"
#include "bfly/perm.hpp"
#include "bfly/samplers.hpp"

namespace py = pybind11;
using namespace bfly;

namespace {

// Exact values cross the boundary as (numerator, denominator) decimal strings;
// the Python package turns them into fractions.Fraction.
std::pair<std::string, std::string> frac(const Rational& q) {
  return {BigInt(numerator(q)).str(), BigInt(denominator(q)).str()};
}

std::vector<std::pair<std::string, std::string>> fracs(const std::vector<Rational>& qs) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& q : qs) out.push_back(frac(q));
  return out;
}

template <class K>
std::map<K, std::string> big_counts(const std::map<K, BigInt>& m) {
  std::map<K, std::string> out;
  for (const auto& [k, v] : m) out[k] = v.str();
  return out;
}

std::vector<int> words(const Permutation& p) { return {p.word().begin(), p.word().end()}; }

ShapeKind kind_of(const std::string& s) {
  if (s == "simple") return ShapeKind::Simple;
  if (s == "nonsimple") return ShapeKind::Nonsimple;
  throw std::invalid_argument("kind must be 'simple' or 'nonsimple'");
}

ButterflyFamily family_of(const std::string& s) {
  return kind_of(s) == ShapeKind::Simple ? ButterflyFamily::Simple : ButterflyFamily::Nonsimple;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Butterfly permutations, binary search trees and their height laws";

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("word"))
      .def_static("identity", &Permutation::identity)
      .def_static("parse", &Permutation::parse)
      .def_property_readonly("word", &words)
      .def("__len__", &Permutation::size)
      .def("__call__", [](const Permutation& p, int j) {
        if (j < 1 || j > p.size()) throw py::index_error("argument outside 1..n");
        return p(j);
      })
      .def("inverse", &Permutation::inverse)
      .def("__str__", &Permutation::to_string)
      .def("__repr__", [](const Permutation& p) { return "Permutation(" + p.to_string() + ")"; })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__hash__", [](const Permutation& p) { return py::hash(py::tuple(py::cast(words(p)))); });

  m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
  m.def("kron", py::overload_cast<const Permutation&, const Permutation&>(&kron));
  m.def("direct_sum", &direct_sum);
  m.def("skew_sum", &skew_sum);
  m.def("assemble_wreath", [](const Permutation& rho, const std::vector<Permutation>& blocks) {
    return assemble_wreath(rho, blocks);
  });
  m.def("lis", &lis);
  m.def("lds", &lds);
  m.def("cycle_count", &cycle_count);
  m.def("ltr_maxima_len", &ltr_maxima_len);
  m.def("ltr_minima_len", &ltr_minima_len);

  py::class_<BstSummary>(m, "BstSummary")
      .def_readonly("height", &BstSummary::height)
      .def_readonly("left_edge", &BstSummary::left_edge)
      .def_readonly("right_edge", &BstSummary::right_edge)
      .def_readonly("size", &BstSummary::size)
      .def("__eq__", [](const BstSummary& a, const BstSummary& b) { return a == b; })
      .def("__repr__", [](const BstSummary& s) {
        return "BstSummary(height=" + std::to_string(s.height) + ", left_edge=" + std::to_string(s.left_edge) +
               ", right_edge=" + std::to_string(s.right_edge) + ", size=" + std::to_string(s.size) + ")";
      });

  py::class_<Bst>(m, "Bst")
      .def(py::init<const Permutation&>())
      .def_property_readonly("root", &Bst::root)
      .def_property_readonly("height", &Bst::height)
      .def("left", &Bst::left)
      .def("right", &Bst::right)
      .def("parent", &Bst::parent)
      .def("depth", &Bst::depth)
      .def("summary", &Bst::summary)
      .def("dump", &Bst::dump);
  m.def("summary", py::overload_cast<const Permutation&>(&summary));

  m.def("build_butterfly", [](const std::string& kind, const std::string& bits) {
    return build(ButterflyShape::parse(kind_of(kind), bits));
  }, py::arg("kind"), py::arg("bits"), "Build from a root-first bit string such as '101'.");
  m.def("stats_recursion", [](const std::string& kind, const std::string& bits) {
    const auto shape = ButterflyShape::parse(kind_of(kind), bits);
    return shape.kind() == ShapeKind::Simple ? stats_recursion_simple(shape) : stats_recursion_nonsimple(shape);
  });
  m.def("is_simple_butterfly", &is_simple_butterfly);
  m.def("is_nonsimple_butterfly", &is_nonsimple_butterfly);
  m.def("enumerate_butterflies", [](const std::string& kind, int n) {
    const auto range = kind_of(kind) == ShapeKind::Simple ? enumerate_simple(n) : enumerate_nonsimple(n);
    return std::vector<Permutation>(range.begin(), range.end());
  });

  m.def("sample", [](const std::string& what, int n, int m_, std::uint64_t seed, std::uint64_t count) {
    const Rng base(seed);
    std::vector<Permutation> out;
    for (std::uint64_t t = 0; t < count; ++t) {
      Rng r = base.substream(t);
      if (what == "uniform") out.push_back(uniform_permutation(n, r));
      else if (what == "wreath") out.push_back(sample_wreath(n, m_, r));
      else if (what == "kron") out.push_back(sample_kron(m_, n, r));
      else if (what == "simple") out.push_back(sample_simple_butterfly(n, r));
      else if (what == "nonsimple") out.push_back(sample_nonsimple_butterfly(n, r));
      else throw std::invalid_argument("unknown sampler '" + what + "'");
    }
    return out;
  }, py::arg("what"), py::arg("n"), py::arg("m") = 1, py::arg("seed") = kDefaultSeed, py::arg("count") = 1);

  m.def("stirling1_unsigned", [](int n, int k) { return stirling1_unsigned(n, k).str(); });
  m.def("_stirling1_pmf", [](int n) { return fracs(stirling1_pmf(n)); });
  m.def("_harmonic", [](int n, int order) { return frac(harmonic(n, order)); }, py::arg("n"), py::arg("order") = 1);
  m.def("_simple_height_counts", [](int n) { return big_counts(simple_height_counts(n)); });
  m.def("_simple_height_mean", [](int n) { return frac(simple_height_mean(n)); });
  m.def("_edge_moments", [](int n) {
    const auto [a, b] = edge_moments(n);
    return std::vector{frac(a), frac(b)};
  });
  m.def("_cycle_moments", [](int k) { return fracs(cycle_moments(k)); });
  m.def("_exact_mean_height", [](int n) { return frac(exact_mean_height(n)); });
  m.def("_triple_distribution", [](int n) {
    const auto d = triple_dist_nonsimple(n);
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::string> w;
    for (const auto& [t, c] : d.weights) w[{t.h, t.l, t.r}] = c.str();
    return std::pair{d.denominator_exponent, w};
  });
  m.def("devroye_constant", &devroye_constant, py::arg("tol") = 1e-12);
  m.def("constants", [] {
    const auto c = constants();
    return std::map<std::string, double>{{"cstar", c.cstar}, {"alpha", c.alpha}, {"lambda", c.lambda},
                                         {"Cstar", c.Cstar}, {"xi", c.xi},       {"beta", c.beta},
                                         {"d", c.d}};
  });
  m.def("nonsimple_mean_bounds", &nonsimple_mean_bounds);
  m.def("bound_sequences", [](int n_max) {
    const auto s = bound_sequences(n_max);
    return std::pair{s.a, s.b};
  });

  m.def("block_height", [](const Permutation& rho, const std::vector<Permutation>& blocks) {
    return block_height(BlockDecomposition::from_blocks(rho, blocks));
  });

  m.def("gepp_permutation", [](const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<double> flat;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != n) throw std::invalid_argument("matrix must be square");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return gepp_permutation(SquareMatrix(n, std::move(flat)));
  });
  m.def("uniformity_check", [](int n, std::uint64_t trials, std::uint64_t seed, const std::string& family) {
    const auto r = uniformity_check(n, trials, Rng(seed), family_of(family));
    return py::dict(py::arg("classes") = r.classes, py::arg("counts") = r.counts,
                    py::arg("nonmembers") = r.nonmembers, py::arg("statistic") = r.chi_square.statistic,
                    py::arg("dof") = r.chi_square.dof, py::arg("p_value") = r.chi_square.p_value);
  });

  m.def("degree_multiset", &degree_multiset);

  // Experiments return the same CSV/JSON text as the command line tool.
  const auto out = [](const Table& t, const std::string& format) {
    if (format == "csv") return t.to_csv();
    if (format == "json") return t.to_json();
    throw std::invalid_argument("format must be 'csv' or 'json'");
  };
  m.def("simple_height_table", [out](int n, const std::string& f) { return out(to_table(run_simple_counts(n)), f); },
        py::arg("n") = 10, py::arg("format") = "csv");
  m.def("nonsimple_height_sample", [out](int n, std::uint64_t trials, std::uint64_t seed, const std::string& f) {
    return out(to_table(run_nonsimple_heights(n, trials, seed)), f);
  }, py::arg("n") = 10, py::arg("trials") = 10000, py::arg("seed") = kDefaultSeed, py::arg("format") = "csv");
  m.def("block_height_difference", [out](int n, int m_, std::uint64_t trials, std::uint64_t seed, const std::string& f) {
    return out(to_table(run_block_diff(n, m_, trials, seed)), f);
  }, py::arg("n") = 10000, py::arg("m") = 2, py::arg("trials") = 2000, py::arg("seed") = kDefaultSeed,
        py::arg("format") = "csv");
  m.def("clt_simple", [out](int n, std::uint64_t samples, std::uint64_t seed, std::int64_t offset, const std::string& f) {
    return out(to_table(run_clt_simple(n, samples, seed, offset)), f);
  }, py::arg("n") = 400, py::arg("samples") = 100000, py::arg("seed") = kDefaultSeed, py::arg("offset") = 0,
        py::arg("format") = "csv");
  m.def("bounds", [out](int n_max, const std::string& f) { return out(to_table(run_bounds(n_max), n_max), f); },
        py::arg("n_max") = 10, py::arg("format") = "csv");
  m.def("pmf", [out](const std::string& kind, int n, const std::string& f) { return out(pmf_table(kind, n), f); },
        py::arg("kind"), py::arg("n"), py::arg("format") = "csv");
}

#include "bfly/gepp.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace bfly {

SquareMatrix::SquareMatrix(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("SquareMatrix: order must be >= 1");
  a_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0);
}

SquareMatrix::SquareMatrix(int order, std::vector<double> entries) : order_(order), a_(std::move(entries)) {
  if (order < 1) throw std::invalid_argument("SquareMatrix: order must be >= 1");
  if (a_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order))
    throw std::invalid_argument("SquareMatrix: entry count must be order^2");
  for (double x : a_)
    if (!std::isfinite(x)) throw std::invalid_argument("SquareMatrix: entries must be finite");
}

SquareMatrix SquareMatrix::identity(int order) {
  SquareMatrix m(order);
  for (int i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::permutation(const Permutation& p) {
  SquareMatrix m(p.size());
  for (int j = 1; j <= p.size(); ++j) m(p(j) - 1, j - 1) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix t(order_);
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
  if (x.order_ != y.order_) throw std::invalid_argument("matrix product: order mismatch");
  const int n = x.order_;
  SquareMatrix z(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double xik = x(i, k);
      if (xik == 0.0) continue;
      for (int j = 0; j < n; ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

SquareMatrix kron(const SquareMatrix& x, const SquareMatrix& y) {
  const int p = x.order_;
  const int q = y.order_;
  SquareMatrix z(p * q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < q; ++k)
        for (int l = 0; l < q; ++l) z(i * q + k, j * q + l) = x(i, j) * y(k, l);
  return z;
}

double SquareMatrix::max_abs_diff(const SquareMatrix& other) const {
  if (order_ != other.order_) throw std::invalid_argument("max_abs_diff: order mismatch");
  double d = 0;
  for (std::size_t i = 0; i < a_.size(); ++i) d = std::max(d, std::abs(a_[i] - other.a_[i]));
  return d;
}

SquareMatrix rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return SquareMatrix(2, {c, s, -s, c});
}

SquareMatrix simple_butterfly_matrix(std::span<const double> angles) {
  if (angles.empty()) throw std::invalid_argument("simple_butterfly_matrix: need at least one angle");
  SquareMatrix acc = SquareMatrix::identity(1);
  for (double theta : angles) acc = kron(rotation(theta), acc);
  return acc;
}

namespace {

void fill_nonsimple(SquareMatrix& out, int row0, int col0, int order, std::span<const double> angles,
                    std::size_t node) {
  if (order == 1) {
    out(row0, col0) = 1.0;
    return;
  }
  const int half = order / 2;
  // Build A1 and A2 in place, then mix the block rows with the rotation.
  fill_nonsimple(out, row0, col0, half, angles, 2 * node + 1);
  fill_nonsimple(out, row0 + half, col0 + half, half, angles, 2 * node + 2);
  const double c = std::cos(angles[node]);
  const double s = std::sin(angles[node]);
  for (int i = 0; i < half; ++i)
    for (int j = 0; j < half; ++j) {
      const double a1 = out(row0 + i, col0 + j);
      const double a2 = out(row0 + half + i, col0 + half + j);
      out(row0 + i, col0 + j) = c * a1;
      out(row0 + i, col0 + half + j) = s * a2;
      out(row0 + half + i, col0 + j) = -s * a1;
      out(row0 + half + i, col0 + half + j) = c * a2;
    }
}

}  // namespace

SquareMatrix nonsimple_butterfly_matrix(int depth, std::span<const double> angles) {
  if (depth < 1 || depth > 14) throw std::invalid_argument("nonsimple_butterfly_matrix: depth must be in 1..14");
  const int order = 1 << depth;
  if (angles.size() != static_cast<std::size_t>(order - 1))
    throw std::invalid_argument("nonsimple_butterfly_matrix: need 2^n - 1 angles");
  SquareMatrix m(order);
  fill_nonsimple(m, 0, 0, order, angles, 0);
  return m;
}

SquareMatrix random_simple_butterfly_matrix(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_simple_butterfly_matrix: n must be >= 1");
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (auto& t : angles) t = 2.0 * std::numbers::pi * rng.uniform01();
  return simple_butterfly_matrix(angles);
}

SquareMatrix random_nonsimple_butterfly_matrix(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_nonsimple_butterfly_matrix: n must be >= 1");
  std::vector<double> angles((std::size_t{1} << n) - 1);
  for (auto& t : angles) t = 2.0 * std::numbers::pi * rng.uniform01();
  return nonsimple_butterfly_matrix(n, angles);
}

GeppFactors gepp(const SquareMatrix& m) {
  const int n = m.order();
  SquareMatrix u = m;
  SquareMatrix l = SquareMatrix::identity(n);
  // order[k]: original row now in position k.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;

  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(u(k, k));
    for (int i = k + 1; i < n; ++i)
      if (std::abs(u(i, k)) > best) {
        best = std::abs(u(i, k));
        piv = i;
      }
    if (best < kSingularPivot) throw std::domain_error("gepp: numerically singular pivot column");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(u(k, j), u(piv, j));
      for (int j = 0; j < k; ++j) std::swap(l(k, j), l(piv, j));
      std::swap(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(piv)]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = u(i, k) / u(k, k);
      l(i, k) = f;
      u(i, k) = 0.0;
      for (int j = k + 1; j < n; ++j) u(i, j) -= f * u(k, j);
    }
  }
  // Row k of P A is row order[k] of A, i.e. P e_{order[k]} = e_k.
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) word[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k + 1;
  return {Permutation(std::move(word)), std::move(l), std::move(u)};
}

Permutation gepp_permutation(const SquareMatrix& m) { return gepp(m).perm; }

UniformityReport uniformity_check(int n, std::uint64_t trials, const Rng& rng, ButterflyFamily family) {
  const bool simple = family == ButterflyFamily::Simple;
  if (n < 1) throw std::invalid_argument("uniformity_check: n must be >= 1");
  if (simple ? n > 10 : n > 3)
    throw std::invalid_argument("uniformity_check: n exceeds the enumeration cap for this family");
  if (trials == 0) throw std::invalid_argument("uniformity_check: trials must be positive");

  UniformityReport rep;
  rep.family = family;
  rep.n = n;
  rep.trials = trials;
  const auto range = simple ? enumerate_simple(n) : enumerate_nonsimple(n);
  std::map<Permutation, std::size_t> index;
  for (auto p : range) {
    index.emplace(p, rep.classes.size());
    rep.classes.push_back(std::move(p));
  }
  rep.counts.assign(rep.classes.size(), 0);

  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng sub = rng.substream(t);
    const auto mat = simple ? random_simple_butterfly_matrix(n, sub) : random_nonsimple_butterfly_matrix(n, sub);
    const auto it = index.find(gepp_permutation(mat));
    if (it == index.end())
      ++rep.nonmembers;
    else
      ++rep.counts[it->second];
  }
  rep.chi_square = chi_square_uniform(rep.counts);
  return rep;
}

}  // namespace bfly

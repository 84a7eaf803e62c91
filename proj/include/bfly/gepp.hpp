#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bfly/butterfly.hpp"
#include "bfly/gof.hpp"
#include "bfly/perm.hpp"
#include "bfly/rng.hpp"

namespace bfly {

/// Dense row-major real matrix; entries addressed 0-based.
class SquareMatrix {
 public:
  explicit SquareMatrix(int order);  // zero matrix
  SquareMatrix(int order, std::vector<double> entries);

  static SquareMatrix identity(int order);
  /// Column j has its one in row p(j): P e_j = e_{p(j)}.
  static SquareMatrix permutation(const Permutation& p);

  int order() const { return order_; }
  double& operator()(int i, int j) { return a_[index(i, j)]; }
  double operator()(int i, int j) const { return a_[index(i, j)]; }
  std::span<const double> entries() const { return a_; }

  SquareMatrix transpose() const;
  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y);
  friend SquareMatrix kron(const SquareMatrix& x, const SquareMatrix& y);
  double max_abs_diff(const SquareMatrix& other) const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(j);
  }
  int order_;
  std::vector<double> a_;
};

/// [[cos t, sin t], [-sin t, cos t]].
SquareMatrix rotation(double theta);

/// R(angles[n-1]) (x) ... (x) R(angles[0]), matching build_simple's factor order.
SquareMatrix simple_butterfly_matrix(std::span<const double> angles);

/// (R(theta) (x) I)(A1 (+) A2) with one angle per node of a full binary tree
/// of depth n in level order (2^n - 1 angles); the children of node i are
/// 2i+1 (A1) and 2i+2 (A2), and the recursion bottoms out at [1].
SquareMatrix nonsimple_butterfly_matrix(int depth, std::span<const double> angles);

/// Angles uniform on [0, 2 pi).
SquareMatrix random_simple_butterfly_matrix(int n, Rng& rng);
SquareMatrix random_nonsimple_butterfly_matrix(int n, Rng& rng);

struct GeppFactors {
  Permutation perm;  // P_perm A = L U
  SquareMatrix lower;
  SquareMatrix upper;
};

inline constexpr double kSingularPivot = 1e-12;

/// Partial pivoting: at step k the row with the largest |a_ik|, i >= k, is
/// swapped into place, the smallest such index winning ties. Throws
/// std::domain_error when that largest entry is below kSingularPivot.
GeppFactors gepp(const SquareMatrix& m);
Permutation gepp_permutation(const SquareMatrix& m);

enum class ButterflyFamily { Simple, Nonsimple };

struct UniformityReport {
  ButterflyFamily family;
  int n = 0;
  std::uint64_t trials = 0;
  std::vector<Permutation> classes;   // enumerated group elements
  std::vector<std::uint64_t> counts;  // per class
  std::uint64_t nonmembers = 0;       // GEPP outputs outside the group
  ChiSquareResult chi_square;
};

/// Histogram of GEPP permutations of random butterfly matrices over the
/// enumerated group, with a chi-square test against uniform. Trial t uses
/// rng.substream(t). Caps: n <= 3 nonsimple, n <= 10 simple.
UniformityReport uniformity_check(int n, std::uint64_t trials, const Rng& rng, ButterflyFamily family);

}  // namespace bfly

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace bfly {

struct ChiSquareResult {
  double statistic = 0;
  int dof = 0;
  double p_value = 1;
};

/// Pearson goodness of fit of observed counts against class probabilities.
ChiSquareResult chi_square(std::span<const std::uint64_t> observed, std::span<const double> probs);

ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> observed);

/// chi_square after merging adjacent classes (in the given order) until every
/// pooled class expects at least `min_expected` observations.
ChiSquareResult chi_square_pooled(std::span<const std::uint64_t> observed, std::span<const double> probs,
                                  double min_expected = 5.0);

/// sup_x |F_n(x) - F(x)| over both sides of every jump of the empirical CDF.
double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf);

/// P(|Z| <= x) for standard normal Z.
double half_normal_cdf(double x);

}  // namespace bfly

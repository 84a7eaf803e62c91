#include "bfly/gof.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace bfly {

ChiSquareResult chi_square(std::span<const std::uint64_t> observed, std::span<const double> probs) {
  if (observed.size() != probs.size() || observed.size() < 2)
    throw std::invalid_argument("chi_square: need matching observed/probability vectors of length >= 2");
  const double total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  if (total == 0) throw std::invalid_argument("chi_square: no observations");
  ChiSquareResult r;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = total * probs[i];
    if (!(expected > 0)) throw std::invalid_argument("chi_square: class with zero expected count");
    const double diff = static_cast<double>(observed[i]) - expected;
    r.statistic += diff * diff / expected;
  }
  r.dof = static_cast<int>(observed.size()) - 1;
  const boost::math::chi_squared dist(r.dof);
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> observed) {
  const std::vector<double> probs(observed.size(), 1.0 / static_cast<double>(observed.size()));
  return chi_square(observed, probs);
}

ChiSquareResult chi_square_pooled(std::span<const std::uint64_t> observed, std::span<const double> probs,
                                  double min_expected) {
  if (observed.size() != probs.size()) throw std::invalid_argument("chi_square_pooled: size mismatch");
  const double total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  std::vector<std::uint64_t> obs;
  std::vector<double> pr;
  std::uint64_t acc_obs = 0;
  double acc_p = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    acc_obs += observed[i];
    acc_p += probs[i];
    if (acc_p * total >= min_expected) {
      obs.push_back(acc_obs);
      pr.push_back(acc_p);
      acc_obs = 0;
      acc_p = 0;
    }
  }
  if (acc_p > 0 || acc_obs > 0) {
    if (obs.empty()) throw std::invalid_argument("chi_square_pooled: too few observations");
    obs.back() += acc_obs;
    pr.back() += acc_p;
  }
  return chi_square(obs, pr);
}

double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0;
  std::size_t i = 0;
  while (i < sample.size()) {
    // Group ties so the jump at an atom is measured once on each side.
    std::size_t j = i;
    while (j < sample.size() && sample[j] == sample[i]) ++j;
    const double f = cdf(sample[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(j) / n - f));
    i = j;
  }
  return d;
}

double half_normal_cdf(double x) { return x <= 0 ? 0.0 : std::erf(x / std::sqrt(2.0)); }

}  // namespace bfly

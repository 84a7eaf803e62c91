#include "bfly/samplers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace bfly {

Permutation uniform_permutation(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("uniform_permutation: n must be >= 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (std::size_t i = w.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(w[i], w[j]);
  }
  return Permutation(std::move(w));
}

Permutation sample_wreath(int n, int m, Rng& rng) {
  if (n < 1 || m < 1) throw std::invalid_argument("sample_wreath: n, m must be >= 1");
  const auto rho = uniform_permutation(m, rng);
  std::vector<Permutation> blocks;
  blocks.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) blocks.push_back(uniform_permutation(n, rng));
  return assemble_wreath(rho, blocks);
}

Permutation sample_kron(int m, int n, Rng& rng) {
  if (n < 1 || m < 1) throw std::invalid_argument("sample_kron: n, m must be >= 1");
  const auto rho = uniform_permutation(m, rng);
  const auto pi = uniform_permutation(n, rng);
  return kron(rho, pi);
}

ButterflyShape sample_simple_shape(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_simple_shape: n must be >= 1");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (auto& b : bits) b = rng.fair_bit();
  return ButterflyShape::simple(std::move(bits));
}

ButterflyShape sample_nonsimple_shape(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_nonsimple_shape: n must be >= 1");
  std::vector<std::uint8_t> bits((std::size_t{1} << n) - 1);
  for (auto& b : bits) b = rng.fair_bit();
  return ButterflyShape::nonsimple(n, std::move(bits));
}

Permutation sample_simple_butterfly(int n, Rng& rng) {
  return build_simple(sample_simple_shape(n, rng));
}

Permutation sample_nonsimple_butterfly(int n, Rng& rng) {
  return build_nonsimple(sample_nonsimple_shape(n, rng));
}

std::int64_t sample_lis_law(int n, Rng& rng) {
  if (n < 0) throw std::invalid_argument("sample_lis_law: n must be >= 0");
  if (n == 0) return 1;
  const bool add = rng.fair_bit();
  const auto a = sample_lis_law(n - 1, rng);
  const auto b = sample_lis_law(n - 1, rng);
  return add ? a + b : std::max(a, b);
}

std::int64_t sample_cycle_law(int n, Rng& rng) {
  if (n < 0) throw std::invalid_argument("sample_cycle_law: n must be >= 0");
  if (n == 0) return 1;
  const bool add = rng.fair_bit();
  const auto a = sample_cycle_law(n - 1, rng);
  const auto b = sample_cycle_law(n - 1, rng);
  return add ? a + b : a;
}

}  // namespace bfly

#include "bfly/lattice.hpp"

#include <stdexcept>

namespace bfly {

namespace {

bool comparable(std::uint32_t a, std::uint32_t b) {
  return a != b && ((a & b) == a || (a & b) == b);
}

void check(int n, int cap) {
  if (n < 0 || n > cap)
    throw std::invalid_argument("lattice: n must be in 0.." + std::to_string(cap));
}

}  // namespace

std::map<std::int64_t, std::int64_t> degree_multiset(int n) {
  check(n, 20);
  std::map<std::int64_t, std::int64_t> out;
  std::int64_t binom = 1;  // C(n, k)
  for (int k = 0; k <= n; ++k) {
    out[(std::int64_t{1} << k) + (std::int64_t{1} << (n - k)) - 2] += binom;
    binom = binom * (n - k) / (k + 1);
  }
  return out;
}

std::vector<std::int64_t> explicit_degrees(int n) {
  check(n, 12);
  const std::uint32_t count = 1U << n;
  std::vector<std::int64_t> deg(count, 0);
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = a + 1; b < count; ++b)
      if (comparable(a, b)) {
        ++deg[a];
        ++deg[b];
      }
  return deg;
}

std::vector<std::pair<int, int>> adjacency_pattern(int n) {
  check(n, 12);
  const std::uint32_t count = 1U << n;
  std::vector<std::pair<int, int>> nz;
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b)
      if (comparable(a, b)) nz.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
  return nz;
}

}  // namespace bfly

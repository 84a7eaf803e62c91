#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace bfly {

// Comparability graph of the Boolean lattice on {1..n}: vertices are the 2^n
// subsets as bitmasks, adjacent when one strictly contains the other. A
// k-subset has degree 2^k + 2^(n-k) - 2.

/// Degree -> number of vertices, from binomial counts. n <= 20.
std::map<std::int64_t, std::int64_t> degree_multiset(int n);

/// Degree of every vertex by explicit pair enumeration. n <= 12.
std::vector<std::int64_t> explicit_degrees(int n);

/// 1-based (row, col) nonzeros of the adjacency matrix, vertices in
/// ascending bitmask order (vertex v is bitmask v-1), row-major. n <= 12.
std::vector<std::pair<int, int>> adjacency_pattern(int n);

}  // namespace bfly

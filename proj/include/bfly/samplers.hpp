#pragma once

#include <cstdint>

#include "bfly/butterfly.hpp"
#include "bfly/perm.hpp"
#include "bfly/rng.hpp"

namespace bfly {

/// Fisher-Yates over {1..n}.
Permutation uniform_permutation(int n, Rng& rng);

/// Uniform element of S_n wr S_m: an external rho ~ Unif(S_m) and m iid
/// blocks ~ Unif(S_n), assembled by assemble_wreath. Size n*m.
Permutation sample_wreath(int n, int m, Rng& rng);

/// Uniform element of S_m (x) S_n: kron(rho, pi) with rho ~ Unif(S_m), pi ~ Unif(S_n).
Permutation sample_kron(int m, int n, Rng& rng);

ButterflyShape sample_simple_shape(int n, Rng& rng);
ButterflyShape sample_nonsimple_shape(int n, Rng& rng);
Permutation sample_simple_butterfly(int n, Rng& rng);
Permutation sample_nonsimple_butterfly(int n, Rng& rng);

/// LIS law on B_n: X_0 = 1, X_{n+1} = X + X' on a set bit, max(X, X') otherwise.
std::int64_t sample_lis_law(int n, Rng& rng);

/// Cycle law on B_n: Y_0 = 1, Y_{n+1} = Y + bit * Y'.
std::int64_t sample_cycle_law(int n, Rng& rng);

}  // namespace bfly

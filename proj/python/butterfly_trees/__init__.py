"""Butterfly permutations, binary search trees and their height laws."""

from fractions import Fraction

from . import _core
from ._core import (
    Bst,
    BstSummary,
    Permutation,
    assemble_wreath,
    block_height,
    block_height_difference,
    bound_sequences,
    bounds,
    build_butterfly,
    clt_simple,
    compose,
    constants,
    cycle_count,
    degree_multiset,
    devroye_constant,
    direct_sum,
    enumerate_butterflies,
    gepp_permutation,
    is_nonsimple_butterfly,
    is_simple_butterfly,
    kron,
    lds,
    lis,
    ltr_maxima_len,
    ltr_minima_len,
    nonsimple_height_sample,
    nonsimple_mean_bounds,
    pmf,
    sample,
    simple_height_table,
    skew_sum,
    stats_recursion,
    summary,
    uniformity_check,
)


def _frac(pair):
    return Fraction(int(pair[0]), int(pair[1]))


def stirling1_unsigned(n, k):
    return int(_core.stirling1_unsigned(n, k))


def stirling1_pmf(n):
    """P(k records) for k = 1..n."""
    return [_frac(p) for p in _core._stirling1_pmf(n)]


def harmonic(n, order=1):
    return _frac(_core._harmonic(n, order))


def simple_height_counts(n):
    return {h: int(c) for h, c in _core._simple_height_counts(n).items()}


def simple_height_mean(n):
    return _frac(_core._simple_height_mean(n))


def edge_moments(n):
    return tuple(_frac(p) for p in _core._edge_moments(n))


def cycle_moments(k_max):
    return [_frac(p) for p in _core._cycle_moments(k_max)]


def exact_mean_height(n):
    return _frac(_core._exact_mean_height(n))


def triple_distribution(n):
    """{(h, l, r): probability} for uniform nonsimple butterflies of depth n."""
    exponent, weights = _core._triple_distribution(n)
    return {t: Fraction(int(w), 2**exponent) for t, w in weights.items()}


__all__ = [name for name in dir() if not name.startswith("_")]

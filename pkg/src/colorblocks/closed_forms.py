"""Closed-form block distributions and expectations for the classic families.

Each function constructs the exact polynomial or rational value directly from
the family formula; the test suite cross-checks every one of them against
brute-force enumeration and the transfer engine.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .algebra import LaurentPoly2, RationalGF
from .combinatorics import binomial, partition_count, stirling2
from .oracle import BlockDistribution

_Y = LaurentPoly2.y()
_X = LaurentPoly2.x()


def _require(condition: bool, message: str):
    if not condition:
        raise ValueError(message)


# -- trees --------------------------------------------------------------------


def tree_distribution(n: int, k: int) -> BlockDistribution:
    """k*y*((k-1)*y + 1)^(n-1); the same for every tree on n vertices."""
    _require(n >= 1, "n must be >= 1")
    _require(k >= 1, "k must be >= 1")
    poly = (k * _Y) * ((k - 1) * _Y + 1) ** (n - 1)
    return BlockDistribution(poly, n, k)


def tree_expected(n: int, k: int) -> Fraction:
    _require(n >= 1, "n must be >= 1")
    _require(k >= 1, "k must be >= 1")
    return Fraction((k - 1) * n + 1, k)


def pbt_distribution(h: int, k: int) -> BlockDistribution:
    """Perfect binary tree of height h: k*y*((k-1)*y + 1)^(2^(h+1) - 2)."""
    _require(h >= 0, "height must be >= 0")
    _require(k >= 1, "k must be >= 1")
    n = 2 ** (h + 1) - 1
    poly = (k * _Y) * ((k - 1) * _Y + 1) ** (2 ** (h + 1) - 2)
    return BlockDistribution(poly, n, k)


def pbt_expected(h: int, k: int) -> Fraction:
    _require(h >= 0, "height must be >= 0")
    _require(k >= 1, "k must be >= 1")
    return Fraction(k + 2 * (k - 1) * (2**h - 1), k)


# -- cycles -------------------------------------------------------------------


def cycle_block_count(n: int, i: int, k: int) -> int:
    """Number of k-colored partitions of the n-cycle with exactly i blocks."""
    _require(n >= 3, "cycle needs n >= 3")
    _require(1 <= i <= n, "block count i must satisfy 1 <= i <= n")
    _require(k >= 1, "k must be >= 1")
    if i == 1:
        return k
    return binomial(n, i) * ((k - 1) ** i + (k - 1) * (-1) ** i)


def cycle_distribution(n: int, k: int) -> BlockDistribution:
    _require(n >= 3, "cycle needs n >= 3")
    _require(k >= 1, "k must be >= 1")
    poly = LaurentPoly2({(0, i): cycle_block_count(n, i, k) for i in range(1, n + 1)})
    return BlockDistribution(poly, n, k)


def cycle_expected(n: int, k: int) -> Fraction:
    _require(n >= 3, "cycle needs n >= 3")
    _require(k >= 1, "k must be >= 1")
    return Fraction(k + n * (k**n - k ** (n - 1)), k**n)


def closed_walks_complete(m: int, length: int) -> Fraction:
    """Closed walks of the given length in the complete graph on m vertices,
    from a fixed start: ((m-1)^L + (m-1)(-1)^L) / m."""
    _require(m >= 1, "m must be >= 1")
    _require(length >= 0, "length must be >= 0")
    value = Fraction((m - 1) ** length + (m - 1) * (-1) ** length, m)
    assert value.denominator == 1
    return value


def open_walks_complete(m: int, length: int) -> Fraction:
    """Walks between one ordered pair of distinct vertices:
    ((m-1)^L - (-1)^L) / m."""
    _require(m >= 1, "m must be >= 1")
    _require(length >= 1, "length must be >= 1")
    value = Fraction((m - 1) ** length - (-1) ** length, m)
    assert value.denominator == 1
    return value


# -- complete and complete bipartite graphs -----------------------------------


def complete_block_count(n: int, i: int, k: int) -> int:
    """Partitions of K_n with exactly i blocks: S(n,i) * C(k,i) * i!.

    Returns 0 outside 1 <= i <= min(n, k); that keeps summations simple.
    """
    _require(n >= 1, "n must be >= 1")
    _require(k >= 1, "k must be >= 1")
    if i < 1 or i > min(n, k):
        return 0
    return stirling2(n, i) * binomial(k, i) * math.factorial(i)


def complete_distribution(n: int, k: int) -> BlockDistribution:
    poly = LaurentPoly2(
        {(0, i): complete_block_count(n, i, k) for i in range(1, min(n, k) + 1)}
    )
    return BlockDistribution(poly, n, k)


def complete_expected(n: int, k: int) -> Fraction:
    _require(n >= 1, "n must be >= 1")
    _require(k >= 1, "k must be >= 1")
    return k - Fraction((k - 1) ** n, k ** (n - 1))


def bipartite_expected(n: int, m: int, k: int) -> Fraction:
    """Expected blocks of the complete bipartite graph on n + m vertices."""
    _require(n >= 1 and m >= 1, "n and m must be >= 1")
    _require(k >= 1, "k must be >= 1")
    numerator = (
        n * k**n * (k - 1) ** m
        + m * k**m * (k - 1) ** n
        + k * (k**n - (k - 1) ** n) * (k**m - (k - 1) ** m)
    )
    return Fraction(numerator, k ** (n + m))


# -- complete-graph prisms ------------------------------------------------------


def complete_prism_expected(num_levels: int, n: int, k: int) -> Fraction:
    """Expected blocks of (complete graph on `num_levels` vertices) x path(n)."""
    ell = num_levels
    _require(ell >= 1, "the complete factor needs >= 1 vertices")
    _require(n >= 1, "the path factor needs >= 1 vertices")
    _require(k >= 1, "k must be >= 1")
    numerator = (k ** (2 * ell) - (k**2 - 1) ** ell) + (k - 1) ** ell * (
        (k + 1) ** ell - k**ell
    ) * n
    return Fraction(numerator, k ** (2 * ell - 1))


def k3_prism_gf(k: int) -> RationalGF:
    """The published generating function for (triangle x path) at a concrete k."""
    _require(k >= 1, "k must be >= 1")
    x, y = _X, _Y
    p = (k * x * y) * (
        1
        - (1 - k) * y * (3 - (2 - k) * y)
        - x
        * (1 - y)
        * (
            4
            - (13 - 5 * k) * y
            + (3 + k) * (3 - 2 * k) * y**2
            - (1 - k) * (1 + (3 - k) * k) * y**3
        )
        + x**2
        * (1 - y) ** 2
        * (3 - (2 + 4 * k) * y + (1 - k + 3 * k**2) * y**2 + k**2 * (1 - k) * y**3)
    )
    q = 1 - x * (
        5
        - 12 * (2 - k) * y
        + x**2
        * (1 - y) ** 2
        * (
            3
            - (2 + 4 * k) * y
            + k * (1 + 2 * k) * y**2
            + k * (1 - k) * y**3
            - (k - 1) ** 4 * y**4
        )
        - x
        * (1 - y)
        * (
            7
            - (25 - 8 * k) * y
            + (20 - 3 * k - 4 * k**2) * y**2
            + (5 - 24 * k + 21 * k**2 - 5 * k**3) * y**3
            - (7 - 18 * k + 17 * k**2 - 7 * k**3 + k**4) * y**4
        )
        + y**2 * (32 - 26 * k + 6 * k**2 - (13 - 14 * k + 6 * k**2 - k**3) * y)
    )
    return RationalGF(p, q)


# -- star-product state count ---------------------------------------------------


def star_profile_count(m: int) -> int:
    """Reduced boundary-state count for (star with m leaves) x path:
    sum of p(0) .. p(m)."""
    _require(m >= 0, "m must be >= 0")
    return sum(partition_count(i) for i in range(m + 1))

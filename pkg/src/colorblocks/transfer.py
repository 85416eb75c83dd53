"""Profile dynamic programming for products of a graph with a path.

The product G x P_n is built slice by slice.  A boundary state (profile)
records everything later slices can see: the latest slice's coloring plus a
partition of its vertices saying which of them already belong to a common
block through earlier slices.  Partitions are stored as restricted-growth
strings (class labels first appear in increasing order), so equal states
collide in the state map.

Weights are polynomials in y.  A block contributes its y factor when it is
*closed* (no vertex of the next slice continues it); finalize() then pays one
y per still-open class.  The alternative convention of paying at birth gives
the same distribution for completed products; closure payment keeps the step
operator independent of the total length.

For complete-graph slices the states can be reduced to color classes (colorings
of the slice up to color permutation and same-size part swaps), giving a small
linear system whose symbolic solution is the generating function in x and y.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import LaurentPoly2, RationalGF, bareiss_solve
from .combinatorics import partitions_at_most_k_parts
from .errors import CapExceededError
from .graphs import Graph
from .oracle import BlockDistribution, expected_blocks

DEFAULT_VERTEX_CAP = 8
DEFAULT_STATE_CAP = 1 << 16

_ONE = LaurentPoly2.one()


@dataclass(frozen=True)
class Profile:
    """Boundary state: slice coloring plus cross-slice linkage partition (RGS)."""

    colors: tuple[int, ...]
    linkage: tuple[int, ...]


StateWeights = dict[Profile, LaurentPoly2]


def _canonical_rgs(labels) -> tuple[int, ...]:
    seen: dict = {}
    out = []
    for label in labels:
        if label not in seen:
            seen[label] = len(seen)
        out.append(seen[label])
    return tuple(out)


@lru_cache(maxsize=32)
def _slice_table(g: Graph, k: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """All k^n slice colorings with their monochromatic-component RGS."""
    edges = g.edges()
    table = []
    for colors in itertools.product(range(k), repeat=g.n):
        parent = list(range(g.n))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for u, v in edges:
            if colors[u] == colors[v]:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        table.append((colors, _canonical_rgs(find(v) for v in range(g.n))))
    return tuple(table)


def _check_caps(g: Graph, k: int, vertex_cap: int, state_cap: int):
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n > vertex_cap:
        raise CapExceededError(f"slice has {g.n} vertices, cap is {vertex_cap}")
    if k**g.n > state_cap:
        raise CapExceededError(f"{k}^{g.n} slice colorings exceed state cap {state_cap}")


def initial_states(
    g: Graph,
    k: int,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    state_cap: int = DEFAULT_STATE_CAP,
) -> StateWeights:
    """One weight-1 state per coloring of the first slice."""
    _check_caps(g, k, vertex_cap, state_cap)
    return {Profile(colors, rgs): _ONE for colors, rgs in _slice_table(g, k)}


def step(
    g: Graph,
    k: int,
    states: StateWeights,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    state_cap: int = DEFAULT_STATE_CAP,
) -> StateWeights:
    """Extend every partial product by one slice.

    For each (old profile, new coloring): vertical edges at same-colored
    vertices merge old linkage classes with the new slice's components; old
    classes with no surviving connection close and pay y each; the new
    profile keeps only what the new slice can see.
    """
    _check_caps(g, k, vertex_cap, state_cap)
    table = _slice_table(g, k)
    nv = g.n
    out: StateWeights = {}
    for profile, weight in states.items():
        old_colors = profile.colors
        old_link = profile.linkage
        p = max(old_link) + 1
        for new_colors, new_comp in table:
            q = max(new_comp) + 1
            parent = list(range(p + q))

            def find(a: int) -> int:
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            for v in range(nv):
                if old_colors[v] == new_colors[v]:
                    ra = find(old_link[v])
                    rb = find(p + new_comp[v])
                    if ra != rb:
                        parent[ra] = rb
            surviving = {find(p + c) for c in range(q)}
            closed = sum(1 for c in range(p) if find(c) not in surviving)
            new_link = _canonical_rgs(find(p + new_comp[v]) for v in range(nv))
            key = Profile(new_colors, new_link)
            shifted = weight.shift_y(closed) if closed else weight
            acc = out.get(key)
            out[key] = shifted if acc is None else acc + shifted
    return out


def finalize(states: StateWeights) -> LaurentPoly2:
    """Close all still-open classes: sum of weight * y^(open classes)."""
    total = LaurentPoly2.zero()
    for profile, weight in states.items():
        open_classes = max(profile.linkage) + 1
        total = total + weight.shift_y(open_classes)
    return total


def prism_distribution(
    g: Graph,
    k: int,
    n: int,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    state_cap: int = DEFAULT_STATE_CAP,
) -> BlockDistribution:
    """Block distribution of g x path(n) via the profile DP."""
    if n < 1:
        raise ValueError("n must be >= 1")
    states = initial_states(g, k, vertex_cap, state_cap)
    for _ in range(n - 1):
        states = step(g, k, states, vertex_cap, state_cap)
    return BlockDistribution(finalize(states), g.n * n, k)


def prism_expected(g: Graph, k: int, n: int) -> Fraction:
    return expected_blocks(prism_distribution(g, k, n))


# -- reduced color-class system for complete-graph slices ----------------------


@dataclass(frozen=True)
class ColorClass:
    """An orbit of colorings of the complete graph on m vertices under color
    permutation; identified by its weakly decreasing nonzero part sizes."""

    parts: tuple[int, ...]
    representative: tuple[frozenset, ...]
    size: int
    support: int


def color_classes(m: int, k: int) -> list[ColorClass]:
    """One representative per class; sizes sum to k^m."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be >= 1")
    classes = []
    for parts in partitions_at_most_k_parts(m, k):
        rep = []
        start = 0
        for size in parts:
            rep.append(frozenset(range(start, start + size)))
            start += size
        rep.extend(frozenset() for _ in range(k - len(parts)))
        padded = list(parts) + [0] * (k - len(parts))
        multiplicity: dict[int, int] = {}
        for size in padded:
            multiplicity[size] = multiplicity.get(size, 0) + 1
        class_size = math.factorial(m) * math.factorial(k)
        for size in padded:
            class_size //= math.factorial(size)
        for count in multiplicity.values():
            class_size //= math.factorial(count)
        classes.append(
            ColorClass(
                parts=parts,
                representative=tuple(rep),
                size=class_size,
                support=len(parts),
            )
        )
    return classes


def km_transfer_system(
    m: int, k: int
) -> tuple[list[list[LaurentPoly2]], list[LaurentPoly2], list[int]]:
    """The reduced system t = b + x*M*t over color classes of complete slices.

    M[a][cb] sums y^(closed classes) over every coloring in target class cb:
    an old color part closes exactly when the new slice reuses none of its
    vertices' color -- for complete slices, when part i is nonempty and meets
    the new part i nowhere.  b[a] = y^support(a); the full generating function
    weights each class solution by its class size (and one factor x per slice,
    applied by km_prism_gf).
    """
    classes = color_classes(m, k)
    index_of_parts = {cls.parts: idx for idx, cls in enumerate(classes)}
    rep_masks = []
    for cls in classes:
        rep_masks.append(
            [sum(1 << v for v in part) for part in cls.representative]
        )
    matrix = [
        [dict() for _ in classes] for _ in classes
    ]  # exponent -> multiplicity, per (row, col)
    for target in itertools.product(range(k), repeat=m):
        masks = [0] * k
        for v, color in enumerate(target):
            masks[color] |= 1 << v
        sizes = tuple(sorted((bin(mask).count("1") for mask in masks if mask), reverse=True))
        col = index_of_parts[sizes]
        for row, amasks in enumerate(rep_masks):
            exp = sum(1 for i in range(k) if amasks[i] and not amasks[i] & masks[i])
            cell = matrix[row][col]
            cell[exp] = cell.get(exp, 0) + 1
    poly_matrix = [
        [LaurentPoly2({(0, e): c for e, c in cell.items()}) for cell in row]
        for row in matrix
    ]
    rhs = [LaurentPoly2.monomial(0, cls.support) for cls in classes]
    weights = [cls.size for cls in classes]
    return poly_matrix, rhs, weights


def km_prism_gf(m: int, k: int, max_dim: int = 12) -> RationalGF:
    """Generating function of (complete graph on m vertices) x path, symbolically."""
    matrix, rhs, weights = km_transfer_system(m, k)
    solutions = bareiss_solve(matrix, rhs, max_dim=max_dim)
    num = LaurentPoly2.zero()
    for weight, sol in zip(weights, solutions):
        num = num + weight * sol.num
    return RationalGF(LaurentPoly2.x() * num, solutions[0].den)

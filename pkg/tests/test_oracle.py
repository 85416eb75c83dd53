from fractions import Fraction

import pytest

from colorblocks.errors import CapExceededError
from colorblocks.graphs import (
    Graph,
    SplitMix64,
    complete,
    cycle,
    grid,
    path,
    perfect_binary_tree,
    random_tree,
    star,
)
from colorblocks.oracle import (
    BlockDistribution,
    block_count,
    distribution_bruteforce,
    expected_blocks,
    proper_coloring_count,
)
from colorblocks.polytext import parse_poly


class TestBlockCount:
    def test_monochromatic(self):
        assert block_count(complete(4), [0, 0, 0, 0]) == 1

    def test_two_cliques(self):
        assert block_count(complete(4), [0, 0, 1, 1]) == 2

    def test_proper_coloring_gives_singletons(self):
        assert block_count(path(3), [0, 1, 0]) == 3

    def test_disconnected_same_color(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert block_count(g, [0, 0, 0, 0]) == 2

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            block_count(path(3), [0, 1])


class TestDistribution:
    def test_edge_two_colors(self):
        d = distribution_bruteforce(path(2), 2)
        assert d.poly == parse_poly("2*y+2*y^2")
        assert d.total() == 4

    def test_k4(self):
        d = distribution_bruteforce(complete(4), 2)
        assert d.poly == parse_poly("2*y+14*y^2")

    def test_seven_vertex_binary_tree(self):
        d = distribution_bruteforce(perfect_binary_tree(2), 2)
        assert d.poly == parse_poly(
            "2*y+12*y^2+30*y^3+40*y^4+30*y^5+12*y^6+2*y^7"
        )

    def test_k1_coloring_budget(self):
        # one color: a single coloring whose blocks are the components
        assert distribution_bruteforce(path(4), 1).poly == parse_poly("y")
        two = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert distribution_bruteforce(two, 1).poly == parse_poly("y^2")

    def test_cap(self):
        with pytest.raises(CapExceededError) as exc:
            distribution_bruteforce(path(30), 2, cap=1 << 20)
        assert "transfer" in str(exc.value)

    def test_threads_agree(self):
        g = grid(2, 4)
        assert (
            distribution_bruteforce(g, 2).poly
            == distribution_bruteforce(g, 2, threads=4).poly
        )

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            distribution_bruteforce(path(2), 0)


class TestExpectedBlocks:
    def test_edge(self):
        d = distribution_bruteforce(path(2), 2)
        assert expected_blocks(d) == Fraction(3, 2)

    def test_k4(self):
        d = distribution_bruteforce(complete(4), 2)
        assert expected_blocks(d) == Fraction(15, 8)

    def test_single_vertex(self):
        for k in (1, 2, 5):
            d = distribution_bruteforce(path(1), k)
            assert expected_blocks(d) == 1


class TestProperColorings:
    def test_triangle_needs_three_colors(self):
        assert proper_coloring_count(complete(3), 2) == 0

    def test_triangle_three_colors(self):
        assert proper_coloring_count(complete(3), 3) == 6

    def test_path_alternations(self):
        assert proper_coloring_count(path(3), 2) == 2

    def test_cap(self):
        with pytest.raises(CapExceededError):
            proper_coloring_count(path(30), 2, cap=1 << 20)


def _pool():
    return [
        (path(6), 2), (path(4), 3), (cycle(5), 2), (cycle(4), 3),
        (complete(4), 2), (complete(3), 3), (star(4), 2),
        (grid(2, 3), 2), (random_tree(8, 7), 2), (perfect_binary_tree(2), 2),
        (Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]), 2),
    ]


class TestInvariants:
    def test_normalization(self):
        for g, k in _pool():
            d = distribution_bruteforce(g, k)
            assert d.total() == k**g.n

    def test_top_coefficient_is_proper_count(self):
        for g, k in _pool():
            d = distribution_bruteforce(g, k)
            assert d.coefficient(g.n) == proper_coloring_count(g, k)

    def test_monochromatic_coefficient_for_connected(self):
        for g, k in _pool():
            d = distribution_bruteforce(g, k)
            assert d.coefficient(1) == k  # all pool graphs are connected

    def test_two_color_coefficients_even(self):
        for g, k in _pool():
            if k != 2:
                continue
            d = distribution_bruteforce(g, k)
            assert all(c % 2 == 0 for c in d.coefficients().values())

    def test_isomorphism_invariance(self):
        rng = SplitMix64(2024)
        for g, k in _pool():
            perm = list(range(g.n))
            rng.shuffle(perm)
            relabeled = Graph.from_edges(
                g.n, [(perm[u], perm[v]) for u, v in g.edges()]
            )
            assert (
                distribution_bruteforce(relabeled, k).poly
                == distribution_bruteforce(g, k).poly
            )

    def test_block_count_agrees_with_tally(self):
        # spot-check the vectorized tally against the scalar union-find op
        g = cycle(5)
        k = 3
        d = distribution_bruteforce(g, k)
        counts = {}
        for idx in range(k**g.n):
            coloring = [(idx // k ** (g.n - 1 - v)) % k for v in range(g.n)]
            b = block_count(g, coloring)
            counts[b] = counts.get(b, 0) + 1
        assert counts == {j: int(c) for j, c in d.coefficients().items()}


def test_distribution_type_rejects_x_terms():
    with pytest.raises(ValueError):
        BlockDistribution(parse_poly("x*y"), 1, 2)

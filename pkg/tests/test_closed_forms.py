from fractions import Fraction

import pytest

from colorblocks import closed_forms as cf
from colorblocks.algebra import gf_equal, series_expand
from colorblocks.combinatorics import binomial
from colorblocks.graphs import (
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    path,
    perfect_binary_tree,
    random_tree,
    star,
)
from colorblocks.oracle import distribution_bruteforce
from colorblocks.polytext import parse_poly
from colorblocks.transfer import prism_distribution


class TestTrees:
    def test_single_vertex(self):
        assert cf.tree_distribution(1, 3).poly == parse_poly("3*y")

    def test_three_vertices(self):
        want = parse_poly("2*y^3+4*y^2+2*y")
        assert cf.tree_distribution(3, 2).poly == want
        assert distribution_bruteforce(path(3), 2).poly == want
        assert distribution_bruteforce(star(2), 2).poly == want

    def test_shape_independence(self):
        for seed in (0, 1, 2):
            for n in (5, 7):
                for k in (2, 3):
                    got = distribution_bruteforce(random_tree(n, seed), k).poly
                    assert got == cf.tree_distribution(n, k).poly

    def test_expected(self):
        assert cf.tree_expected(1, 5) == 1
        assert cf.tree_expected(3, 2) == 2
        assert cf.tree_expected(10, 4) == Fraction(31, 4)
        got = distribution_bruteforce(random_tree(10, 123), 4).expected()
        assert got == Fraction(31, 4)


class TestPerfectBinaryTrees:
    def test_base(self):
        assert cf.pbt_distribution(0, 2).poly == parse_poly("2*y")

    def test_displayed_polynomial(self):
        assert cf.pbt_distribution(2, 2).poly == parse_poly(
            "2*y+12*y^2+30*y^3+40*y^4+30*y^5+12*y^6+2*y^7"
        )

    def test_three_vertices_three_colors(self):
        want = parse_poly("3*y*(2*y+1)^2")
        assert cf.pbt_distribution(1, 3).poly == want
        assert distribution_bruteforce(perfect_binary_tree(1), 3).poly == want

    def test_matches_tree_formula(self):
        for k in (2, 3):
            for h in range(7):
                assert (
                    cf.pbt_distribution(h, k).poly
                    == cf.tree_distribution(2 ** (h + 1) - 1, k).poly
                )
        for h in range(11):  # pure formula identity, no enumeration
            assert (
                cf.pbt_distribution(h, 2).poly
                == cf.tree_distribution(2 ** (h + 1) - 1, 2).poly
            )

    def test_expected(self):
        assert cf.pbt_expected(0, 4) == 1
        assert cf.pbt_expected(1, 2) == cf.tree_expected(3, 2) == 2
        assert cf.pbt_expected(3, 2) == cf.tree_expected(15, 2) == 8


class TestCycles:
    def test_counts(self):
        assert cf.cycle_block_count(5, 4, 2) == 10
        for n in (3, 5, 8):
            for k in (1, 2, 4):
                assert cf.cycle_block_count(n, 1, k) == k
        assert cf.cycle_block_count(6, 3, 2) == 0

    def test_against_bruteforce(self):
        for n in range(3, 11):
            for k in (2, 3):
                d = distribution_bruteforce(cycle(n), k)
                assert d.poly == cf.cycle_distribution(n, k).poly
                assert d.expected() == cf.cycle_expected(n, k)

    def test_triangle_equals_complete(self):
        for k in (2, 3, 4):
            assert cf.cycle_distribution(3, k).poly == cf.complete_distribution(3, k).poly

    def test_normalization(self):
        for n in (3, 6, 9):
            for k in (2, 3):
                assert cf.cycle_distribution(n, k).total() == k**n

    def test_expected_values(self):
        assert cf.cycle_expected(3, 2) == Fraction(7, 4)
        assert cf.cycle_expected(4, 2) == Fraction(17, 8)
        assert cf.cycle_expected(4, 2) == distribution_bruteforce(cycle(4), 2).expected()
        assert cf.cycle_expected(5, 1) == 1

    def test_preconditions(self):
        with pytest.raises(ValueError):
            cf.cycle_distribution(2, 2)
        with pytest.raises(ValueError):
            cf.cycle_block_count(5, 0, 2)


class TestWalkCounts:
    def test_closed(self):
        assert cf.closed_walks_complete(2, 2) == 1
        assert cf.closed_walks_complete(5, 0) == 1
        assert cf.closed_walks_complete(3, 3) == 2

    def test_open(self):
        assert cf.open_walks_complete(2, 1) == 1
        assert cf.open_walks_complete(3, 2) == 1
        assert cf.open_walks_complete(2, 2) == 0

    def test_recombination_identity(self):
        # splitting block boundaries by same/different end colors reassembles
        # the cycle coefficients
        for n in range(3, 13):
            for k in range(1, 6):
                for i in range(2, n + 1):
                    lhs = 2 * binomial(n - 1, i - 1) * binomial(k, 2) * cf.open_walks_complete(
                        k, i - 1
                    ) + binomial(n - 1, i) * k * cf.closed_walks_complete(k, i)
                    assert lhs == cf.cycle_block_count(n, i, k)

    def test_walks_count_actual_walks(self):
        # length-3 closed walks in the 4-clique, counted by brute force
        import itertools

        m, length = 4, 3
        closed = sum(
            1
            for w in itertools.product(range(m), repeat=length + 1)
            if w[0] == w[-1] and all(a != b for a, b in zip(w, w[1:]))
        )
        assert cf.closed_walks_complete(m, length) * m == closed


class TestComplete:
    def test_counts(self):
        assert cf.complete_block_count(4, 2, 2) == 14
        assert cf.complete_block_count(3, 3, 3) == 6
        for n in (1, 4, 7):
            for k in (2, 5):
                assert cf.complete_block_count(n, 1, k) == k
        assert cf.complete_block_count(3, 4, 9) == 0
        assert cf.complete_block_count(3, 2, 1) == 0

    def test_against_bruteforce(self):
        for n in range(1, 9):
            for k in (2, 3):
                d = distribution_bruteforce(complete(n), k)
                assert d.poly == cf.complete_distribution(n, k).poly
                assert d.expected() == cf.complete_expected(n, k)

    def test_distribution_examples(self):
        assert cf.complete_distribution(4, 2).poly == parse_poly("2*y+14*y^2")
        assert cf.complete_distribution(1, 7).poly == parse_poly("7*y")
        assert (
            cf.complete_distribution(5, 3).poly
            == distribution_bruteforce(complete(5), 3).poly
        )

    def test_expected_values(self):
        assert cf.complete_expected(1, 9) == 1
        assert cf.complete_expected(4, 2) == Fraction(15, 8)
        assert cf.complete_expected(3, 3) == Fraction(19, 9)


class TestBipartite:
    def test_edge_case_is_tree(self):
        assert cf.bipartite_expected(1, 1, 2) == Fraction(3, 2)

    def test_star_value(self):
        assert cf.bipartite_expected(1, 3, 2) == Fraction(5, 2)
        assert distribution_bruteforce(star(3), 2).expected() == Fraction(5, 2)

    def test_symmetry(self):
        for n in range(1, 5):
            for m in range(1, 5):
                for k in (2, 3):
                    assert cf.bipartite_expected(n, m, k) == cf.bipartite_expected(m, n, k)

    def test_against_bruteforce(self):
        for n in range(1, 5):
            for m in range(1, 5):
                for k in (2, 3):
                    got = distribution_bruteforce(complete_bipartite(n, m), k).expected()
                    assert got == cf.bipartite_expected(n, m, k)


class TestCompletePrism:
    def test_triangle_family(self):
        for n in range(1, 6):
            assert cf.complete_prism_expected(3, n, 2) == Fraction(37 + 19 * n, 32)

    def test_four_clique_family(self):
        for n in range(1, 6):
            assert cf.complete_prism_expected(4, n, 2) == Fraction(175 + 65 * n, 128)

    def test_square_case(self):
        got = distribution_bruteforce(cartesian_product(complete(2), path(2)), 2)
        assert cf.complete_prism_expected(2, 2, 2) == got.expected()

    def test_reduces_to_complete_at_one_slice(self):
        for ell in range(1, 9):
            for k in range(1, 6):
                assert cf.complete_prism_expected(ell, 1, k) == cf.complete_expected(ell, k)


class TestTrianglePrismGF:
    def test_mass_at_y1(self):
        coeffs = series_expand(cf.k3_prism_gf(2), 4)
        for n in range(1, 5):
            assert coeffs[n].evaluate(1, 1) == 2 ** (3 * n)

    def test_expectation_from_series(self):
        coeffs = series_expand(cf.k3_prism_gf(2), 5)
        for n in range(1, 6):
            mean = coeffs[n].derivative_y().evaluate(1, 1) / Fraction(2 ** (3 * n))
            assert mean == Fraction(37 + 19 * n, 32)

    def test_k3_series_matches_engine(self):
        coeffs = series_expand(cf.k3_prism_gf(3), 3)
        for n in range(1, 4):
            assert coeffs[n] == prism_distribution(complete(3), 3, n).poly

    def test_k2_display(self):
        from colorblocks.algebra import RationalGF

        display = RationalGF(
            parse_poly("2*x*y*(1+3*y-x*(3-7*y+4*y^2))"),
            parse_poly("1-x*(4+3*y+y^2)+x^2*(3-7*y+3*y^2+y^3)"),
        )
        assert gf_equal(cf.k3_prism_gf(2), display)


class TestStarProfileCount:
    def test_values(self):
        assert cf.star_profile_count(3) == 7
        assert cf.star_profile_count(0) == 1
        assert cf.star_profile_count(5) == 19

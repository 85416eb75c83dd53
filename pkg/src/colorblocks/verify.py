"""Built-in verification suites for the CLI.

Each check is a small function that raises CheckFailure with the exact
mismatch detail (down to the offending coefficient).  The ``quick`` suite
stays under half a minute; ``full`` adds the heavy cross-validations
(7x7 boundary-system solve, 5- and 6-vertex slice series, larger
enumerations).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import closed_forms as cf
from . import fixtures as fx
from .algebra import LaurentPoly2, RationalGF, gf_equal, series_expand
from .combinatorics import (
    binomial,
    partition_count,
    partitions_at_most_k_parts,
    stirling2,
)
from .errors import CheckFailure
from .graphs import (
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    grid,
    parse_graph_spec,
    path,
    perfect_binary_tree,
    random_tree,
    star,
)
from .oracle import distribution_bruteforce, proper_coloring_count
from .polytext import format_poly, parse_poly
from .transfer import (
    color_classes,
    initial_states,
    km_prism_gf,
    prism_distribution,
    prism_expected,
    step,
)


@dataclass(frozen=True)
class Check:
    name: str
    suites: tuple[str, ...]
    fn: Callable[[], None]


def _expect_equal(got, want, label: str):
    if got != want:
        raise CheckFailure(f"{label}: got {got}, want {want}")


def _expect_poly_equal(got: LaurentPoly2, want: LaurentPoly2, label: str):
    if got == want:
        return
    keys = sorted(set(got.terms) | set(want.terms))
    for key in keys:
        a, b = got.coefficient(*key), want.coefficient(*key)
        if a != b:
            raise CheckFailure(
                f"{label}: coefficient of x^{key[0]}*y^{key[1]} is {a}, want {b}"
            )
    raise CheckFailure(f"{label}: polynomials differ")


def _expect_gf_equal(got: RationalGF, want: RationalGF, label: str):
    if not gf_equal(got, want):
        raise CheckFailure(f"{label}: generating functions differ (cross-multiplication)")


# -- algebra -------------------------------------------------------------------


def check_poly_ring_identities():
    a = parse_poly("2*x*y^2-3*y+1")
    b = parse_poly("x^2-5*y^3+7")
    c = parse_poly("4*y-x*y")
    _expect_poly_equal((a + b) + c, a + (b + c), "associativity")
    _expect_poly_equal(a * (b + c), a * b + a * c, "distributivity")
    _expect_poly_equal(a * b, b * a, "commutativity")
    _expect_poly_equal(parse_poly("(y+1)*(y-1)"), parse_poly("y^2-1"), "product")


def check_series_geometric():
    one = LaurentPoly2.one()
    gf = RationalGF(LaurentPoly2.x(), one - LaurentPoly2.x())
    coeffs = series_expand(gf, 3)
    _expect_equal(
        [format_poly(c) for c in coeffs], ["0", "1", "1", "1"], "series of x/(1-x)"
    )


def check_series_consistency():
    gf = fx.fixture_gf("K4_k2")
    coeffs = series_expand(gf, 8)
    partial = LaurentPoly2.zero()
    for n, c in enumerate(coeffs):
        partial = partial + LaurentPoly2.monomial(n, 0) * c
    residue = gf.den * partial - gf.num
    low = [key for key in residue.terms if key[0] <= 8]
    if low:
        raise CheckFailure(f"den*series - num has low-order terms {sorted(low)[:3]}")


def check_stirling_and_bell():
    _expect_equal(stirling2(4, 2), 7, "stirling2(4,2)")
    _expect_equal(stirling2(0, 0), 1, "stirling2(0,0)")
    bell = [1]
    for n in range(10):  # independent Bell recurrence
        bell.append(sum(binomial(n, j) * bell[j] for j in range(n + 1)))
    for n in range(11):
        _expect_equal(
            sum(stirling2(n, i) for i in range(n + 1)), bell[n], f"Bell({n})"
        )


def check_partitions():
    _expect_equal([partition_count(i) for i in range(11)],
                  [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42], "partition counts")
    _expect_equal(
        partitions_at_most_k_parts(4, 2), [(4,), (3, 1), (2, 2)], "partitions of 4 into <=2 parts"
    )
    for m in range(13):
        _expect_equal(
            len(partitions_at_most_k_parts(m, max(m, 1))),
            partition_count(m),
            f"unrestricted partitions of {m}",
        )


# -- families vs enumeration ---------------------------------------------------


def check_tree_theorem_small():
    for g, n in [(path(3), 3), (star(3), 4), (random_tree(7, 11), 7)]:
        for k in (2, 3):
            got = distribution_bruteforce(g, k).poly
            _expect_poly_equal(got, cf.tree_distribution(n, k).poly, f"tree n={n} k={k}")


def check_tree_theorem_many():
    for seed in range(50):
        n = 1 + seed % 9
        g = random_tree(n, seed)
        for k in (2, 3, 4):
            got = distribution_bruteforce(g, k).poly
            _expect_poly_equal(
                got, cf.tree_distribution(n, k).poly, f"tree seed={seed} n={n} k={k}"
            )


def check_pbt_lemma():
    displayed = parse_poly("2*y+12*y^2+30*y^3+40*y^4+30*y^5+12*y^6+2*y^7")
    _expect_poly_equal(cf.pbt_distribution(2, 2).poly, displayed, "pbt h=2 closed form")
    for h, k in [(0, 2), (1, 2), (2, 2), (0, 3), (1, 3)]:
        got = distribution_bruteforce(perfect_binary_tree(h), k).poly
        _expect_poly_equal(got, cf.pbt_distribution(h, k).poly, f"pbt h={h} k={k}")


def check_pbt_lemma_full():
    for h, k in [(3, 2), (2, 3)]:
        got = distribution_bruteforce(perfect_binary_tree(h), k).poly
        _expect_poly_equal(got, cf.pbt_distribution(h, k).poly, f"pbt h={h} k={k}")


def check_cycle_theorem():
    _expect_equal(cf.cycle_block_count(5, 4, 2), 10, "cycle count n=5 i=4 k=2")
    for n in range(3, 8):
        for k in (2, 3):
            d = distribution_bruteforce(cycle(n), k)
            _expect_poly_equal(d.poly, cf.cycle_distribution(n, k).poly, f"cycle n={n} k={k}")
            _expect_equal(d.expected(), cf.cycle_expected(n, k), f"cycle mean n={n} k={k}")


def check_walk_counts():
    _expect_equal(cf.closed_walks_complete(3, 3), Fraction(2), "closed walks K_3 len 3")
    _expect_equal(cf.open_walks_complete(3, 2), Fraction(1), "open walks K_3 len 2")
    _expect_equal(cf.open_walks_complete(2, 2), Fraction(0), "open walks K_2 len 2")
    for n in range(3, 10):
        for k in range(2, 5):
            for i in range(2, n + 1):
                recombined = 2 * binomial(n - 1, i - 1) * binomial(k, 2) * cf.open_walks_complete(
                    k, i - 1
                ) + binomial(n - 1, i) * k * cf.closed_walks_complete(k, i)
                _expect_equal(
                    recombined, Fraction(cf.cycle_block_count(n, i, k)), f"walk split n={n} i={i} k={k}"
                )


def check_complete_theorem():
    _expect_equal(cf.complete_block_count(4, 2, 2), 14, "complete count n=4 i=2 k=2")
    for n in range(1, 7):
        for k in (2, 3):
            d = distribution_bruteforce(complete(n), k)
            _expect_poly_equal(d.poly, cf.complete_distribution(n, k).poly, f"complete n={n} k={k}")
            _expect_equal(d.expected(), cf.complete_expected(n, k), f"complete mean n={n} k={k}")


def check_bipartite_expectation():
    for n in range(1, 4):
        for m in range(1, 4):
            for k in (2, 3):
                got = distribution_bruteforce(complete_bipartite(n, m), k).expected()
                _expect_equal(got, cf.bipartite_expected(n, m, k), f"bipartite {n},{m} k={k}")
                _expect_equal(
                    cf.bipartite_expected(n, m, k),
                    cf.bipartite_expected(m, n, k),
                    f"bipartite symmetry {n},{m} k={k}",
                )


# -- transfer engine ------------------------------------------------------------


def check_engine_against_bruteforce():
    cases = [
        (complete(3), 2, 3),
        (complete(3), 3, 2),
        (star(3), 2, 2),
        (path(2), 2, 2),
        (path(3), 2, 3),
    ]
    for g, k, n in cases:
        eng = prism_distribution(g, k, n).poly
        bf = distribution_bruteforce(cartesian_product(g, path(n)), k).poly
        _expect_poly_equal(eng, bf, f"engine vs brute |slice|={g.n} k={k} n={n}")


def check_engine_against_bruteforce_full():
    for n in range(1, 7):
        eng = prism_distribution(complete(3), 2, n).poly
        bf = distribution_bruteforce(cartesian_product(complete(3), path(n)), 2).poly
        _expect_poly_equal(eng, bf, f"triangle prism k=2 n={n}")
    for n in range(1, 5):
        eng = prism_distribution(complete(3), 3, n).poly
        bf = distribution_bruteforce(cartesian_product(complete(3), path(n)), 3).poly
        _expect_poly_equal(eng, bf, f"triangle prism k=3 n={n}")
        eng = prism_distribution(star(3), 2, n).poly
        bf = distribution_bruteforce(cartesian_product(star(3), path(n)), 2).poly
        _expect_poly_equal(eng, bf, f"star prism k=2 n={n}")


def check_engine_mass_conservation():
    for g, k in [(complete(3), 2), (star(3), 2), (path(3), 3)]:
        states = initial_states(g, k)
        for t in range(3):
            mass = sum((w.evaluate(1, 1) for w in states.values()), Fraction(0))
            _expect_equal(mass, Fraction(k ** ((t + 1) * g.n)), f"mass |slice|={g.n} k={k} t={t}")
            states = step(g, k, states)


def check_complete_slice_states():
    for m, k in [(2, 2), (3, 2), (3, 3), (4, 2)]:
        states = initial_states(complete(m), k)
        states = step(complete(m), k, states)
        _expect_equal(len(states), k**m, f"reachable profiles K_{m} k={k}")


def check_color_classes():
    classes = color_classes(4, 2)
    _expect_equal([c.size for c in classes], [2, 8, 6], "class sizes (4,2)")
    _expect_equal(len(classes), 3, "class count (4,2)")
    for m in range(1, 7):
        for k in range(1, 5):
            sizes = sum(c.size for c in color_classes(m, k))
            _expect_equal(sizes, k**m, f"class sizes sum m={m} k={k}")


def check_km_system_small():
    one = LaurentPoly2.one()
    x, y = LaurentPoly2.x(), LaurentPoly2.y()
    for k in (2, 3):
        got = km_prism_gf(1, k)
        want = RationalGF(k * x * y, one - x * (1 + (k - 1) * y))
        _expect_gf_equal(got, want, f"single-vertex slice k={k} is the path closed form")
    _expect_gf_equal(km_prism_gf(3, 2), cf.k3_prism_gf(2), "reduced system m=3 k=2")
    _expect_gf_equal(km_prism_gf(4, 2), fx.fixture_gf("K4_k2"), "reduced system m=4 k=2")


def check_km_series_vs_engine():
    for m, k, nmax in [(2, 2, 4), (3, 2, 4), (3, 3, 3), (4, 2, 3)]:
        coeffs = series_expand(km_prism_gf(m, k), nmax)
        for n in range(1, nmax + 1):
            eng = prism_distribution(complete(m), k, n).poly
            _expect_poly_equal(coeffs[n], eng, f"reduced-system series m={m} k={k} n={n}")


def check_triangle_prism_expectation():
    _expect_equal(prism_expected(complete(3), 2, 4), Fraction(113, 32), "triangle prism mean n=4")
    for n in range(1, 8):
        _expect_equal(
            prism_expected(complete(3), 2, n),
            Fraction(2) ** (3 * n - 5) * (37 + 19 * n) / Fraction(2) ** (3 * n),
            f"triangle prism mean n={n}",
        )


def check_k4_prism_expectation():
    _expect_equal(prism_expected(complete(4), 2, 3), Fraction(185, 64), "K4 prism mean n=3")
    for n in range(1, 6):
        _expect_equal(
            prism_expected(complete(4), 2, n),
            Fraction(2) ** (4 * n - 7) * (175 + 65 * n) / Fraction(2) ** (4 * n),
            f"K4 prism mean n={n}",
        )


def check_general_prism_expectation():
    for ell in range(1, 9):
        for k in range(1, 6):
            _expect_equal(
                cf.complete_prism_expected(ell, 1, k),
                cf.complete_expected(ell, k),
                f"prism formula at n=1, ell={ell} k={k}",
            )
    for ell in range(1, 4):
        for k in (2, 3):
            for n in range(1, 4):
                _expect_equal(
                    cf.complete_prism_expected(ell, n, k),
                    prism_expected(complete(ell), k, n),
                    f"prism formula vs engine ell={ell} k={k} n={n}",
                )


def check_general_prism_expectation_full():
    for ell in (4,):
        for k in (2, 3):
            for n in range(1, 5):
                _expect_equal(
                    cf.complete_prism_expected(ell, n, k),
                    prism_expected(complete(ell), k, n),
                    f"prism formula vs engine ell={ell} k={k} n={n}",
                )


# -- fixtures --------------------------------------------------------------------


def check_fixture_first_coefficients():
    c1 = series_expand(fx.fixture_gf("K4_k2"), 1)[1]
    _expect_poly_equal(c1, parse_poly("2*y+14*y^2"), "4-clique slice x^1")
    c1 = series_expand(fx.fixture_gf("STAR13_k2"), 1)[1]
    _expect_poly_equal(c1, parse_poly("2*y+6*y^2+6*y^3+2*y^4"), "star slice x^1")
    c0 = series_expand(fx.fixture_gf("K3_generic_k", 2), 0)[0]
    _expect_poly_equal(c0, LaurentPoly2.zero(), "x^0 term")


def check_k3_generic_against_display():
    display = RationalGF(
        parse_poly("2*x*y*(1+3*y-x*(3-7*y+4*y^2))"),
        parse_poly("1-x*(4+3*y+y^2)+x^2*(3-7*y+3*y^2+y^3)"),
    )
    _expect_gf_equal(cf.k3_prism_gf(2), display, "triangle slice k=2 display")


def check_fixture_normalization():
    for fid, k in [("K3_generic_k", 2), ("K3_generic_k", 3), ("K4_k2", None), ("STAR13_k2", None)]:
        gf = fx.fixture_gf(fid, k)
        size = fx.fixture_slice_size(fid)
        kk = fx.fixture_k(fid, k)
        coeffs = series_expand(gf, 4)
        for n in range(1, 5):
            _expect_equal(
                coeffs[n].evaluate(1, 1), Fraction(kk ** (size * n)), f"{fid} mass at n={n}"
            )


def check_fixture_series_vs_engine_small():
    for k in (2, 3):
        coeffs = series_expand(cf.k3_prism_gf(k), 4)
        for n in range(1, 5):
            eng = prism_distribution(complete(3), k, n).poly
            _expect_poly_equal(coeffs[n], eng, f"triangle fixture k={k} n={n}")
    coeffs = series_expand(fx.fixture_gf("STAR13_k2"), 4)
    for n in range(1, 5):
        eng = prism_distribution(star(3), 2, n).poly
        _expect_poly_equal(coeffs[n], eng, f"star fixture n={n}")


def check_fixture_series_vs_engine_full():
    for fid, g, k in [
        ("K5_k2", complete(5), 2),
        ("K6_k2", complete(6), 2),
        ("K4_k3", complete(4), 3),
    ]:
        coeffs = series_expand(fx.fixture_gf(fid), 5)
        for n in range(1, 6):
            eng = prism_distribution(g, k, n).poly
            _expect_poly_equal(coeffs[n], eng, f"{fid} series n={n}")
    # the circulated display under the K4_k3 label is the 3-vertex function
    _expect_gf_equal(fx.k4_k3_source_display(), cf.k3_prism_gf(3), "K4_k3 display erratum")


def check_star_matrix_entries():
    matrix, rhs, combo = fx.star_system()
    _expect_poly_equal(
        matrix[5][3], parse_poly("(3*y^2+2*y+1)/y"), "matrix entry (6,4)"
    )
    _expect_poly_equal(matrix[1][0], LaurentPoly2.zero(), "matrix entry (2,1)")
    _expect_equal(len(matrix), 7, "matrix size")
    _expect_equal([format_poly(b) for b in rhs], ["y^4", "0", "0", "y^3", "0", "y^2", "y"], "base vector")
    _expect_equal(combo, [2, 6, 2, 6, 6, 6, 2], "combination weights")


def check_star_system_solution_full():
    solved = fx.fixture_gf("STAR13_matrix")
    _expect_gf_equal(solved, fx.fixture_gf("STAR13_k2"), "7x7 system vs closed form")


def check_star_expectation_full():
    for n in range(1, 9):
        formula = (
            Fraction(2254219, 1411200)
            + Fraction(6, 49) * Fraction(1, 2 ** (3 * n))
            - Fraction(2, 225) * Fraction(1, 2 ** (4 * n))
            + Fraction(11933, 13440) * n
        )
        _expect_equal(prism_expected(star(3), 2, n), formula, f"star prism mean n={n}")
    _expect_equal(prism_expected(star(3), 2, 1), Fraction(5, 2), "star prism mean n=1")


def check_star_profile_count():
    _expect_equal(cf.star_profile_count(3), 7, "boundary configurations, 3 leaves")
    _expect_equal(cf.star_profile_count(0), 1, "boundary configurations, 0 leaves")
    _expect_equal(cf.star_profile_count(5), 19, "boundary configurations, 5 leaves")


# -- graphs and properties --------------------------------------------------------


def check_graph_builders():
    _expect_equal(parse_graph_spec("complete:4").edge_count, 6, "complete:4 edges")
    _expect_equal(parse_graph_spec("product(star:3,path:4)").n, 16, "star prism vertices")
    _expect_equal(parse_graph_spec("edges:3:[0-1,1-2]").edges(), [(0, 1), (1, 2)], "edge list")
    g = grid(2, 3)
    _expect_equal((g.n, g.edge_count), (6, 7), "grid(2,3) shape")
    for n in range(1, 30):
        t = random_tree(n, n * 977)
        _expect_equal(t.edge_count, n - 1, f"tree edges n={n}")


def check_distribution_properties():
    pool = [
        (path(5), 2), (path(8), 2), (cycle(6), 2), (cycle(5), 3),
        (complete(4), 2), (complete(4), 3), (complete_bipartite(2, 3), 2),
        (grid(2, 3), 2), (random_tree(9, 5), 2), (star(4), 3),
    ]
    for g, k in pool:
        d = distribution_bruteforce(g, k)
        _expect_equal(d.total(), Fraction(k**g.n), f"mass |V|={g.n} k={k}")
        _expect_equal(
            d.coefficient(g.n), Fraction(proper_coloring_count(g, k)),
            f"top coefficient |V|={g.n} k={k}",
        )
        _expect_equal(d.coefficient(1), Fraction(k), f"monochromatic coefficient k={k}")
        if k == 2:
            odd = [j for j, c in d.coefficients().items() if c % 2]
            if odd:
                raise CheckFailure(f"odd coefficients at exponents {odd} for |V|={g.n} k=2")


ALL_CHECKS: list[Check] = [
    Check("poly ring identities", ("quick", "full"), check_poly_ring_identities),
    Check("series of x/(1-x)", ("quick", "full"), check_series_geometric),
    Check("series self-consistency", ("quick", "full"), check_series_consistency),
    Check("stirling row sums vs Bell", ("quick", "full"), check_stirling_and_bell),
    Check("partition counts", ("quick", "full"), check_partitions),
    Check("tree closed form, small cases", ("quick", "full"), check_tree_theorem_small),
    Check("tree closed form, 50 random trees", ("full",), check_tree_theorem_many),
    Check("binary-tree closed form", ("quick", "full"), check_pbt_lemma),
    Check("binary-tree closed form, larger", ("full",), check_pbt_lemma_full),
    Check("cycle closed form", ("quick", "full"), check_cycle_theorem),
    Check("walk-count split", ("quick", "full"), check_walk_counts),
    Check("complete-graph closed form", ("quick", "full"), check_complete_theorem),
    Check("bipartite expectation", ("quick", "full"), check_bipartite_expectation),
    Check("engine vs brute force", ("quick", "full"), check_engine_against_bruteforce),
    Check("engine vs brute force, larger", ("full",), check_engine_against_bruteforce_full),
    Check("engine mass conservation", ("quick", "full"), check_engine_mass_conservation),
    Check("complete-slice state count", ("quick", "full"), check_complete_slice_states),
    Check("color classes", ("quick", "full"), check_color_classes),
    Check("reduced system, small slices", ("quick", "full"), check_km_system_small),
    Check("reduced-system series vs engine", ("quick", "full"), check_km_series_vs_engine),
    Check("triangle prism expectation", ("quick", "full"), check_triangle_prism_expectation),
    Check("4-clique prism expectation", ("quick", "full"), check_k4_prism_expectation),
    Check("general prism expectation", ("quick", "full"), check_general_prism_expectation),
    Check("general prism expectation, 4-clique", ("full",), check_general_prism_expectation_full),
    Check("fixture first coefficients", ("quick", "full"), check_fixture_first_coefficients),
    Check("triangle fixture k=2 display", ("quick", "full"), check_k3_generic_against_display),
    Check("fixture normalization", ("quick", "full"), check_fixture_normalization),
    Check("fixture series vs engine", ("quick", "full"), check_fixture_series_vs_engine_small),
    Check("large-slice fixture series vs engine", ("full",), check_fixture_series_vs_engine_full),
    Check("star matrix entries", ("quick", "full"), check_star_matrix_entries),
    Check("star 7x7 system solution", ("full",), check_star_system_solution_full),
    Check("star prism expectation", ("full",), check_star_expectation_full),
    Check("star boundary-state count", ("quick", "full"), check_star_profile_count),
    Check("graph builders and spec parser", ("quick", "full"), check_graph_builders),
    Check("distribution properties", ("quick", "full"), check_distribution_properties),
]


def run_suite(suite: str, checks: list[Check] | None = None, out=print) -> int:
    """Run every check in the suite; print one PASS/FAIL line each.

    Returns 0 when everything passed, 1 otherwise.
    """
    if suite not in ("quick", "full"):
        raise ValueError(f"unknown suite {suite!r}")
    selected = [c for c in (checks if checks is not None else ALL_CHECKS) if suite in c.suites]
    failures = 0
    started = time.perf_counter()
    for check in selected:
        t0 = time.perf_counter()
        try:
            check.fn()
        except CheckFailure as exc:
            failures += 1
            out(f"FAIL {check.name}: {exc}")
        else:
            out(f"PASS {check.name} ({(time.perf_counter() - t0) * 1000:.0f} ms)")
    elapsed = time.perf_counter() - started
    out(
        f"{len(selected) - failures}/{len(selected)} checks passed "
        f"in {elapsed:.1f} s ({suite} suite)"
    )
    return 1 if failures else 0

import random
from collections import defaultdict
from fractions import Fraction
from itertools import permutations

import pytest

from lozenge_shuffle import formulas, oracle
from lozenge_shuffle.errors import DomainError
from lozenge_shuffle.exact import QPolynomial, ZERO, evaluate
from lozenge_shuffle.regions import (
    RIGHT,
    Trapezoid,
    build_cells,
    split_along_diagonal,
    validate_hexagon,
)
from lozenge_shuffle.verify import all_hexagons, all_trapezoids


def small_regions(max_cells=40):
    for R in list(all_trapezoids(6)) + list(all_hexagons(4)):
        g = build_cells(R)
        if len(g) <= max_cells:
            yield R, g


def test_memo_matches_enumeration():
    for _, g in small_regions():
        tilings = list(oracle.enumerate_tilings(g))
        assert len(tilings) == oracle.count_tilings(g)
        assert len(set(tilings)) == len(tilings)
        for t in tilings:
            assert t.covers(g)


def test_gf_matches_enumeration():
    for _, g in small_regions(30):
        total = ZERO
        for t in oracle.enumerate_tilings(g):
            total = total + oracle.tiling_weight_q(t)
        assert total == oracle.generating_function_q(g)


def test_unit_hexagon_weights():
    g = build_cells(validate_hexagon(1, 1, 1, [], []))
    weights = sorted(oracle.tiling_weight_q(t).degree for t in oracle.enumerate_tilings(g))
    assert weights == [1, 2]


def test_single_right_lozenge():
    g = build_cells(Trapezoid(1, 1, [2]))
    (t,) = oracle.enumerate_tilings(g)
    assert [lz.orientation for lz in t] == [RIGHT]
    assert oracle.weighted_count(g, [7]) == 7
    with pytest.raises(DomainError):
        oracle.weighted_count(g, [1, 2])


def test_empty_region():
    g = build_cells(validate_hexagon(0, 0, 0, [], []))
    assert oracle.count_tilings(g) == 1
    assert oracle.generating_function_q(g) == QPolynomial((1,))


class TestSchur:
    @pytest.mark.parametrize("lam,n", [((2, 1), 3), ((3,), 2), ((2, 2), 3), ((3, 1, 0), 3), ((1, 1, 1), 4)])
    def test_ssyt_count(self, lam, n):
        assert oracle.schur_ssyt(lam, [1] * n) == len(list(oracle.enumerate_ssyt(lam, n)))

    def test_value(self):
        assert oracle.schur_ssyt((2, 1), [1, 1, 1]) == 8

    def test_symmetric_in_points(self):
        pts = [Fraction(2), Fraction(-1, 2), Fraction(3)]
        vals = {oracle.schur_ssyt((3, 1, 0), p) for p in permutations(pts)}
        assert len(vals) == 1

    def test_trapezoid_row_weights_give_schur(self):
        # right lozenges in row k weighted x_k: the generating function is s_lambda(x)
        rng = random.Random(5)
        for T in all_trapezoids(6):
            if T.n == 0:
                continue
            xs = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(T.n)]
            g = build_cells(T)
            lam = formulas.lambda_of(T.S)
            assert oracle.weighted_count(g, xs) == oracle.schur_ssyt(lam, xs)

    def test_bad_partition(self):
        with pytest.raises(DomainError):
            oracle.schur_ssyt((1, 2), [1, 1])


def test_weighted_count_symmetric_in_weights():
    T = Trapezoid(3, 3, [1, 3, 6])
    g = build_cells(T)
    ws = [Fraction(2), Fraction(5), Fraction(-1, 3)]
    assert len({oracle.weighted_count(g, p) for p in permutations(ws)}) == 1


class TestHalfTurn:
    def test_involution(self):
        g = build_cells(validate_hexagon(2, 2, 2, [1], [4]))
        for t in oracle.enumerate_tilings(g):
            back = oracle.rotate180(g, oracle.rotate180(g, t))
            assert set(back) == set(t)

    def test_filter_matches_dp(self):
        checked = 0
        for H in all_hexagons(5):
            if H.b != H.c:
                continue
            g = build_cells(H)
            if g.turn_key is None or len(g) > 40:
                continue
            try:
                filtered = sum(1 for _ in oracle.symmetric_tilings(g))
            except DomainError:
                continue
            assert filtered == oracle.count_centrally_symmetric(g)
            checked += 1
        assert checked > 20

    def test_rejects_asymmetric(self, hex_source):
        with pytest.raises(DomainError):
            oracle.count_centrally_symmetric(build_cells(hex_source))

    def test_by_halves(self, sym_source):
        H = sym_source
        g = build_cells(H)
        assert oracle.hexagon_symmetric_by_halves(H.a, H.b, H.X) == oracle.count_centrally_symmetric(g)


class TestCrossingDecomposition:
    def test_counts_per_crossing_set(self):
        for H in all_hexagons(4):
            g = build_cells(H)
            per = defaultdict(int)
            for t in oracle.enumerate_tilings(g):
                per[tuple(t.crossing(g.diagonal))] += 1
            expected = {}
            for Z in formulas.crossing_sets(H):
                upper, lower = split_along_diagonal(H, Z)
                expected[tuple(Z)] = oracle.count_tilings(build_cells(upper)) * \
                    oracle.count_tilings(build_cells(lower))
            assert {k: v for k, v in per.items() if v} == {k: v for k, v in expected.items() if v}

    def test_weighted_per_crossing_set(self):
        for H in all_hexagons(4):
            g = build_cells(H)
            per = defaultdict(lambda: ZERO)
            for t in oracle.enumerate_tilings(g):
                per[tuple(t.crossing(g.diagonal))] += oracle.tiling_weight_q(t)
            for Z in formulas.crossing_sets(H):
                _, lower = split_along_diagonal(H, Z)
                # the lower half is turned over, so its rows count up from the bottom
                exps = list(range(H.b + H.c, H.b, -1))
                lower_gf = oracle.generating_function_q(build_cells(lower), exps)
                assert per[tuple(Z)] == formulas.upper_trapezoid_q(H, Z) * lower_gf

    def test_evaluate_at_one(self):
        for H in all_hexagons(3):
            g = build_cells(H)
            assert evaluate(oracle.generating_function_q(g), 1) == oracle.count_tilings(g)

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lozenge_shuffle import formulas, oracle
from lozenge_shuffle.errors import DomainError
from lozenge_shuffle.exact import ONE, QPolynomial, evaluate, q_int
from lozenge_shuffle.formulas import (
    Partition,
    alpha_of_Z,
    clp_count,
    crossing_sets,
    delta1,
    delta1_q,
    delta2,
    delta2_q,
    hex_count,
    hex_count_q,
    hyperfactorial,
    lambda_of,
    macmahon,
    schur_principal,
    sym_count,
    symmetric_crossing_sets,
)
from lozenge_shuffle.regions import (
    Trapezoid,
    build_cells,
    reflect_set,
    split_along_diagonal,
    validate_hexagon,
)
from lozenge_shuffle.verify import all_hexagons, lemma_symmetric_holds, lemma_weighted_holds

dent_sets = st.sets(st.integers(1, 14), max_size=6).map(sorted)


class TestIntegerProducts:
    def test_delta_examples(self):
        assert delta1([]) == 1
        assert delta1([4]) == 1
        assert delta1([1, 3, 7]) == 2 * 6 * 4
        assert delta2([1, 2], [4]) == 3 * 2
        assert delta2([5], [1, 9]) == 4 * 4

    def test_delta2_overlap(self):
        with pytest.raises(DomainError):
            delta2([1, 2], [2, 3])

    def test_hyperfactorial(self):
        assert [hyperfactorial(n) for n in range(6)] == [1, 1, 1, 2, 12, 288]
        with pytest.raises(DomainError):
            hyperfactorial(-1)

    def test_clp_example(self, trapezoid_example):
        assert clp_count(trapezoid_example) == 12320

    def test_lambda(self):
        assert lambda_of([1, 4, 5, 9, 12]) == Partition((7, 5, 2, 2, 0))
        assert lambda_of([]) == Partition(())
        with pytest.raises(DomainError):
            Partition((1, 2))

    @given(dent_sets, dent_sets)
    def test_union_factorization(self, S, T):
        S = [s for s in S if s not in T]
        assert delta1(set(S) | set(T)) == delta1(S) * delta1(T) * delta2(S, T)

    @given(dent_sets, st.integers(0, 6))
    def test_reflection_invariant(self, S, extra):
        k = (max(S) if S else 1) + extra
        assert delta1(reflect_set(S, k)) == delta1(S)

    def test_delta1_staircase(self):
        for n in range(8):
            assert delta1(range(1, n + 1)) == hyperfactorial(n)


class TestQProducts:
    @pytest.mark.parametrize("n", range(0, 13))
    def test_union_factorization_exhaustive(self, n):
        # every disjoint pair inside [1, n] of total size <= 4
        pos = range(1, n + 1)
        for k in range(min(n, 4) + 1):
            for U in combinations(pos, k):
                for j in range(k + 1):
                    for S in combinations(U, j):
                        T = sorted(set(U) - set(S))
                        assert delta1_q(U) == delta1_q(S) * delta1_q(T) * delta2_q(S, T)

    @given(dent_sets)
    def test_specializes(self, S):
        assert evaluate(delta1_q(S), 1) == delta1(S)

    def test_qdiff(self):
        # [7] - [3] = q^3 + ... + q^6
        assert delta1_q([3, 7]) == q_int(7) - q_int(3)

    def test_staircase_is_q_hyperfactorial(self):
        for n in range(7):
            qf = ONE
            for i in range(n):
                for j in range(1, i + 1):
                    qf = qf * q_int(j)
            assert delta1_q(range(1, n + 1)) == qf * QPolynomial.monomial((n + 1) * n * (n - 1) // 6)


class TestSchurPrincipal:
    def test_matches_tableaux(self):
        rng = random.Random(3)
        for _ in range(40):
            n = rng.randint(1, 4)
            S = sorted(rng.sample(range(1, 9), n))
            sp = schur_principal(S)
            for qv in (Fraction(1), Fraction(2), Fraction(-1, 3)):
                pts = [qv ** i for i in range(n)]
                assert evaluate(sp, qv) == oracle.schur_ssyt(lambda_of(S), pts)

    def test_at_one_is_clp(self):
        for n in range(1, 5):
            for S in combinations(range(1, 8), n):
                assert evaluate(schur_principal(S), 1) == clp_count(Trapezoid(7 - n, n, S))


class TestHexagon:
    def test_example_counts(self, hex_source, hex_target):
        assert hex_count(hex_source) == 33518772
        assert hex_count(hex_target) == 251390790

    def test_unit(self):
        H = validate_hexagon(1, 1, 1, [], [])
        assert hex_count_q(H) == QPolynomial((0, 1, 1))
        assert hex_count(H) == 2

    @pytest.mark.parametrize("a,b", [(a, b) for a in range(5) for b in range(5)])
    def test_macmahon(self, a, b):
        H = validate_hexagon(a, b, b, [], [])
        assert hex_count(H) == macmahon(a, b, b)

    def test_macmahon_values(self):
        assert macmahon(2, 2, 2) == 20
        assert macmahon(3, 3, 3) == 980

    def test_sum_over_split(self):
        for H in all_hexagons(4):
            total = 0
            for Z in crossing_sets(H):
                upper, lower = split_along_diagonal(H, Z)
                total += clp_count(upper) * clp_count(lower)
            assert total == hex_count(H)

    def test_frozen_regions_are_monomials(self):
        # a region with a single tiling has a single-term generating function
        seen = 0
        for H in all_hexagons(4):
            if hex_count(H) != 1:
                continue
            gf = hex_count_q(H)
            (t,) = oracle.enumerate_tilings(build_cells(H))
            assert gf == oracle.tiling_weight_q(t)
            seen += 1
        assert seen > 10

    def test_alpha_affine(self, hex_source):
        zs = list(crossing_sets(hex_source))
        base = alpha_of_Z(hex_source, [])
        for Z in zs:
            assert alpha_of_Z(hex_source, Z) - base == (1 - 8 - 4) * sum(Z)

    def test_negative_alpha_region(self):
        H = validate_hexagon(0, 3, 2, [1], [])
        assert alpha_of_Z(H, [2, 3]) < 0
        assert hex_count_q(H) == oracle.generating_function_q(build_cells(H))


class TestSymmetric:
    def test_example(self, sym_source, sym_target):
        assert sym_count(sym_source) == 38531808
        assert sym_count(sym_target) == 16054920

    def test_crossing_sets_self_reflective(self, sym_source):
        zs = list(symmetric_crossing_sets(sym_source))
        assert zs
        for Z in zs:
            assert reflect_set(Z, sym_source.width) == Z
        full = [Z for Z in crossing_sets(sym_source) if reflect_set(Z, 14) == Z]
        assert zs == full

    def test_requires_symmetry(self, hex_source):
        with pytest.raises(DomainError):
            sym_count(hex_source)

    def test_small(self):
        assert sym_count(validate_hexagon(1, 1, 1, [], [])) == 0
        assert sym_count(validate_hexagon(2, 1, 1, [], [])) == 1


class TestLemmas:
    def test_weighted_lemma_random(self):
        from lozenge_shuffle.verify import random_dent_shuffle

        rng = random.Random(11)
        for _ in range(150):
            assert lemma_weighted_holds(*random_dent_shuffle(rng, 12))

    def test_symmetric_lemma_random(self):
        from lozenge_shuffle.verify import random_symmetric_dent_shuffle

        rng = random.Random(12)
        for _ in range(300):
            k, X, Xp, Z = random_symmetric_dent_shuffle(rng, 16)
            assert lemma_symmetric_holds(X, Xp, Z)

    def test_weighted_lemma_detects_non_shuffle(self):
        assert not lemma_weighted_holds([1], [3], [2], [3], [5])

    def test_symmetric_lemma_detects_asymmetric_Z(self):
        assert not lemma_symmetric_holds([1], [6], [2])

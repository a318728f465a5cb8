import pytest
from hypothesis import given
from hypothesis import strategies as st

from lozenge_shuffle.errors import DomainError, RegionError
from lozenge_shuffle.regions import (
    DentSet,
    Trapezoid,
    build_cells,
    down,
    is_centrally_symmetric,
    is_k_symmetric,
    make_lozenge,
    reflect_set,
    split_along_diagonal,
    up,
    validate_hexagon,
)
from lozenge_shuffle.verify import all_hexagons


class TestValidateHexagon:
    def test_example_regions_valid(self, hex_source, hex_target):
        assert hex_source.slack == 2
        assert hex_target.slack == 2

    def test_unequal_slack(self):
        with pytest.raises(RegionError) as err:
            validate_hexagon(1, 2, 1, [], [])
        assert err.value.clause == "condition (ii)"

    def test_condition_i(self):
        with pytest.raises(RegionError) as err:
            validate_hexagon(0, 1, 2, [], [1])
        assert err.value.clause == "condition (i)"

    def test_too_many_crossings(self):
        # slack 1 but no free position left
        with pytest.raises(RegionError) as err:
            validate_hexagon(0, 2, 2, [1], [2])
        assert err.value.clause == "condition (ii)"

    def test_range_and_order(self):
        with pytest.raises(RegionError) as err:
            validate_hexagon(1, 1, 1, [3], [])
        assert err.value.clause == "range"
        with pytest.raises(RegionError):
            validate_hexagon(2, 2, 2, [2, 1], [])
        with pytest.raises(RegionError):
            validate_hexagon(-1, 2, 2, [], [])


class TestReflect:
    def test_examples(self):
        assert reflect_set([3, 7], 11) == DentSet([5, 9])
        assert reflect_set([], 4) == DentSet()

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            reflect_set([5], 4)

    @given(st.integers(1, 30).flatmap(
        lambda k: st.tuples(st.just(k), st.sets(st.integers(1, k)))))
    def test_involution(self, ks):
        k, S = ks
        once = reflect_set(sorted(S), k)
        assert len(once) == len(S)
        assert reflect_set(once, k) == DentSet(sorted(S))


def test_k_symmetric():
    assert is_k_symmetric([2], 3)
    assert not is_k_symmetric([1], 2)
    assert is_k_symmetric([1, 5, 10, 14], 14)


def test_central_symmetry(sym_source, sym_target, hex_source):
    assert is_centrally_symmetric(sym_source)
    assert is_centrally_symmetric(sym_target)
    assert not is_centrally_symmetric(hex_source)
    for a in range(4):
        for b in range(4):
            assert is_centrally_symmetric(validate_hexagon(a, b, b, [], []))


class TestCells:
    def test_unit_hexagon(self):
        g = build_cells(validate_hexagon(1, 1, 1, [], []))
        assert g.height == 2
        assert len(g) == 6

    def test_unit_trapezoid(self):
        g = build_cells(Trapezoid(1, 1, [1]))
        assert g.height == 1
        assert g.rows() == [[(1, "up", False), (1, "down", True), (2, "up", True)]]

    def test_dented_hexagon(self, hex_source):
        g = build_cells(hex_source)
        assert g.height == 12
        assert len(g.removed) == 8
        assert sum(1 for c in g.removed if c[1] % 2 == 0) == 6
        assert sum(1 for c in g.removed if c[1] % 2 == 1) == 2

    def test_balance_and_rows(self):
        for H in all_hexagons(5):
            g = build_cells(H)
            ups, downs = g.balance()
            assert ups == downs
            assert {r for r, _ in g.cells | g.removed} <= set(range(1, H.b + H.c + 1))
            assert g.height == H.b + H.c

    def test_trapezoid_invariants(self):
        with pytest.raises(RegionError):
            Trapezoid(2, 2, [1])
        with pytest.raises(RegionError):
            Trapezoid(1, 1, [3])

    def test_half_turn_maps_cells(self, sym_source):
        g = build_cells(sym_source)
        assert {g.rotate(c) for c in g.cells} == g.cells
        assert build_cells(validate_hexagon(3, 8, 4, [2, 3, 5, 8, 9, 11], [3, 7])).turn_key is None


class TestLozenge:
    def test_orientation(self):
        assert make_lozenge(up(1, 0), down(1, 0)).orientation == "right"
        assert make_lozenge(down(1, 0), up(1, 1)).orientation == "left"
        assert make_lozenge(up(1, 0), down(2, 0)).orientation == "vertical"
        assert make_lozenge(up(1, 0), down(2, 0)).row == 2

    def test_not_adjacent(self):
        with pytest.raises(DomainError):
            make_lozenge(up(1, 0), down(1, 3))
        with pytest.raises(DomainError):
            make_lozenge(up(1, 0), up(1, 1))


class TestSplit:
    def test_two_crossings(self, hex_source):
        upper, lower = split_along_diagonal(hex_source, [1, 10])
        assert upper == Trapezoid(3, 8, [1, 2, 3, 5, 8, 9, 10, 11])
        # Y | Z = {1, 3, 7, 10} reflected in 11
        assert lower == Trapezoid(7, 4, [2, 5, 9, 11])

    def test_unit(self):
        H = validate_hexagon(1, 1, 1, [], [])
        assert split_along_diagonal(H, [1]) == (Trapezoid(1, 1, [1]), Trapezoid(1, 1, [2]))

    def test_errors(self, hex_source):
        with pytest.raises(DomainError):
            split_along_diagonal(hex_source, [1])
        with pytest.raises(DomainError):
            split_along_diagonal(hex_source, [2, 10])

    def test_dent_counts(self):
        from lozenge_shuffle.formulas import crossing_sets

        for H in all_hexagons(4):
            for Z in crossing_sets(H):
                upper, lower = split_along_diagonal(H, Z)
                assert len(upper.S) == upper.n
                assert len(lower.S) == lower.n

"""Brute-force ground truth by direct tiling enumeration.

Nothing here imports :mod:`lozenge_shuffle.formulas`; the only shared code
is the region geometry and the exact arithmetic layer, so agreement between
the two paths is an independent check.

All counting routines walk the cells in row-major order and always cover
the first uncovered cell. That cell's left neighbour and the cell above it
are already covered, so an up-triangle can only pair to the right (a right
lozenge) or downward (a vertical lozenge), and a down-triangle only to the
right (a left lozenge). The memo key is the set of covered cells, which
given the sweep position is just the frontier profile.
"""

from __future__ import annotations

import sys
from itertools import product
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from .errors import DomainError
from .exact import ONE, QPolynomial, ZERO
from .regions import (
    LEFT,
    RIGHT,
    VERTICAL,
    CellGrid,
    Lozenge,
    Tiling,
    is_up,
)

# Deep regions recurse once per lozenge.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class _Board:
    """Index the cells of a grid for bitmask bookkeeping."""

    def __init__(self, grid: CellGrid):
        self.grid = grid
        self.cells = grid.ordered()
        self.index = {c: i for i, c in enumerate(self.cells)}
        self.full = (1 << len(self.cells)) - 1

    def first_free(self, mask: int) -> int:
        return ((~mask) & (mask + 1)).bit_length() - 1

    def moves(self, i: int) -> list:
        """Lozenges covering cell ``i`` plus one later cell, in the order left < vertical < right."""
        r, s = self.cells[i]
        out = []
        if is_up((r, s)):
            below = self.index.get((r + 1, s + 1))
            if below is not None:
                out.append((Lozenge(VERTICAL, (r, s), (r + 1, s + 1)), below))
            right = self.index.get((r, s + 1))
            if right is not None:
                out.append((Lozenge(RIGHT, (r, s), (r, s + 1)), right))
        else:
            right = self.index.get((r, s + 1))
            if right is not None:
                out.append((Lozenge(LEFT, (r, s + 1), (r, s)), right))
        return out


def enumerate_tilings(g: CellGrid) -> Iterator[Tiling]:
    """Yield every tiling once, in deterministic depth-first order."""
    board = _Board(g)
    chosen: list = []

    def walk(mask: int):
        if mask == board.full:
            yield Tiling(tuple(chosen))
            return
        i = board.first_free(mask)
        for lz, j in board.moves(i):
            bit = 1 << j
            if mask & bit:
                continue
            chosen.append(lz)
            yield from walk(mask | (1 << i) | bit)
            chosen.pop()

    yield from walk(0)


def _fold(g: CellGrid, weight: Callable[[Lozenge], object], one, zero):
    """Sum over tilings of the product of lozenge weights, memoized on the frontier."""
    board = _Board(g)
    memo: dict = {}

    def solve(mask: int):
        if mask == board.full:
            return one
        hit = memo.get(mask)
        if hit is not None:
            return hit
        i = board.first_free(mask)
        total = zero
        for lz, j in board.moves(i):
            bit = 1 << j
            if mask & bit:
                continue
            sub = solve(mask | (1 << i) | bit)
            w = weight(lz)
            total = total + (sub if w is None else w * sub)
        memo[mask] = total
        return total

    return solve(0)


def count_tilings(g: CellGrid) -> int:
    return _fold(g, lambda lz: None, 1, 0)


def tiling_weight_q(t: Tiling) -> QPolynomial:
    """``q`` to the sum of the bottom-line indices of the right lozenges."""
    return QPolynomial.monomial(sum(lz.row for lz in t if lz.orientation == RIGHT))


def generating_function_q(g: CellGrid, row_exponents: Optional[Sequence[int]] = None) -> QPolynomial:
    """Tiling generating function with a row-``k`` right lozenge weighted ``q**k``.

    ``row_exponents`` overrides the exponent per row (``row_exponents[k - 1]``).
    """
    if row_exponents is None:
        exps = list(range(1, g.height + 1))
    elif len(row_exponents) != g.height:
        raise DomainError(f"need {g.height} row exponents, got {len(row_exponents)}")
    else:
        exps = list(row_exponents)
    monos = [QPolynomial.monomial(e) for e in exps]
    return _fold(g, lambda lz: monos[lz.row - 1] if lz.orientation == RIGHT else None,
                 ONE, ZERO)


def weighted_count(g: CellGrid, weights: Sequence) -> Fraction:
    """Tiling sum with a right lozenge in row ``k`` weighted ``weights[k - 1]``."""
    if len(weights) != g.height:
        raise DomainError(f"need {g.height} row weights, got {len(weights)}")
    ws = [Fraction(w) for w in weights]
    return _fold(g, lambda lz: ws[lz.row - 1] if lz.orientation == RIGHT else None,
                 Fraction(1), Fraction(0))


# -- central symmetry --------------------------------------------------------


def _check_symmetric(g: CellGrid) -> None:
    if g.turn_key is None or {g.rotate(c) for c in g.cells} != g.cells:
        raise DomainError("region is not centrally symmetric")


def rotate180(g: CellGrid, t: Tiling) -> Tiling:
    """Image of a tiling under the half-turn of a symmetric region."""
    from .regions import make_lozenge

    out = []
    for lz in t:
        image = make_lozenge(g.rotate(lz.up), g.rotate(lz.down))
        if image.orientation != lz.orientation:
            raise AssertionError(f"half-turn changed {lz} into {image}")
        out.append(image)
    return Tiling(tuple(sorted(out, key=lambda z: min(z.up, z.down))))


def _canonical(t: Tiling) -> frozenset:
    return frozenset(t.lozenges)


def symmetric_tilings(g: CellGrid) -> Iterator[Tiling]:
    """Filter the full enumeration down to half-turn invariant tilings."""
    _check_symmetric(g)
    for t in enumerate_tilings(g):
        if _canonical(rotate180(g, t)) == _canonical(t):
            yield t


def count_centrally_symmetric(g: CellGrid) -> int:
    """Number of tilings fixed by the half-turn.

    Every placed lozenge is placed together with its image, so the sweep
    only ever chooses the front half of a tiling.
    """
    _check_symmetric(g)
    board = _Board(g)
    image = [board.index[g.rotate(c)] for c in board.cells]
    memo: dict = {}

    def solve(mask: int) -> int:
        if mask == board.full:
            return 1
        hit = memo.get(mask)
        if hit is not None:
            return hit
        i = board.first_free(mask)
        total = 0
        for _, j in board.moves(i):
            pair = (1 << i) | (1 << j)
            if mask & pair:
                continue
            mirrored = (1 << image[i]) | (1 << image[j])
            if mirrored != pair and mirrored & (pair | mask):
                continue
            total += solve(mask | pair | mirrored)
        memo[mask] = total
        return total

    return solve(0)


# -- Schur functions from tableaux -------------------------------------------


def _interlacing(lam: tuple, k: int) -> Iterator[tuple]:
    """Partitions ``mu`` with ``lam / mu`` a horizontal strip and at most ``k`` nonzero parts."""
    n = len(lam)
    bounds = []
    for i in range(n):
        lo = lam[i + 1] if i + 1 < n else 0
        hi = lam[i] if i < k else 0
        if lo > hi:
            return
        bounds.append(range(lo, hi + 1))
    yield from product(*bounds)


def schur_ssyt(lam: Sequence[int], points: Sequence) -> Fraction:
    """``s_lam(points)`` as a sum over semistandard tableaux with entries ``<= len(points)``.

    Tableaux are built by peeling off the horizontal strip of largest
    entries: ``s_lam(x_1..x_n) = sum_mu s_mu(x_1..x_{n-1}) x_n^{|lam| - |mu|}``.
    """
    lam = tuple(int(x) for x in lam)
    if any(x < y for x, y in zip(lam, lam[1:])) or any(x < 0 for x in lam):
        raise DomainError(f"not a partition: {lam}")
    xs = [Fraction(p) for p in points]
    memo: dict = {}

    def s(mu: tuple, k: int) -> Fraction:
        if k == 0:
            return Fraction(1) if not any(mu) else Fraction(0)
        if sum(1 for x in mu if x) > k:
            return Fraction(0)
        key = (mu, k)
        if key in memo:
            return memo[key]
        size = sum(mu)
        total = Fraction(0)
        for nu in _interlacing(mu, k - 1):
            total += s(nu, k - 1) * xs[k - 1] ** (size - sum(nu))
        memo[key] = total
        return total

    return s(lam, len(xs))


def enumerate_ssyt(lam: Sequence[int], n: int) -> Iterator[tuple]:
    """All semistandard tableaux of shape ``lam`` with entries in ``1..n`` (rows as tuples)."""
    shape = [x for x in lam if x]
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    grid = [[0] * length for length in shape]

    def rec(k: int):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, n + 1):
            grid[i][j] = v
            yield from rec(k + 1)
        grid[i][j] = 0

    yield from rec(0)


def hexagon_symmetric_by_halves(a: int, b: int, X: Sequence[int], count: Optional[Callable] = None) -> int:
    """Symmetric tilings of ``V_{a,b,b}(X, X reflected)`` via the upper half.

    A half-turn invariant tiling is fixed by its crossing set ``Z`` (which
    must be self-reflective) and its restriction above the diagonal, a tiling
    of ``T_{a,b}(X | Z)``. Each upper trapezoid is counted by enumeration.
    """
    from itertools import combinations

    from .regions import Trapezoid, build_cells

    count = count or count_tilings
    n = a + b
    taken = set(X) | {n + 1 - x for x in X}
    need = b - len(X)
    free = [i for i in range(1, n + 1) if i not in taken]
    pairs = [(i, n + 1 - i) for i in free if i < n + 1 - i]
    middle = [i for i in free if 2 * i == n + 1]
    total = 0
    for use_mid in ([False, True] if middle else [False]):
        rest = need - (1 if use_mid else 0)
        if rest < 0 or rest % 2:
            continue
        for chosen in combinations(pairs, rest // 2):
            Z = {x for pr in chosen for x in pr} | (set(middle) if use_mid else set())
            total += count(build_cells(Trapezoid(a, b, sorted(set(X) | Z))))
    return total

"""Region descriptors and their unit-triangle geometry.

Lattice conventions
-------------------
Horizontal lattice lines are numbered 0, 1, 2, ... downward from the top
of the region. Row ``r`` is the strip between lines ``r - 1`` and ``r``.
Lattice point ``(y, p)`` sits on line ``y`` at abscissa ``p - y/2``.

Unit triangles are addressed as ``(row, slot)``:

* slot ``2p``     is the up-triangle with base ``(r, p)--(r, p+1)`` and apex ``(r-1, p)``;
* slot ``2p + 1`` is the down-triangle with top ``(r-1, p)--(r-1, p+1)`` and apex ``(r, p+1)``.

Slots increase left to right inside a row, so sorting cells by
``(row, slot)`` is row-major order. Two cells in the same row with adjacent
slots form a lozenge; it is a *right* lozenge when the up-triangle is on the
left (the down-triangle sits to its upper right), otherwise a *left* lozenge.
An up-triangle ``(r, 2p)`` and the down-triangle ``(r+1, 2p+1)`` below it
form a *vertical* lozenge.

With these names the weighted trapezoid generating function (row ``k``
right lozenges weighted ``t_k``) is the Schur function of the dent
partition; ``T_{1,1}({2})`` is a single right lozenge of weight ``t_1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Optional, Union

from .errors import DomainError, RegionError

Cell = tuple  # (row, slot)

LEFT, VERTICAL, RIGHT = "left", "vertical", "right"
ORIENTATIONS = (LEFT, VERTICAL, RIGHT)


class DentSet(tuple):
    """Strictly increasing tuple of positive integers."""

    def __new__(cls, positions: Iterable[int] = ()):
        items = tuple(positions)
        for s in items:
            if not isinstance(s, int) or isinstance(s, bool):
                raise DomainError(f"dent positions must be integers, got {s!r}")
            if s < 1:
                raise DomainError(f"dent positions must be >= 1, got {s}")
        for x, y in zip(items, items[1:]):
            if x >= y:
                raise DomainError(f"dent positions must be strictly increasing: {list(items)}")
        return super().__new__(cls, items)

    @classmethod
    def of(cls, positions: Iterable[int]) -> "DentSet":
        """Build from any iterable, sorting and rejecting duplicates."""
        items = list(positions)
        if len(set(items)) != len(items):
            raise DomainError(f"duplicate dent positions in {items}")
        return cls(sorted(items))

    def __or__(self, other: Iterable[int]) -> "DentSet":
        return DentSet(sorted(set(self) | set(other)))

    def __and__(self, other: Iterable[int]) -> "DentSet":
        return DentSet(sorted(set(self) & set(other)))

    def __sub__(self, other: Iterable[int]) -> "DentSet":
        return DentSet(sorted(set(self) - set(other)))

    def __repr__(self):
        return "{" + ", ".join(map(str, self)) + "}"


def reflect_set(S: Iterable[int], k: int) -> DentSet:
    """``{k + 1 - s : s in S}`` in increasing order."""
    S = tuple(S)
    if k < 1:
        raise DomainError(f"reflection length must be positive, got {k}")
    for s in S:
        if not 1 <= s <= k:
            raise DomainError(f"element {s} outside [1, {k}]")
    return DentSet(sorted(k + 1 - s for s in S))


def is_k_symmetric(S: Iterable[int], k: int) -> bool:
    S = DentSet.of(S)
    return reflect_set(S, k) == S


@dataclass(frozen=True)
class Trapezoid:
    """``T_{m,n}(S)``: top side ``m``, slant sides ``n``, up-dents ``S`` on the bottom."""

    m: int
    n: int
    S: DentSet

    def __post_init__(self):
        object.__setattr__(self, "S", DentSet(self.S))
        if self.m < 0 or self.n < 0:
            raise RegionError("nonnegative", f"sides must be >= 0, got m={self.m}, n={self.n}")
        if len(self.S) != self.n:
            raise RegionError("dent count", f"|S| = {len(self.S)} must equal n = {self.n}")
        if self.S and self.S[-1] > self.m + self.n:
            raise RegionError("range", f"dent {self.S[-1]} outside [1, {self.m + self.n}]")

    def __str__(self):
        return f"T_{{{self.m},{self.n}}}({self.S!r})"


@dataclass(frozen=True)
class DentedHexagon:
    """``V_{a,b,c}(X, Y)``: up-dents ``X`` and down-dents ``Y`` on the horizontal diagonal."""

    a: int
    b: int
    c: int
    X: DentSet
    Y: DentSet

    def __post_init__(self):
        object.__setattr__(self, "X", DentSet(self.X))
        object.__setattr__(self, "Y", DentSet(self.Y))

    @property
    def width(self) -> int:
        """Length of the horizontal diagonal, ``a + b``."""
        return self.a + self.b

    @property
    def height(self) -> int:
        return self.b + self.c

    @property
    def slack(self) -> int:
        """Number of vertical lozenges crossing the diagonal, ``b - |X|``."""
        return self.b - len(self.X)

    def free_positions(self) -> DentSet:
        return DentSet(sorted(set(range(1, self.width + 1)) - set(self.X) - set(self.Y)))

    def __str__(self):
        return f"V_{{{self.a},{self.b},{self.c}}}({self.X!r}, {self.Y!r})"


def validate_hexagon(a: int, b: int, c: int, X: Iterable[int], Y: Iterable[int]) -> DentedHexagon:
    """Build ``V_{a,b,c}(X, Y)``, raising :class:`RegionError` naming the failed clause."""
    if min(a, b, c) < 0:
        raise RegionError("nonnegative", f"sides must be >= 0, got a={a}, b={b}, c={c}")
    try:
        X, Y = DentSet(X), DentSet(Y)
    except DomainError as exc:
        raise RegionError("dent set", str(exc)) from None
    n = a + b
    for name, S in (("X", X), ("Y", Y)):
        if S and S[-1] > n:
            raise RegionError("range", f"{name} element {S[-1]} outside [1, {n}]")
    if c > n:
        raise RegionError("condition (i)", f"c = {c} exceeds a + b = {n}")
    sx, sy = b - len(X), c - len(Y)
    free = n - len(set(X) | set(Y))
    if sx != sy:
        raise RegionError("condition (ii)", f"b - |X| = {sx} differs from c - |Y| = {sy}")
    if sx < 0:
        raise RegionError("condition (ii)", f"b - |X| = {sx} is negative")
    if sx > free:
        raise RegionError("condition (ii)", f"b - |X| = {sx} exceeds the {free} free positions")
    return DentedHexagon(a, b, c, X, Y)


def is_centrally_symmetric(H: DentedHexagon) -> bool:
    if H.b != H.c:
        return False
    return H.width == 0 or H.Y == reflect_set(H.X, H.width)


def split_along_diagonal(H: DentedHexagon, Z: Iterable[int]) -> tuple:
    """Upper and (rotated) lower trapezoids left after fixing crossing positions ``Z``."""
    Z = DentSet.of(Z)
    if set(Z) & (set(H.X) | set(H.Y)):
        raise DomainError(f"Z = {Z!r} meets the dents of {H}")
    if Z and Z[-1] > H.width:
        raise DomainError(f"Z = {Z!r} leaves [1, {H.width}]")
    if len(Z) != H.slack:
        raise DomainError(f"|Z| = {len(Z)} but {H} needs {H.slack} crossings")
    upper = Trapezoid(H.a, H.b, H.X | Z)
    lower = Trapezoid(H.width - H.c, H.c, reflect_set(H.Y | Z, H.width) if H.width else DentSet())
    return upper, lower


# -- cell geometry -----------------------------------------------------------


def up(r: int, p: int) -> Cell:
    return (r, 2 * p)


def down(r: int, p: int) -> Cell:
    return (r, 2 * p + 1)


def is_up(cell: Cell) -> bool:
    return cell[1] % 2 == 0


@dataclass(frozen=True)
class CellGrid:
    """Set of unit triangles making up a region.

    ``removed`` keeps the dent cells for drawing; ``diagonal`` is the line
    index of the dented diagonal (hexagons) or bottom line (trapezoids).
    ``turn_key`` is the slot constant of the half-turn ``(r, s) -> (height + 1 - r,
    turn_key - s)`` when the region is centrally symmetric, else ``None``.
    """

    height: int
    cells: frozenset
    removed: frozenset = frozenset()
    diagonal: Optional[int] = None
    turn_key: Optional[int] = None
    labels: dict = field(default_factory=dict, compare=False, hash=False)

    def __len__(self):
        return len(self.cells)

    def ordered(self) -> list:
        return sorted(self.cells)

    def rows(self) -> list:
        """Per row, ``(position, 'up'|'down', present)`` triples left to right."""
        out = []
        for r in range(1, self.height + 1):
            row = sorted(c for c in self.cells | self.removed if c[0] == r)
            out.append([(s // 2 + 1, "up" if s % 2 == 0 else "down", (r, s) in self.cells)
                        for _, s in row])
        return out

    def balance(self) -> tuple:
        ups = sum(1 for c in self.cells if is_up(c))
        return ups, len(self.cells) - ups

    def rotate(self, cell: Cell) -> Cell:
        if self.turn_key is None:
            raise DomainError("region has no half-turn symmetry")
        return (self.height + 1 - cell[0], self.turn_key - cell[1])


def _hexagon_cells(H: DentedHexagon) -> CellGrid:
    a, b, c = H.a, H.b, H.c
    n = a + b
    cells = set()
    for r in range(1, b + 1):
        cells.update(up(r, p) for p in range(a + r))
        cells.update(down(r, p) for p in range(a + r - 1))
    for r in range(b + 1, b + c + 1):
        cells.update(up(r, p) for p in range(r - b, n))
        cells.update(down(r, p) for p in range(r - 1 - b, n))
    removed = {up(b, x - 1) for x in H.X} | {down(b + 1, y - 1) for y in H.Y}
    assert removed <= cells
    turn = 2 * n - 1 if is_centrally_symmetric(H) else None
    return CellGrid(b + c, frozenset(cells - removed), frozenset(removed), b, turn,
                    {"kind": "hexagon", "width": n})


def _trapezoid_cells(T: Trapezoid) -> CellGrid:
    m, n = T.m, T.n
    cells = set()
    for r in range(1, n + 1):
        cells.update(up(r, p) for p in range(m + r))
        cells.update(down(r, p) for p in range(m + r - 1))
    removed = {up(n, s - 1) for s in T.S}
    return CellGrid(n, frozenset(cells - removed), frozenset(removed), n, None,
                    {"kind": "trapezoid", "width": m + n})


def build_cells(region: Union[DentedHexagon, Trapezoid]) -> CellGrid:
    if isinstance(region, DentedHexagon):
        return _hexagon_cells(region)
    if isinstance(region, Trapezoid):
        return _trapezoid_cells(region)
    raise TypeError(f"cannot build cells for {type(region).__name__}")


# -- tilings -----------------------------------------------------------------


class Lozenge(NamedTuple):
    orientation: str
    up: Cell
    down: Cell

    @property
    def row(self) -> int:
        """Line index of the lozenge's bottom side, counted from the top line."""
        return max(self.up[0], self.down[0])

    @property
    def position(self) -> int:
        """Index ``p`` of the up-triangle (its base is unit segment ``p + 1``)."""
        return self.up[1] // 2

    def cells(self) -> tuple:
        return (self.up, self.down)


def make_lozenge(c1: Cell, c2: Cell) -> Lozenge:
    """Lozenge covering two edge-adjacent cells, oriented by the module convention."""
    u, d = (c1, c2) if is_up(c1) else (c2, c1)
    if is_up(d) or not is_up(u):
        raise DomainError(f"cells {c1}, {c2} are not an up/down pair")
    if u[0] == d[0]:
        if d[1] == u[1] + 1:
            return Lozenge(RIGHT, u, d)
        if d[1] == u[1] - 1:
            return Lozenge(LEFT, u, d)
    elif d[0] == u[0] + 1 and d[1] == u[1] + 1:
        return Lozenge(VERTICAL, u, d)
    raise DomainError(f"cells {c1}, {c2} are not edge-adjacent")


@dataclass(frozen=True)
class Tiling:
    lozenges: tuple

    def __iter__(self) -> Iterator[Lozenge]:
        return iter(self.lozenges)

    def __len__(self):
        return len(self.lozenges)

    def covers(self, grid: CellGrid) -> bool:
        seen = [c for lz in self.lozenges for c in lz.cells()]
        return len(seen) == len(set(seen)) and set(seen) == set(grid.cells)

    def crossing(self, diagonal: int) -> list:
        """Vertical lozenges straddling line ``diagonal``, as 1-based positions."""
        return sorted(lz.position + 1 for lz in self.lozenges
                      if lz.orientation == VERTICAL and lz.up[0] == diagonal)

"""Closed-form tiling counts and generating functions.

Everything here is exact; no floating point is used. The hexagon counts are
sums over the set ``Z`` of positions where vertical lozenges cross the dented
diagonal; each summand is a product of two trapezoid counts.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator

from .errors import DomainError, InexactDivisionError
from .exact import QPolynomial, ZERO, poly_prod, q_int
from .regions import (
    DentedHexagon,
    DentSet,
    Trapezoid,
    is_centrally_symmetric,
    reflect_set,
)


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative integers; trailing zeros are kept."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        if any(p < 0 for p in parts) or any(x < y for x, y in zip(parts, parts[1:])):
            raise DomainError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)


def _disjoint(S, T) -> None:
    if set(S) & set(T):
        raise DomainError(f"sets {sorted(S)} and {sorted(T)} overlap")


def delta1(S: Iterable[int]) -> int:
    """Product of ``s' - s`` over pairs ``s < s'`` of ``S``."""
    S = sorted(S)
    out = 1
    for i, s in enumerate(S):
        for t in S[i + 1:]:
            out *= t - s
    return out


def delta2(S: Iterable[int], T: Iterable[int]) -> int:
    S, T = list(S), list(T)
    _disjoint(S, T)
    out = 1
    for s in S:
        for t in T:
            out *= abs(t - s)
    return out


@lru_cache(maxsize=None)
def hyperfactorial(n: int) -> int:
    """``0! 1! ... (n-1)!``."""
    if n < 0:
        raise DomainError(f"hyperfactorial of negative {n}")
    out = 1
    for i in range(n):
        out *= factorial(i)
    return out


def clp_count(T: Trapezoid) -> int:
    """Tilings of ``T_{m,n}(S)``: ``delta1(S) / H(n)``."""
    q, r = divmod(delta1(T.S), hyperfactorial(T.n))
    if r:
        raise InexactDivisionError(f"delta1({T.S!r}) not divisible by H({T.n})")
    return q


def lambda_of(S: Iterable[int]) -> Partition:
    """``(s_n - n, ..., s_1 - 1)`` for ``S = {s_1 < ... < s_n}``."""
    S = sorted(S)
    return Partition(s - i for i, s in reversed(list(enumerate(S, start=1))))


# -- q-analogues --------------------------------------------------------------


@lru_cache(maxsize=None)
def _qdiff(s: int, t: int) -> QPolynomial:
    # [t]_q - [s]_q = q^s [t - s]_q for s < t
    return q_int(t - s).shift(s)


def delta1_q(S: Iterable[int]) -> QPolynomial:
    S = sorted(S)
    return poly_prod(_qdiff(s, t) for i, s in enumerate(S) for t in S[i + 1:])


def delta2_q(S: Iterable[int], T: Iterable[int]) -> QPolynomial:
    S, T = list(S), list(T)
    _disjoint(S, T)
    return poly_prod(_qdiff(min(s, t), max(s, t)) for s in S for t in T)


@lru_cache(maxsize=None)
def _delta1_q_range(n: int) -> QPolynomial:
    return delta1_q(range(1, n + 1))


def schur_principal(S: Iterable[int]) -> QPolynomial:
    """``s_{lambda(S)}(1, q, ..., q^{n-1})`` as ``delta1_q(S) / delta1_q([n])``."""
    S = tuple(sorted(S))
    return _schur_principal(S)


@lru_cache(maxsize=4096)
def _schur_principal(S: tuple) -> QPolynomial:
    return delta1_q(S).div_exact(_delta1_q_range(len(S)))


# -- hexagons ----------------------------------------------------------------


def crossing_sets(H: DentedHexagon) -> Iterator[DentSet]:
    """Admissible crossing sets ``Z`` in lexicographic order."""
    if H.slack < 0:
        return
    for Z in combinations(H.free_positions(), H.slack):
        yield DentSet(Z)


def hex_count(H: DentedHexagon) -> int:
    """``sum_Z delta1(X | Z) delta1(Y | Z) / (H(b) H(c))``."""
    total = sum(delta1(H.X | Z) * delta1(H.Y | Z) for Z in crossing_sets(H))
    q, r = divmod(total, hyperfactorial(H.b) * hyperfactorial(H.c))
    if r:
        raise InexactDivisionError(f"hexagon sum for {H} not divisible by H(b)H(c)")
    return q


def alpha_constant(H: DentedHexagon) -> int:
    """The ``Z``-independent part of the weight exponent."""
    a, b, c = H.a, H.b, H.c
    n1 = a + b + 1
    return (sum(H.X) - (b + c) * sum(H.Y) - b * (b + 1) // 2 + n1 * (b + 1) * c
            - (b + 1) * c * (c + 1) // 2 + n1 * c * (c - 1) // 2)


def alpha_of_Z(H: DentedHexagon, Z: Iterable[int]) -> int:
    """Power of ``q`` attached to crossing set ``Z`` in the generating function."""
    return alpha_constant(H) + (1 - H.b - H.c) * sum(Z)


def hex_count_q(H: DentedHexagon) -> QPolynomial:
    """Generating function as ``sum_Z q^alpha(Z) s(X | Z) s(Y | Z)`` at principal points."""
    total = ZERO
    for Z in crossing_sets(H):
        # alpha(Z) may be negative; the Schur factors then carry enough powers of q
        term = schur_principal(H.X | Z) * schur_principal(H.Y | Z)
        total = total + term.shift(alpha_of_Z(H, Z))
    return total


def symmetric_crossing_sets(H: DentedHexagon) -> Iterator[DentSet]:
    """Self-reflective admissible crossing sets, built from mirror pairs."""
    n = H.width
    free = H.free_positions()
    pairs = [(i, n + 1 - i) for i in free if i < n + 1 - i]
    middle = [i for i in free if 2 * i == n + 1]
    need = H.slack
    found = []
    for mid in ([[]] + [middle] if middle else [[]]):
        rest = need - len(mid)
        if rest < 0 or rest % 2:
            continue
        for chosen in combinations(pairs, rest // 2):
            found.append(DentSet(sorted(mid + [x for pr in chosen for x in pr])))
    yield from sorted(found)


def sym_count(H: DentedHexagon) -> int:
    """Half-turn invariant tilings: ``sum_Z delta1(X | Z) / H(b)`` over symmetric ``Z``."""
    if not is_centrally_symmetric(H):
        raise DomainError(f"{H} is not centrally symmetric")
    total = sum(delta1(H.X | Z) for Z in symmetric_crossing_sets(H))
    q, r = divmod(total, hyperfactorial(H.b))
    if r:
        raise InexactDivisionError(f"symmetric sum for {H} not divisible by H(b)")
    return q


def macmahon(a: int, b: int, c: int) -> int:
    """Plane partitions in an ``a x b x c`` box: ``H(a)H(b)H(c)H(a+b+c) / (H(a+b)H(b+c)H(c+a))``."""
    H = hyperfactorial
    num = H(a) * H(b) * H(c) * H(a + b + c)
    den = H(a + b) * H(b + c) * H(c + a)
    q, r = divmod(num, den)
    assert r == 0
    return q


def upper_trapezoid_q(H: DentedHexagon, Z: Iterable[int]) -> QPolynomial:
    """Weighted count of the part above the diagonal, via the principal Schur value."""
    S = H.X | Z
    return schur_principal(S).shift(sum(S) - H.b * (H.b + 1) // 2)


__all__ = [
    "Partition",
    "alpha_constant",
    "alpha_of_Z",
    "clp_count",
    "crossing_sets",
    "delta1",
    "delta1_q",
    "delta2",
    "delta2_q",
    "hex_count",
    "hex_count_q",
    "hyperfactorial",
    "lambda_of",
    "macmahon",
    "reflect_set",
    "schur_principal",
    "sym_count",
    "symmetric_crossing_sets",
    "upper_trapezoid_q",
]

"""Shufflings of dent sets and the three ratio identities they satisfy."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DomainError, RegionError, ShuffleError
from .exact import QLaurentRatio, QPolynomial
from .formulas import alpha_constant, delta1, delta1_q, hyperfactorial
from .regions import (
    DentedHexagon,
    DentSet,
    is_centrally_symmetric,
    reflect_set,
    validate_hexagon,
)


@dataclass(frozen=True)
class ShuffleInstance:
    source: DentedHexagon
    Xp: DentSet
    Yp: DentSet
    d: int
    u: int
    target: DentedHexagon

    @property
    def moved(self) -> int:
        """How far the diagonal moves up: ``d - u``."""
        return self.d - self.u


def is_shuffling(X: Iterable[int], Y: Iterable[int], Xp: Iterable[int], Yp: Iterable[int]) -> bool:
    X, Y, Xp, Yp = set(X), set(Y), set(Xp), set(Yp)
    return X | Y == Xp | Yp and X & Y == Xp & Yp


def make_shuffle(H: DentedHexagon, Xp: Iterable[int], Yp: Iterable[int]) -> ShuffleInstance:
    """Partner region obtained by reassigning dents of ``H`` to ``(Xp, Yp)``.

    ``d`` up-dents flip down and ``u`` down-dents flip up; the diagonal moves
    up ``d - u`` units with the hexagon's width and height unchanged.
    """
    try:
        Xp, Yp = DentSet(Xp), DentSet(Yp)
    except DomainError as exc:
        raise ShuffleError(str(exc)) from None
    if set(H.X) | set(H.Y) != set(Xp) | set(Yp):
        raise ShuffleError(f"not a shuffling: union {sorted(set(Xp) | set(Yp))} "
                           f"differs from {sorted(set(H.X) | set(H.Y))}")
    if set(H.X) & set(H.Y) != set(Xp) & set(Yp):
        raise ShuffleError(f"not a shuffling: intersection {sorted(set(Xp) & set(Yp))} "
                           f"differs from {sorted(set(H.X) & set(H.Y))}")
    d = len(set(H.X) - set(Xp))
    u = len(set(H.Y) - set(Yp))
    k = d - u
    target = validate_hexagon(H.a + k, H.b - k, H.c + k, Xp, Yp)
    return ShuffleInstance(H, Xp, Yp, d, u, target)


def compose(first: ShuffleInstance, second: ShuffleInstance) -> ShuffleInstance:
    if second.source != first.target:
        raise ShuffleError("second shuffle does not start where the first ends")
    return make_shuffle(first.source, second.Xp, second.Yp)


def ratio_unweighted(s: ShuffleInstance) -> Fraction:
    """``M(target) / M(source)`` in closed form."""
    H, G = s.source, s.target
    num = hyperfactorial(H.b) * hyperfactorial(H.c) * delta1(G.X) * delta1(G.Y)
    den = hyperfactorial(G.b) * hyperfactorial(G.c) * delta1(H.X) * delta1(H.Y)
    return Fraction(num, den)


def unweighted_identity(s: ShuffleInstance, source_count: int, target_count: int) -> bool:
    """Division-free form: ``M' H(b')H(c') D(X)D(Y) == M H(b)H(c) D(X')D(Y')``."""
    H, G = s.source, s.target
    lhs = target_count * hyperfactorial(G.b) * hyperfactorial(G.c) * delta1(H.X) * delta1(H.Y)
    rhs = source_count * hyperfactorial(H.b) * hyperfactorial(H.c) * delta1(G.X) * delta1(G.Y)
    return lhs == rhs


def alpha_shift(s: ShuffleInstance) -> int:
    """Power of ``q`` in the weighted ratio; the crossing-set terms cancel."""
    return alpha_constant(s.target) - alpha_constant(s.source)


def ratio_weighted(s: ShuffleInstance) -> QLaurentRatio:
    """``M(target; q) / M(source; q)`` as ``q^alpha`` times a ratio of q-Vandermonde products."""
    H, G = s.source, s.target
    rng = lambda n: range(1, n + 1)  # noqa: E731
    num = (delta1_q(rng(H.b)) * delta1_q(rng(H.c)) * delta1_q(G.X) * delta1_q(G.Y))
    den = (delta1_q(rng(G.b)) * delta1_q(rng(G.c)) * delta1_q(H.X) * delta1_q(H.Y))
    return QLaurentRatio(alpha_shift(s), num, den)


def weighted_identity(s: ShuffleInstance, source_gf: QPolynomial, target_gf: QPolynomial) -> bool:
    return ratio_weighted(s).relates(source_gf, target_gf)


def check_symmetric_shuffle(s: ShuffleInstance) -> None:
    """Raise unless source, target and the flip pattern are all half-turn symmetric."""
    H, G = s.source, s.target
    for name, R in (("source", H), ("target", G)):
        if not is_centrally_symmetric(R):
            raise RegionError("central symmetry", f"{name} {R} is not centrally symmetric")
    n = H.width
    flipped_down = set(H.X) - set(s.Xp)
    flipped_up = set(H.Y) - set(s.Yp)
    if n and set(reflect_set(flipped_down, n)) != flipped_up:
        raise ShuffleError(f"flips {sorted(flipped_down)} down / {sorted(flipped_up)} up "
                           f"are not {n}-symmetric")
    free = n - len(set(H.X) | set(H.Y))
    if not 0 <= H.slack <= free:
        raise RegionError("central symmetry", f"need {free} >= b - |X| = {H.slack} >= 0")


def ratio_symmetric(s: ShuffleInstance) -> Fraction:
    """``M_sym(target) / M_sym(source) = delta1(X') / delta1(X)``."""
    check_symmetric_shuffle(s)
    return Fraction(delta1(s.target.X), delta1(s.source.X))


def symmetric_identity(s: ShuffleInstance, source_sym: int, target_sym: int) -> bool:
    return target_sym * delta1(s.source.X) == source_sym * delta1(s.target.X)

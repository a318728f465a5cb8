"""Randomized and exhaustive property suites shared by the CLI and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import chain, combinations
from typing import Callable, Iterator, Optional

from . import formulas, oracle, shuffle
from .errors import RegionError, ShuffleError
from .exact import QLaurentRatio, evaluate
from .regions import (
    DentedHexagon,
    Trapezoid,
    build_cells,
    reflect_set,
    validate_hexagon,
)


def subsets(n: int) -> Iterator[tuple]:
    return chain.from_iterable(combinations(range(1, n + 1), k) for k in range(n + 1))


def all_trapezoids(max_size: int) -> Iterator[Trapezoid]:
    """Every ``T_{m,n}(S)`` with ``m + n <= max_size``."""
    for total in range(max_size + 1):
        for n in range(total + 1):
            for S in combinations(range(1, total + 1), n):
                yield Trapezoid(total - n, n, S)


def all_hexagons(max_width: int, max_height: Optional[int] = None) -> Iterator[DentedHexagon]:
    """Every valid ``V_{a,b,c}(X, Y)`` with ``a + b <= max_width`` and ``b + c <= max_height``."""
    max_height = max_width if max_height is None else max_height
    for width in range(max_width + 1):
        for b in range(min(width, max_height) + 1):
            a = width - b
            for c in range(min(width, max_height - b) + 1):
                for X in subsets(width):
                    ny = c - (b - len(X))
                    if len(X) > b or ny < 0:
                        continue
                    for Y in combinations(range(1, width + 1), ny):
                        try:
                            yield validate_hexagon(a, b, c, X, Y)
                        except RegionError:
                            continue


def random_hexagon(rng: random.Random, max_width: int, max_height: Optional[int] = None,
                   tries: int = 1000) -> DentedHexagon:
    max_height = max_width if max_height is None else max_height
    for _ in range(tries):
        width = rng.randint(0, max_width)
        b = rng.randint(0, min(width, max_height))
        c = rng.randint(0, min(width, max_height - b))
        pos = list(range(1, width + 1))
        X = rng.sample(pos, rng.randint(0, b))
        Y = rng.sample(pos, c - (b - len(X))) if c - (b - len(X)) >= 0 else None
        if Y is None or len(Y) > width:
            continue
        try:
            return validate_hexagon(width - b, b, c, sorted(X), sorted(Y))
        except RegionError:
            continue
    raise RuntimeError("could not draw a valid hexagon")


def random_shuffle(rng: random.Random, max_width: int, max_height: Optional[int] = None,
                   tries: int = 1000, nontrivial: bool = False) -> shuffle.ShuffleInstance:
    """Random hexagon with a random reassignment of its non-shared dents.

    ``nontrivial`` rejects draws where no dent changes side.
    """
    for _ in range(tries):
        H = random_hexagon(rng, max_width, max_height)
        shared = set(H.X) & set(H.Y)
        loose = sorted((set(H.X) | set(H.Y)) - shared)
        Xp = shared | {p for p in loose if rng.random() < 0.5}
        Yp = shared | (set(loose) - Xp)
        if nontrivial and Xp == set(H.X):
            continue
        try:
            return shuffle.make_shuffle(H, sorted(Xp), sorted(Yp))
        except (RegionError, ShuffleError):
            continue
    raise RuntimeError("could not draw a valid shuffle")


def random_symmetric_shuffle(rng: random.Random, max_width: int, tries: int = 1000,
                             nontrivial: bool = False) -> shuffle.ShuffleInstance:
    """Random half-turn symmetric ``V_{a,b,b}(X, X*)`` with a mirrored flip."""
    for _ in range(tries):
        width = rng.randint(1, max_width)
        b = rng.randint(0, width)
        X = sorted(rng.sample(range(1, width + 1), rng.randint(0, b)))
        Y = reflect_set(X, width)
        try:
            H = validate_hexagon(width - b, b, b, X, Y)
        except RegionError:
            continue
        only_x = sorted(set(X) - set(Y))
        flip = {p for p in only_x if rng.random() < 0.5}
        if nontrivial and not flip:
            continue
        Xp = sorted((set(X) - flip) | set(reflect_set(sorted(flip), width)))
        try:
            return shuffle.make_shuffle(H, Xp, reflect_set(Xp, width))
        except (RegionError, ShuffleError):
            continue
    raise RuntimeError("could not draw a symmetric shuffle")


def random_dent_shuffle(rng: random.Random, max_element: int) -> tuple:
    """Random ``(X, Y, Xp, Yp, Z)`` of positive integers with ``(Xp, Yp)`` a shuffle of ``(X, Y)``."""
    pool = list(range(1, max_element + 1))
    k = rng.randint(0, min(6, max_element))
    used = rng.sample(pool, k)
    shared = {p for p in used if rng.random() < 0.2}
    loose = [p for p in used if p not in shared]
    X = shared | {p for p in loose if rng.random() < 0.5}
    Y = shared | (set(loose) - X)
    Xp = shared | {p for p in loose if rng.random() < 0.5}
    Yp = shared | (set(loose) - Xp)
    rest = [p for p in pool if p not in used]
    Z = set(rng.sample(rest, rng.randint(0, min(4, len(rest)))))
    return sorted(X), sorted(Y), sorted(Xp), sorted(Yp), sorted(Z)


def random_symmetric_dent_shuffle(rng: random.Random, max_element: int) -> tuple:
    """Random ``(k, X, Xp, Z)`` with ``(Xp, Xp*)`` a shuffle of ``(X, X*)`` and ``Z = Z*``."""
    k = rng.randint(1, max_element)
    X = set(rng.sample(range(1, k + 1), rng.randint(0, min(6, k))))
    Xs = set(reflect_set(sorted(X), k))
    flip = {p for p in X - Xs if rng.random() < 0.5}
    Xp = (X - flip) | set(reflect_set(sorted(flip), k))
    free = [p for p in range(1, k + 1) if p not in X | Xs and p <= k + 1 - p]
    Z = set()
    for p in free:
        if rng.random() < 0.3:
            Z |= {p, k + 1 - p}
    return k, sorted(X), sorted(Xp), sorted(Z)


# -- property checks ----------------------------------------------------------


def lemma_weighted_holds(X, Y, Xp, Yp, Z) -> bool:
    """Principal Schur four-factor ratio equals the q-Vandermonde ratio."""
    sp = formulas.schur_principal
    d1 = formulas.delta1_q
    rng_ = lambda n: range(1, n + 1)  # noqa: E731
    XZ, YZ, XpZ, YpZ = (sorted(set(S) | set(Z)) for S in (X, Y, Xp, Yp))
    lhs = QLaurentRatio(0, sp(XpZ) * sp(YpZ), sp(XZ) * sp(YZ), reduce=False)
    rhs = QLaurentRatio(
        0,
        d1(rng_(len(XZ))) * d1(rng_(len(YZ))) * d1(Xp) * d1(Yp),
        d1(rng_(len(XpZ))) * d1(rng_(len(YpZ))) * d1(X) * d1(Y),
        reduce=False,
    )
    return lhs == rhs


def lemma_symmetric_holds(X, Xp, Z) -> bool:
    """``delta1(X' | Z) delta1(X) == delta1(X | Z) delta1(X')``."""
    d1 = formulas.delta1
    return d1(set(Xp) | set(Z)) * d1(X) == d1(set(X) | set(Z)) * d1(Xp)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, descriptor: Callable[[], dict]) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(descriptor())


def _region_obj(R) -> dict:
    from .descriptors import region_to_obj

    return region_to_obj(R)


def _shuffle_obj(s) -> dict:
    return {"source": _region_obj(s.source), "Xp": list(s.Xp), "Yp": list(s.Yp)}


def run_suites(max_size: int, seed: int = 0, cases: int = 100) -> list:
    """Run every property suite up to region size ``max_size``; returns :class:`SuiteResult` s."""
    rng = random.Random(seed)
    results = []

    r = SuiteResult("clp_exhaustive")
    if max_size > 0:
        for T in all_trapezoids(max_size):
            r.record(formulas.clp_count(T) == oracle.count_tilings(build_cells(T)),
                     lambda T=T: _region_obj(T))
    results.append(r)

    r = SuiteResult("hexagon_exhaustive")
    if max_size > 0:
        for H in all_hexagons(max_size):
            g = build_cells(H)
            gf = formulas.hex_count_q(H)
            n = formulas.hex_count(H)
            ok = (n == oracle.count_tilings(g) and gf == oracle.generating_function_q(g)
                  and evaluate(gf, 1) == n)
            r.record(ok, lambda H=H: _region_obj(H))
    results.append(r)

    r = SuiteResult("shuffle_ratios")
    if max_size > 0:
        for _ in range(cases):
            s = random_shuffle(rng, max_size)
            src, tgt = s.source, s.target
            ok = (shuffle.unweighted_identity(s, formulas.hex_count(src), formulas.hex_count(tgt))
                  and shuffle.weighted_identity(s, formulas.hex_count_q(src),
                                                formulas.hex_count_q(tgt))
                  and shuffle.ratio_weighted(s).at_one() == shuffle.ratio_unweighted(s))
            r.record(ok, lambda s=s: _shuffle_obj(s))
    results.append(r)

    r = SuiteResult("symmetric_ratios")
    if max_size > 0:
        for _ in range(cases):
            s = random_symmetric_shuffle(rng, max_size)
            src, tgt = s.source, s.target
            m_src, m_tgt = formulas.sym_count(src), formulas.sym_count(tgt)
            ok = (shuffle.symmetric_identity(s, m_src, m_tgt)
                  and shuffle.ratio_symmetric(s) ** 2 == shuffle.ratio_unweighted(s)
                  and m_src == oracle.count_centrally_symmetric(build_cells(src)))
            r.record(ok, lambda s=s: _shuffle_obj(s))
    results.append(r)

    r = SuiteResult("lemmas")
    if max_size > 0:
        for _ in range(cases):
            X, Y, Xp, Yp, Z = random_dent_shuffle(rng, 4 * max_size)
            r.record(lemma_weighted_holds(X, Y, Xp, Yp, Z),
                     lambda a=(X, Y, Xp, Yp, Z): dict(zip(("X", "Y", "Xp", "Yp", "Z"), a)))
            k, X, Xp, Z = random_symmetric_dent_shuffle(rng, 4 * max_size)
            r.record(lemma_symmetric_holds(X, Xp, Z),
                     lambda a=(k, X, Xp, Z): dict(zip(("k", "X", "Xp", "Z"), a)))
    results.append(r)
    return results


def _size(obj: dict) -> int:
    if "source" in obj:
        obj = obj["source"]
    if obj.get("type") == "hexagon":
        return (obj["a"] + obj["b"]) * (obj["b"] + obj["c"])
    if obj.get("type") == "trapezoid":
        return (obj["m"] + obj["n"]) * obj["n"]
    return sum(len(v) if isinstance(v, list) else v for v in obj.values())


def summarize(results: list) -> dict:
    suites = []
    for r in sorted(results, key=lambda r: r.name):
        entry = {"name": r.name, "cases": r.cases, "passed": r.passed, "failures": len(r.failures)}
        if r.failures:
            entry["counterexample"] = min(r.failures, key=_size)
        suites.append(entry)
    return {"passed": all(r.passed for r in results), "suites": suites}

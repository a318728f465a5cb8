"""Exact integers, rationals and integer polynomials in one variable ``q``.

Integers are plain Python ints and rationals are :class:`fractions.Fraction`.
Polynomials are dense, immutable coefficient tuples indexed by exponent.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import DomainError, InexactDivisionError

Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[int]) -> tuple:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class QPolynomial:
    """Polynomial in ``q`` with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = _trim(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        self.coeffs = cs

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPolynomial":
        if exponent < 0:
            raise DomainError(f"negative exponent {exponent}")
        return cls((0,) * exponent + (coeff,))

    @classmethod
    def constant(cls, c: int) -> "QPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient (0 for the zero poly)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    @staticmethod
    def coerce(other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = QPolynomial.coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = QPolynomial.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = QPolynomial.coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power of a polynomial")
        result, base = QPolynomial((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by ``q**k``; ``k`` may be negative if the low terms vanish."""
        if k >= 0:
            return QPolynomial((0,) * k + self.coeffs) if self.coeffs else self
        if self.coeffs and self.valuation() < -k:
            raise InexactDivisionError(f"q^{-k} does not divide {self}")
        return QPolynomial(self.coeffs[-k:])

    def divmod(self, d: "QPolynomial") -> tuple:
        """Division with remainder; raises if a quotient coefficient is non-integral."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dc, lead = d.coeffs, d.coeffs[-1]
        if len(rem) < len(dc):
            return QPolynomial(), self
        quot = [0] * (len(rem) - len(dc) + 1)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + len(dc) - 1]
            if c == 0:
                continue
            t, r = divmod(c, lead)
            if r:
                raise InexactDivisionError(
                    f"non-integral quotient coefficient dividing {self} by {d}"
                )
            quot[k] = t
            for j, y in enumerate(dc):
                rem[k + j] -= t * y
        return QPolynomial(quot), QPolynomial(rem)

    def div_exact(self, d: "QPolynomial") -> "QPolynomial":
        try:
            q, r = self.divmod(d)
        except InexactDivisionError:
            raise InexactDivisionError(f"inexact division of {self} by {d}") from None
        if not r.is_zero():
            raise InexactDivisionError(f"inexact division of {self} by {d}: remainder {r}")
        return q

    def __call__(self, at: Scalar) -> Scalar:
        return evaluate(self, at)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("QPolynomial", self.coeffs))

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = "q"
            else:
                mono = f"q^{i}"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ZERO = QPolynomial()
ONE = QPolynomial((1,))


def q_int(n: int) -> QPolynomial:
    """The q-analogue ``[n]_q = 1 + q + ... + q^(n-1)``."""
    if n < 1:
        raise DomainError(f"q_int needs n >= 1, got {n}")
    return QPolynomial((1,) * n)


def poly_add(p: QPolynomial, r: QPolynomial) -> QPolynomial:
    return p + r


def poly_sub(p: QPolynomial, r: QPolynomial) -> QPolynomial:
    return p - r


def poly_mul(p: QPolynomial, r: QPolynomial) -> QPolynomial:
    return p * r


def poly_prod(factors: Iterable[QPolynomial]) -> QPolynomial:
    out = ONE
    for f in factors:
        out = out * f
    return out


def poly_div_exact(p: QPolynomial, d: QPolynomial) -> QPolynomial:
    """Quotient ``p / d``; raises :class:`InexactDivisionError` on a remainder."""
    if d.is_zero():
        raise DomainError("division by the zero polynomial")
    return p.div_exact(d)


def evaluate(p: QPolynomial, at: Scalar) -> Scalar:
    """Horner evaluation, exact over int/Fraction."""
    acc: Scalar = 0
    for c in reversed(p.coeffs):
        acc = acc * at + c
    if isinstance(acc, Fraction) and acc.denominator == 1:
        return int(acc)
    return acc


def _primitive(p: QPolynomial) -> QPolynomial:
    if p.is_zero():
        return p
    c = p.content()
    if p.leading < 0:
        c = -c
    return QPolynomial(x // c for x in p.coeffs)


def poly_gcd(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    """Primitive gcd in Z[q] with positive leading coefficient.

    Primitive polynomial remainder sequence; content of the result is taken
    as the integer gcd of the input contents.
    """
    if a.is_zero() or b.is_zero():
        nz = b if a.is_zero() else a
        return _primitive(nz) * nz.content() if not nz.is_zero() else nz
    cont = gcd(a.content(), b.content())
    f, g = _primitive(a), _primitive(b)
    if f.degree < g.degree:
        f, g = g, f
    while not g.is_zero():
        r = _pseudo_rem(f, g)
        f, g = g, _primitive(r)
    return _primitive(f) * cont


def _pseudo_rem(f: QPolynomial, g: QPolynomial) -> QPolynomial:
    rem = list(f.coeffs)
    gc = g.coeffs
    lead = gc[-1]
    dg = len(gc)
    while len(rem) >= dg and any(rem):
        c = rem[-1]
        shift = len(rem) - dg
        rem = [x * lead for x in rem]
        for j, y in enumerate(gc):
            rem[shift + j] -= c * y
        while rem and rem[-1] == 0:
            rem.pop()
    return QPolynomial(rem)


class QLaurentRatio:
    """``q**shift * numerator / denominator``, stored in normalized form.

    Normalization moves powers of ``q`` into ``shift``, cancels the polynomial
    gcd, and makes the denominator's leading coefficient positive. Equality
    is by cross-multiplication.
    """

    __slots__ = ("shift", "numerator", "denominator")

    def __init__(self, shift: int, numerator: QPolynomial, denominator: QPolynomial = ONE,
                 reduce: bool = True):
        if denominator.is_zero():
            raise DomainError("QLaurentRatio with zero denominator")
        if numerator.is_zero():
            self.shift, self.numerator, self.denominator = 0, ZERO, ONE
            return
        vn, vd = numerator.valuation(), denominator.valuation()
        numerator, denominator = numerator.shift(-vn), denominator.shift(-vd)
        shift += vn - vd
        if reduce:
            g = poly_gcd(numerator, denominator)
            if g.degree > 0 or g.leading != 1:
                numerator, denominator = numerator.div_exact(g), denominator.div_exact(g)
        if denominator.leading < 0:
            numerator, denominator = -numerator, -denominator
        self.shift, self.numerator, self.denominator = shift, numerator, denominator

    def __mul__(self, other: "QLaurentRatio") -> "QLaurentRatio":
        return QLaurentRatio(self.shift + other.shift, self.numerator * other.numerator,
                             self.denominator * other.denominator)

    def __truediv__(self, other: "QLaurentRatio") -> "QLaurentRatio":
        if other.numerator.is_zero():
            raise ZeroDivisionError("division by zero ratio")
        return QLaurentRatio(self.shift - other.shift, self.numerator * other.denominator,
                             self.denominator * other.numerator)

    def __eq__(self, other):
        if not isinstance(other, QLaurentRatio):
            return NotImplemented
        # q^s n / d == q^t m / e  <=>  q^(s-t) n e == m d (with shifts cleared)
        k = self.shift - other.shift
        lhs = self.numerator * other.denominator
        rhs = other.numerator * self.denominator
        if k >= 0:
            lhs = lhs.shift(k)
        else:
            rhs = rhs.shift(-k)
        return lhs == rhs

    def __hash__(self):
        return hash((self.shift, self.numerator, self.denominator))

    def at_one(self) -> Fraction:
        """Value at q = 1."""
        d = evaluate(self.denominator, 1)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at q = 1")
        return Fraction(evaluate(self.numerator, 1), d)

    def relates(self, source: QPolynomial, target: QPolynomial) -> bool:
        """True iff ``target == self * source`` as an exact cross-multiplied identity."""
        lhs = target * self.denominator
        rhs = source * self.numerator
        if self.shift >= 0:
            rhs = rhs.shift(self.shift)
        else:
            lhs = lhs.shift(-self.shift)
        return lhs == rhs

    def __repr__(self):
        return (f"QLaurentRatio(shift={self.shift}, numerator={self.numerator!r}, "
                f"denominator={self.denominator!r})")


def as_fraction(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def coeff_strings(p: QPolynomial) -> list:
    return [str(c) for c in p.coeffs] or ["0"]


def from_coeffs(coeffs: Sequence[int]) -> QPolynomial:
    return QPolynomial(int(c) for c in coeffs)

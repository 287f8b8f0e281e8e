"""Exact arithmetic over Q and the cyclotomic fields Q(zeta_m).

An element of Q(zeta_m) is a vector of rationals in the power basis
1, z, ..., z^(phi(m)-1), always reduced modulo the m-th cyclotomic
polynomial Phi_m, so equality is plain coefficient comparison.  The order
m is fixed per analysis session; mixing orders raises.  No floats
anywhere: every divisibility question downstream is an exact yes/no.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .errors import OrderMismatchError

Rational = Fraction

Scalar = Union[int, Fraction, "CycloElem"]


# ---------------------------------------------------------------------------
# univariate polynomials over Q as little-endian Fraction lists


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _uadd(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += b
    return _trim(out)


def _usub(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] -= b
    return _trim(out)


def _umul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return _trim(out)


def _udivmod(p: list[Fraction], q: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Long division over Q.  Divisor q must be nonzero."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = _trim(list(p))
    if len(rem) < len(q):
        return [], rem
    quo = [Fraction(0)] * (len(rem) - len(q) + 1)
    lead = q[-1]
    while len(rem) >= len(q):
        c = rem[-1] / lead
        k = len(rem) - len(q)
        quo[k] = c
        for i, b in enumerate(q):
            rem[k + i] -= c * b
        _trim(rem)
    return _trim(quo), rem


def _uxgcd(a: list[Fraction], b: list[Fraction]):
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = _trim(list(a)), _trim(list(b))
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _udivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _usub(s0, _umul(q, s1))
        t0, t1 = t1, _usub(t0, _umul(q, t1))
    return r0, s0, t0


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[Fraction, ...]:
    """The m-th cyclotomic polynomial as a little-endian coefficient tuple.

    Monic of degree phi(m); computed by exactly dividing t^m - 1 by the
    product of Phi_d over the proper divisors d of m.
    """
    if m < 1:
        raise ValueError("cyclotomic order must be a positive integer")
    if m == 1:
        return (Fraction(-1), Fraction(1))
    num = [Fraction(0)] * (m + 1)
    num[0], num[m] = Fraction(-1), Fraction(1)
    den = [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            den = _umul(den, list(cyclotomic_polynomial(d)))
    quo, rem = _udivmod(num, den)
    if rem:
        raise AssertionError("cyclotomic division left a remainder")
    return tuple(quo)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


# ---------------------------------------------------------------------------


class CycloElem:
    """One element of Q(zeta_m).  Immutable, canonical, hashable.

    Rational-valued elements hash like the underlying Fraction so they mix
    with plain numbers in dictionaries.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 1:
            raise ValueError("cyclotomic order must be a positive integer")
        vec = []
        for c in coeffs:
            if isinstance(c, float):
                raise TypeError("floats are not allowed; use Fraction")
            vec.append(c if isinstance(c, Fraction) else Fraction(c))
        phi = euler_phi(order)
        if len(vec) > phi:
            _, vec = _udivmod(vec, list(cyclotomic_polynomial(order)))
        vec.extend([Fraction(0)] * (phi - len(vec)))
        self.order = order
        self.coeffs = tuple(vec)

    @classmethod
    def _raw(cls, order: int, coeffs: tuple[Fraction, ...]) -> "CycloElem":
        el = object.__new__(cls)
        el.order = order
        el.coeffs = coeffs
        return el

    @classmethod
    def zero(cls, order: int) -> "CycloElem":
        return cls(order, [])

    @classmethod
    def one(cls, order: int) -> "CycloElem":
        return cls(order, [1])

    # -- basic predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloElem):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"cannot mix cyclotomic orders {self.order} and {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.order, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycloElem._raw(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem(self.order, _umul(list(self.coeffs), list(o.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "CycloElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        phi_m = list(cyclotomic_polynomial(self.order))
        g, s, _ = _uxgcd(_trim(list(self.coeffs)), phi_m)
        if len(g) != 1:
            raise AssertionError("gcd with the cyclotomic polynomial is not constant")
        inv = [c / g[0] for c in s]
        return CycloElem(self.order, inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = CycloElem.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycloElem):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    # -- rendering / serialization -------------------------------------------

    def __str__(self) -> str:
        pieces = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                pieces.append(str(c))
                continue
            pw = "z" if i == 1 else f"z^{i}"
            if c == 1:
                pieces.append(pw)
            elif c == -1:
                pieces.append(f"-{pw}")
            else:
                pieces.append(f"{c}*{pw}")
        if not pieces:
            return "0"
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    __repr__ = __str__

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, order: int, parts: Iterable[str]) -> "CycloElem":
        return cls(order, [Fraction(p) for p in parts])


def embed(q, order: int) -> CycloElem:
    """The image of a rational number in Q(zeta_order)."""
    if isinstance(q, float):
        raise TypeError("floats are not allowed; use Fraction")
    return CycloElem(order, [Fraction(q)])


def zeta(order: int) -> CycloElem:
    """The power-basis generator zeta_m (reduces to 1 for m=1, -1 for m=2)."""
    return CycloElem(order, [0, 1])


def as_cyclo(value: Scalar, order: int) -> CycloElem:
    """Coerce an int, Fraction, or CycloElem into Q(zeta_order)."""
    if isinstance(value, CycloElem):
        if value.order != order:
            raise OrderMismatchError(
                f"cannot mix cyclotomic orders {order} and {value.order}")
        return value
    if isinstance(value, float):
        raise TypeError("floats are not allowed; use Fraction")
    if isinstance(value, (int, Fraction)):
        return CycloElem(order, [Fraction(value)])
    raise TypeError(f"cannot coerce {type(value).__name__} into a field element")

"""Sparse multivariate polynomials over a cyclotomic field.

Monomials are exponent tuples, one slot per variable; a polynomial maps
monomials to nonzero field coefficients.  Leading terms and printed order
use graded lexicographic ordering.  Exact division runs against a single
divisor; divisibility by a product is meant to be checked factor by factor
since all divisors in this package arrive factored.

Text grammar (EBNF), variable names supplied by the caller:

    expr     = term { ("+" | "-") term } ;
    term     = factor { "*" factor } ;
    factor   = "-" factor | atom [ "^" natural ] ;
    atom     = rational | "z" | variable | "(" expr ")" ;
    rational = natural [ "/" natural ] ;

"z" denotes the primitive root of unity zeta_m unless a declared variable
shadows it.  Rational literals "p/q" extend the plain-integer rule so that
printing and reparsing any polynomial round-trips exactly.
"""

from __future__ import annotations

import re
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .errors import DegreeCapError, InputError
from .field import CycloElem, as_cyclo

DEGREE_CAP_DEFAULT = 64
_degree_cap = DEGREE_CAP_DEFAULT


def degree_cap() -> int:
    return _degree_cap


def set_degree_cap(n: int) -> None:
    global _degree_cap
    if n < 1:
        raise ValueError("degree cap must be positive")
    _degree_cap = n


@contextmanager
def degree_cap_limit(n: int):
    global _degree_cap
    old = _degree_cap
    set_degree_cap(n)
    try:
        yield
    finally:
        _degree_cap = old


def _grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class MultiPoly:
    """A sparse polynomial in nvars variables over Q(zeta_order)."""

    __slots__ = ("nvars", "order", "terms")

    def __init__(self, nvars: int, order: int, terms: Mapping | None = None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.nvars = nvars
        self.order = order
        tt: dict[tuple[int, ...], CycloElem] = {}
        for exps, c in (terms or {}).items():
            e = tuple(int(x) for x in exps)
            if len(e) != nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")
            cc = as_cyclo(c, order)
            if cc:
                tt[e] = cc
        self.terms = tt

    @classmethod
    def _raw(cls, nvars: int, order: int, terms: dict) -> "MultiPoly":
        p = object.__new__(cls)
        p.nvars = nvars
        p.order = order
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int, order: int) -> "MultiPoly":
        return cls._raw(nvars, order, {})

    @classmethod
    def constant(cls, nvars: int, order: int, value) -> "MultiPoly":
        c = as_cyclo(value, order)
        if not c:
            return cls.zero(nvars, order)
        return cls._raw(nvars, order, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, order: int, i: int) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range")
        e = tuple(1 if j == i else 0 for j in range(nvars))
        return cls._raw(nvars, order, {e: CycloElem.one(order)})

    @classmethod
    def monomial(cls, nvars: int, order: int, exps: Sequence[int], coeff=1) -> "MultiPoly":
        return cls(nvars, order, {tuple(exps): coeff})

    # -- structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading_term(self) -> tuple[tuple[int, ...], CycloElem]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def sorted_terms(self) -> list[tuple[tuple[int, ...], CycloElem]]:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def _check_compatible(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        if self.order != other.order:
            raise ValueError(f"field order mismatch: {self.order} vs {other.order}")

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, Fraction, CycloElem)):
            return MultiPoly.constant(self.nvars, self.order, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        tt = dict(self.terms)
        for e, c in o.terms.items():
            nc = tt.get(e)
            nc = c if nc is None else nc + c
            if nc:
                tt[e] = nc
            else:
                tt.pop(e, None)
        return MultiPoly._raw(self.nvars, self.order, tt)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return MultiPoly._raw(self.nvars, self.order,
                              {e: -c for e, c in self.terms.items()})

    def scale(self, value) -> "MultiPoly":
        c = as_cyclo(value, self.order)
        if not c:
            return MultiPoly.zero(self.nvars, self.order)
        return MultiPoly._raw(self.nvars, self.order,
                              {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloElem)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compatible(other)
        if not self.terms or not other.terms:
            return MultiPoly.zero(self.nvars, self.order)
        dsum = self.total_degree() + other.total_degree()
        if dsum > _degree_cap:
            raise DegreeCapError(
                f"product degree {dsum} exceeds the degree cap {_degree_cap}")
        tt: dict[tuple[int, ...], CycloElem] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                nc = tt.get(e)
                nc = c if nc is None else nc + c
                if nc:
                    tt[e] = nc
                else:
                    tt.pop(e, None)
        return MultiPoly._raw(self.nvars, self.order, tt)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycloElem)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(self.nvars, self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (self.nvars == other.nvars and self.order == other.order
                    and self.terms == other.terms)
        if isinstance(other, (int, Fraction, CycloElem)):
            return self == MultiPoly.constant(self.nvars, self.order, other)
        return NotImplemented

    __hash__ = None  # mutable dict inside

    # -- calculus and evaluation -----------------------------------------------

    def derivative(self, i: int) -> "MultiPoly":
        if not 0 <= i < self.nvars:
            raise ValueError(f"variable index {i} out of range")
        tt = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = tuple(x - 1 if j == i else x for j, x in enumerate(e))
                tt[ne] = c * e[i] if ne not in tt else tt[ne] + c * e[i]
        return MultiPoly._raw(self.nvars, self.order,
                              {e: c for e, c in tt.items() if c})

    def evaluate(self, point: Sequence) -> CycloElem:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        coords = [as_cyclo(v, self.order) for v in point]
        # per-variable power cache
        maxes = [0] * self.nvars
        for e in self.terms:
            for i, x in enumerate(e):
                if x > maxes[i]:
                    maxes[i] = x
        powers: list[list[CycloElem]] = []
        one = CycloElem.one(self.order)
        for i, v in enumerate(coords):
            ps = [one]
            for _ in range(maxes[i]):
                ps.append(ps[-1] * v)
            powers.append(ps)
        acc = CycloElem.zero(self.order)
        for e, c in self.terms.items():
            t = c
            for i, x in enumerate(e):
                if x:
                    t = t * powers[i][x]
            acc = acc + t
        return acc

    def __str__(self) -> str:
        return poly_to_string(self)

    __repr__ = __str__


def polys_proportional(p: MultiPoly, q: MultiPoly) -> CycloElem | None:
    """The nonzero constant c with p == c*q, or None if there is none."""
    if p.is_zero() or q.is_zero():
        return None
    if p.terms.keys() != q.terms.keys():
        return None
    e, cq = q.leading_term()
    c = p.terms[e] / cq
    if (p - q.scale(c)).is_zero():
        return c
    return None


def exact_divide(p: MultiPoly, q: MultiPoly) -> MultiPoly | None:
    """The quotient r with q*r == p, or None when q does not divide p."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p._check_compatible(q)
    if p.is_zero():
        return MultiPoly.zero(p.nvars, p.order)
    qe, qc = q.leading_term()
    rem = dict(p.terms)
    quo: dict[tuple[int, ...], CycloElem] = {}
    while rem:
        re = max(rem, key=_grlex_key)
        diff = tuple(a - b for a, b in zip(re, qe))
        if any(d < 0 for d in diff):
            return None
        c = rem[re] / qc
        quo[diff] = c
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(diff, e2))
            nc = rem.get(e)
            nc = -(c * c2) if nc is None else nc - c * c2
            if nc:
                rem[e] = nc
            else:
                rem.pop(e, None)
    return MultiPoly._raw(p.nvars, p.order, quo)


def divides(q: MultiPoly, p: MultiPoly) -> bool:
    return exact_divide(p, q) is not None


def divides_power(q: MultiPoly, e: int, p: MultiPoly) -> bool:
    """True iff q^e divides p exactly (e successive exact divisions)."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    r: MultiPoly | None = p
    for _ in range(e):
        r = exact_divide(r, q)
        if r is None:
            return False
    return True


# ---------------------------------------------------------------------------
# text grammar


_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([+\-*/^()])|(\S)")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    for m in _TOKEN.finditer(text):
        pos = m.start()
        if m.group(1):
            tokens.append(("int", m.group(1), pos))
        elif m.group(2):
            tokens.append(("name", m.group(2), pos))
        elif m.group(3):
            tokens.append(("op", m.group(3), pos))
        else:
            raise InputError(f"unexpected character {m.group(4)!r}", pos)
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str], order: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = {name: idx for idx, name in enumerate(variables)}
        self.nvars = len(variables)
        self.order = order
        self.end = len(text)

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, self.end)

    def _accept(self, kind, value=None):
        k, v, _ = self._peek()
        if k == kind and (value is None or v == value):
            self.i += 1
            return v
        return None

    def _expect_op(self, value):
        if self._accept("op", value) is None:
            k, v, pos = self._peek()
            raise InputError(f"expected {value!r}", pos)

    def parse(self) -> MultiPoly:
        p = self._expr()
        k, v, pos = self._peek()
        if k is not None:
            raise InputError(f"unexpected token {v!r}", pos)
        return p

    def _expr(self) -> MultiPoly:
        p = self._term()
        while True:
            if self._accept("op", "+") is not None:
                p = p + self._term()
            elif self._accept("op", "-") is not None:
                p = p - self._term()
            else:
                return p

    def _term(self) -> MultiPoly:
        p = self._factor()
        while self._accept("op", "*") is not None:
            p = p * self._factor()
        return p

    def _factor(self) -> MultiPoly:
        if self._accept("op", "-") is not None:
            return -self._factor()
        p = self._atom()
        if self._accept("op", "^") is not None:
            k, v, pos = self._peek()
            if k != "int":
                raise InputError("exponent must be a non-negative integer", pos)
            self.i += 1
            e = int(v)
            if e > _degree_cap:
                raise InputError(f"exponent {e} exceeds the degree cap {_degree_cap}", pos)
            p = p ** e
        return p

    def _atom(self) -> MultiPoly:
        k, v, pos = self._peek()
        if k == "int":
            self.i += 1
            num = int(v)
            if self._peek()[:2] == ("op", "/"):
                self.i += 1
                k2, v2, pos2 = self._peek()
                if k2 != "int":
                    raise InputError("denominator must be an integer", pos2)
                self.i += 1
                den = int(v2)
                if den == 0:
                    raise InputError("zero denominator", pos2)
                return MultiPoly.constant(self.nvars, self.order, Fraction(num, den))
            return MultiPoly.constant(self.nvars, self.order, num)
        if k == "name":
            self.i += 1
            if v in self.vars:
                return MultiPoly.variable(self.nvars, self.order, self.vars[v])
            if v == "z":
                from .field import zeta
                return MultiPoly.constant(self.nvars, self.order, zeta(self.order))
            raise InputError(f"unknown variable {v!r}", pos)
        if k == "op" and v == "(":
            self.i += 1
            p = self._expr()
            self._expect_op(")")
            return p
        raise InputError("expected a number, variable, or parenthesized expression", pos)


def parse_poly(text: str, variables: Sequence[str], order: int) -> MultiPoly:
    """Parse the text grammar into a canonical sparse polynomial."""
    if len(set(variables)) != len(variables):
        raise ValueError("duplicate variable names")
    return _Parser(text, variables, order).parse()


def default_variables(nvars: int) -> list[str]:
    return [f"x{i}" for i in range(nvars)]


def poly_to_string(p: MultiPoly, variables: Sequence[str] | None = None) -> str:
    """Render so that parse_poly(poly_to_string(p)) == p."""
    if p.is_zero():
        return "0"
    names = list(variables) if variables is not None else default_variables(p.nvars)
    if len(names) != p.nvars:
        raise ValueError("variable name count mismatch")
    pieces = []
    for e, c in p.sorted_terms():
        mono = "*".join(names[i] if k == 1 else f"{names[i]}^{k}"
                        for i, k in enumerate(e) if k)
        if c.is_rational():
            fr = c.to_fraction()
            if not mono:
                pieces.append(str(fr))
            elif fr == 1:
                pieces.append(mono)
            elif fr == -1:
                pieces.append(f"-{mono}")
            else:
                pieces.append(f"{fr}*{mono}")
        else:
            cs = f"({c})"
            pieces.append(cs if not mono else f"{cs}*{mono}")
    out = pieces[0]
    for piece in pieces[1:]:
        out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return out


def poly_to_json(p: MultiPoly) -> dict:
    return {
        "nvars": p.nvars,
        "order": p.order,
        "terms": [{"exponents": list(e), "coeff": c.to_strings()}
                  for e, c in p.sorted_terms()],
    }


def poly_from_json(obj: Mapping) -> MultiPoly:
    try:
        nvars = int(obj["nvars"])
        order = int(obj["order"])
        terms = {}
        for rec in obj["terms"]:
            e = tuple(int(x) for x in rec["exponents"])
            terms[e] = CycloElem.from_strings(order, rec["coeff"])
        return MultiPoly(nvars, order, terms)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad polynomial record: {exc}") from exc

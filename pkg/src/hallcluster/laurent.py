"""Multivariate Laurent polynomials with integer coefficients.

Terms are stored as ``{exponent tuple: coefficient}`` with no zero
coefficients.  Division is exact: :meth:`LaurentPoly.divide` returns the
quotient when it is again a Laurent polynomial and ``None`` otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

Exp = tuple[int, ...]


def _add_exp(a: Exp, b: Exp) -> Exp:
    return tuple(x + y for x, y in zip(a, b))


def _sub_exp(a: Exp, b: Exp) -> Exp:
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exp, int] | Iterable[tuple[Exp, int]] = ()):
        self.n = n
        acc: dict[Exp, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise ValueError("exponent length does not match the number of variables")
            acc[e] = acc.get(e, 0) + int(c)
        self.terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    # -- constructors
    @classmethod
    def constant(cls, n: int, c: int) -> "LaurentPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n: int, i: int, power: int = 1) -> "LaurentPoly":
        e = [0] * n
        e[i] = power
        return cls(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        e = tuple(int(x) for x in exps)
        return cls(len(e), {e: coeff})

    # -- arithmetic
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise ValueError("Laurent polynomials in different numbers of variables")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self.terms.items()
            if abs(c) != 1:
                raise ValueError("monomial coefficient is not a unit")
            return LaurentPoly(self.n, {tuple(-x * -k for x in e): c ** (-k)})
        out = LaurentPoly.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.n, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def min_exponents(self) -> Exp:
        if not self.terms:
            return (0,) * self.n
        return tuple(min(e[i] for e in self.terms) for i in range(self.n))

    def shift(self, e: Exp) -> "LaurentPoly":
        return LaurentPoly(self.n, {_add_exp(k, e): c for k, c in self.terms.items()})

    def evaluate(self, point: Iterable) -> Fraction:
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for x, k in zip(pt, e):
                term *= x**k
            total += term
        return total

    def divide(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """Exact quotient self/other in the Laurent ring, or None."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly(self.n)
        # strip monomial content, then divide polynomials
        ms, mo = self.min_exponents(), other.min_exponents()
        num = {_sub_exp(e, ms): Fraction(c) for e, c in self.terms.items()}
        den = {_sub_exp(e, mo): Fraction(c) for e, c in other.terms.items()}
        lead_d = max(den)
        lc_d = den[lead_d]
        quot: dict[Exp, Fraction] = {}
        rem = dict(num)
        while rem:
            lead_r = max(rem)
            diff = _sub_exp(lead_r, lead_d)
            if any(x < 0 for x in diff):
                return None
            c = rem[lead_r] / lc_d
            quot[diff] = quot.get(diff, Fraction(0)) + c
            for e, cd in den.items():
                k = _add_exp(diff, e)
                v = rem.get(k, Fraction(0)) - c * cd
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        if any(c.denominator != 1 for c in quot.values()):
            return None
        shift = _sub_exp(ms, mo)
        return LaurentPoly(self.n, {_add_exp(e, shift): int(c) for e, c in quot.items()})

    # -- printing
    def split(self) -> tuple["LaurentPoly", Exp]:
        """(numerator polynomial N, denominator exponent m) with self = N / x^m."""
        low = self.min_exponents()
        m = tuple(max(0, -x) for x in low)
        return self.shift(m), m

    def _poly_str(self, names: list[str]) -> str:
        def key(item):
            e, _ = item
            return (-sum(e), tuple(-x for x in e))

        parts = []
        for e, c in sorted(self.terms.items(), key=key):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, b in parts[1:]:
            out += s + b
        return out

    def to_string(self, names: list[str] | None = None) -> str:
        names = names or [f"x{i + 1}" for i in range(self.n)]
        num, m = self.split()
        top = num._poly_str(names)
        den = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, m) if k)
        if not den:
            return top
        if len(num.terms) > 1:
            top = f"({top})"
        if sum(1 for k in m if k) > 1 or any(k > 1 for k in m):
            den = f"({den})"
        return f"{top}/{den}"

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"LaurentPoly({self.to_string()!r})"

    def to_pairs(self) -> list[tuple[list[int], int]]:
        return [(list(e), c) for e, c in sorted(self.terms.items())]


@dataclass(frozen=True)
class RationalExpr:
    num: LaurentPoly
    den: LaurentPoly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    @classmethod
    def of(cls, p: LaurentPoly) -> "RationalExpr":
        return cls(p, LaurentPoly.constant(p.n, 1))

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalExpr.of(other)
        if not isinstance(other, RationalExpr):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        lp = self.laurent()
        return hash(lp) if lp is not None else hash(("rational", self.num.n))

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalExpr.of(other)
        return RationalExpr(self.num * other.num, self.den * other.den)

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalExpr.of(other)
        return RationalExpr(self.num * other.den + other.num * self.den, self.den * other.den)

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalExpr.of(other)
        return RationalExpr(self.num * other.den, self.den * other.num)

    def laurent(self) -> LaurentPoly | None:
        return self.num.divide(self.den)

    def normalized(self) -> "RationalExpr":
        lp = self.laurent()
        return RationalExpr.of(lp) if lp is not None else self

    def __str__(self):
        lp = self.laurent()
        if lp is not None:
            return str(lp)
        return f"({self.num})/({self.den})"


def laurent_check(e: RationalExpr | LaurentPoly) -> tuple[bool, LaurentPoly | None]:
    if isinstance(e, LaurentPoly):
        return True, e
    lp = e.laurent()
    return lp is not None, lp


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*((?:x\d+(?:\^-?\d+)?\*?)*)")


def parse_poly(text: str, n: int) -> LaurentPoly:
    """Parse a polynomial like ``x1*x3+2*x2^2-1`` (no parentheses)."""
    text = text.replace(" ", "")
    out = LaurentPoly(n)
    pos = 0
    if not text:
        raise ValueError("empty polynomial")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at column {pos + 1}")
        sign, coef, mono = m.groups()
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        e = [0] * n
        for var in filter(None, mono.split("*")):
            name, _, power = var.partition("^")
            i = int(name[1:]) - 1
            if not 0 <= i < n:
                raise ValueError(f"variable {name} outside x1..x{n}")
            e[i] += int(power) if power else 1
        if not coef and not mono:
            raise ValueError(f"empty term in {text!r}")
        out = out + LaurentPoly(n, {tuple(e): c})
        pos = m.end()
    return out


def parse_laurent(text: str, n: int) -> LaurentPoly:
    """Parse the output of :meth:`LaurentPoly.to_string`."""
    text = text.replace(" ", "")
    if "/" not in text:
        return parse_poly(text.strip("()"), n)
    top, _, bottom = text.rpartition("/")
    num = parse_poly(top[1:-1] if top.startswith("(") and top.endswith(")") else top, n)
    den = parse_poly(bottom.strip("()"), n)
    if not den.is_monomial():
        raise ValueError("denominator must be a monomial")
    return num * den ** -1


__all__ = ["LaurentPoly", "RationalExpr", "laurent_check", "parse_laurent", "parse_poly"]

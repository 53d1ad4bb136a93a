"""Ringel-Hall algebra structure over one prime.

Structure constants come from explicit counting in a :class:`Universe`:
``g(lam, xi, eta)`` is the number of submodules of V_lam isomorphic to
V_eta with quotient isomorphic to V_xi, and ``h(x, y, lam)`` is
|Ext^1(X,Y)_L| / |Hom(X,Y)|.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterator, Mapping

from . import reps as R
from .descriptors import ClassEntry, Universe
from .quiver import DimVector, dv_add, dv_below, dv_sub, dv_with_total, euler_form


class TwistScalar:
    """a + b v with v^2 = p and a, b rational."""

    __slots__ = ("a", "b", "p")

    def __init__(self, a=0, b=0, p: int = 2):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.p = p

    @classmethod
    def v_power(cls, n: int, p: int) -> "TwistScalar":
        k, r = divmod(n, 2)
        c = Fraction(p) ** k
        return cls(0, c, p) if r else cls(c, 0, p)

    def _lift(self, other) -> "TwistScalar":
        if isinstance(other, TwistScalar):
            if other.p != self.p:
                raise ValueError("twist scalars for different primes")
            return other
        return TwistScalar(other, 0, self.p)

    def __add__(self, other):
        o = self._lift(other)
        return TwistScalar(self.a + o.a, self.b + o.b, self.p)

    __radd__ = __add__

    def __neg__(self):
        return TwistScalar(-self.a, -self.b, self.p)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return TwistScalar(self.a * o.a + self.b * o.b * self.p, self.a * o.b + self.b * o.a, self.p)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TwistScalar(other, 0, self.p)
        if not isinstance(other, TwistScalar):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*v"
        return f"{self.a} + {self.b}*v"

    __repr__ = __str__


class HallElement:
    """Finite formal sum of class labels (or label pairs) with TwistScalar coefficients."""

    def __init__(self, p: int, coeffs: Mapping | None = None):
        self.p = p
        self.coeffs: dict = {}
        for k, c in (coeffs or {}).items():
            self.add(k, c)

    def add(self, key, c) -> None:
        c = c if isinstance(c, TwistScalar) else TwistScalar(c, 0, self.p)
        cur = self.coeffs.get(key)
        new = c if cur is None else cur + c
        if new.is_zero():
            self.coeffs.pop(key, None)
        else:
            self.coeffs[key] = new

    def __add__(self, other: "HallElement") -> "HallElement":
        out = HallElement(self.p, self.coeffs)
        for k, c in other.coeffs.items():
            out.add(k, c)
        return out

    def scale(self, c) -> "HallElement":
        out = HallElement(self.p)
        for k, x in self.coeffs.items():
            out.add(k, x * c)
        return out

    def __sub__(self, other: "HallElement") -> "HallElement":
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, HallElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, key=repr):
            name = "u_" + k if isinstance(k, str) else " (x) ".join("u_" + x for x in k)
            parts.append(f"({self.coeffs[k]})*{name}")
        return " + ".join(parts)

    __repr__ = __str__


class HallAlgebra:
    def __init__(self, universe: Universe):
        self.u = universe
        self.p = universe.p
        self.q = universe.quiver
        self._entries: dict[str, ClassEntry] = {}
        self._cells: dict = {}
        self._ext: dict = {}
        self._hom: dict = {}
        self._extdim: dict = {}

    # -- classes
    def classes(self, d) -> list[ClassEntry]:
        out = self.u.classes(d)
        for e in out:
            self._entries.setdefault(e.label, e)
        return out

    def entry(self, label: str) -> ClassEntry:
        if label not in self._entries:
            e = self.u.entry(label)
            self._entries[e.label] = e
            self._entries.setdefault(label, e)
        return self._entries[label]

    def dims(self, label: str) -> DimVector:
        return self.entry(label).dims

    def a(self, label: str) -> int:
        return self.entry(label).aut

    def size(self, label: str) -> int:
        return self.p ** sum(self.dims(label))

    def hom_dim(self, x: str, y: str) -> int:
        key = (x, y)
        if key not in self._hom:
            self._hom[key] = R.hom_dim(self.entry(x).rep, self.entry(y).rep)
        return self._hom[key]

    def ext_dim(self, x: str, y: str) -> int:
        key = (x, y)
        if key not in self._extdim:
            self._extdim[key] = R.ext1_dim(self.entry(x).rep, self.entry(y).rep)
        return self._extdim[key]

    def euler(self, x: str, y: str) -> int:
        return euler_form(self.q, self.dims(x), self.dims(y))

    # -- structure constants
    def cells(self, lam: str, e) -> Counter:
        """(sub label, quotient label) -> number of submodules of dimension e."""
        key = (lam, tuple(e))
        if key not in self._cells:
            rep = self.entry(lam).rep
            self._cells[key] = R.submodule_cells(rep, e, self.u.label_of, self.u.label_of)
        return self._cells[key]

    def g(self, lam: str, xi: str, eta: str) -> int:
        """Number of submodules of V_lam iso to V_eta with quotient iso to V_xi."""
        if dv_add(self.dims(xi), self.dims(eta)) != self.dims(lam):
            return 0
        return self.cells(lam, self.dims(eta)).get((self.entry(eta).label, self.entry(xi).label), 0)

    def ext_strata(self, x: str, y: str) -> Counter:
        """Middle-term label -> number of classes in Ext^1(X, Y)."""
        key = (x, y)
        if key not in self._ext:
            self._ext[key] = R.ext_strata(self.entry(x).rep, self.entry(y).rep, self.u.label_of)
        return self._ext[key]

    def h(self, x: str, y: str, lam: str) -> Fraction:
        return Fraction(self.ext_strata(x, y).get(self.entry(lam).label, 0), self.p ** self.hom_dim(x, y))

    # -- algebra
    def basis(self, label: str) -> HallElement:
        return HallElement(self.p, {self.entry(label).label: 1})

    TWIST_EXPONENT = "<dim alpha, dim beta> with alpha, beta the output grades"

    def _twist(self, x: str, y: str, twisted: bool) -> TwistScalar:
        return TwistScalar.v_power(self.euler(x, y), self.p) if twisted else TwistScalar(1, 0, self.p)

    def product(self, f: HallElement, g: HallElement, twisted: bool = False) -> HallElement:
        out = HallElement(self.p)
        for x, cx in f.coeffs.items():
            for y, cy in g.coeffs.items():
                c = cx * cy * self._twist(x, y, twisted)
                for lam in self.classes(dv_add(self.dims(x), self.dims(y))):
                    n = self.g(lam.label, x, y)
                    if n:
                        out.add(lam.label, c * n)
        return out

    def mul(self, *labels: str, twisted: bool = False) -> HallElement:
        out = self.basis("0")
        for lab in labels:
            out = self.product(out, self.basis(lab), twisted)
        return out

    def coproduct(self, lam: str, twisted: bool = False) -> HallElement:
        """delta(u_lam) = sum h^{alpha beta}_lam u_alpha (x) u_beta (alpha quotient, beta sub)."""
        lam = self.entry(lam).label
        d = self.dims(lam)
        out = HallElement(self.p)
        for e in dv_below(d):
            for al in self.classes(e):
                for be in self.classes(dv_sub(d, e)):
                    hv = self.h(al.label, be.label, lam)
                    if hv:
                        out.add((al.label, be.label), self._twist(al.label, be.label, twisted) * hv)
        return out

    def coproduct_of(self, f: HallElement, twisted: bool = False) -> HallElement:
        out = HallElement(self.p)
        for lam, c in f.coeffs.items():
            out = out + self.coproduct(lam, twisted).scale(c)
        return out

    def star(self, s: HallElement, t: HallElement) -> HallElement:
        """(u_a (x) u_b) * (u_c (x) u_d) = |Ext(a,d)|/|Hom(a,d)| u_a u_c (x) u_b u_d."""
        out = HallElement(self.p)
        for (a, b), c1 in s.coeffs.items():
            for (c, d), c2 in t.coeffs.items():
                k = Fraction(self.p ** self.ext_dim(a, d), self.p ** self.hom_dim(a, d))
                left = self.product(self.basis(a), self.basis(c))
                right = self.product(self.basis(b), self.basis(d))
                for x, cx in left.coeffs.items():
                    for y, cy in right.coeffs.items():
                        out.add((x, y), c1 * c2 * cx * cy * k)
        return out

    # -- bilinear form
    def t(self, label: str) -> Fraction:
        return Fraction(self.size(label), self.a(label))

    def pairing(self, f: HallElement, g: HallElement) -> TwistScalar:
        out = TwistScalar(0, 0, self.p)
        for k, c in f.coeffs.items():
            if k in g.coeffs:
                w = self.t(k) if isinstance(k, str) else self.t(k[0]) * self.t(k[1])
                out = out + c * g.coeffs[k] * w
        return out


def hall_product(alg: HallAlgebra, f: HallElement, g: HallElement, twisted: bool = False) -> HallElement:
    return alg.product(f, g, twisted)


def twisted_product(alg: HallAlgebra, f: HallElement, g: HallElement) -> HallElement:
    return alg.product(f, g, True)


def hall_coproduct(alg: HallAlgebra, lam: str, twisted: bool = False) -> HallElement:
    return alg.coproduct(lam, twisted)


def twisted_coproduct(alg: HallAlgebra, lam: str) -> HallElement:
    return alg.coproduct(lam, True)


def h_value(alg: HallAlgebra, x: str, y: str, lam: str) -> Fraction:
    return alg.h(x, y, lam)


def bilinear_pairing(alg: HallAlgebra, f: HallElement, g: HallElement) -> TwistScalar:
    return alg.pairing(f, g)


def grade_classes(alg: HallAlgebra, max_total: int) -> Iterator[ClassEntry]:
    for total in range(max_total + 1):
        for d in dv_with_total(alg.q.n, total):
            yield from alg.classes(d)


def grades_below(bound) -> list[DimVector]:
    return [e for e in dv_below(bound)]


__all__ = [
    "HallAlgebra",
    "HallElement",
    "TwistScalar",
    "bilinear_pairing",
    "grade_classes",
    "grades_below",
    "h_value",
    "hall_coproduct",
    "hall_product",
    "twisted_coproduct",
    "twisted_product",
]

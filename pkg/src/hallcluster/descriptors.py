"""Named objects that mean the same isomorphism class at every prime.

Grammar (1-based vertices)::

    expr   := term ('+' term)*
    term   := [INT '*'] factor ['^' INT]
    factor := '0' | S<i> | P<i> | I<i> | P<i>[1] | R(a,b) | M(i,j)
            | tau(expr) | taui(expr) | '(' expr ')'

``R(a,b)`` is the thin Kronecker module with arrow scalars a and b,
``M(i,j)`` the thin module supported on vertices i..j of a linear quiver,
and ``P<i>[1]`` a shifted projective (a decoration, not a module).

A :class:`Universe` collects the isomorphism classes of a grade at one
prime as direct sums of catalogue indecomposables, each labelled by a
canonical string such as ``"P1+S2+S2"``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import reps as R
from .quiver import DimVector, Quiver, dv_below, dv_le, dv_sub


class DescriptorError(ValueError):
    pass


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(\d+|taui|tau|[SPIRM]_?\d*|\[1\]|[()+*^,\-]|0)")


def _tokens(text: str) -> list[str]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise DescriptorError(f"cannot parse {text!r} at column {pos + 1}")
        out.append(m.group(1).replace("_", ""))
        pos = m.end()
    return out


@dataclass(frozen=True)
class Node:
    kind: str  # sum | S | P | I | shift | R | M | tau | taui | zero
    args: tuple = ()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, want: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (want is not None and tok != want):
            raise DescriptorError(f"expected {want or 'more input'} in {self.text!r}")
        self.i += 1
        return tok

    def expr(self) -> Node:
        parts = [self.term()]
        while self.peek() == "+":
            self.take("+")
            parts.append(self.term())
        flat = []
        for p in parts:
            flat.extend(p.args if p.kind == "sum" else [p])
        return flat[0] if len(flat) == 1 else Node("sum", tuple(flat))

    def term(self) -> Node:
        mult = 1
        tok = self.peek()
        if tok is not None and tok.isdigit() and tok != "0" and self.i + 1 < len(self.toks) and self.toks[self.i + 1] == "*":
            mult = int(self.take())
            self.take("*")
        node = self.factor()
        if self.peek() == "^":
            self.take("^")
            mult *= int(self.take())
        return node if mult == 1 else Node("sum", (node,) * mult)

    def integer(self) -> int:
        sign = -1 if self.peek() == "-" else 1
        if sign < 0:
            self.take("-")
        tok = self.take()
        if not tok.isdigit():
            raise DescriptorError(f"expected an integer in {self.text!r}")
        return sign * int(tok)

    def factor(self) -> Node:
        tok = self.take()
        if tok == "0":
            return Node("zero")
        if tok == "(":
            node = self.expr()
            self.take(")")
            return node
        if tok in ("tau", "taui"):
            self.take("(")
            node = self.expr()
            self.take(")")
            return Node(tok, (node,))
        if tok in ("R", "M"):
            self.take("(")
            a = self.integer()
            self.take(",")
            b = self.integer()
            self.take(")")
            return Node(tok, (a, b))
        if tok[0] in "SPI" and tok[1:].isdigit():
            v = int(tok[1:])
            if tok[0] == "P" and self.peek() == "[1]":
                self.take()
                return Node("shift", (v,))
            return Node(tok[0], (v,))
        raise DescriptorError(f"unexpected token {tok!r} in {self.text!r}")


def parse(text: str) -> Node:
    p = _Parser(text)
    node = p.expr()
    if p.peek() is not None:
        raise DescriptorError(f"trailing input {p.toks[p.i:]} in {text!r}")
    return node


# ---------------------------------------------------------------- building


@dataclass(frozen=True, eq=False)
class Decorated:
    """A module plus shifted projectives P_i[1] (0-based vertex indices)."""

    module: R.Rep
    shifts: tuple[int, ...] = ()


def _vertex(q: Quiver, v: int) -> int:
    if not 1 <= v <= q.n:
        raise DescriptorError(f"vertex {v} outside 1..{q.n}")
    return v - 1


def thin(q: Quiver, p: int, support: Sequence[int], scalars: dict[int, int] | None = None) -> R.Rep:
    """Thin module on a vertex set; arrows inside the support act by 1 unless overridden."""
    sup = set(support)
    dims = tuple(1 if v in sup else 0 for v in range(q.n))
    mats = []
    for a, (s, t) in enumerate(q.arrows):
        val = (scalars or {}).get(a, 1) if s in sup and t in sup else 0
        mats.append(np.full((dims[t], dims[s]), val % p, dtype=np.int64))
    return R.Rep(q, p, dims, tuple(mats)).validate()


def _build(node: Node, q: Quiver, p: int) -> Decorated:
    k = node.kind
    if k == "zero":
        return Decorated(R.zero_rep(q, p))
    if k == "sum":
        parts = [_build(x, q, p) for x in node.args]
        mods = [x.module for x in parts if x.module.total]
        mod = R.direct_sum(*mods) if mods else R.zero_rep(q, p)
        return Decorated(mod, tuple(sorted(s for x in parts for s in x.shifts)))
    if k == "S":
        return Decorated(R.simple(q, p, _vertex(q, node.args[0])))
    if k == "P":
        return Decorated(R.projective(q, p, _vertex(q, node.args[0])))
    if k == "I":
        return Decorated(R.injective(q, p, _vertex(q, node.args[0])))
    if k == "shift":
        return Decorated(R.zero_rep(q, p), (_vertex(q, node.args[0]),))
    if k == "R":
        if q.n != 2 or len(q.arrows) != 2 or q.arrows[0] != q.arrows[1]:
            raise DescriptorError("R(a,b) needs a Kronecker quiver")
        a, b = node.args
        if a % p == 0 and b % p == 0:
            raise DescriptorError("R(0,0) is decomposable")
        return Decorated(thin(q, p, [0, 1], {0: a, 1: b}))
    if k == "M":
        i, j = _vertex(q, node.args[0]), _vertex(q, node.args[1])
        if i > j:
            raise DescriptorError("M(i,j) needs i <= j")
        for v in range(i, j):
            if q.arrow_count(v, v + 1) + q.arrow_count(v + 1, v) != 1:
                raise DescriptorError("M(i,j) needs a linear quiver between i and j")
        return Decorated(thin(q, p, range(i, j + 1)))
    if k in ("tau", "taui"):
        inner = _build(node.args[0], q, p)
        if inner.shifts:
            raise DescriptorError("tau of a shifted projective is not supported")
        if inner.module.total == 0:
            return inner
        f = R.ar_translate if k == "tau" else R.ar_translate_inverse
        try:
            return Decorated(f(inner.module))
        except ValueError as exc:
            raise DescriptorError(str(exc)) from exc
    raise DescriptorError(f"unknown node {k}")


def build(desc: str | Node, q: Quiver, p: int) -> Decorated:
    node = parse(desc) if isinstance(desc, str) else desc
    return _build(node, q, p)


def module(desc: str, q: Quiver, p: int) -> R.Rep:
    d = build(desc, q, p)
    if d.shifts:
        raise DescriptorError(f"{desc!r} has a shifted part; a module was expected")
    return d.module


# ---------------------------------------------------------------- catalogue


@dataclass
class Indecomposable:
    label: str
    rep: R.Rep
    projective: bool = False
    injective: bool = False


def has_injective_summand(m: R.Rep) -> bool:
    return R.has_projective_summand(R.dual(m))


def _canonical_name(m: R.Rep, q: Quiver, p: int) -> str | None:
    for prefix, ctor in (("S", R.simple), ("P", R.projective), ("I", R.injective)):
        for i in range(q.n):
            x = ctor(q, p, i)
            if x.dims == m.dims and R.is_isomorphic(x, m):
                return f"{prefix}{i + 1}"
    return None


def tits_positive_definite(q: Quiver) -> bool:
    """Leading principal minors of the symmetrised Euler form are positive."""
    e = np.eye(q.n, dtype=np.int64) * 2
    for s, t in q.arrows:
        e[s, t] -= 1
        e[t, s] -= 1
    for k in range(1, q.n + 1):
        m = [[Fraction(int(x)) for x in row[:k]] for row in e[:k]]
        det = Fraction(1)
        for c in range(k):
            piv = next((r for r in range(c, k) if m[r][c] != 0), None)
            if piv is None:
                return False
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            det *= m[c][c]
            for r in range(c + 1, k):
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        if det <= 0:
            return False
    return True


def is_kronecker(q: Quiver) -> bool:
    return q.n == 2 and not q.relations and len(q.arrows) == 2 and q.arrows[0] == q.arrows[1]


def hereditary_catalog(q: Quiver, p: int, bound: DimVector) -> list[Indecomposable]:
    """Preprojectives, preinjectives (and for the Kronecker quiver the thin regulars) below bound."""
    out: list[Indecomposable] = []

    def add(label: str, m: R.Rep):
        if not dv_le(m.dims, bound) or m.total == 0:
            return False
        for x in out:
            if x.rep.dims == m.dims and R.is_isomorphic(x.rep, m):
                return False
        name = _canonical_name(m, q, p) or label
        out.append(Indecomposable(name, m, R.has_projective_summand(m), has_injective_summand(m)))
        return True

    limit = sum(bound) + 2
    for i in range(q.n):
        m, label = R.projective(q, p, i), f"P{i + 1}"
        for _ in range(limit):
            if not dv_le(m.dims, bound):
                break
            add(label, m)
            if has_injective_summand(m):
                break
            m, label = R.ar_translate_inverse(m), f"taui({label})"
    for i in range(q.n):
        m, label = R.injective(q, p, i), f"I{i + 1}"
        for _ in range(limit):
            if not dv_le(m.dims, bound):
                break
            add(label, m)
            if R.has_projective_summand(m):
                break
            m, label = R.ar_translate(m), f"tau({label})"
    if is_kronecker(q) and dv_le((1, 1), bound):
        for a, b in [(0, 1)] + [(1, c) for c in range(p)]:
            add(f"R({a},{b})", thin(q, p, [0, 1], {0: a, 1: b}))
    return out


def relation_catalog(q: Quiver, p: int, bound: DimVector) -> list[Indecomposable]:
    """Simples, projectives and injectives; complete for small algebras such as preprojective A2."""
    out: list[Indecomposable] = []
    for prefix, ctor in (("S", R.simple), ("P", R.projective), ("I", R.injective)):
        for i in range(q.n):
            m = ctor(q, p, i)
            if not dv_le(m.dims, bound) or any(x.rep.dims == m.dims and R.is_isomorphic(x.rep, m) for x in out):
                continue
            out.append(Indecomposable(f"{prefix}{i + 1}", m, R.has_projective_summand(m), has_injective_summand(m)))
    return out


# ---------------------------------------------------------------- universes


@dataclass(eq=False)
class ClassEntry:
    label: str
    rep: R.Rep
    parts: tuple[tuple[int, int], ...]  # (catalogue index, multiplicity)
    aut: int

    @property
    def dims(self) -> DimVector:
        return self.rep.dims


def join_labels(labels: Sequence[str]) -> str:
    return "+".join(sorted(labels)) if labels else "0"


_REGULAR = re.compile(r"R\(\d+,\d+\)")


def family_label(q: Quiver, label: str) -> str:
    """Identify Kronecker regular simples R(a,b) with one family representative."""
    if not is_kronecker(q) or label == "0":
        return label
    return join_labels([_REGULAR.sub("R(1,1)", x) for x in label.split("+")])


def aut_from_decomposition(m: R.Rep, multiplicities: Sequence[int]) -> int:
    """|Aut M| = p^(dim End M - sum m_i^2) * prod |GL_{m_i}(F_p)| for absolutely indecomposable summands."""
    p = m.p
    e = R.end_dim(m)
    out = p ** (e - sum(k * k for k in multiplicities))
    for k in multiplicities:
        out *= R.gl_order(k, p)
    return out


@dataclass(eq=False)
class Universe:
    quiver: Quiver
    p: int
    catalog: list[Indecomposable]
    complete: bool
    fingerprint_hits: Counter = field(default_factory=Counter)
    _classes: dict = field(default_factory=dict)

    @classmethod
    def for_quiver(cls, q: Quiver, p: int, bound: Sequence[int], complete: bool | None = None) -> "Universe":
        bound = tuple(bound)
        if q.is_hereditary():
            cat = hereditary_catalog(q, p, bound)
            fin = tits_positive_definite(q)
        else:
            cat = relation_catalog(q, p, bound)
            fin = False
        return cls(q, p, cat, fin if complete is None else complete)

    def classes(self, d: Sequence[int]) -> list[ClassEntry]:
        d = tuple(d)
        if d in self._classes:
            return self._classes[d]
        cat = self.catalog
        out: list[ClassEntry] = []

        def rec(k: int, rest: DimVector, picked: list[tuple[int, int]]):
            if not any(rest):
                labels = [cat[i].label for i, m in picked for _ in range(m)]
                mods = [cat[i].rep for i, m in picked for _ in range(m)]
                rep = R.direct_sum(*mods) if mods else R.zero_rep(self.quiver, self.p)
                aut = aut_from_decomposition(rep, [m for _, m in picked])
                out.append(ClassEntry(join_labels(labels), rep, tuple(picked), aut))
                return
            if k == len(cat):
                return
            dk = cat[k].rep.dims
            m, cur = 0, rest
            while True:
                if m:
                    picked.append((k, m))
                rec(k + 1, cur, picked)
                if m:
                    picked.pop()
                if not dv_le(dk, cur):
                    break
                cur = dv_sub(cur, dk)
                m += 1

        rec(0, d, [])
        out.sort(key=lambda e: e.label)
        self._classes[d] = out
        return out

    def entry(self, label: str, d: Sequence[int] | None = None) -> ClassEntry:
        if d is None:
            d = build(label, self.quiver, self.p).module.dims
        for e in self.classes(d):
            if e.label == label:
                return e
        return self.identify(module(label, self.quiver, self.p))

    def identify(self, m: R.Rep) -> ClassEntry:
        cands = self.classes(m.dims)
        sig = R.signature(m)
        same = [e for e in cands if R.signature(e.rep) == sig]
        if self.complete and len(same) == 1:
            return same[0]
        for e in same:
            if R.is_isomorphic(m, e.rep):
                return e
        if self.complete:
            raise KeyError(f"module of dimension {m.dims} not found in a universe declared complete")
        fp = grassmannian_fingerprint(m)
        for e in cands:
            if grassmannian_fingerprint(e.rep) == fp:
                self.fingerprint_hits[e.label] += 1
                return e
        raise KeyError(f"module of dimension {m.dims} matches no catalogue class")

    def label_of(self, m: R.Rep) -> str:
        return self.identify(m).label


def grassmannian_fingerprint(m: R.Rep) -> tuple:
    cached = m._memo.get("gfp")
    if cached is None:
        cached = tuple(len(R.submodules(m, e)) for e in dv_below(m.dims))
        m._memo["gfp"] = cached
    return cached


def certify(universe: Universe, d: Sequence[int], nilpotent_only: bool = False) -> bool:
    """Compare with a brute-force table: same class count and every class found."""
    table = R.iso_classes(universe.quiver, universe.p, d, nilpotent_only=nilpotent_only)
    ours = universe.classes(d)
    if len(ours) != len(table.reps):
        return False
    hit = set()
    for e in ours:
        hit.add(table.classify(e.rep))
    return len(hit) == len(ours)


__all__ = [
    "ClassEntry",
    "Decorated",
    "DescriptorError",
    "Indecomposable",
    "Node",
    "Universe",
    "aut_from_decomposition",
    "build",
    "certify",
    "grassmannian_fingerprint",
    "has_injective_summand",
    "hereditary_catalog",
    "is_kronecker",
    "join_labels",
    "module",
    "parse",
    "relation_catalog",
    "thin",
    "tits_positive_definite",
]

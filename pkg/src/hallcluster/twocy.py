"""Preprojective algebras, evaluation forms and the 2-CY extension identity.

Flag types are tuples of 1-based vertices, or of (vertex, bit) pairs when a
level may be skipped (bit 0).  ``delta_form`` evaluates the Euler
characteristic of each flag variety by interpolating point counts across
primes.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Sequence

from . import reps as R
from .chi import interpolate, interpolate_many
from .descriptors import Universe, module
from .green import Report
from .quiver import DimVector, Quiver, Relation, dv_add, dv_with_total

MESH_SIGN = "sum a*a - sum aa* per vertex"

FlagType = tuple


def preprojective(q: Quiver) -> Quiver:
    """Double quiver modulo mesh relations.

    Arrow k + m (m = number of arrows) is the reverse of arrow k.  At vertex i
    the relation is sum over arrows leaving i of a*a minus sum over arrows
    entering i of aa*; vertices with no incident arrows get no relation.
    """
    if q.relations:
        raise ValueError("expected a quiver without relations")
    if any(s == t for s, t in q.arrows):
        raise ValueError("loops are not allowed")
    m = len(q.arrows)
    arrows = tuple(q.arrows) + tuple((t, s) for s, t in q.arrows)
    rels = []
    for i in range(q.n):
        terms = []
        for k, (s, t) in enumerate(q.arrows):
            if s == i:
                terms.append((1, (k + m, k)))
            if t == i:
                terms.append((-1, (k, k + m)))
        if terms:
            rels.append(Relation.of(*terms))
    return Quiver(q.n, arrows, tuple(rels))


def normalize_type(t: Sequence) -> FlagType:
    """1-based user type -> tuple of (0-based vertex, bit)."""
    out = []
    for x in t:
        if isinstance(x, (tuple, list)):
            j, c = int(x[0]), int(x[1])
        else:
            j, c = int(x), 1
        if c not in (0, 1) or j < 1:
            raise ValueError(f"bad flag step {x!r}")
        out.append((j - 1, c))
    return tuple(out)


def composition_types(e: Sequence[int]) -> list[FlagType]:
    """All full composition-series types of grade e (bits all 1), 1-based."""
    letters = [v + 1 for v, k in enumerate(e) for _ in range(k)]
    return sorted(set(permutations(letters)))


def _flag_degree(d: DimVector) -> int:
    return sum(k * (k - 1) // 2 for k in d)


@dataclass(frozen=True)
class EvaluationForm:
    obj: str
    types: tuple
    values: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"object": self.obj, "types": [list(t) for t in self.types], "values": list(self.values)}


def delta_values(family: Callable[[int], R.Rep], types: Sequence) -> tuple[int, ...]:
    out = []
    for t in types:
        ft = normalize_type(t)
        d = family(2).dims
        out.append(interpolate(lambda p: R.flag_count(family(p), ft), _flag_degree(d)).chi)
    return tuple(out)


def delta_form(q: Quiver, obj: str | Callable[[int], R.Rep], types: Sequence) -> EvaluationForm:
    """Evaluation vector of M over the given flag types."""
    if isinstance(obj, str):
        name = obj
        family = lambda p: module(obj, q, p)  # noqa: E731
    else:
        name, family = getattr(obj, "__name__", "M"), obj
    m = family(2)
    if not m.is_nilpotent():
        raise ValueError(f"{name} is not nilpotent")
    return EvaluationForm(name, tuple(tuple(t) for t in types), delta_values(family, types))


@dataclass
class ClassTable:
    e: DimVector
    types: tuple
    buckets: dict  # evaluation vector -> labels
    iso_classes: int

    @property
    def representatives(self) -> list[str]:
        return [labels[0] for labels in self.buckets.values()]

    def class_of(self, label: str) -> tuple[int, ...]:
        for vec, labels in self.buckets.items():
            if label in labels:
                return vec
        raise KeyError(label)


_UNIV: dict = {}


def nilpotent_universe(q: Quiver, p: int, bound: Sequence[int]) -> Universe:
    key = (q, p, tuple(bound))
    if key not in _UNIV:
        _UNIV[key] = Universe.for_quiver(q, p, bound, complete=False)
    return _UNIV[key]


def class_table(q: Quiver, e: Sequence[int], types: Sequence | None = None, bound: Sequence[int] | None = None) -> ClassTable:
    """Bucket the iso classes of grade e by evaluation vector."""
    e = tuple(e)
    types = tuple(composition_types(e) if types is None else types)
    bound = tuple(bound or e)
    labels = [c.label for c in nilpotent_universe(q, 2, bound).classes(e)]
    buckets: dict = defaultdict(list)
    for lab in labels:
        vec = delta_values(lambda p, lab=lab: nilpotent_universe(q, p, bound).entry(lab).rep, types)
        buckets[vec].append(lab)
    return ClassTable(e, types, dict(sorted(buckets.items(), key=lambda kv: kv[1][0])), len(labels))


def _stratum_chi(q: Quiver, bound, x: str, y: str, table: ClassTable) -> dict:
    """chi of PExt^1(X,Y)_<L> per class vector, the split point removed."""
    def counts(p: int) -> Counter:
        u = nilpotent_universe(q, p, bound)
        mx, my = u.entry(x).rep, u.entry(y).rep
        strata = R.ext_strata(mx, my, u.label_of)
        split_label = u.label_of(R.direct_sum(mx, my))
        out = Counter()
        for lab, n in strata.items():
            out[table.class_of(lab)] += n
        out[table.class_of(split_label)] -= 1
        for k in out:
            if out[k] % (p - 1):
                raise ValueError(f"stratum count {out[k]} not divisible by {p - 1}")
            out[k] //= p - 1
        return out

    dim = R.ext1_dim(module(x, q, 2), module(y, q, 2))
    if dim == 0:
        return {}
    out: dict = {}
    for k, cp in interpolate_many(counts, dim - 1).items():
        if cp.chi:
            out[k] = cp.chi
    return out


def thm82_check(q: Quiver, m: str, n: str, types: Sequence | None = None) -> Report:
    """chi(PExt(M,N)) delta_{M+N} against the class-weighted sum over both Ext directions."""
    dm, dn = module(m, q, 2).dims, module(n, q, 2).dims
    e = dv_add(dm, dn)
    table = class_table(q, e, types)
    types = table.types
    ext_mn = R.ext1_dim(module(m, q, 2), module(n, q, 2))
    pext = interpolate(lambda p: (p ** ext_mn - 1) // (p - 1), max(ext_mn - 1, 0)).chi if ext_mn else 0
    split = delta_values(lambda p: R.direct_sum(module(m, q, p), module(n, q, p)), types)
    lhs = tuple(pext * v for v in split)
    rhs = [0] * len(types)
    coeffs: Counter = Counter()
    for x, y in ((m, n), (n, m)):
        for vec, c in _stratum_chi(q, e, x, y, table).items():
            coeffs[vec] += c
    for vec, c in coeffs.items():
        rhs = [a + c * b for a, b in zip(rhs, vec)]
    terms = [(table.buckets[vec][0], c) for vec, c in sorted(coeffs.items()) if c]
    return Report(
        "thm82", (m, n), lhs, tuple(rhs), terms,
        {"types": [list(t) for t in types], "chi_pext": pext, "mesh": MESH_SIGN,
         "classes": {",".join(v): list(k) for k, v in table.buckets.items()}},
    )


def thm82_sweep(q: Quiver, max_total: int) -> list[Report]:
    out = []
    labels = []
    for total in range(1, max_total + 1):
        for d in dv_with_total(q.n, total):
            labels += [c.label for c in nilpotent_universe(q, 2, (max_total,) * q.n).classes(d)]
    for m in labels:
        for n in labels:
            if sum(module(m, q, 2).dims) + sum(module(n, q, 2).dims) <= max_total:
                out.append(thm82_check(q, m, n))
    return out


__all__ = [
    "ClassTable",
    "EvaluationForm",
    "MESH_SIGN",
    "class_table",
    "composition_types",
    "delta_form",
    "delta_values",
    "nilpotent_universe",
    "normalize_type",
    "preprojective",
    "thm82_check",
    "thm82_sweep",
]

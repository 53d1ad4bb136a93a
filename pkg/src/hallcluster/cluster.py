"""Seeds, mutation and cluster enumeration (coefficient-free, skew-symmetric)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .laurent import LaurentPoly, RationalExpr
from .quiver import cartan_counterpart


def _check_b(b) -> np.ndarray:
    b = np.asarray(b, dtype=np.int64)
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValueError("exchange matrix must be square")
    if not np.array_equal(b, -b.T):
        raise ValueError("exchange matrix must be antisymmetric")
    return b


def mutate_matrix(b: np.ndarray, j: int) -> np.ndarray:
    n = b.shape[0]
    out = b.copy()
    for i in range(n):
        for k in range(n):
            if i == j or k == j:
                out[i, k] = -b[i, k]
            else:
                out[i, k] = b[i, k] + (abs(b[i, j]) * b[j, k] + b[i, j] * abs(b[j, k])) // 2
    return out


@dataclass(frozen=True, eq=False)
class Seed:
    vars: tuple[RationalExpr, ...]
    B: np.ndarray

    def __post_init__(self):
        b = _check_b(self.B)
        if len(self.vars) != b.shape[0]:
            raise ValueError("one variable per row of B")
        b.setflags(write=False)
        object.__setattr__(self, "B", b)

    @classmethod
    def initial(cls, b) -> "Seed":
        b = _check_b(b)
        n = b.shape[0]
        return cls(tuple(RationalExpr.of(LaurentPoly.var(n, i)) for i in range(n)), b)

    @property
    def n(self) -> int:
        return len(self.vars)

    def mutate(self, j: int) -> "Seed":
        """Mutation in direction j (0-based)."""
        n = self.n
        if not 0 <= j < n:
            raise ValueError(f"direction {j + 1} outside 1..{n}")
        pos = RationalExpr.of(LaurentPoly.constant(self.vars[0].num.n, 1))
        neg = pos
        for i in range(n):
            bij = int(self.B[i, j])
            for _ in range(abs(bij)):
                if bij > 0:
                    pos = pos * self.vars[i]
                else:
                    neg = neg * self.vars[i]
        new = ((pos + neg) / self.vars[j]).normalized()
        vars_ = list(self.vars)
        vars_[j] = new
        return Seed(tuple(vars_), mutate_matrix(self.B, j))

    def laurent_vars(self) -> tuple[LaurentPoly, ...] | None:
        out = []
        for v in self.vars:
            lp = v.laurent()
            if lp is None:
                return None
            out.append(lp)
        return tuple(out)

    def key(self) -> tuple:
        """Invariant under simultaneous relabelling of variables and rows/columns of B."""
        lps = self.laurent_vars()
        if lps is None:
            raise ValueError("seed with a non-Laurent variable")
        order = sorted(range(self.n), key=lambda i: str(lps[i]))
        b = self.B[np.ix_(order, order)]
        return tuple(str(lps[i]) for i in order), b.tobytes()

    def same_as(self, other: "Seed", up_to_relabel: bool = True) -> bool:
        if not up_to_relabel:
            return all(a == b for a, b in zip(self.vars, other.vars)) and np.array_equal(self.B, other.B)
        return self.key() == other.key()


def mutate(seed: Seed, j: int) -> Seed:
    return seed.mutate(j)


def mutate_sequence(seed: Seed, seq: Sequence[int]) -> list[Seed]:
    """All seeds along a mutation sequence of 1-based directions."""
    out = [seed]
    for j in seq:
        out.append(out[-1].mutate(j - 1))
    return out


class CeilingExceeded(RuntimeError):
    def __init__(self, what: str, ceiling: int):
        super().__init__(f"{what}: ceiling {ceiling} reached before closure")
        self.ceiling = ceiling


@dataclass
class ClusterEnumeration:
    variables: list[LaurentPoly]
    seeds: int
    closed: bool


def enumerate_clusters(seed: Seed, ceiling: int = 10_000) -> ClusterEnumeration:
    """Breadth-first search over seeds; closed means no new seed appeared."""
    seen = {seed.key()}
    todo = deque([seed])
    variables: dict[str, LaurentPoly] = {}
    for v in seed.laurent_vars() or ():
        variables[str(v)] = v
    while todo:
        s = todo.popleft()
        for j in range(s.n):
            t = s.mutate(j)
            lps = t.laurent_vars()
            if lps is None:
                raise ValueError(f"non-Laurent cluster variable {t.vars[j]}")
            for v in lps:
                variables.setdefault(str(v), v)
            k = t.key()
            if k not in seen:
                if len(seen) >= ceiling:
                    raise CeilingExceeded("cluster enumeration", ceiling)
                seen.add(k)
                todo.append(t)
    return ClusterEnumeration(sorted(variables.values(), key=str), len(seen), True)


# ---------------------------------------------------------------- finite type


def leading_minors(a: np.ndarray) -> list[Fraction]:
    n = a.shape[0]
    out = []
    for k in range(1, n + 1):
        m = [[Fraction(int(x)) for x in row[:k]] for row in a[:k]]
        det = Fraction(1)
        for c in range(k):
            piv = next((r for r in range(c, k) if m[r][c] != 0), None)
            if piv is None:
                det = Fraction(0)
                break
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            det *= m[c][c]
            for r in range(c + 1, k):
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        out.append(det)
    return out


def null_vector(a: np.ndarray) -> list[Fraction] | None:
    """A nonzero rational vector v with a v = 0, when one exists."""
    n = a.shape[0]
    m = [[Fraction(int(x)) for x in row] for row in a]
    piv_cols, r = [], 0
    for c in range(n):
        p = next((i for i in range(r, n) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(n):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    free = [c for c in range(n) if c not in piv_cols]
    if not free:
        return None
    v = [Fraction(0)] * n
    v[free[0]] = Fraction(1)
    for i, c in enumerate(piv_cols):
        v[c] = -m[i][free[0]]
    return v


def is_positive_definite(a: np.ndarray) -> bool:
    return all(d > 0 for d in leading_minors(a))


@dataclass
class FiniteTypeVerdict:
    verdict: str  # FINITE | INCONCLUSIVE
    witness: np.ndarray | None
    explored: int
    semidefinite_witness: list[Fraction] | None = None
    minors: list[Fraction] = field(default_factory=list)


def finite_type_test(b, search_bound: int = 200) -> FiniteTypeVerdict:
    b0 = _check_b(b)
    seen = {b0.tobytes()}
    todo = deque([b0])
    explored = 0
    while todo and explored < search_bound:
        cur = todo.popleft()
        explored += 1
        a = cartan_counterpart(cur)
        if is_positive_definite(a):
            return FiniteTypeVerdict("FINITE", cur, explored, None, leading_minors(a))
        for j in range(cur.shape[0]):
            nxt = mutate_matrix(cur, j)
            key = nxt.tobytes()
            if key not in seen:
                seen.add(key)
                todo.append(nxt)
    a0 = cartan_counterpart(b0)
    return FiniteTypeVerdict("INCONCLUSIVE", None, explored, null_vector(a0), leading_minors(a0))


__all__ = [
    "CeilingExceeded",
    "ClusterEnumeration",
    "FiniteTypeVerdict",
    "Seed",
    "enumerate_clusters",
    "finite_type_test",
    "is_positive_definite",
    "leading_minors",
    "mutate",
    "mutate_matrix",
    "mutate_sequence",
    "null_vector",
]

"""Quivers with relations, dimension vectors and Euler data.

Vertices are 0-based internally; text formats and descriptors use 1-based
labels.  A path is a tuple of arrow indices written in composition order,
so ``(b, a)`` means "first a, then b" and acts as ``x_b @ x_a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

import numpy as np

DimVector = tuple[int, ...]


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths, each of length at least 2."""

    terms: tuple[tuple[int, tuple[int, ...]], ...]

    @classmethod
    def of(cls, *terms: tuple[int, Sequence[int]]) -> "Relation":
        return cls(tuple((int(c), tuple(int(a) for a in path)) for c, path in terms))


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[tuple[int, int], ...]
    relations: tuple[Relation, ...] = field(default=())

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        object.__setattr__(self, "arrows", tuple((int(s), int(t)) for s, t in self.arrows))
        object.__setattr__(self, "relations", tuple(self.relations))
        for k, (s, t) in enumerate(self.arrows):
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise ValueError(f"arrow {k + 1} has an endpoint outside 1..{self.vertex_count}")
        for rel in self.relations:
            ends = set()
            if not rel.terms:
                raise ValueError("empty relation")
            for _, path in rel.terms:
                if len(path) < 2:
                    raise ValueError("relation paths must have length >= 2")
                for a in path:
                    if not 0 <= a < len(self.arrows):
                        raise ValueError(f"relation uses unknown arrow {a + 1}")
                for later, earlier in zip(path, path[1:]):
                    if self.arrows[earlier][1] != self.arrows[later][0]:
                        raise ValueError(f"relation path {[a + 1 for a in path]} is not composable")
                ends.add(self.path_ends(path))
            if len(ends) != 1:
                raise ValueError("relation paths do not share source and target")

    @property
    def n(self) -> int:
        return self.vertex_count

    def path_ends(self, path: Sequence[int]) -> tuple[int, int]:
        """(source, target) of a path in composition order."""
        return self.arrows[path[-1]][0], self.arrows[path[0]][1]

    def arrow_count(self, i: int, j: int) -> int:
        return sum(1 for s, t in self.arrows if s == i and t == j)

    def is_acyclic(self) -> bool:
        indeg = [0] * self.n
        for _, t in self.arrows:
            indeg[t] += 1
        todo = [v for v in range(self.n) if indeg[v] == 0]
        seen = 0
        while todo:
            v = todo.pop()
            seen += 1
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        todo.append(t)
        return seen == self.n

    def is_hereditary(self) -> bool:
        return self.is_acyclic() and not self.relations

    def opposite(self) -> "Quiver":
        rels = tuple(Relation(tuple((c, tuple(reversed(path))) for c, path in r.terms)) for r in self.relations)
        return Quiver(self.n, tuple((t, s) for s, t in self.arrows), rels)

    def paths(self, source: int, target: int, max_length: int) -> list[tuple[int, ...]]:
        """All paths source -> target of length <= max_length (trivial path included)."""
        out: list[tuple[int, ...]] = []
        frontier: list[tuple[tuple[int, ...], int]] = [((), source)]
        for _ in range(max_length + 1):
            nxt = []
            for path, end in frontier:
                if end == target:
                    out.append(path)
                for k, (s, t) in enumerate(self.arrows):
                    if s == end:
                        nxt.append(((k,) + path, t))
            frontier = nxt
        return out

    def b_matrix(self) -> np.ndarray:
        """Skew-symmetric exchange matrix b_ij = #(i->j) - #(j->i)."""
        b = np.zeros((self.n, self.n), dtype=np.int64)
        for s, t in self.arrows:
            b[s, t] += 1
            b[t, s] -= 1
        return b


@dataclass(frozen=True)
class EulerData:
    euler_matrix: np.ndarray
    R: np.ndarray
    R_prime: np.ndarray


def dims_check(q: Quiver, d: Sequence[int]) -> DimVector:
    d = tuple(int(x) for x in d)
    if len(d) != q.n or any(x < 0 for x in d):
        raise ValueError(f"dimension vector {d} does not fit a quiver with {q.n} vertices")
    return d


def dv_add(a: Sequence[int], b: Sequence[int]) -> DimVector:
    return tuple(x + y for x, y in zip(a, b))


def dv_sub(a: Sequence[int], b: Sequence[int]) -> DimVector:
    out = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in out):
        raise ValueError(f"{tuple(a)} - {tuple(b)} is not a dimension vector")
    return out


def dv_le(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def dv_below(d: Sequence[int]) -> Iterator[DimVector]:
    """All dimension vectors e with 0 <= e <= d."""
    return (tuple(e) for e in product(*(range(x + 1) for x in d)))


def dv_with_total(n: int, total: int) -> Iterator[DimVector]:
    """All dimension vectors with n entries summing to total."""
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in dv_with_total(n - 1, total - first):
            yield (first,) + rest


def euler_form(q: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    """<a, b> = sum_i a_i b_i - sum over arrows i->j of a_i b_j."""
    if q.relations:
        raise ValueError("the Euler form is not determined by the quiver when relations are present")
    a, b = dims_check(q, a), dims_check(q, b)
    return sum(x * y for x, y in zip(a, b)) - sum(a[s] * b[t] for s, t in q.arrows)


def euler_matrix(q: Quiver) -> np.ndarray:
    e = np.eye(q.n, dtype=np.int64)
    for s, t in q.arrows:
        e[s, t] -= 1
    return e


def r_matrices(q: Quiver) -> EulerData:
    if not q.is_hereditary():
        raise ValueError("R matrices are read off the quiver only in the hereditary case")
    r = np.zeros((q.n, q.n), dtype=np.int64)
    for s, t in q.arrows:
        r[s, t] += 1
    return EulerData(euler_matrix(q), r, r.T.copy())


def cartan_counterpart(b) -> np.ndarray:
    b = np.asarray(b, dtype=np.int64)
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.array_equal(b, -b.T):
        raise ValueError("expected an antisymmetric matrix")
    a = -np.abs(b)
    np.fill_diagonal(a, 2)
    return a


def linear_a(n: int, orientation: str = "right") -> Quiver:
    """Linear A_n: 'right' is 1->2->...->n, 'left' is n->...->1."""
    if orientation == "right":
        arrows = tuple((i, i + 1) for i in range(n - 1))
    else:
        arrows = tuple((i + 1, i) for i in range(n - 1))
    return Quiver(n, arrows)


def kronecker() -> Quiver:
    return Quiver(2, ((0, 1), (0, 1)))


__all__ = [
    "DimVector",
    "EulerData",
    "Quiver",
    "Relation",
    "cartan_counterpart",
    "dims_check",
    "dv_add",
    "dv_below",
    "dv_le",
    "dv_sub",
    "dv_with_total",
    "euler_form",
    "euler_matrix",
    "kronecker",
    "linear_a",
    "r_matrices",
]

"""Exhaustive verification sweeps over a bounded universe."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .green import (
    Report,
    associativity_check,
    degenerated_green_check,
    green_check,
    green_compat_check,
    green_nonhereditary_check,
    green_rewritten_check,
    hopf_pairing_check,
    quadruples,
    riedtmann_peng_check,
    serre_check,
    split_extension_chi_check,
    universe,
)
from .hall import HallAlgebra
from .quiver import Quiver, dv_add, dv_below, dv_le, dv_with_total

GREEN_VARIANTS = ("original", "rewritten", "nonhereditary", "degenerated")


@dataclass
class Sweep:
    name: str
    reports: list[Report] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def failures(self) -> list[Report]:
        return [r for r in self.reports if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return f"{self.name}: {len(self.reports)} checked, {len(self.failures)} failed"


def labels_up_to(alg: HallAlgebra, max_total: int, start: int = 0) -> list[str]:
    return [e.label for t in range(start, max_total + 1) for d in dv_with_total(alg.q.n, t) for e in alg.classes(d)]


def _bound(q: Quiver, max_total: int) -> tuple[int, ...]:
    return (max_total,) * q.n


def green_sweep(q: Quiver, p: int, max_total: int, variant: str = "original") -> Sweep:
    if variant not in GREEN_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    bound = _bound(q, max_total)
    alg = universe(q, p, bound)
    out = Sweep(f"green-{variant} p={p}" if variant != "degenerated" else "green-degenerated")
    check: Callable = {
        "original": lambda *a: green_check(alg, *a),
        "rewritten": lambda *a: green_rewritten_check(alg, *a),
        "nonhereditary": lambda *a: green_nonhereditary_check(alg, *a),
        "degenerated": lambda *a: degenerated_green_check(q, bound, *a),
    }[variant]
    for quad in quadruples(alg, max_total):
        out.reports.append(check(*quad))
    if variant == "rewritten":
        out.notes["printed_form_differs"] = sum(r.extra["printed_rhs"] != r.rhs for r in out.reports)
    if variant == "nonhereditary":
        out.notes["filtered"] = [list(r.args) for r in out.reports if r.extra.get("filtered")]
    return out


def riedtmann_peng_sweep(q: Quiver, p: int, max_total: int) -> Sweep:
    alg = universe(q, p, _bound(q, max_total))
    out = Sweep(f"riedtmann-peng p={p}")
    labels = labels_up_to(alg, max_total)
    for a in labels:
        for b in labels:
            d = dv_add(alg.dims(a), alg.dims(b))
            if sum(d) > max_total:
                continue
            for lam in alg.classes(d):
                out.reports.append(riedtmann_peng_check(alg, a, b, lam.label))
    out.notes["printed_form_fails"] = sum(not r.extra["printed_ok"] for r in out.reports)
    return out


def split_extension_sweep(q: Quiver, max_total: int) -> Sweep:
    bound = _bound(q, max_total)
    alg = universe(q, 2, bound)
    labels = labels_up_to(alg, max_total)
    out = Sweep("split-extension-chi")
    for a in labels:
        for b in labels:
            if sum(alg.dims(a)) + sum(alg.dims(b)) <= max_total:
                out.reports.append(split_extension_chi_check(q, bound, a, b))
    return out


def associativity_sweep(q: Quiver, p: int, max_total: int) -> Sweep:
    alg = universe(q, p, _bound(q, max_total))
    return Sweep(f"associativity p={p}", associativity_check(alg, max_total))


def _graded_labels(alg: HallAlgebra, grade: Sequence[int]) -> list[str]:
    return [e.label for d in dv_below(grade) for e in alg.classes(d)]


def coproduct_sweep(q: Quiver, p: int, grade: Sequence[int]) -> Sweep:
    """All pairs (x, y) with dim x + dim y <= grade."""
    alg = universe(q, p, tuple(grade))
    labels = _graded_labels(alg, grade)
    out = Sweep(f"coproduct p={p}")
    for x in labels:
        for y in labels:
            if dv_le(dv_add(alg.dims(x), alg.dims(y)), grade):
                out.reports.append(green_compat_check(alg, x, y))
    return out


def pairing_sweep(q: Quiver, p: int, grade: Sequence[int], twisted: bool = False) -> Sweep:
    """All (a, b, c) with dim a = dim b + dim c <= grade."""
    alg = universe(q, p, tuple(grade))
    labels = _graded_labels(alg, grade)
    out = Sweep(f"pairing{'-twisted' if twisted else ''} p={p}")
    if twisted:
        out.notes["twist_exponent"] = HallAlgebra.TWIST_EXPONENT
    for b in labels:
        for c in labels:
            d = dv_add(alg.dims(b), alg.dims(c))
            if not dv_le(d, grade):
                continue
            for a in alg.classes(d):
                out.reports.append(hopf_pairing_check(alg, a.label, b, c, twisted))
    return out


def serre_sweep(q: Quiver, p: int) -> Sweep:
    """Both orders of every pair of vertices joined by exactly one arrow."""
    alg = universe(q, p, (3,) * q.n)
    out = Sweep(f"serre p={p}")
    for i in range(q.n):
        for j in range(q.n):
            if i != j and q.arrow_count(i, j) + q.arrow_count(j, i) == 1:
                out.reports.append(serre_check(alg, i, j))
    return out


__all__ = [
    "GREEN_VARIANTS",
    "Sweep",
    "associativity_sweep",
    "coproduct_sweep",
    "green_sweep",
    "labels_up_to",
    "pairing_sweep",
    "riedtmann_peng_sweep",
    "serre_sweep",
    "split_extension_sweep",
]

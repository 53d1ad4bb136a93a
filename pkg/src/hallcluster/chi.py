"""Euler characteristics from point counts.

A counter maps a prime p to the number of F_p-points of some set.  When
that number is a polynomial in p of known degree bound, interpolation
through bound+1 primes recovers it and a further control prime confirms
the fit.  The Euler characteristic is the polynomial evaluated at q = 1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Mapping

from .ffield import primes_from


class NotPolynomialCount(ValueError):
    """The counter does not fit a polynomial within the degree bound."""


@dataclass(frozen=True)
class CountPoly:
    coeffs: tuple[int, ...]  # constant term first
    degree_bound: int
    primes: tuple[int, ...]
    control: int

    def __call__(self, q) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    @property
    def chi(self) -> int:
        return sum(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def sample_primes(degree_bound: int, start: int = 2) -> tuple[tuple[int, ...], int]:
    gen = primes_from(start)
    ps = tuple(next(gen) for _ in range(degree_bound + 1))
    return ps, next(gen)


def _lagrange(points: list[tuple[int, int]]) -> list[Fraction]:
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, b in enumerate(basis):
                nxt[k] -= b * xj
                nxt[k + 1] += b
            basis = nxt
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += yi * b / denom
    return coeffs


def _fit(values: Mapping[int, int], primes: tuple[int, ...], control: int, bound: int) -> CountPoly:
    coeffs = _lagrange([(p, values[p]) for p in primes])
    if any(c.denominator != 1 for c in coeffs):
        raise NotPolynomialCount(f"non-integral interpolation coefficients {coeffs}")
    ints = [int(c) for c in coeffs]
    while len(ints) > 1 and ints[-1] == 0:
        ints.pop()
    poly = CountPoly(tuple(ints), bound, primes, control)
    if poly(control) != values[control]:
        raise NotPolynomialCount(f"control prime {control}: expected {poly(control)}, counted {values[control]}")
    return poly


def interpolate(counter: Callable[[int], int], degree_bound: int) -> CountPoly:
    """Fit the counter at the smallest degree_bound+1 primes and check the next one."""
    if degree_bound < 0:
        raise ValueError("degree bound must be non-negative")
    primes, control = sample_primes(degree_bound)
    values = {p: int(counter(p)) for p in primes + (control,)}
    return _fit(values, primes, control, degree_bound)


def interpolate_many(counter: Callable[[int], Mapping[Hashable, int]], degree_bound: int) -> dict[Hashable, CountPoly]:
    """Interpolate a family of counts sharing one set of sample primes."""
    primes, control = sample_primes(degree_bound)
    tables = {p: Counter(counter(p)) for p in primes + (control,)}
    keys = sorted({k for t in tables.values() for k in t}, key=repr)
    return {k: _fit({p: tables[p][k] for p in tables}, primes, control, degree_bound) for k in keys}


def chi(cp: CountPoly) -> int:
    return cp.chi


def projective_counter(counter: Callable[[int], int], zero_included: bool) -> Callable[[int], int]:
    def divided(p: int) -> int:
        n = int(counter(p)) - (1 if zero_included else 0)
        if n % (p - 1):
            raise NotPolynomialCount(f"count {n} at p={p} is not divisible by p-1; the scalar action is not free")
        return n // (p - 1)

    return divided


def projective_chi(counter: Callable[[int], int], zero_included: bool, degree_bound: int) -> int:
    """chi of the projectivisation of a cone, from point counts of the cone."""
    return interpolate(projective_counter(counter, zero_included), max(degree_bound - 1, 0)).chi


__all__ = [
    "CountPoly",
    "NotPolynomialCount",
    "chi",
    "interpolate",
    "interpolate_many",
    "projective_chi",
    "projective_counter",
    "sample_primes",
]

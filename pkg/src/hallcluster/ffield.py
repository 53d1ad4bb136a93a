"""Exact linear algebra over prime fields F_p.

Matrices are numpy ``int64`` arrays with entries reduced into ``[0, p)``.
Primes used by the library are small, so products of two entries never
overflow.  Vectors are rows; a subspace is stored as the non-zero rows of
its reduced row echelon form, which is canonical.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator

import numpy as np

DEFAULT_SUBSPACE_CEILING = 10**7


class GuardExceeded(RuntimeError):
    """A counting or scanning job would exceed its configured ceiling."""

    def __init__(self, what: str, size: int, ceiling: int):
        super().__init__(f"{what}: size {size} exceeds ceiling {ceiling}")
        self.what = what
        self.size = size
        self.ceiling = ceiling


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def primes_from(start: int = 2) -> Iterator[int]:
    """Yield primes >= start in increasing order."""
    n = max(start, 2)
    while True:
        if is_prime(n):
            yield n
        n += 1


def mat(a, p: int, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Coerce to an int64 matrix reduced mod p."""
    arr = np.asarray(a, dtype=np.int64)
    if shape is not None:
        arr = arr.reshape(shape)
    return arr % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def inv_scalar(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ZeroDivisionError("zero has no inverse mod p")
    return pow(int(x), p - 2, p)


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = mat(a, p).copy()
    if m.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * inv_scalar(m[r, c], p)) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a, p: int) -> int:
    arr = np.asarray(a)
    if arr.size == 0:
        return 0
    return len(rref(arr, p)[1])


def row_space(a, p: int, cols: int | None = None) -> np.ndarray:
    """Canonical basis (RREF rows) of the row space of a."""
    arr = np.asarray(a, dtype=np.int64)
    if arr.size == 0:
        n = cols if cols is not None else (arr.shape[1] if arr.ndim == 2 else 0)
        return zeros(0, n)
    r, piv = rref(arr, p)
    return r[: len(piv)]


def kernel_basis(a, p: int, cols: int | None = None) -> np.ndarray:
    """Basis of {x : a x = 0} as the rows of the returned array."""
    arr = np.asarray(a, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] == 0:
        n = cols if cols is not None else (arr.shape[1] if arr.ndim == 2 else 0)
        return identity(n)
    n = arr.shape[1]
    r, piv = rref(arr, p)
    free = [c for c in range(n) if c not in piv]
    basis = zeros(len(free), n)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(piv):
            basis[k, pc] = (-r[i, f]) % p
    return basis


def solve(a, b, p: int) -> np.ndarray | None:
    """One solution x of a x = b, or None when the system is inconsistent."""
    a = mat(a, p)
    b = mat(b, p).reshape(-1)
    rows, cols = a.shape
    aug = np.concatenate([a, b.reshape(rows, 1)], axis=1)
    r, piv = rref(aug, p)
    if cols in piv:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, pc in enumerate(piv):
        x[pc] = r[i, cols]
    return x


def inverse(a, p: int) -> np.ndarray:
    a = mat(a, p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    r, piv = rref(np.concatenate([a, identity(n)], axis=1), p)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return r[:, n:]


def in_span(basis: np.ndarray, v, p: int) -> bool:
    v = mat(v, p).reshape(1, -1)
    if basis.shape[0] == 0:
        return not v.any()
    return rank(np.concatenate([basis, v]), p) == rank(basis, p)


def complement(basis: np.ndarray, n: int, p: int) -> np.ndarray:
    """Standard basis vectors completing the RREF rows of ``basis`` to F_p^n."""
    if basis.shape[0] == 0:
        return identity(n)
    _, piv = rref(basis, p)
    free = [c for c in range(n) if c not in piv]
    out = zeros(len(free), n)
    for k, f in enumerate(free):
        out[k, f] = 1
    return out


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspaces(p: int, n: int, k: int, ceiling: int = DEFAULT_SUBSPACE_CEILING) -> Iterator[np.ndarray]:
    """Each k-dimensional subspace of F_p^n exactly once, as a k x n RREF matrix.

    Iterates pivot patterns and, for each, the free entries to the right of
    the pivots that are not themselves pivot columns.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    total = gaussian_binomial(n, k, p)
    if total > ceiling:
        raise GuardExceeded("subspace enumeration", total, ceiling)
    if k == 0:
        yield zeros(0, n)
        return
    for piv in combinations(range(n), k):
        slots = [(i, c) for i in range(k) for c in range(piv[i] + 1, n) if c not in piv]
        for vals in product(range(p), repeat=len(slots)):
            m = zeros(k, n)
            for i, c in enumerate(piv):
                m[i, c] = 1
            for (i, c), v in zip(slots, vals):
                m[i, c] = v
            yield m


def coefficient_block(p: int, k: int, start: int, stop: int) -> np.ndarray:
    """Rows start..stop-1 of the lexicographic list of all vectors in F_p^k."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.zeros((idx.size, k), dtype=np.int64)
    for j in range(k - 1, -1, -1):
        out[:, j] = idx % p
        idx = idx // p
    return out


def span_chunks(basis: np.ndarray, p: int, chunk: int = 1 << 15) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (coefficients, elements) for every element of the span, in chunks.

    ``basis`` has shape (k, ...); elements have shape (batch, ...).
    """
    k = basis.shape[0]
    total = p**k
    width = int(np.prod(basis.shape[1:], dtype=np.int64))
    flat = basis.reshape(k, width)
    for start in range(0, total, chunk):
        coeff = coefficient_block(p, k, start, min(total, start + chunk))
        elems = (coeff @ flat) % p if k else np.zeros((coeff.shape[0], flat.shape[1]), dtype=np.int64)
        yield coeff, elems.reshape((coeff.shape[0],) + basis.shape[1:])


def batch_invertible(mats: np.ndarray, p: int) -> np.ndarray:
    """Boolean mask: which square matrices in a (B, n, n) stack are invertible."""
    a = np.array(mats, dtype=np.int64) % p
    b, n, _ = a.shape
    ok = np.ones(b, dtype=bool)
    if n == 0:
        return ok
    inv = np.array([0] + [pow(x, p - 2, p) for x in range(1, p)], dtype=np.int64)
    rows = np.arange(b)
    for c in range(n):
        sub = a[:, c:, c]
        has = sub != 0
        ok &= has.any(axis=1)
        piv = c + np.argmax(has, axis=1)
        top = a[rows, c].copy()
        a[rows, c] = a[rows, piv]
        a[rows, piv] = top
        scale = inv[a[:, c, c]]
        a[:, c] = (a[:, c] * scale[:, None]) % p
        below = a[:, c + 1 :, c].copy()
        a[:, c + 1 :] = (a[:, c + 1 :] - below[:, :, None] * a[:, c][:, None, :]) % p
    return ok


def batch_rank(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a (B, r, c) stack of matrices."""
    a = np.array(mats, dtype=np.int64) % p
    b, r, c = a.shape
    out = np.zeros(b, dtype=np.int64)
    if r == 0 or c == 0:
        return out
    inv = np.array([0] + [pow(x, p - 2, p) for x in range(1, p)], dtype=np.int64)
    rows = np.arange(b)
    cur = np.zeros(b, dtype=np.int64)
    for col in range(c):
        active = cur < r
        if not active.any():
            break
        ridx = np.arange(r)[None, :]
        cand = (a[:, :, col] != 0) & (ridx >= cur[:, None])
        has = cand.any(axis=1) & active
        piv = np.argmax(cand, axis=1)
        sel = rows[has]
        if sel.size == 0:
            continue
        pr, cr = piv[sel], cur[sel]
        tmp = a[sel, cr].copy()
        a[sel, cr] = a[sel, pr]
        a[sel, pr] = tmp
        scale = inv[a[sel, cr, col]]
        a[sel, cr] = (a[sel, cr] * scale[:, None]) % p
        factors = a[sel, :, col].copy()
        factors[np.arange(sel.size), cr] = 0
        a[sel] = (a[sel] - factors[:, :, None] * a[sel, cr][:, None, :]) % p
        cur[sel] += 1
        out[sel] += 1
    return out


__all__ = [
    "DEFAULT_SUBSPACE_CEILING",
    "GuardExceeded",
    "batch_invertible",
    "batch_rank",
    "coefficient_block",
    "complement",
    "gaussian_binomial",
    "identity",
    "in_span",
    "inv_scalar",
    "inverse",
    "is_prime",
    "kernel_basis",
    "mat",
    "primes_from",
    "rank",
    "row_space",
    "rref",
    "solve",
    "span_chunks",
    "subspaces",
    "zeros",
]

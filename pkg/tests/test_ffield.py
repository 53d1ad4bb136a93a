from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import GF, ZZ
from sympy.polys.matrices import DomainMatrix

from hallcluster import ffield as ff

PRIMES = st.sampled_from([2, 3, 5, 7])


@st.composite
def matrices(draw):
    p = draw(PRIMES)
    r = draw(st.integers(0, 4))
    c = draw(st.integers(0, 4))
    vals = draw(st.lists(st.integers(0, p - 1), min_size=r * c, max_size=r * c))
    return p, np.array(vals, dtype=np.int64).reshape(r, c)


def sympy_rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    m = DomainMatrix([[ZZ(int(x)) for x in row] for row in a], a.shape, ZZ).convert_to(GF(p))
    return m.rank()


def test_rank_examples():
    assert ff.rank([[1, 1], [1, 1]], 2) == 1
    assert ff.rank(np.zeros((3, 3), dtype=np.int64), 5) == 0
    assert ff.rank(np.eye(2, dtype=np.int64), 3) == 2


def test_kernel_examples():
    k = ff.kernel_basis([[1, 1]], 2)
    assert k.tolist() == [[1, 1]]
    assert ff.kernel_basis([[1, 2], [0, 1]], 3).shape[0] == 0
    assert ff.kernel_basis(np.zeros((1, 2), dtype=np.int64), 3).shape[0] == 2


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_sympy(data):
    p, a = data
    assert ff.rank(a, p) == sympy_rank(a, p)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(data):
    p, a = data
    k = ff.kernel_basis(a, p, cols=a.shape[1])
    assert ff.rank(a, p) + k.shape[0] == a.shape[1]
    if k.shape[0]:
        assert not ((a @ k.T) % p).any()


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rref_is_reduced(data):
    p, a = data
    r, piv = ff.rref(a, p)
    for i, c in enumerate(piv):
        assert r[i, c] == 1
        assert sum(1 for x in r[:, c] if x) == 1
    assert len(piv) == sympy_rank(a, p)


@settings(max_examples=60, deadline=None)
@given(PRIMES, st.integers(1, 3), st.data())
def test_inverse(p, n, data):
    vals = data.draw(st.lists(st.integers(0, p - 1), min_size=n * n, max_size=n * n))
    a = np.array(vals, dtype=np.int64).reshape(n, n)
    if ff.rank(a, p) < n:
        with pytest.raises(ZeroDivisionError):
            ff.inverse(a, p)
    else:
        assert ((a @ ff.inverse(a, p)) % p).tolist() == np.eye(n, dtype=np.int64).tolist()


@pytest.mark.parametrize("p,n,k,expected", [(2, 2, 1, 3), (5, 3, 0, 1), (3, 3, 1, 13), (2, 4, 2, 35)])
def test_subspace_counts(p, n, k, expected):
    subs = list(ff.subspaces(p, n, k))
    assert len(subs) == expected == ff.gaussian_binomial(n, k, p)
    assert len({s.tobytes() for s in subs}) == expected
    assert all(ff.rank(s, p) == k for s in subs if k)


def test_subspace_guard():
    with pytest.raises(ff.GuardExceeded):
        list(ff.subspaces(7, 6, 3, ceiling=100))


def test_batch_helpers_agree_with_rank():
    rng = np.random.default_rng(0)
    mats = rng.integers(0, 3, size=(50, 3, 3))
    ranks = ff.batch_rank(mats, 3)
    inv = ff.batch_invertible(mats, 3)
    for m, r, i in zip(mats, ranks, inv):
        assert r == ff.rank(m, 3)
        assert bool(i) == (r == 3)


def test_primes():
    assert [p for p in range(30) if ff.is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

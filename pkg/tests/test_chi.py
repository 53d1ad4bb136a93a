from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hallcluster.chi import NotPolynomialCount, interpolate, interpolate_many, projective_chi, sample_primes
from hallcluster.ffield import gaussian_binomial
from hallcluster.green import chi_hall_number
from hallcluster.quiver import Quiver, linear_a


def test_interpolate_examples():
    cp = interpolate(lambda q: q + 1, 1)
    assert cp.coeffs == (1, 1) and cp.primes == (2, 3) and cp.control == 5
    assert str(cp) == "q + 1"
    assert interpolate(lambda q: 1, 0).coeffs == (1,)
    lines = interpolate(lambda q: gaussian_binomial(3, 1, q), 2)
    assert lines.coeffs == (1, 1, 1) and lines.chi == 3


@pytest.mark.parametrize("f,chi", [(lambda q: q + 1, 2), (lambda q: q * q, 1), (lambda q: q * (q * q - 1), 0)])
def test_chi_values(f, chi):
    assert interpolate(f, 3).chi == chi


def test_control_prime_catches_non_polynomial():
    with pytest.raises(NotPolynomialCount):
        interpolate(lambda q: q ** 3, 1)
    with pytest.raises(NotPolynomialCount):
        interpolate(lambda q: q % 3, 2)


def test_projective_chi():
    assert projective_chi(lambda q: q * q, True, 2) == 2
    assert projective_chi(lambda q: 1, True, 0) == 0
    assert interpolate(lambda q: q * q + 2 * q + 1, 2).chi == 4
    assert projective_chi(lambda q: q * (q * q - 1), False, 3) == 2


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4))
def test_roundtrip(coeffs):
    f = lambda q: sum(c * q ** k for k, c in enumerate(coeffs))  # noqa: E731
    cp = interpolate(f, len(coeffs) - 1)
    assert list(cp.coeffs) + [0] * (len(coeffs) - len(cp.coeffs)) == coeffs
    assert cp.chi == sum(coeffs)
    assert all(cp(q) == f(q) for q in (7, 11, 13))


def test_interpolate_many_shares_primes():
    res = interpolate_many(lambda q: {"a": q + 1, "b": 2 * q}, 1)
    assert res["a"].chi == 2 and res["b"].chi == 2


def test_sample_primes():
    assert sample_primes(2) == ((2, 3, 5), 7)


def test_chi_hall_numbers():
    one = Quiver(1, ())
    assert chi_hall_number(one, (2,), "S1+S1", "S1", "S1") == 2
    assert chi_hall_number(linear_a(2), (2, 2), "P1", "S1", "S2") == 1
    assert chi_hall_number(linear_a(2), (2, 2), "P1", "S2", "S1") == 0

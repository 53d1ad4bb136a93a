from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hallcluster.green import universe
from hallcluster.hall import HallElement, TwistScalar
from hallcluster.quiver import Quiver

ONE = Quiver(1, ())
fr = st.fractions(max_denominator=20).filter(lambda x: abs(x) < 50)


@st.composite
def twists(draw, p=3):
    return TwistScalar(draw(fr), draw(fr), p)


@given(twists(), twists(), twists())
def test_twist_scalar_ring(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + (-a) == 0
    assert a * 1 == a


def test_v_powers():
    v = TwistScalar(0, 1, 2)
    assert v * v == 2
    assert TwistScalar.v_power(-1, 2) == TwistScalar(0, Fraction(1, 2), 2)
    assert TwistScalar.v_power(-1, 2) * v == 1
    assert TwistScalar.v_power(4, 3) == 9


def u(alg, d):
    return HallElement(alg.p, d)


def test_products(a2):
    alg = universe(a2, 2, (2, 2))
    assert alg.mul("S1", "S2") == u(alg, {"S1+S2": 1, "P1": 1})
    assert alg.mul("S2", "S1") == u(alg, {"S1+S2": 1})
    f = alg.mul("S1", "S2")
    assert alg.product(alg.basis("0"), f) == f == alg.product(f, alg.basis("0"))
    tw = alg.mul("S1", "S2", twisted=True)
    vinv = TwistScalar(0, Fraction(1, 2), 2)
    assert tw == u(alg, {"S1+S2": vinv, "P1": vinv})


def test_h_values(a2):
    alg = universe(a2, 2, (2, 2))
    assert alg.h("S1", "S2", "P1") == 1
    assert alg.h("S2", "S1", "S1+S2") == 1
    one = universe(ONE, 2, (2,))
    assert one.h("S1", "S1", "S1+S1") == Fraction(1, 2)


def test_coproduct(a2):
    alg = universe(a2, 2, (2, 2))
    assert alg.coproduct("P1") == u(alg, {("P1", "0"): 1, ("0", "P1"): 1, ("S1", "S2"): 1})
    assert alg.coproduct("0") == u(alg, {("0", "0"): 1})
    one = universe(ONE, 2, (2,))
    assert one.coproduct("S1+S1") == u(one, {("S1+S1", "0"): 1, ("0", "S1+S1"): 1, ("S1", "S1"): Fraction(1, 2)})


def test_pairing(a2):
    alg = universe(a2, 2, (2, 2))
    assert alg.pairing(alg.basis("S1"), alg.basis("S1")) == 2
    assert alg.pairing(alg.basis("S1"), alg.basis("S2")) == 0


@pytest.mark.parametrize("p", [2, 3])
def test_grading_respected(a2, p):
    alg = universe(a2, p, (3, 3))
    for x in ("S1", "S2", "P1"):
        for y in ("S1", "S2", "P1", "S1+S2"):
            d = tuple(a + b for a, b in zip(alg.dims(x), alg.dims(y)))
            assert all(alg.dims(k) == d for k in alg.mul(x, y).coeffs)


def test_hall_numbers_sum_to_submodule_count(a2):
    """Summing g over all (sub, quotient) classes recovers the number of submodules."""
    from hallcluster import reps as R

    alg = universe(a2, 3, (2, 2))
    for lam in alg.classes((2, 2)):
        for e in [(1, 0), (1, 1), (0, 1), (2, 1)]:
            total = sum(alg.g(lam.label, x.label, y.label)
                        for y in alg.classes(e) for x in alg.classes(tuple(a - b for a, b in zip((2, 2), e))))
            assert total == len(R.submodules(lam.rep, e))

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hallcluster.quiver import (
    Quiver,
    Relation,
    cartan_counterpart,
    dv_below,
    dv_with_total,
    euler_form,
    kronecker,
    linear_a,
    r_matrices,
)


def test_euler_form_examples(a2, kr):
    assert euler_form(a2, (1, 0), (0, 1)) == -1
    assert euler_form(kr, (1, 0), (0, 1)) == -2
    assert euler_form(a2, (0, 0), (3, 5)) == 0


@given(st.lists(st.integers(0, 4), min_size=3, max_size=3), st.lists(st.integers(0, 4), min_size=3, max_size=3),
       st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_euler_form_bilinear(a, b, c):
    q = Quiver(3, ((0, 1), (2, 1)))
    s = [x + y for x, y in zip(a, b)]
    assert euler_form(q, s, c) == euler_form(q, a, c) + euler_form(q, b, c)


def test_euler_form_rejects_relations(a3_rel):
    with pytest.raises(ValueError):
        euler_form(a3_rel, (1, 0, 0), (0, 1, 0))


def test_cartan_counterpart():
    assert cartan_counterpart([[0, 1], [-1, 0]]).tolist() == [[2, -1], [-1, 2]]
    assert cartan_counterpart([[0]]).tolist() == [[2]]
    assert cartan_counterpart([[0, 2], [-2, 0]]).tolist() == [[2, -2], [-2, 2]]
    with pytest.raises(ValueError):
        cartan_counterpart([[0, 1], [1, 0]])


def test_r_matrices(a3, kr):
    ed = r_matrices(a3)
    assert ed.R.tolist() == [[0, 1, 0], [0, 0, 0], [0, 1, 0]]
    assert ed.R_prime.tolist() == ed.R.T.tolist()
    assert not r_matrices(Quiver(2, ())).R.any()
    assert r_matrices(kr).R.tolist() == [[0, 2], [0, 0]]


def test_validation():
    with pytest.raises(ValueError):
        Quiver(3, ((0, 4),))
    with pytest.raises(ValueError):
        Quiver(0, ())
    with pytest.raises(ValueError):
        Quiver(3, ((2, 1), (1, 0)), (Relation.of((1, (0, 1))),))  # not composable
    with pytest.raises(ValueError):
        Quiver(2, ((0, 1),), (Relation.of((1, (0,))),))


def test_shapes(a3_rel):
    assert linear_a(3).arrows == ((0, 1), (1, 2))
    assert linear_a(2, "left").arrows == ((1, 0),)
    assert kronecker().arrow_count(0, 1) == 2
    assert a3_rel.is_acyclic() and not a3_rel.is_hereditary()
    assert not Quiver(2, ((0, 1), (1, 0))).is_acyclic()
    assert a3_rel.path_ends((1, 0)) == (2, 0)


def test_b_matrix(a3):
    b = a3.b_matrix()
    assert np.array_equal(b, -b.T)
    assert b.tolist() == [[0, 1, 0], [-1, 0, -1], [0, 1, 0]]


def test_dimension_vectors():
    assert len(list(dv_below((2, 1)))) == 6
    assert sorted(dv_with_total(2, 2)) == [(0, 2), (1, 1), (2, 0)]

from __future__ import annotations

from collections import Counter
from itertools import product

import numpy as np
import pytest

from hallcluster import reps as R
from hallcluster.descriptors import module
from hallcluster.ffield import GuardExceeded
from hallcluster.quiver import Quiver, dv_with_total, euler_form
from hallcluster.twocy import preprojective


def S(q, p, i):
    return R.simple(q, p, i - 1)


def test_hom_examples(a2):
    assert R.hom_dim(S(a2, 2, 1), S(a2, 2, 2)) == 0
    assert R.hom_dim(S(a2, 2, 1), S(a2, 2, 1)) == 1
    assert R.hom_dim(R.projective(a2, 2, 0), S(a2, 2, 1)) == 1


def test_ext_examples(a2):
    assert R.ext1_dim(S(a2, 2, 1), S(a2, 2, 2)) == 1
    assert R.ext1_dim(S(a2, 2, 2), S(a2, 2, 1)) == 0
    pre = preprojective(a2)
    assert R.ext1_dim(S(pre, 2, 1), S(pre, 2, 2)) == 1
    assert R.ext1_dim(S(pre, 2, 1), S(pre, 2, 1)) == 0


@pytest.mark.parametrize("p", [2, 3])
def test_hom_minus_ext_is_euler_form(p):
    """Every pair of A3 classes with total dim <= 4: Hom/Ext complex against the quiver form."""
    from hallcluster.green import universe

    q = Quiver(3, ((0, 1), (2, 1)))
    alg = universe(q, p, (4, 4, 4))
    labels = [e for t in range(1, 4) for d in dv_with_total(3, t) for e in alg.classes(d)]
    for x, y in product(labels, repeat=2):
        if x.rep.total + y.rep.total > 4:
            continue
        lhs = R.hom_dim(x.rep, y.rep) - R.ext1_dim(x.rep, y.rep)
        assert lhs == euler_form(q, x.dims, y.dims)


def test_middle_term(a2, kr):
    s1, s2 = S(a2, 2, 1), S(a2, 2, 2)
    es = R.ext1_space(s1, s2)
    assert R.is_isomorphic(R.middle_term(s1, s2, es.vector([0])), R.direct_sum(s2, s1))
    m = R.middle_term(s1, s2, es.vector([1]))
    assert R.is_isomorphic(m, R.projective(a2, 2, 0))
    k1, k2 = S(kr, 3, 1), S(kr, 3, 2)
    ek = R.ext1_space(k1, k2)
    assert ek.dim == 2
    mid = R.middle_term(k1, k2, ek.vector([1, 2]))
    assert R.is_isomorphic(mid, module("R(1,2)", kr, 3))


def test_isomorphism(a2):
    s1 = S(a2, 2, 1)
    assert R.is_isomorphic(s1, s1)
    assert not R.is_isomorphic(s1, S(a2, 2, 2))
    m = R.rep(a2, 3, (1, 1), [[[2]]])
    assert R.is_isomorphic(m, R.projective(a2, 3, 0))


def test_aut_orders(a2):
    s1 = S(a2, 2, 1)
    assert R.aut_order(s1) == 1
    assert R.aut_order(R.direct_sum(s1, s1)) == 6
    assert R.aut_order(R.projective(a2, 3, 0)) == 2


def test_submodules(a2):
    s1, s2 = S(a2, 2, 1), S(a2, 2, 2)
    assert len(R.submodules(R.direct_sum(s1, s2), (0, 1))) == 1
    assert len(R.submodules(R.direct_sum(s1, s2), (0, 0))) == 1
    assert len(R.submodules(R.direct_sum(s1, s1), (1, 0))) == 3
    assert len(R.submodules(R.projective(a2, 2, 0), (1, 0))) == 0


def test_hall_numbers(a2):
    s1, s2 = S(a2, 2, 1), S(a2, 2, 2)
    assert R.hall_number(s1, s2, R.projective(a2, 2, 0)) == 1
    # the vertex-1 line of S1+S2 is stable because the arrow acts by zero
    assert R.hall_number(s2, s1, R.direct_sum(s1, s2)) == 1
    for p in (2, 3):
        s = R.simple(Quiver(1, ()), p, 0)
        assert R.hall_number(s, s, R.direct_sum(s, s)) == p + 1


def test_ext_strata(a2, kr):
    s1, s2 = S(a2, 2, 1), S(a2, 2, 2)
    assert R.ext_stratum_count(s1, s2, R.projective(a2, 2, 0)) == 1
    assert R.ext_stratum_count(s2, s1, R.direct_sum(s2, s1)) == 1
    k1, k2 = S(kr, 2, 1), S(kr, 2, 2)
    for a, b in [(0, 1), (1, 0), (1, 1)]:
        assert R.ext_stratum_count(k1, k2, module(f"R({a},{b})", kr, 2)) == 1


def test_hom_strata(kr, a2):
    for p in (2, 3):
        s1, s2 = R.simple(kr, p, 0), R.simple(kr, p, 1)
        tau_s1 = R.ar_translate(s1)
        assert tau_s1.dims == (3, 2)
        inj = R.direct_sum(R.injective(kr, p, 0), R.injective(kr, p, 1))
        assert R.hom_dim(s2, tau_s1) == 2
        assert R.hom_stratum_count(s2, tau_s1, R.zero_rep(kr, p), inj) == p * p - 1
    m = R.projective(a2, 3, 0)
    assert R.hom_stratum_count(m, m, R.zero_rep(a2, 3), R.zero_rep(a2, 3)) == R.aut_order(m)


def test_iso_classes(a2, kr):
    t = R.iso_classes(a2, 2, (1, 1))
    assert len(t.reps) == 2
    assert len(R.iso_classes(a2, 3, (0, 1)).reps) == 1
    assert len(R.iso_classes(kr, 2, (1, 1)).reps) == 4


@pytest.mark.parametrize("d", [(1, 1), (2, 1), (1, 2), (2, 2)])
@pytest.mark.parametrize("p", [2, 3])
def test_orbit_sizes_sum_to_point_count(a2, d, p):
    t = R.iso_classes(a2, p, d)
    assert sum(t.orbit_sizes) == p ** (d[0] * d[1])
    g = R.group_order(d, p)
    for m, a in zip(t.reps, t.aut_orders):
        assert a == R.aut_order(m)
        assert g % a == 0


def test_iso_classes_guard(kr):
    with pytest.raises(GuardExceeded):
        R.iso_classes(kr, 7, (3, 3))


def test_rad_soc_top(a2):
    p1 = R.projective(a2, 2, 0)
    rad, soc, top = R.rad_soc_top(p1)
    assert tuple(r.shape[0] for r in rad) == (0, 1)
    assert top == (1, 0)
    s1 = S(a2, 2, 1)
    _, soc, _ = R.rad_soc_top(s1)
    assert tuple(s.shape[0] for s in soc) == (1, 0)
    _, _, top = R.rad_soc_top(R.direct_sum(s1, s1))
    assert top == (2, 0)


def test_ar_translate(a3):
    for p in (2, 3):
        t = R.ar_translate(R.simple(a3, p, 0))
        assert R.is_isomorphic(t, R.projective(a3, p, 2))
        with pytest.raises(ValueError):
            R.ar_translate(R.projective(a3, p, 1))
        back = R.ar_translate_inverse(t)
        assert R.is_isomorphic(back, R.simple(a3, p, 0))


def test_flag_count(a2):
    p1 = R.projective(a2, 2, 0)
    assert R.flag_count(p1, [(0, 1), (1, 1)]) == 1
    assert R.flag_count(p1, [(1, 1), (0, 1)]) == 0
    ss = R.direct_sum(S(a2, 2, 1), S(a2, 2, 2))
    assert R.flag_count(ss, [(0, 1), (1, 1)]) == 1
    assert R.flag_count(ss, [(1, 1), (0, 1)]) == 1
    assert R.flag_count(ss, [(1, 1), (0, 0), (0, 1)]) == 1


def test_flag_count_iso_invariant(a2):
    a = R.rep(a2, 3, (2, 1), [[[1, 0]]])
    b = R.rep(a2, 3, (2, 1), [[[2, 1]]])
    assert R.is_isomorphic(a, b)
    for t in [[(0, 1), (0, 1), (1, 1)], [(0, 1), (1, 1), (0, 1)], [(1, 1), (0, 1), (0, 1)]]:
        assert R.flag_count(a, t) == R.flag_count(b, t)


@pytest.mark.parametrize("p", [2, 3])
def test_strata_partition_sums(a3, p):
    """Ext strata sum to p^dim Ext, Hom strata to p^dim Hom."""
    from hallcluster.green import universe

    alg = universe(a3, p, (3, 3, 3))
    labels = [e for t in range(1, 3) for d in dv_with_total(3, t) for e in alg.classes(d)]
    for x, y in product(labels, repeat=2):
        ext = R.ext_strata(x.rep, y.rep, alg.u.label_of)
        assert sum(ext.values()) == p ** R.ext1_dim(x.rep, y.rep)
        hom = R.hom_strata(x.rep, y.rep, alg.u.label_of, alg.u.label_of)
        assert sum(hom.values()) == p ** R.hom_dim(x.rep, y.rep)


def test_submodule_cells_partition(a2):
    m = R.direct_sum(R.projective(a2, 3, 0), S(a2, 3, 1), S(a2, 3, 2))
    for e in [(1, 0), (1, 1), (2, 1), (0, 1)]:
        cells = R.submodule_cells(m, e, R.signature, R.signature)
        assert sum(cells.values()) == len(R.submodules(m, e))


def test_relations_and_nilpotency(a3_rel):
    bad = R.Rep(a3_rel, 2, (1, 1, 1), (np.array([[1]]), np.array([[1]])))
    assert not bad.satisfies_relations()
    with pytest.raises(ValueError):
        bad.validate()
    cyc = Quiver(2, ((0, 1), (1, 0)))
    inv = R.Rep(cyc, 2, (1, 1), (np.array([[1]]), np.array([[1]])))
    nil = R.Rep(cyc, 2, (1, 1), (np.array([[1]]), np.array([[0]])))
    assert not inv.is_nilpotent() and nil.is_nilpotent()
    # long paths vanish on nilpotent points
    assert not nil.path_action((1, 0, 1)).any()


def test_nilpotent_table_is_subset():
    pre = preprojective(Quiver(2, ((0, 1),)))
    full = R.iso_classes(Quiver(2, ((0, 1), (1, 0))), 2, (1, 1))
    nil = R.iso_classes(pre, 2, (1, 1), nilpotent_only=True)
    assert len(full.reps) == 4 and len(nil.reps) == 3


def test_factorization_exists(a2):
    p1 = R.projective(a2, 2, 0)
    ident = tuple(np.eye(d, dtype=np.int64) for d in p1.dims)
    assert R.factorization_exists(p1, p1, ident, p1.dims)


def test_signature_counts(a2):
    t = R.iso_classes(a2, 2, (2, 2))
    sigs = Counter(R.signature(m) for m in t.reps)
    assert sum(sigs.values()) == len(t.reps)

from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from legcat.braid import BraidWord, parse_braid, thurston_bennequin
from legcat.category import (
    Category,
    SheafObject,
    compose,
    delta_matrix,
    delta_matrix_by_products,
    euler_characteristic,
    graded_hom,
    hadamard,
    identity_morphism,
    left_braided,
    right_braided,
)
from legcat.errors import IllegalDegree, InvalidPoint
from legcat.exactlin import PrimeField, Rationals
from legcat.invariants import random_point
from legcat.variety import enumerate_variety

from conftest import F2, HOPF, TREFOIL, TREFOIL2

HOPF_PTS = enumerate_variety(F2, HOPF)
TREFOIL_PTS = enumerate_variety(F2, TREFOIL)


def hopf_delta(x, y, u):
    return (u[0] * x[0] - y[0] * u[1], u[0] * x[1] - y[1] * u[2], u[1] * x[2] - y[2] * u[2])


def trefoil_delta(x, y, u):
    return (
        u[0] * x[0] - y[0] * u[1],
        u[0] * x[1] - y[1] * u[2],
        u[1] * x[2] - y[2] * u[2],
        u[1] * x[3] - y[3] * u[0],
    )


@pytest.mark.parametrize(
    "w,formula,pts", [(HOPF, hopf_delta, HOPF_PTS), (TREFOIL, trefoil_delta, TREFOIL_PTS)]
)
def test_delta_matches_closed_form(w, formula, pts):
    for x in pts:
        for y in pts:
            d = delta_matrix(SheafObject(w, x, F2), SheafObject(w, y, F2))
            for u in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1)]:
                assert d(u) == tuple(c % 2 for c in formula(x, y, u))


@given(st.sampled_from([3, 5]), st.data())
def test_delta_matches_closed_form_odd(p, data):
    F = PrimeField(p)
    pts = enumerate_variety(F, TREFOIL)
    x, y = data.draw(st.sampled_from(pts)), data.draw(st.sampled_from(pts))
    u = tuple(data.draw(st.lists(st.integers(0, p - 1), min_size=3, max_size=3)))
    d = delta_matrix(SheafObject(TREFOIL, x, F), SheafObject(TREFOIL, y, F))
    assert d(u) == tuple(c % p for c in trefoil_delta(x, y, u))


def test_literal_convention_disagrees_with_hopf_formula():
    x, y = HOPF_PTS[0], HOPF_PTS[1]
    lit = delta_matrix(SheafObject(HOPF, x, F2), SheafObject(HOPF, y, F2), convention="literal")
    diffs = [u for u in [(1, 0, 0), (0, 1, 0), (0, 0, 1)] if lit(u) != tuple(c % 2 for c in hopf_delta(x, y, u))]
    assert diffs


@given(st.sampled_from([2, 3, 5]), st.integers(2, 4), st.data())
def test_delta_matches_matrix_products(p, n, data):
    F = PrimeField(p)
    gens = tuple(data.draw(st.lists(st.integers(1, n - 1), max_size=5)))
    w = BraidWord(n, gens)
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    A = SheafObject(w, random_point(F, w, rng), F)
    B = SheafObject(w, random_point(F, w, rng), F)
    assert delta_matrix(A, B).matrix == delta_matrix_by_products(A, B)


def test_hopf_dimensions():
    cat = Category(F2, HOPF, HOPF_PTS)
    assert cat.dims_table == [[(2, 2), (1, 1), (1, 1)], [(1, 1)] * 3, [(1, 1)] * 3]


def test_trefoil_dimensions():
    cat = Category(F2, TREFOIL, TREFOIL_PTS)
    for i in range(5):
        for j in range(5):
            assert cat.hom(i, j).dims == ((1, 2) if i == j else (0, 1))


def test_hopf_end_f1_bases():
    H = graded_hom(SheafObject(HOPF, HOPF_PTS[0], F2), SheafObject(HOPF, HOPF_PTS[0], F2))
    assert H.ext0_basis == ((0, 1, 0), (1, 0, 1))
    assert [tuple(v) for v in H.ext1_complement] == [(1, 0, 0), (0, 0, 1)]


def test_identity_is_all_ones_and_unital():
    cat = Category(F2, HOPF, HOPF_PTS)
    e = identity_morphism(cat.hom(0, 0))
    assert e.payload == (1, 1, 1)
    for deg in (0, 1):
        for a in cat.hom(0, 1).basis_classes(deg):
            assert cat.compose(0, 1, 1, identity_morphism(cat.hom(1, 1)), a) == a
            assert cat.compose(0, 0, 1, a, e) == a


def test_braided_products_closed_forms():
    u, v = ("u1", "u2", "u3"), ("v1", "v2", "v3")

    class Sym:
        # symbolic "field": multiplication records the product as a string pair
        def mul(self, a, b):
            return (a, b)

        def __call__(self, x):
            return x

    K = Sym()
    q, p = ("q1", "q2", "q3", "q4"), ("p1", "p2", "p3", "p4")
    assert right_braided(K, TREFOIL, q, u) == (("q1", "u2"), ("q2", "u3"), ("q3", "u3"), ("q4", "u1"))
    assert left_braided(K, TREFOIL, v, p) == (("v1", "p1"), ("v1", "p2"), ("v2", "p3"), ("v2", "p4"))


def test_compose_degree_rules():
    cat = Category(F2, HOPF, HOPF_PTS)
    a1 = cat.hom(2, 0).basis_classes(1)[0]
    b1 = cat.hom(0, 1).basis_classes(1)[0]
    with pytest.raises(IllegalDegree):
        cat.compose(2, 0, 1, b1, a1)
    a0 = cat.hom(2, 0).basis_classes(0)[0]
    b0 = cat.hom(0, 1).basis_classes(0)[0]
    c = cat.compose(2, 0, 1, b0, a0)
    assert c.degree == 0 and c.payload == hadamard(F2, b0.payload, a0.payload) == (0, 1, 0)


def test_invalid_point_rejected():
    with pytest.raises(InvalidPoint):
        SheafObject(HOPF, (1, 1, 1), F2)
    with pytest.raises(InvalidPoint):
        SheafObject(HOPF, (0, 1), F2)


@given(st.sampled_from([2, 3, 5]), st.integers(2, 4), st.data())
def test_euler_characteristic_property(p, n, data):
    F = PrimeField(p)
    w = BraidWord(n, tuple(data.draw(st.lists(st.integers(1, n - 1), max_size=8))))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    H = graded_hom(SheafObject(w, random_point(F, w, rng), F), SheafObject(w, random_point(F, w, rng), F))
    assert euler_characteristic(H) == -thurston_bennequin(w)


def test_trivial_braid_end():
    w = parse_braid("n=3; w=")
    H = graded_hom(SheafObject(w, (), F2), SheafObject(w, (), F2))
    assert H.dims == (3, 0)


@given(st.sampled_from([3, 5]), st.data())
def test_ext1_normal_form_ignores_image(p, data):
    F = PrimeField(p)
    pts = enumerate_variety(F, TREFOIL2)
    x, y = data.draw(st.sampled_from(pts)), data.draw(st.sampled_from(pts))
    H = graded_hom(SheafObject(TREFOIL2, x, F), SheafObject(TREFOIL2, y, F))
    rep = tuple(data.draw(st.lists(st.integers(0, p - 1), min_size=3, max_size=3)))
    u = tuple(data.draw(st.lists(st.integers(0, p - 1), min_size=2, max_size=2)))
    shifted = tuple((a + b) % p for a, b in zip(rep, H.delta(u)))
    assert H.ext1_from_rep(rep) == H.ext1_from_rep(shifted)
    assert H.ext1_from_rep(H.delta(u)).is_zero()


def test_kernel_class_coordinates():
    cat = Category(F2, HOPF, HOPF_PTS)
    H = cat.hom(0, 0)
    c = H.kernel_class((1, 1, 1))
    assert c.coords == (1, 1)
    assert H.ext0_class(c.coords).payload == (1, 1, 1)
    with pytest.raises(ValueError):
        H.kernel_class((1, 0, 0))


def test_rational_objects():
    Q = Rationals()
    x = (Q("1/2"), 0, Q("1/2"))
    H = graded_hom(SheafObject(TREFOIL2, x, Q), SheafObject(TREFOIL2, x, Q))
    assert H.dims == (1, 2)
    e = identity_morphism(H)
    assert compose(H, H, H, e, e) == e


def test_hopf_triple_mixed_products_by_hand():
    # (F3, F1, F2): u spans Ext^0(F3,F1), v spans Ext^0(F1,F2); generators as published
    x3, x1, x2 = HOPF_PTS[2], HOPF_PTS[0], HOPF_PTS[1]
    u, v = (0, 1, 0), (0, 1, 0)
    beta, alpha = (1, 0, 0), (0, 0, 1)
    right = (beta[0] * u[1], beta[1] * u[2], beta[2] * u[2])
    left = (v[0] * alpha[0], v[0] * alpha[1], v[1] * alpha[2])
    image = {
        tuple(c % 2 for c in hopf_delta(x3, x2, w))
        for w in [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    }
    assert right == (1, 0, 0) and left == (0, 0, 1)
    # neither lies in the image, so both products are nonzero classes (equal to gamma-hat)
    assert right not in image and left not in image
    assert tuple((a + b) % 2 for a, b in zip(right, (1, 1, 1))) in image
    cat = Category(F2, HOPF, HOPF_PTS)
    b = cat.hom(0, 1).ext1_from_rep(beta)
    a = cat.hom(2, 0).kernel_class(u)
    assert not cat.compose(2, 0, 1, b, a).is_zero()

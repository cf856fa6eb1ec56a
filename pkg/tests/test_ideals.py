"""Monomial ideal construction and arithmetic."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoclose.errors import DimensionMismatchError
from monoclose.ideals import (
    MonomialIdeal,
    add,
    colon_by_maximal,
    colon_by_monomial,
    contains_monomial,
    divides,
    intersect,
    is_m_primary,
    minimalize,
    power,
    product,
    scale,
)


@st.composite
def ideal_and_dim(draw, max_dim=4, max_coord=9, max_gens=7):
    dim = draw(st.integers(1, max_dim))
    vec = st.tuples(*[st.integers(0, max_coord)] * dim)
    gens = draw(st.lists(vec, min_size=0, max_size=max_gens))
    return MonomialIdeal(dim, tuple(gens)), dim


@st.composite
def two_ideals(draw, max_dim=4):
    dim = draw(st.integers(1, max_dim))
    vec = st.tuples(*[st.integers(0, 9)] * dim)
    gens = st.lists(vec, min_size=0, max_size=6)
    return (
        MonomialIdeal(dim, tuple(draw(gens))),
        MonomialIdeal(dim, tuple(draw(gens))),
        dim,
    )


def test_constructor_canonicalizes():
    I = MonomialIdeal(2, ((3, 1), (1, 2), (3, 1), (4, 4), (1, 2)))
    assert I.generators == ((1, 2), (3, 1))


def test_zero_and_unit():
    Z = MonomialIdeal(3, ())
    U = MonomialIdeal(3, ((0, 0, 0), (1, 2, 3)))
    assert Z.is_zero and not Z.is_unit and Z.is_proper
    assert U.is_unit and not U.is_zero and not U.is_proper
    I = MonomialIdeal(3, ((1, 0, 0),))
    assert I.is_proper and not I.is_zero


def test_constructor_rejects_bad_input():
    with pytest.raises(DimensionMismatchError):
        MonomialIdeal(2, ((1, 2, 3),))
    with pytest.raises(ValueError):
        MonomialIdeal(2, ((1, -2),))
    with pytest.raises(ValueError):
        MonomialIdeal(2, ((1, True),))
    with pytest.raises(ValueError):
        MonomialIdeal(2, ((1, 2.0),))


@given(ideal_and_dim())
def test_minimalize_idempotent(pair):
    I, dim = pair
    assert minimalize(I.generators, dim) == I
    assert MonomialIdeal(dim, I.generators).generators == I.generators


@given(ideal_and_dim())
def test_generators_form_antichain(pair):
    I, _ = pair
    gens = I.generators
    assert list(gens) == sorted(set(gens))
    for i, g in enumerate(gens):
        for h in gens[i + 1 :]:
            assert not divides(g, h)
            assert not divides(h, g)


def test_contains_monomial():
    I = MonomialIdeal(2, ((2, 0), (0, 3)))
    assert contains_monomial(I, (2, 5))
    assert contains_monomial(I, (0, 3))
    assert not contains_monomial(I, (1, 2))
    assert not contains_monomial(MonomialIdeal(2, ()), (0, 0))
    assert contains_monomial(MonomialIdeal(2, ((0, 0),)), (0, 0))


@given(two_ideals())
def test_product_commutes(triple):
    I, J, _ = triple
    assert product(I, J) == product(J, I)


@given(two_ideals())
def test_product_membership(triple):
    I, J, _ = triple
    P = product(I, J)
    for g in I.generators:
        for h in J.generators:
            assert contains_monomial(P, tuple(a + b for a, b in zip(g, h)))


def test_product_zero_absorbs():
    Z = MonomialIdeal(2, ())
    I = MonomialIdeal(2, ((1, 1),))
    assert product(Z, I).is_zero
    assert product(I, Z).is_zero


@given(ideal_and_dim(max_coord=5, max_gens=4), st.integers(1, 3), st.integers(1, 3))
def test_power_splits_as_product(pair, a, b):
    I, _ = pair
    assert power(I, a + b) == product(power(I, a), power(I, b))


def test_power_requires_positive_exponent():
    I = MonomialIdeal(2, ((1, 0),))
    with pytest.raises(ValueError):
        power(I, 0)


@given(two_ideals())
def test_intersect_membership(triple):
    I, J, dim = triple
    M = intersect(I, J)
    for g in M.generators:
        assert contains_monomial(I, g) and contains_monomial(J, g)
    for g in I.generators:
        for h in J.generators:
            v = tuple(max(a, b) for a, b in zip(g, h))
            assert contains_monomial(M, v)


@given(ideal_and_dim(max_coord=6, max_gens=5))
def test_colon_adjunction(pair):
    # w in (I : f) iff w + f in I, checked on a small grid around the gens
    I, dim = pair
    if I.is_zero:
        return
    f = I.generators[0]
    Q = colon_by_monomial(I, f)
    probe = set(Q.generators) | set(I.generators)
    probe |= {tuple(max(0, c - 1) for c in g) for g in I.generators}
    for w in probe:
        shifted = tuple(a + b for a, b in zip(w, f))
        assert contains_monomial(Q, w) == contains_monomial(I, shifted)


def test_colon_by_maximal_hand():
    I = MonomialIdeal(2, ((2, 0), (0, 2)))
    assert colon_by_maximal(I).generators == ((0, 2), (1, 1), (2, 0))
    # the unit ideal is stable
    U = MonomialIdeal(2, ((0, 0),))
    assert colon_by_maximal(U) == U


def test_is_m_primary():
    assert is_m_primary(MonomialIdeal(3, ((4, 0, 0), (0, 5, 0), (0, 0, 7))))
    assert not is_m_primary(MonomialIdeal(3, ((4, 0, 0), (0, 5, 0))))
    assert not is_m_primary(MonomialIdeal(2, ((1, 1),)))
    assert not is_m_primary(MonomialIdeal(2, ()))


@given(st.integers(1, 4), st.integers(0, 8))
def test_scale_and_add_vectors(dim, k):
    v = tuple(range(dim))
    assert scale(v, k) == tuple(k * c for c in v)
    assert add(v, v) == scale(v, 2)
    assert add(v, (0,) * dim) == v


def test_equality_is_generator_equality():
    a = MonomialIdeal(2, ((1, 2), (2, 1)))
    b = MonomialIdeal(2, ((2, 1), (1, 2), (3, 3)))
    assert a == b
    assert hash(a) == hash(b)


@settings(max_examples=40)
@given(two_ideals(), ideal_and_dim())
def test_product_associates(triple, pair):
    I, J, dim = triple
    K, kdim = pair
    if kdim != dim:
        K = MonomialIdeal(dim, tuple(g[:dim] + (0,) * (dim - len(g[:dim])) for g in K.generators))
    assert product(product(I, J), K) == product(I, product(J, K))

from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from horomod.errors import ValidationError
from horomod import rootdata as rda

A1 = rda.make_root_datum("A1")
A2 = rda.make_root_datum("A2")
A3 = rda.make_root_datum("A3")


def test_labels_expand():
    assert A2.cartan == ((2, -1), (-1, 2))
    assert A3.rank == 3
    assert A3.cartan[0] == (2, -1, 0)


def test_bad_cartan_rejected():
    with pytest.raises(ValidationError):
        rda.make_root_datum([[2, 1], [1, 2]])
    with pytest.raises(ValidationError):
        rda.make_root_datum([[1]])
    with pytest.raises(ValidationError):
        rda.make_root_datum([[2, -2], [-2, 2]])
    with pytest.raises(ValidationError):
        rda.make_root_datum("B2")


def test_simple_root_coords_are_cartan_rows():
    for rd in (A1, A2, A3):
        for i in range(rd.rank):
            assert rda.simple_root(rd, i) == rd.cartan[i]
            x = rda.to_root_coords(rd, rda.simple_root(rd, i))
            assert x == tuple(Q(1) if k == i else Q(0) for k in range(rd.rank))


def test_root_coords_a2_fundamental():
    # solved by hand: 2x - y = 1, -x + 2y = 0
    assert rda.to_root_coords(A2, (1, 0)) == (Q(2, 3), Q(1, 3))


def test_dominance_basic():
    assert rda.dominance_leq(A2, (0, 0), (1, 1))
    assert not rda.dominance_leq(A2, (0, 1), (1, 0))
    assert rda.dominance_leq(A1, (0,), (2,))
    assert not rda.dominance_leq(A1, (1,), (2,))  # parity


def test_lowest_weight_values():
    assert rda.lowest_weight(A2, (1, 0)) == (0, -1)
    assert rda.lowest_weight(A3, (0, 1, 0)) == (0, -1, 0)
    assert rda.lowest_weight(A1, (5,)) == (-5,)
    with pytest.raises(ValidationError):
        rda.lowest_weight(A2, (-1, 0))


def test_positive_root_counts():
    assert len(rda.positive_roots(A1)) == 1
    assert len(rda.positive_roots(A2)) == 3
    assert len(rda.positive_roots(A3)) == 6
    assert rda.positive_coroots(A3) == rda.positive_roots(A3)


small_weight = st.integers(min_value=-6, max_value=6)


@given(st.tuples(small_weight, small_weight), st.tuples(small_weight, small_weight))
def test_dominance_antisymmetric(a, b):
    if rda.dominance_leq(A2, a, b) and rda.dominance_leq(A2, b, a):
        assert a == b


@given(
    st.tuples(small_weight, small_weight),
    st.tuples(small_weight, small_weight),
    st.tuples(small_weight, small_weight),
)
def test_dominance_transitive(a, b, c):
    if rda.dominance_leq(A2, a, b) and rda.dominance_leq(A2, b, c):
        assert rda.dominance_leq(A2, a, c)


@given(st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6)))
def test_lowest_weight_duality(lam):
    low = rda.lowest_weight(A3, lam)
    assert rda.dominance_leq(A3, low, lam)
    dual = tuple(-c for c in low)
    assert rda.lowest_weight(A3, dual) == tuple(-c for c in lam)


@given(st.tuples(small_weight, small_weight, small_weight))
def test_dominant_conjugate_is_dominant(mu):
    conj, sign, _ = rda.dominant_conjugate(A3, mu)
    assert rda.is_dominant(A3, conj)
    assert sign in (1, -1)
    assert rda.to_root_coords(A3, tuple(a - b for a, b in zip(conj, mu)))

from fractions import Fraction
from itertools import permutations as all_perms

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import I, M, monomials, wreath_elements
from tropgroup.errors import DimensionMismatch, NotMonomial
from tropgroup.group import verify_group
from tropgroup.matrices import MonomialMatrix, TropMatrix, as_monomial, neutral, to_dense
from tropgroup.semiring import NEG_INF
from tropgroup.wreath import (
    WreathElement,
    element_order,
    from_monomial,
    realize,
    to_monomial,
    wreath_mul,
    wreath_power,
)


def w(sigma, d):
    return WreathElement(tuple(sigma), tuple(Fraction(x) for x in d))


def test_identity_is_neutral():
    x = w((2, 3, 1), (1, 2, 3))
    assert wreath_mul(WreathElement.identity(3), x) == x
    assert wreath_mul(x, WreathElement.identity(3)) == x


def test_order_two_element():
    x = w((2, 1), (-1, 1))
    assert wreath_mul(x, x) == WreathElement.identity(2)
    assert from_monomial(as_monomial(M)) == x
    assert element_order(x, 64) == 2


def test_diagonal_case_is_direct_product():
    assert wreath_mul(w((1, 2), (1, 2)), w((1, 2), (3, -5))) == w((1, 2), (4, -3))


def test_nonzero_diagonal_has_no_finite_order():
    assert element_order(w((1, 2), (1, 0)), 64) is None
    assert wreath_power(w((1, 2), (1, 0)), 5) == w((1, 2), (5, 0))
    assert wreath_power(w((1, 2), (1, 0)), -2) == w((1, 2), (-2, 0))


def test_to_monomial_layout():
    dense = to_dense(to_monomial(w((2, 3, 1), (1, 2, 3))))
    assert dense.entry(2, 1) == 1
    assert dense.entry(3, 2) == 2
    assert dense.entry(1, 3) == 3
    assert sum(1 for x in dense.entries if x is not NEG_INF) == 3


def test_round_trip_and_identity():
    p = as_monomial(M)
    assert to_monomial(from_monomial(p)) == p
    assert from_monomial(MonomialMatrix.identity(4)) == WreathElement.identity(4)


def test_rejects_non_permutation_and_mismatch():
    with pytest.raises(NotMonomial):
        w((1, 1), (0, 0))
    with pytest.raises(DimensionMismatch):
        wreath_mul(WreathElement.identity(2), WreathElement.identity(3))


@settings(max_examples=300)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(monomials(n), monomials(n))))
def test_isomorphism_with_monomial_product(pair):
    p, q = pair
    assert from_monomial(as_monomial(to_dense(p) @ to_dense(q))) == wreath_mul(from_monomial(p), from_monomial(q))
    assert to_monomial(from_monomial(p)) == p
    assert from_monomial(to_monomial(from_monomial(q))) == from_monomial(q)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(wreath_elements(n), wreath_elements(n), wreath_elements(n))))
def test_associativity(triple):
    x, y, z = triple
    assert wreath_mul(wreath_mul(x, y), z) == wreath_mul(x, wreath_mul(y, z))


@given(st.integers(1, 5).flatmap(wreath_elements))
def test_inverse_formula(x):
    e = WreathElement.identity(x.n)
    assert wreath_mul(x, x.inverse()) == e
    assert wreath_mul(x.inverse(), x) == e


def test_realize_examples():
    assert realize([WreathElement.identity(3)]) == [neutral(3)]
    assert realize([w((1, 2), (0, 0)), w((2, 1), (-1, 1))]) == [I, M]
    with pytest.raises(DimensionMismatch):
        realize([WreathElement.identity(2), WreathElement.identity(3)])


def test_realize_symmetric_group_of_degree_three():
    elements = [w(s, (0, 0, 0)) for s in all_perms((1, 2, 3))]
    matrices = realize(elements)
    assert all(isinstance(m, TropMatrix) for m in matrices)
    assert verify_group(matrices).order == 6

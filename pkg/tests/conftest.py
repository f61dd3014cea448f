import os
from fractions import Fraction

import hypothesis
from hypothesis import strategies as st

from tropgroup.matrices import MonomialMatrix, TropMatrix, to_dense
from tropgroup.semiring import NEG_INF
from tropgroup.wreath import WreathElement, from_monomial, to_monomial, wreath_mul

hypothesis.settings.register_profile("default", deadline=None)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=20)
hypothesis.settings.register_profile("debugger", deadline=None, report_multiple_bugs=False)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = os.path.join(os.path.dirname(__file__), "data")

fractions = st.fractions(min_value=-10, max_value=10, max_denominator=8)

# Roughly one entry in five is NEG_INF.
scalars = st.integers(0, 4).flatmap(lambda k: st.just(NEG_INF) if k == 0 else fractions)


def matrices(rows: int, cols: int, elements=scalars):
    return st.lists(elements, min_size=rows * cols, max_size=rows * cols).map(
        lambda xs: TropMatrix(rows, cols, tuple(xs))
    )


def square_matrices(n: int, elements=scalars):
    return matrices(n, n, elements)


def permutations(n: int):
    return st.permutations(list(range(1, n + 1))).map(tuple)


def monomials(n: int):
    return st.tuples(permutations(n), st.lists(fractions, min_size=n, max_size=n)).map(
        lambda t: MonomialMatrix(t[0], tuple(t[1]))
    )


def wreath_elements(n: int):
    return monomials(n).map(from_monomial)


@st.composite
def finite_monomial_generators(draw, max_n: int = 4):
    """1-2 generators of a finite group: permutation matrices conjugated by one diagonal.

    Every such generator has finite order and the generated group is a
    conjugate of a permutation group, hence has at most n! elements.
    """
    n = draw(st.integers(1, max_n))
    w = tuple(draw(st.lists(fractions, min_size=n, max_size=n)))
    ident = tuple(range(1, n + 1))
    d = WreathElement(ident, w)
    d_inv = d.inverse()
    count = draw(st.integers(1, 2))
    gens = []
    for _ in range(count):
        sigma = draw(permutations(n))
        p = WreathElement(sigma, (Fraction(0),) * n)
        gens.append(to_dense(to_monomial(wreath_mul(wreath_mul(d, p), d_inv))))
    return n, gens


I = TropMatrix.from_rows([[0, "-inf"], ["-inf", 0]])
M = TropMatrix.from_rows([["-inf", 1], [-1, "-inf"]])

from fractions import Fraction

from hypothesis import strategies as st

from partial_hopf.algebra import StructureAlgebra
from partial_hopf.symbolic import Polynomial

NAMES = ("k1", "k2", "l1")


def rationals(bound: int = 5):
    return st.fractions(min_value=-bound, max_value=bound, max_denominator=4)


def monomials(names=NAMES):
    return st.lists(st.tuples(st.sampled_from(names), st.integers(1, 2)), max_size=2).map(tuple)


def polynomials(names=NAMES):
    return st.lists(st.tuples(monomials(names), rationals()), max_size=4).map(Polynomial.from_terms)


def elements(algebra: StructureAlgebra, names=NAMES):
    return st.lists(polynomials(names), min_size=algebra.dimension, max_size=algebra.dimension).map(
        lambda coefficients: algebra.element_from(dict(zip(algebra.basis, coefficients)))
    )


def assignments(names):
    return st.fixed_dictionaries({name: rationals(7) for name in names})


def nonzero_rationals():
    return rationals().filter(lambda value: value != 0).map(Fraction)

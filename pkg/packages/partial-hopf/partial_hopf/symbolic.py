"""Exact multivariate polynomials over the rationals.

:class:`Polynomial` wraps a sympy ``PolyElement`` over ``QQ`` in lex order.
Every polynomial lives in a ring whose generators are parameter names sorted
by name. Definition documents lift their coefficients into the ring over all
declared parameters (:meth:`Polynomial.over`), so table arithmetic stays in
one ring; constants join the other operand's ring directly and only other
mixes are moved into the ring over the union of names. Rings are cached per
name tuple because building one generates code for its monomial operations.

Canonical text form: terms in descending lex order of their monomials
(parameter names sorted), integer coefficients written ``2*k1*k2``, rational
ones ``(3/2)*k1``, unit coefficients dropped, powers as ``k1^2``. The zero
polynomial prints as ``0``. ``expressions.parse_polynomial`` reads this form
back.
"""

from __future__ import annotations

import functools
import re
from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from .errors import MissingParameter, NotExactlyDivisible

Parameter = str
Rational = Fraction
Monomial = tuple[tuple[Parameter, int], ...]
Scalar = Union[int, Fraction, "Polynomial"]

PARAMETER_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@functools.lru_cache(maxsize=None)
def _ring(names: tuple[str, ...]) -> PolyRing:
    return PolyRing(names if names else "", QQ, lex)


@functools.lru_cache(maxsize=None)
def _names(ring: PolyRing) -> tuple[str, ...]:
    return tuple(symbol.name for symbol in ring.symbols)


def _to_qq(value: int | Fraction):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _to_fraction(coefficient) -> Fraction:
    return Fraction(int(coefficient.numerator), int(coefficient.denominator))


def _ground(element: PolyElement):
    ring = element.ring
    return element.get(ring.zero_monom, ring.domain.zero)


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Polynomial:
    """An immutable polynomial with rational coefficients."""

    __slots__ = ("_element",)

    def __init__(self, element: PolyElement):
        self._element = element

    @classmethod
    def zero(cls) -> Polynomial:
        return cls(_ring(()).zero)

    @classmethod
    def one(cls) -> Polynomial:
        return cls(_ring(()).one)

    @classmethod
    def constant(cls, value: int | Fraction) -> Polynomial:
        return cls(_ring(()).ground_new(_to_qq(value)))

    @classmethod
    def parameter(cls, name: Parameter) -> Polynomial:
        if not PARAMETER_PATTERN.match(name):
            raise ValueError(f"invalid parameter name {name!r}")
        return cls(_ring((name,)).gens[0])

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Monomial, int | Fraction]]) -> Polynomial:
        terms = list(terms)
        names = tuple(sorted({name for monomial, _ in terms for name, _ in monomial}))
        ring = _ring(names)
        position = {name: index for index, name in enumerate(names)}
        element = ring.zero
        for monomial, coefficient in terms:
            exponents = [0] * len(names)
            for name, exponent in monomial:
                exponents[position[name]] += exponent
            element += ring({tuple(exponents): _to_qq(coefficient)})
        return cls(element)

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._element

    @property
    def is_constant(self) -> bool:
        return self._element.is_ground

    @property
    def is_one(self) -> bool:
        return self._element == self._element.ring.one

    @property
    def constant_value(self) -> Fraction:
        """Coefficient of the empty monomial."""
        return _to_fraction(_ground(self._element))

    @property
    def variables(self) -> tuple[Parameter, ...]:
        """Generators of the ring holding this polynomial, used or not."""
        return _names(self._element.ring)

    @property
    def parameters(self) -> frozenset[Parameter]:
        names = _names(self._element.ring)
        used = set()
        for exponents in self._element.keys():
            used.update(name for name, exponent in zip(names, exponents) if exponent)
        return frozenset(used)

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical order: descending lex over sorted names."""
        names = _names(self._element.ring)
        return [
            (
                tuple((name, exponent) for name, exponent in zip(names, exponents) if exponent),
                _to_fraction(coefficient),
            )
            for exponents, coefficient in self._element.terms()
        ]

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value) -> Polynomial | None:
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Polynomial.constant(value)
        return None

    def _unify(self, other: Polynomial) -> tuple[PolyElement, PolyElement]:
        left, right = self._element, other._element
        if left.ring is right.ring or left.ring == right.ring:
            return left, right
        # constants join the other operand's ring as ground elements
        if right.is_ground:
            return left, left.ring.ground_new(_ground(right))
        if left.is_ground:
            return right.ring.ground_new(_ground(left)), right
        ring = _ring(tuple(sorted(set(_names(left.ring)) | set(_names(right.ring)))))
        return left.set_ring(ring), right.set_ring(ring)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        left, right = self._unify(other)
        return Polynomial(left + right)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        left, right = self._unify(other)
        return Polynomial(left - right)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> Polynomial:
        return Polynomial(-self._element)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_one:
            return self
        if self.is_one:
            return other
        left, right = self._unify(other)
        return Polynomial(left * right)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        return Polynomial(self._element**exponent)

    def exquo(self, divisor: Scalar) -> Polynomial:
        """Exact quotient; raises :class:`NotExactlyDivisible` otherwise."""
        divisor = self._coerce(divisor)
        if divisor is None or divisor.is_zero:
            raise NotExactlyDivisible("division by zero")
        if divisor.is_constant:
            return self * (1 / divisor.constant_value)
        left, right = self._unify(divisor)
        try:
            return Polynomial(left.exquo(right))
        except ExactQuotientFailed as exc:
            raise NotExactlyDivisible(f"{self} is not divisible by {divisor}") from exc

    # -- evaluation --------------------------------------------------------

    def specialize(self, assignment: Mapping[Parameter, int | Fraction]) -> Polynomial:
        """Substitute the assigned parameters; unassigned ones stay symbolic.

        A fully specialized polynomial is returned as a constant of the
        parameter-free ring.
        """
        element = self._element
        ring = element.ring
        if not any(name in assignment for name in _names(ring)):
            return self
        if self.parameters.issubset(assignment):
            domain = ring.domain
            values = [_to_qq(assignment[name]) if name in assignment else domain.zero for name in _names(ring)]
            total = domain.zero
            for exponents, coefficient in element.items():
                for value, exponent in zip(values, exponents):
                    if exponent:
                        coefficient *= value**exponent
                total += coefficient
            return Polynomial(_ring(()).ground_new(total))
        pairs = [
            (generator, _to_qq(assignment[symbol.name]))
            for symbol, generator in zip(ring.symbols, ring.gens)
            if symbol.name in assignment
        ]
        return Polynomial(element.subs(pairs))

    def over(self, names: Iterable[Parameter]) -> Polynomial:
        """The same polynomial in the ring over ``names`` and its own parameters."""
        ring = _ring(tuple(sorted(set(names) | self.parameters)))
        if ring is self._element.ring:
            return self
        return Polynomial(self._element.set_ring(ring))

    def eval(self, assignment: Mapping[Parameter, int | Fraction]) -> Fraction:
        missing = sorted(self.parameters - set(assignment))
        if missing:
            raise MissingParameter(missing[0])
        return self.specialize(assignment).constant_value

    # -- comparison and text -----------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        left, right = self._unify(other)
        return left == right

    def __hash__(self) -> int:
        return hash(tuple(self.terms()))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        terms = self.terms()
        if not terms:
            return "0"
        pieces = []
        for index, (monomial, coefficient) in enumerate(terms):
            body = _format_term(monomial, abs(coefficient))
            if index == 0:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f" - {body}" if coefficient < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _format_term(monomial: Monomial, magnitude: Fraction) -> str:
    factors = [name if exponent == 1 else f"{name}^{exponent}" for name, exponent in monomial]
    if not factors:
        return format_rational(magnitude)
    if magnitude == 1:
        return "*".join(factors)
    if magnitude.denominator == 1:
        return "*".join([str(magnitude.numerator), *factors])
    return "*".join([f"({format_rational(magnitude)})", *factors])


def format_coefficient(coefficient: Polynomial) -> tuple[str, str]:
    """Split a nonzero coefficient into a sign and a product-ready text.

    ``-k4`` gives ``("-", "k4*")``, ``1`` gives ``("+", "")``, a sum of
    several terms is parenthesized.
    """
    terms = coefficient.terms()
    if len(terms) == 1:
        monomial, value = terms[0]
        sign = "-" if value < 0 else "+"
        magnitude = abs(value)
        if not monomial and magnitude == 1:
            return sign, ""
        text = _format_term(monomial, magnitude)
        if not monomial and magnitude.denominator != 1:
            text = f"({text})"
        return sign, text + "*"
    return "+", f"({coefficient})*"


def format_linear_combination(terms: Iterable[tuple[str, Polynomial]]) -> str:
    """Render ``sum(coefficient * atom)``; zero coefficients are skipped."""
    pieces = []
    for atom, coefficient in terms:
        if coefficient.is_zero:
            continue
        sign, text = format_coefficient(coefficient)
        if not pieces:
            pieces.append(f"-{text}{atom}" if sign == "-" else f"{text}{atom}")
        else:
            pieces.append(f" {sign} {text}{atom}")
    return "".join(pieces) if pieces else "0"


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_eval(p: Polynomial, assignment: Mapping[Parameter, int | Fraction]) -> Fraction:
    return p.eval(assignment)


def poly_is_zero(p: Polynomial) -> bool:
    return p.is_zero


ZERO = Polynomial.zero()
ONE = Polynomial.one()

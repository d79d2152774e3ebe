"""Finite-dimensional algebras given by structure constants.

A :class:`StructureAlgebra` stores, for every ordered pair of basis labels,
the coordinates of their product; products missing from the table are zero.
Coefficients are :class:`~partial_hopf.symbolic.Polynomial` so an algebra may
depend on parameters.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import AlgebraMismatch, UnknownBasisLabel
from .report import ReportEntry, VerificationReport
from .symbolic import ONE, ZERO, Polynomial, format_linear_combination

Label = str
Coefficient = Union[int, Fraction, Polynomial]
Coordinates = Mapping[Label, Coefficient]


def _polynomial(value: Coefficient) -> Polynomial:
    return value if isinstance(value, Polynomial) else Polynomial.constant(value)


def same_algebra(left: StructureAlgebra, right: StructureAlgebra) -> bool:
    return left is right or left == right


def require_same(left: StructureAlgebra, right: StructureAlgebra) -> None:
    if not same_algebra(left, right):
        raise AlgebraMismatch(f"operands live in {left.name} and {right.name}")


class StructureAlgebra:
    def __init__(
        self,
        name: str,
        basis: Iterable[Label],
        products: Mapping[tuple[Label, Label], Coordinates],
        unit: Label | Coordinates,
    ):
        self.name = name
        self.basis: tuple[Label, ...] = tuple(basis)
        if not self.basis:
            raise ValueError(f"{name}: basis must not be empty")
        if len(set(self.basis)) != len(self.basis):
            raise ValueError(f"{name}: basis labels must be distinct")
        self._index = {label: position for position, label in enumerate(self.basis)}

        structure: dict[tuple[int, int], tuple[tuple[int, Polynomial], ...]] = {}
        for (left, right), value in products.items():
            row = self._sparse(value)
            if row:
                structure[self.index(left), self.index(right)] = row
        self._structure = structure

        if isinstance(unit, str):
            unit = {unit: 1}
        dense = [ZERO] * len(self.basis)
        for position, coefficient in self._sparse(unit):
            dense[position] = coefficient
        self._unit = tuple(dense)

    def _sparse(self, coordinates: Coordinates) -> tuple[tuple[int, Polynomial], ...]:
        entries = {}
        for label, coefficient in coordinates.items():
            coefficient = _polynomial(coefficient)
            if not coefficient.is_zero:
                entries[self.index(label)] = coefficient
        return tuple(sorted(entries.items()))

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def index(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownBasisLabel(label, self.name) from None

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, (ZERO,) * self.dimension)

    @property
    def unit(self) -> AlgebraElement:
        return AlgebraElement(self, self._unit)

    def element(self, label: Label) -> AlgebraElement:
        coords = [ZERO] * self.dimension
        coords[self.index(label)] = ONE
        return AlgebraElement(self, tuple(coords))

    def element_from(self, coordinates: Coordinates) -> AlgebraElement:
        coords = [ZERO] * self.dimension
        for position, coefficient in self._sparse(coordinates):
            coords[position] = coefficient
        return AlgebraElement(self, tuple(coords))

    def structure_row(self, left: int, right: int) -> tuple[tuple[int, Polynomial], ...]:
        """Nonzero (index, coefficient) pairs of ``basis[left] * basis[right]``."""
        return self._structure.get((left, right), ())

    @property
    def mult_table(self) -> dict[tuple[Label, Label], AlgebraElement]:
        return {
            (left, right): self.element(left) * self.element(right)
            for left in self.basis
            for right in self.basis
        }

    @property
    def parameters(self) -> frozenset[str]:
        names: set[str] = set()
        for row in self._structure.values():
            for _, coefficient in row:
                names |= coefficient.parameters
        for coefficient in self._unit:
            names |= coefficient.parameters
        return frozenset(names)

    def _products(self) -> dict[tuple[Label, Label], dict[Label, Polynomial]]:
        return {
            (self.basis[left], self.basis[right]): {self.basis[k]: c for k, c in row}
            for (left, right), row in self._structure.items()
        }

    def _unit_coordinates(self) -> dict[Label, Polynomial]:
        return {label: c for label, c in zip(self.basis, self._unit) if not c.is_zero}

    def with_product(self, left: Label, right: Label, value: Coordinates | AlgebraElement) -> StructureAlgebra:
        """Copy of this algebra with one product replaced."""
        if isinstance(value, AlgebraElement):
            value = dict(value.nonzero_terms())
        products = self._products()
        products[left, right] = dict(value)
        return StructureAlgebra(self.name, self.basis, products, self._unit_coordinates())

    def with_unit(self, unit: Label | Coordinates) -> StructureAlgebra:
        return StructureAlgebra(self.name, self.basis, self._products(), unit)

    def specialize(self, assignment: Mapping[str, int | Fraction]) -> StructureAlgebra:
        if not self.parameters & set(assignment):
            return self
        products = {
            key: {label: c.specialize(assignment) for label, c in row.items()}
            for key, row in self._products().items()
        }
        unit = {label: c.specialize(assignment) for label, c in self._unit_coordinates().items()}
        return StructureAlgebra(self.name, self.basis, products, unit)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StructureAlgebra):
            return NotImplemented
        return (
            self is other
            or (
                self.name == other.name
                and self.basis == other.basis
                and self._structure == other._structure
                and self._unit == other._unit
            )
        )

    def __hash__(self) -> int:
        return hash((self.name, self.basis))

    def __repr__(self) -> str:
        return f"StructureAlgebra({self.name!r}, basis={list(self.basis)})"


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    algebra: StructureAlgebra
    coords: tuple[Polynomial, ...]

    def __getitem__(self, label: Label) -> Polynomial:
        return self.coords[self.algebra.index(label)]

    def nonzero_terms(self) -> Iterator[tuple[Label, Polynomial]]:
        for label, coefficient in zip(self.algebra.basis, self.coords):
            if not coefficient.is_zero:
                yield label, coefficient

    @property
    def is_zero(self) -> bool:
        return all(coefficient.is_zero for coefficient in self.coords)

    @property
    def parameters(self) -> frozenset[str]:
        return frozenset().union(*(c.parameters for c in self.coords))

    def _combine(self, other: AlgebraElement, sign: int) -> AlgebraElement:
        require_same(self.algebra, other.algebra)
        if sign > 0:
            coords = tuple(a + b for a, b in zip(self.coords, other.coords))
        else:
            coords = tuple(a - b for a, b in zip(self.coords, other.coords))
        return AlgebraElement(self.algebra, coords)

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, tuple(-c for c in self.coords))

    def scale(self, factor: Coefficient) -> AlgebraElement:
        factor = _polynomial(factor)
        if factor.is_one:
            return self
        return AlgebraElement(self.algebra, tuple(c * factor for c in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return elem_mul(self, other)
        if isinstance(other, (int, Fraction, Polynomial)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return self.scale(other)
        return NotImplemented

    def specialize(self, assignment: Mapping[str, int | Fraction], algebra: StructureAlgebra | None = None) -> AlgebraElement:
        target = algebra if algebra is not None else self.algebra.specialize(assignment)
        return AlgebraElement(target, tuple(c.specialize(assignment) for c in self.coords))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return same_algebra(self.algebra, other.algebra) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.algebra.name, self.coords))

    def __str__(self) -> str:
        return format_linear_combination(
            (f"[{label}]", coefficient) for label, coefficient in zip(self.algebra.basis, self.coords)
        )

    def __repr__(self) -> str:
        return f"<{self.algebra.name}: {self}>"


def elem_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the structure constants."""
    require_same(x.algebra, y.algebra)
    algebra = x.algebra
    accumulated = [ZERO] * algebra.dimension
    for i, left in enumerate(x.coords):
        if left.is_zero:
            continue
        for j, right in enumerate(y.coords):
            if right.is_zero:
                continue
            row = algebra.structure_row(i, j)
            if not row:
                continue
            coefficient = left * right
            for k, constant in row:
                accumulated[k] = accumulated[k] + coefficient * constant
    return AlgebraElement(algebra, tuple(accumulated))


def check_associative(algebra: StructureAlgebra) -> VerificationReport:
    """(b_i b_j) b_k = b_i (b_j b_k) for every triple of basis labels."""
    elements = {label: algebra.element(label) for label in algebra.basis}

    def entry(triple: tuple[Label, Label, Label]) -> ReportEntry:
        a, b, c = (elements[label] for label in triple)
        return ReportEntry.compare(triple, (a * b) * c, a * (b * c))

    return VerificationReport.collect(
        "associativity",
        "(xy)z = x(yz)",
        itertools.product(algebra.basis, repeat=3),
        entry,
    )


def check_unital(algebra: StructureAlgebra) -> VerificationReport:
    """1·b = b = b·1 for every basis label."""
    unit = algebra.unit

    def entry(label: Label) -> ReportEntry:
        b = algebra.element(label)
        return ReportEntry.compare((label,), unit * b, b, b * unit)

    return VerificationReport.collect("unit", "1x = x = x1", algebra.basis, entry)


class TensorElement:
    """Element of a tensor product of algebras, keyed by tuples of labels.

    The two-factor case is A⊗B with ``left_algebra`` and ``right_algebra``;
    iterated coproducts use more factors. Coordinates are kept sparse and
    ordered by the basis positions of their legs.
    """

    __slots__ = ("factors", "_coords")

    def __init__(self, factors: Iterable[StructureAlgebra], coords: Mapping[tuple[Label, ...], Coefficient]):
        self.factors: tuple[StructureAlgebra, ...] = tuple(factors)
        cleaned = {}
        for legs, coefficient in coords.items():
            if len(legs) != len(self.factors):
                raise ValueError(f"expected {len(self.factors)} legs, got {legs!r}")
            for algebra, label in zip(self.factors, legs):
                algebra.index(label)
            coefficient = _polynomial(coefficient)
            if not coefficient.is_zero:
                cleaned[tuple(legs)] = coefficient
        self._coords = dict(sorted(cleaned.items(), key=lambda item: self._position(item[0])))

    def _position(self, legs: tuple[Label, ...]) -> tuple[int, ...]:
        return tuple(algebra.index(label) for algebra, label in zip(self.factors, legs))

    @classmethod
    def collect(
        cls,
        factors: Iterable[StructureAlgebra],
        terms: Iterable[tuple[tuple[Label, ...], Coefficient]],
    ) -> TensorElement:
        """Sum like terms; zero sums disappear."""
        accumulated: dict[tuple[Label, ...], Polynomial] = {}
        for legs, coefficient in terms:
            coefficient = _polynomial(coefficient)
            accumulated[legs] = accumulated[legs] + coefficient if legs in accumulated else coefficient
        return cls(factors, accumulated)

    @property
    def left_algebra(self) -> StructureAlgebra:
        return self.factors[0]

    @property
    def right_algebra(self) -> StructureAlgebra:
        return self.factors[-1]

    def items(self) -> Iterator[tuple[tuple[Label, ...], Polynomial]]:
        return iter(self._coords.items())

    def __getitem__(self, legs: tuple[Label, ...]) -> Polynomial:
        return self._coords.get(tuple(legs), ZERO)

    def __len__(self) -> int:
        return len(self._coords)

    @property
    def is_zero(self) -> bool:
        return not self._coords

    def _require_same(self, other: TensorElement) -> None:
        if len(self.factors) != len(other.factors) or not all(
            same_algebra(a, b) for a, b in zip(self.factors, other.factors)
        ):
            raise AlgebraMismatch("tensor operands over different factors")

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._require_same(other)
        return TensorElement.collect(self.factors, itertools.chain(self.items(), other.items()))

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._require_same(other)
        return TensorElement.collect(
            self.factors, itertools.chain(self.items(), ((legs, -c) for legs, c in other.items()))
        )

    def __neg__(self) -> TensorElement:
        return TensorElement(self.factors, {legs: -c for legs, c in self.items()})

    def scale(self, factor: Coefficient) -> TensorElement:
        factor = _polynomial(factor)
        return TensorElement(self.factors, {legs: c * factor for legs, c in self.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_mul(self, other)
        if isinstance(other, (int, Fraction, Polynomial)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return self.scale(other)
        return NotImplemented

    def specialize(self, assignment: Mapping[str, int | Fraction]) -> TensorElement:
        factors = tuple(algebra.specialize(assignment) for algebra in self.factors)
        return TensorElement(factors, {legs: c.specialize(assignment) for legs, c in self.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        try:
            self._require_same(other)
        except AlgebraMismatch:
            return False
        return self._coords == other._coords

    def __hash__(self) -> int:
        return hash(tuple(self._coords.items()))

    def __str__(self) -> str:
        return format_linear_combination((f"[{', '.join(legs)}]", c) for legs, c in self.items())

    def __repr__(self) -> str:
        return f"<{'⊗'.join(a.name for a in self.factors)}: {self}>"


def tensor(*elements: AlgebraElement) -> TensorElement:
    """x_1 ⊗ ... ⊗ x_n."""
    factors = tuple(element.algebra for element in elements)
    terms = []
    for combination in itertools.product(*(list(element.nonzero_terms()) for element in elements)):
        coefficient = ONE
        for _, c in combination:
            coefficient = coefficient * c
        terms.append((tuple(label for label, _ in combination), coefficient))
    return TensorElement.collect(factors, terms)


def tensor_mul(s: TensorElement, t: TensorElement) -> TensorElement:
    """Factorwise product (x⊗y)(x'⊗y') = xx'⊗yy'."""
    s._require_same(t)
    terms = []
    for left_legs, left_coefficient in s.items():
        for right_legs, right_coefficient in t.items():
            products = [
                list((algebra.element(a) * algebra.element(b)).nonzero_terms())
                for algebra, a, b in zip(s.factors, left_legs, right_legs)
            ]
            coefficient = left_coefficient * right_coefficient
            for combination in itertools.product(*products):
                value = coefficient
                for _, c in combination:
                    value = value * c
                terms.append((tuple(label for label, _ in combination), value))
    return TensorElement.collect(s.factors, terms)

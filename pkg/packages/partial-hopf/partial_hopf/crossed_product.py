"""Partial crossed products A♯H.

The generators are ``a♯h = a(h1·1_A) ⊗ h2`` inside A⊗H and the product is

    (a⊗h)(b⊗l) = a (h1·b) ω(h2,l1) ⊗ h3 l2

extended bilinearly. Generators span A♯H but are usually dependent;
:func:`extract_basis` runs fraction-free elimination over the parameter
polynomials to pick a basis among them.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra import AlgebraElement, Label, StructureAlgebra, TensorElement, check_associative, check_unital, require_same
from .errors import InexactCoordinate, NotExactlyDivisible, NotInSpan
from .hopf import coproduct_n
from .partial_action import PartialActionData, act, specialize
from .pool import parallel_map
from .report import VerificationSuite
from .symbolic import ONE, ZERO, Polynomial, format_linear_combination

log = logging.getLogger(__name__)

Pair = tuple[Label, Label]


def sharp_label(pair: Pair) -> str:
    return f"{pair[0]}#{pair[1]}"


class SmashElement:
    """An element of A♯H, carried as its A⊗H tensor."""

    __slots__ = ("action", "underlying")

    def __init__(self, action: PartialActionData, underlying: TensorElement):
        self.action = action
        self.underlying = underlying

    @property
    def is_zero(self) -> bool:
        return self.underlying.is_zero

    def __add__(self, other):
        if not isinstance(other, SmashElement):
            return NotImplemented
        return SmashElement(self.action, self.underlying + other.underlying)

    def __sub__(self, other):
        if not isinstance(other, SmashElement):
            return NotImplemented
        return SmashElement(self.action, self.underlying - other.underlying)

    def __neg__(self) -> SmashElement:
        return SmashElement(self.action, -self.underlying)

    def scale(self, factor) -> SmashElement:
        return SmashElement(self.action, self.underlying.scale(factor))

    def __mul__(self, other):
        if isinstance(other, SmashElement):
            return smash_mul(self.action, self, other)
        if isinstance(other, (int, Fraction, Polynomial)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SmashElement):
            return NotImplemented
        return self.underlying == other.underlying

    def __hash__(self) -> int:
        return hash(self.underlying)

    def __str__(self) -> str:
        return str(self.underlying)

    def __repr__(self) -> str:
        return f"<{self.action.name} A#H: {self}>"


def _factors(data: PartialActionData) -> tuple[StructureAlgebra, StructureAlgebra]:
    return data.target, data.source


def smash_of(data: PartialActionData, a: Label, h: Label) -> SmashElement:
    """a♯h = a(h1·1_A) ⊗ h2."""
    A = data.target
    left = A.element(a)
    terms = []
    for term in coproduct_n(data.hopf, h, 2):
        h1, h2 = term.legs
        for label, c in (left * act(data, h1, A.unit)).nonzero_terms():
            terms.append(((label, h2), term.coefficient * c))
    return SmashElement(data, TensorElement.collect(_factors(data), terms))


def smash_of_elements(data: PartialActionData, a: AlgebraElement, h: AlgebraElement) -> SmashElement:
    """Bilinear extension of :func:`smash_of` to arbitrary elements."""
    require_same(data.target, a.algebra)
    require_same(data.source, h.algebra)
    total = TensorElement(_factors(data), {})
    for a_label, a_coefficient in a.nonzero_terms():
        for h_label, h_coefficient in h.nonzero_terms():
            piece = smash_of(data, a_label, h_label).underlying.scale(a_coefficient * h_coefficient)
            total = total + piece
    return SmashElement(data, total)


def smash_unit(data: PartialActionData) -> SmashElement:
    return smash_of_elements(data, data.target.unit, data.source.unit)


def tensor_product(data: PartialActionData, x: TensorElement, y: TensorElement) -> TensorElement:
    """The A♯H multiplication formula applied to raw A⊗H tensors."""
    A, H = data.target, data.source
    terms = []
    for (a, h), alpha in x.items():
        triples = coproduct_n(data.hopf, h, 3)
        for (b, l), beta in y.items():
            pairs = coproduct_n(data.hopf, l, 2)
            coefficient = alpha * beta
            for triple in triples:
                h1, h2, h3 = triple.legs
                left = A.element(a) * act(data, h1, b)
                if left.is_zero:
                    continue
                for pair in pairs:
                    l1, l2 = pair.legs
                    weight = data.cocycle[h2, l1]
                    if weight.is_zero:
                        continue
                    value = left * weight
                    product = H.element(h3) * H.element(l2)
                    scale = coefficient * triple.coefficient * pair.coefficient
                    for a_label, a_coefficient in value.nonzero_terms():
                        for h_label, h_coefficient in product.nonzero_terms():
                            terms.append(((a_label, h_label), scale * a_coefficient * h_coefficient))
    return TensorElement.collect((A, H), terms)


def smash_mul(data: PartialActionData, x: SmashElement, y: SmashElement) -> SmashElement:
    return SmashElement(data, tensor_product(data, x.underlying, y.underlying))


@dataclass(frozen=True)
class Pivot:
    generator: int
    column: int
    row: tuple[Polynomial, ...]
    combination: Mapping[int, Polynomial]


@dataclass(frozen=True)
class BasisExtraction:
    """Generators in scan order, the pivots found and the selected basis."""

    action: PartialActionData
    generators: tuple[tuple[Pair, SmashElement], ...]
    columns: tuple[Pair, ...]
    pivots: tuple[Pivot, ...]

    @property
    def selected(self) -> tuple[Pair, ...]:
        return tuple(self.generators[pivot.generator][0] for pivot in self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def selected_labels(self) -> tuple[str, ...]:
        return tuple(sharp_label(pair) for pair in self.selected)

    def vector(self, x: TensorElement) -> list[Polynomial]:
        return [x[pair] for pair in self.columns]

    def coordinates_text(self, coordinates: Iterable[Polynomial]) -> str:
        return format_linear_combination(
            (f"[{label}]", c) for label, c in zip(self.selected_labels, coordinates)
        )


def _reduce(pivots: Iterable[Pivot], row: list[Polynomial]) -> tuple[list[Polynomial], Polynomial, dict[int, Polynomial]]:
    """Reduce ``row`` against the pivots.

    Returns (r, d, C) with r = d·row + Σ C[i]·generator_i.
    """
    scale = ONE
    combination: dict[int, Polynomial] = {}
    for pivot in pivots:
        entry = row[pivot.column]
        if entry.is_zero:
            continue
        lead = pivot.row[pivot.column]
        if lead.is_constant:
            factor = entry * Polynomial.constant(1 / lead.constant_value)
            row = [r - factor * p for r, p in zip(row, pivot.row)]
            for index, c in pivot.combination.items():
                combination[index] = combination.get(index, ZERO) - factor * c
        else:
            row = [lead * r - entry * p for r, p in zip(row, pivot.row)]
            scale = lead * scale
            combination = {index: lead * c for index, c in combination.items()}
            for index, c in pivot.combination.items():
                combination[index] = combination.get(index, ZERO) - entry * c
    return row, scale, combination


def _choose_column(row: list[Polynomial]) -> int:
    nonzero = [index for index, value in enumerate(row) if not value.is_zero]
    constant = [index for index in nonzero if row[index].is_constant]
    return (constant or nonzero)[0]


def extract_basis(data: PartialActionData) -> BasisExtraction:
    """Scan a♯h H-major (outer loop over H, inner over A) and keep the
    generators independent of the ones kept before them."""
    A, H = data.target, data.source
    scan = [(a, h) for h in H.basis for a in A.basis]
    generators = tuple((pair, smash_of(data, *pair)) for pair in scan)
    columns = tuple(scan)
    pivots: list[Pivot] = []
    for index, (pair, element) in enumerate(generators):
        row = [element.underlying[column] for column in columns]
        row, scale, combination = _reduce(pivots, row)
        if all(value.is_zero for value in row):
            continue
        combination[index] = combination.get(index, ZERO) + scale
        column = _choose_column(row)
        lead = row[column]
        if lead.is_constant and not lead.is_one:
            inverse = Polynomial.constant(1 / lead.constant_value)
            row = [value * inverse for value in row]
            combination = {key: c * inverse for key, c in combination.items()}
        combination = {key: c for key, c in combination.items() if not c.is_zero}
        pivots.append(Pivot(index, column, tuple(row), combination))
        log.debug("pivot %s at column %s", sharp_label(pair), sharp_label(columns[column]))
    extraction = BasisExtraction(data, generators, columns, tuple(pivots))
    log.debug("%s: rank %d", data.name, extraction.rank)
    return extraction


def express_in_basis(basis: BasisExtraction, x: Union[SmashElement, TensorElement]) -> tuple[Polynomial, ...]:
    """Coordinates of ``x`` over the selected generators, in selection order."""
    tensor = x.underlying if isinstance(x, SmashElement) else x
    row, scale, combination = _reduce(basis.pivots, basis.vector(tensor))
    if not all(value.is_zero for value in row):
        raise NotInSpan(f"{tensor} is not in the span of the selected generators")
    coordinates = []
    for pivot in basis.pivots:
        numerator = -combination.get(pivot.generator, ZERO)
        try:
            coordinates.append(numerator.exquo(scale))
        except NotExactlyDivisible as exc:
            raise InexactCoordinate(
                f"coordinate on {sharp_label(basis.generators[pivot.generator][0])} is not polynomial"
            ) from exc
    return tuple(coordinates)


@dataclass(frozen=True)
class ProductTable:
    basis: BasisExtraction
    entries: Mapping[tuple[int, int], tuple[Polynomial, ...]]

    @property
    def labels(self) -> tuple[str, ...]:
        return self.basis.selected_labels

    def __getitem__(self, key: tuple[str, str]) -> tuple[Polynomial, ...]:
        left, right = key
        return self.entries[self.labels.index(left), self.labels.index(right)]

    def rows(self) -> Iterable[tuple[str, str, tuple[Polynomial, ...]]]:
        for (i, j), coordinates in self.entries.items():
            yield self.labels[i], self.labels[j], coordinates

    def as_algebra(self) -> StructureAlgebra:
        """The crossed product as a structure-constant algebra over x♯y labels."""
        labels = self.labels
        products = {
            (labels[i], labels[j]): dict(zip(labels, coordinates))
            for (i, j), coordinates in self.entries.items()
        }
        unit = express_in_basis(self.basis, smash_unit(self.basis.action))
        return StructureAlgebra(f"{self.basis.action.name}-crossed", labels, products, dict(zip(labels, unit)))


def product_table(data: PartialActionData, basis: BasisExtraction) -> ProductTable:
    """Products of every ordered pair of selected generators, in ♯-coordinates."""
    selected = [basis.generators[pivot.generator][1] for pivot in basis.pivots]
    cells = [(i, j) for i in range(len(selected)) for j in range(len(selected))]

    def cell(key: tuple[int, int]) -> tuple[Polynomial, ...]:
        i, j = key
        return express_in_basis(basis, smash_mul(data, selected[i], selected[j]))

    values = parallel_map(cell, cells)
    log.debug("%s: %d product table cells", data.name, len(values))
    return ProductTable(basis, dict(zip(cells, values)))


def verify_crossed_product(table: ProductTable) -> VerificationSuite:
    """Associativity on every triple of basis generators and the unit 1♯1."""
    algebra = table.as_algebra()
    return VerificationSuite(
        algebra.name,
        (check_associative(algebra), check_unital(algebra)),
    )


def numeric_rank(data: PartialActionData, assignment: Mapping[str, int | Fraction]) -> int:
    """Rank of the generators after substituting numeric parameter values."""
    return extract_basis(specialize(data, assignment)).rank

"""Hopf algebra data over a structure algebra and its checks.

Coproduct, counit and antipode are given on the basis and extended
linearly. Iterated coproducts are memoized per basis label and depth; the
memo is guarded by a lock so worker threads can share it.
"""

from __future__ import annotations

import logging
import threading
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Literal, Union

from .algebra import (
    AlgebraElement,
    Label,
    StructureAlgebra,
    TensorElement,
    require_same,
    tensor,
)
from .report import ReportEntry, VerificationReport
from .symbolic import ONE, ZERO, Polynomial

log = logging.getLogger(__name__)

Nesting = Literal["left", "right"]
CoproductSpec = Union[TensorElement, Iterable[tuple[object, Label, Label]]]


@dataclass(frozen=True)
class SweedlerTerm:
    legs: tuple[Label, ...]
    coefficient: Polynomial


def _as_polynomial(value) -> Polynomial:
    return value if isinstance(value, Polynomial) else Polynomial.constant(value)


class HopfData:
    """Δ, ε and S on the basis of ``algebra``; omitted entries are zero."""

    def __init__(
        self,
        name: str,
        algebra: StructureAlgebra,
        delta: Mapping[Label, CoproductSpec],
        counit: Mapping[Label, object],
        antipode: Mapping[Label, AlgebraElement | Mapping[Label, object]],
    ):
        self.name = name
        self.algebra = algebra
        pair = (algebra, algebra)
        self.delta: dict[Label, TensorElement] = {}
        self.counit: dict[Label, Polynomial] = {}
        self.antipode: dict[Label, AlgebraElement] = {}
        for label in algebra.basis:
            value = delta.get(label)
            if value is None:
                self.delta[label] = TensorElement(pair, {})
            elif isinstance(value, TensorElement):
                self.delta[label] = value
            else:
                self.delta[label] = TensorElement.collect(
                    pair, (((left, right), _as_polynomial(c)) for c, left, right in value)
                )
            self.counit[label] = _as_polynomial(counit.get(label, 0))
            image = antipode.get(label)
            if image is None:
                self.antipode[label] = algebra.zero()
            elif isinstance(image, AlgebraElement):
                self.antipode[label] = image
            else:
                self.antipode[label] = algebra.element_from(image)
        for label in set(delta) | set(counit) | set(antipode):
            algebra.index(label)
        self._iterated: dict[tuple[Label, int, str], tuple[SweedlerTerm, ...]] = {}
        self._iterated_lock = threading.RLock()

    @property
    def basis(self) -> tuple[Label, ...]:
        return self.algebra.basis

    def _replace(self, **changes) -> HopfData:
        fields = {
            "name": self.name,
            "algebra": self.algebra,
            "delta": self.delta,
            "counit": self.counit,
            "antipode": self.antipode,
        }
        fields.update(changes)
        return HopfData(**fields)

    def with_delta(self, label: Label, value: CoproductSpec) -> HopfData:
        return self._replace(delta={**self.delta, label: value})

    def with_counit(self, label: Label, value) -> HopfData:
        return self._replace(counit={**self.counit, label: value})

    def with_antipode(self, label: Label, value) -> HopfData:
        return self._replace(antipode={**self.antipode, label: value})

    def specialize(self, assignment: Mapping[str, int | Fraction]) -> HopfData:
        algebra = self.algebra.specialize(assignment)
        pair = (algebra, algebra)
        return HopfData(
            self.name,
            algebra,
            {
                label: TensorElement(pair, {legs: c.specialize(assignment) for legs, c in value.items()})
                for label, value in self.delta.items()
            },
            {label: c.specialize(assignment) for label, c in self.counit.items()},
            {label: x.specialize(assignment, algebra) for label, x in self.antipode.items()},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HopfData):
            return NotImplemented
        return (
            self.name == other.name
            and self.algebra == other.algebra
            and self.delta == other.delta
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    def __hash__(self) -> int:
        return hash((self.name, self.algebra))

    def __repr__(self) -> str:
        return f"HopfData({self.name!r}, algebra={self.algebra.name!r})"


def coproduct_n(hopf: HopfData, label: Label, n: int, *, nesting: Nesting = "left") -> list[SweedlerTerm]:
    """Δ^(n-1)(b) as Sweedler terms ordered by the basis positions of their legs.

    Left nesting applies Δ to the first leg at each step, (Δ⊗id)∘Δ;
    right nesting to the last leg, (id⊗Δ)∘Δ. Coassociativity makes the two
    agree.
    """
    if n < 1:
        raise ValueError("coproduct_n needs n >= 1")
    hopf.algebra.index(label)
    key = (label, n, nesting)
    with hopf._iterated_lock:
        cached = hopf._iterated.get(key)
        if cached is None:
            cached = _expand(hopf, label, n, nesting)
            hopf._iterated[key] = cached
    return list(cached)


def _expand(hopf: HopfData, label: Label, n: int, nesting: Nesting) -> tuple[SweedlerTerm, ...]:
    if n == 1:
        return (SweedlerTerm((label,), ONE),)
    previous = coproduct_n(hopf, label, n - 1, nesting=nesting)
    factors = (hopf.algebra,) * n
    terms = []
    for term in previous:
        split = term.legs[0] if nesting == "left" else term.legs[-1]
        for (left, right), c in hopf.delta[split].items():
            if nesting == "left":
                legs = (left, right) + term.legs[1:]
            else:
                legs = term.legs[:-1] + (left, right)
            terms.append((legs, term.coefficient * c))
    collected = TensorElement.collect(factors, terms)
    expanded = tuple(SweedlerTerm(legs, c) for legs, c in collected.items())
    log.debug("%s: %d-fold coproduct of %s has %d terms", hopf.name, n, label, len(expanded))
    return expanded


def sweedler_tensor(hopf: HopfData, terms: Iterable[SweedlerTerm]) -> TensorElement:
    terms = list(terms)
    n = len(terms[0].legs) if terms else 1
    return TensorElement.collect((hopf.algebra,) * n, ((t.legs, t.coefficient) for t in terms))


def coproduct(hopf: HopfData, x: AlgebraElement) -> TensorElement:
    require_same(hopf.algebra, x.algebra)
    terms = []
    for label, coefficient in x.nonzero_terms():
        terms.extend((legs, coefficient * c) for legs, c in hopf.delta[label].items())
    return TensorElement.collect((hopf.algebra, hopf.algebra), terms)


def counit_of(hopf: HopfData, x: AlgebraElement) -> Polynomial:
    require_same(hopf.algebra, x.algebra)
    total = ZERO
    for label, coefficient in x.nonzero_terms():
        total = total + coefficient * hopf.counit[label]
    return total


def antipode_of(hopf: HopfData, x: AlgebraElement) -> AlgebraElement:
    require_same(hopf.algebra, x.algebra)
    total = hopf.algebra.zero()
    for label, coefficient in x.nonzero_terms():
        total = total + hopf.antipode[label].scale(coefficient)
    return total


def check_coalgebra(hopf: HopfData) -> VerificationReport:
    """Coassociativity and both counit laws, one entry per basis label and law."""
    H = hopf.algebra

    def entries(label: Label) -> list[ReportEntry]:
        b = H.element(label)
        left = sweedler_tensor(hopf, coproduct_n(hopf, label, 3, nesting="left"))
        right = sweedler_tensor(hopf, coproduct_n(hopf, label, 3, nesting="right"))
        left_counit = H.zero()
        right_counit = H.zero()
        for (b1, b2), c in hopf.delta[label].items():
            left_counit = left_counit + H.element(b2).scale(c * hopf.counit[b1])
            right_counit = right_counit + H.element(b1).scale(c * hopf.counit[b2])
        return [
            ReportEntry.compare((label,), left, right, law="coassociativity"),
            ReportEntry.compare((label,), left_counit, b, law="left counit"),
            ReportEntry.compare((label,), right_counit, b, law="right counit"),
        ]

    return VerificationReport.collect("coalgebra", "(Δ⊗id)Δ = (id⊗Δ)Δ, (ε⊗id)Δ = id = (id⊗ε)Δ", H.basis, entries)


def check_antipode(hopf: HopfData) -> VerificationReport:
    """S(b1)b2 = ε(b)1 = b1 S(b2) for every basis label."""
    H = hopf.algebra

    def entry(label: Label) -> ReportEntry:
        left = H.zero()
        right = H.zero()
        for (b1, b2), c in hopf.delta[label].items():
            left = left + (hopf.antipode[b1] * H.element(b2)).scale(c)
            right = right + (H.element(b1) * hopf.antipode[b2]).scale(c)
        return ReportEntry.compare((label,), left, H.unit.scale(hopf.counit[label]), right)

    return VerificationReport.collect("antipode", "S(b1)b2 = ε(b)1 = b1S(b2)", H.basis, entry)


def check_bialgebra_compat(hopf: HopfData) -> VerificationReport:
    """Δ and ε are unital algebra maps: checked on every ordered basis pair."""
    H = hopf.algebra

    def entries(pair: tuple[Label, Label]) -> list[ReportEntry]:
        left, right = pair
        product = H.element(left) * H.element(right)
        return [
            ReportEntry.compare(pair, coproduct(hopf, product), hopf.delta[left] * hopf.delta[right], law="coproduct"),
            ReportEntry.compare(pair, counit_of(hopf, product), hopf.counit[left] * hopf.counit[right], law="counit"),
        ]

    report = VerificationReport.collect(
        "bialgebra",
        "Δ(xy) = Δ(x)Δ(y), ε(xy) = ε(x)ε(y)",
        [(left, right) for left in H.basis for right in H.basis],
        entries,
    )
    unit = (
        ReportEntry.compare(("unit",), coproduct(hopf, H.unit), tensor(H.unit, H.unit), law="coproduct"),
        ReportEntry.compare(("unit",), counit_of(hopf, H.unit), ONE, law="counit"),
    )
    return replace(report, entries=report.entries + unit)

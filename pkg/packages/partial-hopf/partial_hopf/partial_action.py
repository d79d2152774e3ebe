"""Twisted partial actions of a Hopf algebra and the axioms they must satisfy.

A twisted partial action of H on A is a bilinear map ``h·a`` (the action
table) together with a bilinear map ``ω: H⊗H → A`` (the cocycle table),
both given on basis pairs. The six axioms, in Sweedler notation:

    e1   1_H·a = a
    e2   h·(ab) = (h1·a)(h2·b)
    e3   (h1·(l1·a)) ω(h2,l2) = ω(h1,l1) (h2l2·a)
    e4   ω(h,l) = ω(h1,l1) (h2l2·1_A)
    e5   ω(h,1_H) = ω(1_H,h) = h·1_A
    e6   (h1·ω(m1,t1)) ω(h2,m2t2) = ω(h1,m1) ω(h2m2,t)

e1-e4 make A♯H well defined; e5 and e6 are what the unit and associativity
of A♯H rest on.
"""

from __future__ import annotations

import enum
import itertools
import logging
from collections.abc import Mapping
from fractions import Fraction
from types import MappingProxyType
from typing import Union

from .algebra import AlgebraElement, Label, StructureAlgebra, require_same
from .hopf import HopfData, coproduct_n
from .report import ReportEntry, VerificationReport, VerificationSuite

log = logging.getLogger(__name__)

ElementLike = Union[Label, AlgebraElement]


class Profile(str, enum.Enum):
    CORE = "core"
    CROSSED = "crossed"


class PartialActionData:
    """Action and cocycle tables of H on A; omitted entries are zero."""

    def __init__(
        self,
        name: str,
        hopf: HopfData,
        target: StructureAlgebra,
        action: Mapping[tuple[Label, Label], AlgebraElement],
        cocycle: Mapping[tuple[Label, Label], AlgebraElement],
        parameters: tuple[str, ...] = (),
    ):
        self.name = name
        self.hopf = hopf
        self.target = target
        self.parameters = tuple(parameters)
        H, A = hopf.algebra, target
        zero = A.zero()
        for (h, a), value in action.items():
            H.index(h)
            A.index(a)
            require_same(A, value.algebra)
        for (h, l), value in cocycle.items():
            H.index(h)
            H.index(l)
            require_same(A, value.algebra)
        self.action = MappingProxyType({(h, a): action.get((h, a), zero) for h in H.basis for a in A.basis})
        self.cocycle = MappingProxyType({(h, l): cocycle.get((h, l), zero) for h in H.basis for l in H.basis})

    @property
    def source(self) -> StructureAlgebra:
        return self.hopf.algebra

    def source_element(self, h: ElementLike) -> AlgebraElement:
        if isinstance(h, AlgebraElement):
            require_same(self.source, h.algebra)
            return h
        return self.source.element(h)

    def target_element(self, a: ElementLike) -> AlgebraElement:
        if isinstance(a, AlgebraElement):
            require_same(self.target, a.algebra)
            return a
        return self.target.element(a)

    def with_action(self, h: Label, a: Label, value: AlgebraElement) -> PartialActionData:
        action = dict(self.action)
        action[h, a] = value
        return PartialActionData(self.name, self.hopf, self.target, action, self.cocycle, self.parameters)

    def with_cocycle(self, h: Label, l: Label, value: AlgebraElement) -> PartialActionData:
        cocycle = dict(self.cocycle)
        cocycle[h, l] = value
        return PartialActionData(self.name, self.hopf, self.target, self.action, cocycle, self.parameters)

    def __repr__(self) -> str:
        return f"PartialActionData({self.name!r}, {self.hopf.name} on {self.target.name})"


def act(data: PartialActionData, h: ElementLike, a: ElementLike) -> AlgebraElement:
    """h·a, bilinear in both arguments."""
    if isinstance(h, str) and isinstance(a, str):
        data.source.index(h)
        data.target.index(a)
        return data.action[h, a]
    h, a = data.source_element(h), data.target_element(a)
    total = data.target.zero()
    for h_label, h_coefficient in h.nonzero_terms():
        for a_label, a_coefficient in a.nonzero_terms():
            total = total + data.action[h_label, a_label].scale(h_coefficient * a_coefficient)
    return total


def cocycle(data: PartialActionData, h: ElementLike, l: ElementLike) -> AlgebraElement:
    """ω(h, l), bilinear in both arguments."""
    if isinstance(h, str) and isinstance(l, str):
        data.source.index(h)
        data.source.index(l)
        return data.cocycle[h, l]
    h, l = data.source_element(h), data.source_element(l)
    total = data.target.zero()
    for h_label, h_coefficient in h.nonzero_terms():
        for l_label, l_coefficient in l.nonzero_terms():
            total = total + data.cocycle[h_label, l_label].scale(h_coefficient * l_coefficient)
    return total


def _pairs(data: PartialActionData, h: Label, l: Label):
    """Sweedler legs of h and l with the product h2·l2 in H."""
    H = data.source
    for h_term, l_term in itertools.product(coproduct_n(data.hopf, h, 2), coproduct_n(data.hopf, l, 2)):
        (h1, h2), (l1, l2) = h_term.legs, l_term.legs
        yield h1, h2, l1, l2, h_term.coefficient * l_term.coefficient, H.element(h2) * H.element(l2)


def check_e1(data: PartialActionData) -> VerificationReport:
    unit = data.source.unit

    def entry(a: Label) -> ReportEntry:
        return ReportEntry.compare((a,), act(data, unit, a), data.target.element(a))

    return VerificationReport.collect("e1", "1_H·a = a", data.target.basis, entry)


def check_e2(data: PartialActionData) -> VerificationReport:
    A = data.target

    def entry(key: tuple[Label, Label, Label]) -> ReportEntry:
        h, a, b = key
        lhs = act(data, h, A.element(a) * A.element(b))
        rhs = A.zero()
        for term in coproduct_n(data.hopf, h, 2):
            h1, h2 = term.legs
            rhs = rhs + (act(data, h1, a) * act(data, h2, b)).scale(term.coefficient)
        return ReportEntry.compare(key, lhs, rhs)

    keys = itertools.product(data.source.basis, A.basis, A.basis)
    return VerificationReport.collect("e2", "h·(ab) = (h1·a)(h2·b)", keys, entry)


def check_e3(data: PartialActionData) -> VerificationReport:
    A = data.target

    def entry(key: tuple[Label, Label, Label]) -> ReportEntry:
        h, l, a = key
        lhs = A.zero()
        rhs = A.zero()
        for h1, h2, l1, l2, coefficient, h2l2 in _pairs(data, h, l):
            lhs = lhs + (act(data, h1, act(data, l1, a)) * data.cocycle[h2, l2]).scale(coefficient)
            rhs = rhs + (data.cocycle[h1, l1] * act(data, h2l2, a)).scale(coefficient)
        return ReportEntry.compare(key, lhs, rhs)

    keys = itertools.product(data.source.basis, data.source.basis, A.basis)
    return VerificationReport.collect("e3", "(h1·(l1·a))ω(h2,l2) = ω(h1,l1)(h2l2·a)", keys, entry)


def check_e4(data: PartialActionData) -> VerificationReport:
    A = data.target

    def entry(key: tuple[Label, Label]) -> ReportEntry:
        h, l = key
        rhs = A.zero()
        for h1, _, l1, _, coefficient, h2l2 in _pairs(data, h, l):
            rhs = rhs + (data.cocycle[h1, l1] * act(data, h2l2, A.unit)).scale(coefficient)
        return ReportEntry.compare(key, data.cocycle[h, l], rhs)

    keys = itertools.product(data.source.basis, data.source.basis)
    return VerificationReport.collect("e4", "ω(h,l) = ω(h1,l1)(h2l2·1_A)", keys, entry)


def check_e5(data: PartialActionData) -> VerificationReport:
    unit_h = data.source.unit

    def entry(h: Label) -> ReportEntry:
        return ReportEntry.compare(
            (h,),
            cocycle(data, h, unit_h),
            cocycle(data, unit_h, h),
            act(data, h, data.target.unit),
        )

    return VerificationReport.collect("e5", "ω(h,1_H) = ω(1_H,h) = h·1_A", data.source.basis, entry)


def check_e6(data: PartialActionData) -> VerificationReport:
    A, H = data.target, data.source

    def entry(key: tuple[Label, Label, Label]) -> ReportEntry:
        h, m, t = key
        lhs = A.zero()
        for h_term in coproduct_n(data.hopf, h, 2):
            h1, h2 = h_term.legs
            for m1, m2, t1, t2, coefficient, m2t2 in _pairs(data, m, t):
                term = act(data, h1, data.cocycle[m1, t1]) * cocycle(data, h2, m2t2)
                lhs = lhs + term.scale(h_term.coefficient * coefficient)
        rhs = A.zero()
        for h1, h2, m1, m2, coefficient, h2m2 in _pairs(data, h, m):
            rhs = rhs + (data.cocycle[h1, m1] * cocycle(data, h2m2, H.element(t))).scale(coefficient)
        return ReportEntry.compare(key, lhs, rhs)

    keys = itertools.product(H.basis, H.basis, H.basis)
    return VerificationReport.collect("e6", "(h1·ω(m1,t1))ω(h2,m2t2) = ω(h1,m1)ω(h2m2,t)", keys, entry)


CHECKS = (check_e1, check_e2, check_e3, check_e4, check_e5, check_e6)


def verify_all(data: PartialActionData, profile: Profile | str = Profile.CORE) -> VerificationSuite:
    """Run all six axioms.

    Under the core profile e5 and e6 are computed but informational; under
    the crossed profile every axiom is required.
    """
    profile = Profile(profile)
    reports = []
    for check in CHECKS:
        report = check(data)
        if profile is Profile.CORE and report.check in ("e5", "e6"):
            report = report.as_informational()
        reports.append(report)
    suite = VerificationSuite(data.name, tuple(reports))
    log.debug("%s (%s profile): %s", data.name, profile.value, "pass" if suite.passed else "fail")
    return suite


def specialize(data: PartialActionData, assignment: Mapping[str, int | Fraction]) -> PartialActionData:
    """Substitute parameter values in every table; unassigned ones remain."""
    hopf = data.hopf.specialize(assignment)
    target = data.target.specialize(assignment)
    return PartialActionData(
        data.name,
        hopf,
        target,
        {key: value.specialize(assignment, target) for key, value in data.action.items()},
        {key: value.specialize(assignment, target) for key, value in data.cocycle.items()},
        tuple(name for name in data.parameters if name not in assignment),
    )

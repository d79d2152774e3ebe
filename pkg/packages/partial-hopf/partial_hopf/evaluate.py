"""Evaluation of ``eval`` expressions against an algebra, Hopf algebra or action.

Bare identifiers are parameters when declared, otherwise basis labels. A
label is read in A when A has it and in H otherwise, unless the position
fixes the algebra: ``act(h, a)``, ``omega(h, l)``, ``sharp(a, h)``,
``delta(h)``, ``counit(h)`` and ``antipode(h)``, or the other operand of a
sum or product. Scalars stand for scalar multiples of the unit where an
element is expected.
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .algebra import AlgebraElement, StructureAlgebra, TensorElement, same_algebra
from .crossed_product import (
    BasisExtraction,
    SmashElement,
    express_in_basis,
    extract_basis,
    smash_of_elements,
    smash_unit,
)
from .errors import ExpressionError, PartialHopfError, SpanError
from .expressions import Atom, Binary, Call, Name, Node, Number, Unary, parse_expression
from .hopf import HopfData, antipode_of, coproduct, counit_of
from .partial_action import PartialActionData, act, cocycle, specialize
from .symbolic import ONE, Polynomial

log = logging.getLogger(__name__)

Target = Union[StructureAlgebra, HopfData, PartialActionData]


@dataclass(frozen=True)
class LabelRef:
    """A basis label whose algebra is not fixed yet."""

    label: str
    loc: int


Value = Union[Polynomial, AlgebraElement, TensorElement, SmashElement, LabelRef]


class ExpressionEvaluator:
    def __init__(
        self,
        target: Target,
        parameters: tuple[str, ...] = (),
        assignment: Optional[Mapping[str, int | Fraction]] = None,
    ):
        self.assignment = dict(assignment or {})
        self.parameters = tuple(parameters)
        for name in self.assignment:
            if name not in self.parameters:
                raise ExpressionError(f"cannot assign undeclared parameter '{name}'")
        if self.assignment:
            target = _specialize(target, self.assignment)
        self.target = target
        self.action: Optional[PartialActionData] = target if isinstance(target, PartialActionData) else None
        self.hopf: Optional[HopfData] = None
        self.A: Optional[StructureAlgebra] = None
        self.H: Optional[StructureAlgebra] = None
        if isinstance(target, PartialActionData):
            self.hopf, self.A, self.H = target.hopf, target.target, target.source
        elif isinstance(target, HopfData):
            self.hopf, self.H = target, target.algebra
        else:
            self.A = target

    # -- coercions ---------------------------------------------------------

    def _algebras(self) -> list[StructureAlgebra]:
        return [algebra for algebra in (self.A, self.H) if algebra is not None]

    def element_in(self, value: Value, algebra: StructureAlgebra, loc: int) -> AlgebraElement:
        if isinstance(value, LabelRef):
            if value.label not in algebra:
                raise ExpressionError(f"'{value.label}' is not a basis label of {algebra.name}", value.loc)
            return algebra.element(value.label)
        if isinstance(value, Polynomial):
            return algebra.unit.scale(value)
        if isinstance(value, AlgebraElement) and same_algebra(value.algebra, algebra):
            return value
        raise ExpressionError(f"expected an element of {algebra.name}", loc)

    def resolve(self, value: Value) -> Value:
        """Fix the algebra of a bare label, preferring A."""
        if not isinstance(value, LabelRef):
            return value
        for algebra in self._algebras():
            if value.label in algebra:
                return algebra.element(value.label)
        raise ExpressionError(f"unknown basis label '{value.label}'", value.loc)

    def _require(self, attribute: str, function: str, loc: int):
        found = getattr(self, attribute)
        if found is None:
            raise ExpressionError(f"{function}() needs {'an action' if attribute == 'action' else 'a Hopf algebra'}", loc)
        return found

    @functools.cached_property
    def basis(self) -> BasisExtraction:
        return extract_basis(self.action)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, text: str) -> Value:
        return self.resolve(self.visit(parse_expression(text)))

    def visit(self, node: Node) -> Value:
        if isinstance(node, Number):
            return Polynomial.constant(node.value)
        if isinstance(node, Name):
            return self.name(node)
        if isinstance(node, Atom):
            return self.atom(node)
        if isinstance(node, Call):
            return self.call(node)
        if isinstance(node, Unary):
            operand = self.resolve(self.visit(node.operand))
            return operand if node.op == "+" else -operand
        return self.binary(node)

    def name(self, node: Name) -> Value:
        if node.name in self.parameters:
            if node.name in self.assignment:
                return Polynomial.constant(self.assignment[node.name])
            return Polynomial.parameter(node.name)
        if any(node.name in algebra for algebra in self._algebras()):
            return LabelRef(node.name, node.loc)
        raise ExpressionError(f"'{node.name}' is neither a declared parameter nor a basis label", node.loc)

    def atom(self, node: Atom) -> Value:
        if len(node.labels) == 1:
            reference = LabelRef(node.labels[0], node.loc)
            self.resolve(reference)
            return reference
        if len(node.labels) == 2:
            left, right = node.labels
            for pair in ((self.A, self.H), (self.H, self.H), (self.A, self.A)):
                if None not in pair and left in pair[0] and right in pair[1]:
                    return TensorElement(pair, {node.labels: ONE})
        raise ExpressionError(f"no tensor factors for [{', '.join(node.labels)}]", node.loc)

    def call(self, node: Call) -> Value:
        arity = {"act": 2, "omega": 2, "sharp": 2, "delta": 1, "counit": 1, "antipode": 1}
        if node.function not in arity:
            raise ExpressionError(f"unknown function '{node.function}'", node.loc)
        if len(node.args) != arity[node.function]:
            raise ExpressionError(f"{node.function}() takes {arity[node.function]} argument(s)", node.loc)
        args = [self.visit(arg) for arg in node.args]
        if node.function in ("act", "omega", "sharp"):
            data: PartialActionData = self._require("action", node.function, node.loc)
            A, H = data.target, data.source
            if node.function == "act":
                return act(data, self.element_in(args[0], H, node.loc), self.element_in(args[1], A, node.loc))
            if node.function == "omega":
                return cocycle(data, self.element_in(args[0], H, node.loc), self.element_in(args[1], H, node.loc))
            return smash_of_elements(data, self.element_in(args[0], A, node.loc), self.element_in(args[1], H, node.loc))
        hopf: HopfData = self._require("hopf", node.function, node.loc)
        h = self.element_in(args[0], hopf.algebra, node.loc)
        if node.function == "delta":
            return coproduct(hopf, h)
        if node.function == "counit":
            return counit_of(hopf, h)
        return antipode_of(hopf, h)

    def _coerce_pair(self, left: Value, right: Value, loc: int) -> tuple[Value, Value]:
        if isinstance(left, LabelRef) and isinstance(right, AlgebraElement):
            left = self.element_in(left, right.algebra, loc)
        if isinstance(right, LabelRef) and isinstance(left, AlgebraElement):
            right = self.element_in(right, left.algebra, loc)
        return self.resolve(left), self.resolve(right)

    def _lift(self, scalar: Polynomial, other: Value, loc: int) -> Value:
        if isinstance(other, AlgebraElement):
            return other.algebra.unit.scale(scalar)
        if isinstance(other, SmashElement):
            return smash_unit(other.action).scale(scalar)
        raise ExpressionError("cannot add a scalar to a tensor", loc)

    def binary(self, node: Binary) -> Value:
        left, right = self._coerce_pair(self.visit(node.left), self.visit(node.right), node.loc)
        if node.op in "+-":
            if isinstance(left, Polynomial) and not isinstance(right, Polynomial):
                left = self._lift(left, right, node.loc)
            elif isinstance(right, Polynomial) and not isinstance(left, Polynomial):
                right = self._lift(right, left, node.loc)
            try:
                return left + right if node.op == "+" else left - right
            except (TypeError, PartialHopfError) as exc:
                raise ExpressionError(f"cannot combine operands: {exc}", node.loc) from None
        if node.op == "*":
            if isinstance(left, Polynomial) and isinstance(right, Polynomial):
                return left * right
            if isinstance(left, Polynomial):
                return right.scale(left)
            if isinstance(right, Polynomial):
                return left.scale(right)
            if type(left) is not type(right):
                raise ExpressionError("operands of different kinds", node.loc)
            try:
                return left * right
            except (TypeError, PartialHopfError) as exc:
                raise ExpressionError(f"cannot multiply: {exc}", node.loc) from None
        if node.op == "/":
            if not isinstance(right, Polynomial) or not right.is_constant or right.is_zero:
                raise ExpressionError("division is only by nonzero constants", node.loc)
            inverse = Polynomial.constant(1 / right.constant_value)
            return left * inverse if isinstance(left, Polynomial) else left.scale(inverse)
        return self.power(left, right, node)

    def power(self, base: Value, exponent: Value, node: Binary) -> Value:
        if not isinstance(exponent, Polynomial) or not exponent.is_constant:
            raise ExpressionError("exponents must be integer constants", node.loc)
        value = exponent.constant_value
        if value.denominator != 1 or value < 0:
            raise ExpressionError("exponents must be non-negative integers", node.loc)
        if isinstance(base, Polynomial):
            return base ** int(value)
        if isinstance(base, AlgebraElement):
            result = base.algebra.unit
        elif isinstance(base, SmashElement):
            result = smash_unit(base.action)
        else:
            raise ExpressionError("tensors cannot be raised to a power", node.loc)
        for _ in range(int(value)):
            result = result * base
        return result

    # -- output ------------------------------------------------------------

    def format(self, value: Value) -> str:
        value = self.resolve(value)
        if isinstance(value, SmashElement):
            try:
                return self.basis.coordinates_text(express_in_basis(self.basis, value))
            except SpanError as exc:
                log.debug("printing as a tensor: %s", exc)
        return str(value)


def _specialize(target: Target, assignment: Mapping[str, int | Fraction]) -> Target:
    if isinstance(target, PartialActionData):
        return specialize(target, assignment)
    return target.specialize(assignment)


def evaluate(
    target: Target,
    text: str,
    *,
    parameters: tuple[str, ...] = (),
    assignment: Optional[Mapping[str, int | Fraction]] = None,
) -> str:
    """Evaluate ``text`` and return the printed result."""
    evaluator = ExpressionEvaluator(target, parameters, assignment)
    return evaluator.format(evaluator.evaluate(text))

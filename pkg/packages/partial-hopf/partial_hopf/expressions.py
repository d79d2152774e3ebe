"""Expression grammar shared by definition files and ``eval``.

Grammar (pyparsing, loosest binding last)::

    operand    := call | atom | integer | name | "(" expression ")"
    call       := name "(" [expression ("," expression)*] ")"
    atom       := "[" label ("," label)* "]"
    power      := operand ("^" power)?
    signed     := ("+" | "-")* power
    product    := signed (("*" | "/") signed)*
    expression := product (("+" | "-") product)*

Names are parameters or, in ``eval``, bare basis labels. Atoms are basis
labels written explicitly; ``[g, nu]`` is the tensor leg pair g⊗nu. The
parser only builds a syntax tree; meaning is given by the evaluators below
and in :mod:`partial_hopf.evaluate`.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import pyparsing as pp

from .errors import ExpressionError, ExpressionSyntaxError
from .symbolic import ONE, Polynomial

pp.ParserElement.enable_packrat()


@dataclass(frozen=True)
class Number:
    value: Fraction
    loc: int


@dataclass(frozen=True)
class Name:
    name: str
    loc: int


@dataclass(frozen=True)
class Atom:
    labels: tuple[str, ...]
    loc: int


@dataclass(frozen=True)
class Call:
    function: str
    args: tuple[Node, ...]
    loc: int


@dataclass(frozen=True)
class Unary:
    op: str
    operand: Node
    loc: int


@dataclass(frozen=True)
class Binary:
    op: str
    left: Node
    right: Node
    loc: int


Node = Union[Number, Name, Atom, Call, Unary, Binary]


def _fold_left(s, loc, tokens):
    items = tokens[0]
    node = items[0]
    for index in range(1, len(items), 2):
        node = Binary(items[index], node, items[index + 1], loc)
    return node


def _fold_right(s, loc, tokens):
    items = tokens[0]
    node = items[-1]
    for index in range(len(items) - 2, 0, -2):
        node = Binary(items[index], items[index - 1], node, loc)
    return node


def _signed(s, loc, tokens):
    op, operand = tokens[0][0], tokens[0][1]
    return Unary(op, operand, loc)


def _build_grammar() -> pp.ParserElement:
    integer = pp.Regex(r"\d+").set_parse_action(lambda s, loc, t: Number(Fraction(int(t[0])), loc))
    name = pp.Regex(r"[A-Za-z_][A-Za-z0-9_]*")
    label = pp.Regex(r"[^\[\],\s]+")

    expression = pp.Forward()
    atom = (pp.Suppress("[") + pp.DelimitedList(label) + pp.Suppress("]")).set_parse_action(
        lambda s, loc, t: Atom(tuple(t), loc)
    )
    call = (
        name + pp.Suppress("(") + pp.Group(pp.Optional(pp.DelimitedList(expression))) + pp.Suppress(")")
    ).set_parse_action(lambda s, loc, t: Call(t[0], tuple(t[1]), loc))
    variable = name.copy().set_parse_action(lambda s, loc, t: Name(t[0], loc))
    operand = call | atom | integer | variable

    expression <<= pp.infix_notation(
        operand,
        [
            (pp.Literal("^"), 2, pp.OpAssoc.RIGHT, _fold_right),
            (pp.one_of("+ -"), 1, pp.OpAssoc.RIGHT, _signed),
            (pp.one_of("* /"), 2, pp.OpAssoc.LEFT, _fold_left),
            (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT, _fold_left),
        ],
    )
    return expression


_GRAMMAR = _build_grammar()


def parse_expression(text: str) -> Node:
    try:
        return _GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise ExpressionSyntaxError(f"cannot parse expression: {exc.msg}", exc.loc) from None


Legs = tuple[str, ...]
Combination = dict[Legs, Polynomial]

NameHook = Callable[[str, int], Polynomial]
AtomHook = Callable[[Legs, int], None]


def _is_scalar(value: Combination) -> bool:
    return all(legs == () for legs in value)


def _scalar_of(value: Combination) -> Polynomial:
    return value.get((), Polynomial.zero())


def _scale(value: Combination, factor: Polynomial) -> Combination:
    return {legs: coefficient * factor for legs, coefficient in value.items()}


def _merge(left: Combination, right: Combination, sign: int) -> Combination:
    merged = dict(left)
    for legs, coefficient in right.items():
        term = coefficient if sign > 0 else -coefficient
        merged[legs] = merged[legs] + term if legs in merged else term
    return merged


def _constant_exponent(node: Node, value: Combination) -> int:
    exponent = _scalar_of(value)
    if not _is_scalar(value) or not exponent.is_constant:
        raise ExpressionError("exponents must be integer constants", node.loc)
    number = exponent.constant_value
    if number.denominator != 1 or number < 0:
        raise ExpressionError("exponents must be non-negative integers", node.loc)
    return int(number)


def linear_combination(
    node: Node,
    *,
    name: NameHook,
    atom: Optional[AtomHook] = None,
) -> Combination:
    """Evaluate ``node`` as a sum of coefficient times atom.

    ``name`` resolves identifiers to scalars and ``atom`` validates bracketed
    labels; atoms are rejected when it is ``None``. The empty leg tuple holds
    the scalar part. Zero coefficients are dropped.
    """

    def visit(node: Node) -> Combination:
        if isinstance(node, Number):
            return {(): Polynomial.constant(node.value)}
        if isinstance(node, Name):
            return {(): name(node.name, node.loc)}
        if isinstance(node, Atom):
            if atom is None:
                raise ExpressionError("basis labels are not allowed here", node.loc)
            atom(node.labels, node.loc)
            return {node.labels: ONE}
        if isinstance(node, Call):
            raise ExpressionError(f"'{node.function}(...)' is not allowed here", node.loc)
        if isinstance(node, Unary):
            operand = visit(node.operand)
            return operand if node.op == "+" else _scale(operand, -ONE)
        left, right = visit(node.left), visit(node.right)
        if node.op in "+-":
            return _merge(left, right, 1 if node.op == "+" else -1)
        if node.op == "*":
            if _is_scalar(left):
                return _scale(right, _scalar_of(left))
            if _is_scalar(right):
                return _scale(left, _scalar_of(right))
            raise ExpressionError("cannot multiply two basis elements here", node.loc)
        if node.op == "/":
            divisor = _scalar_of(right)
            if not _is_scalar(right) or not divisor.is_constant or divisor.is_zero:
                raise ExpressionError("division is only by nonzero constants", node.loc)
            return _scale(left, Polynomial.constant(1 / divisor.constant_value))
        if not _is_scalar(left):
            raise ExpressionError("only scalars can be raised to a power", node.loc)
        return {(): _scalar_of(left) ** _constant_exponent(node.right, right)}

    result = visit(node)
    return {legs: coefficient for legs, coefficient in result.items() if not coefficient.is_zero}


def parse_polynomial(text: str, parameters: Optional[frozenset[str] | set[str]] = None) -> Polynomial:
    """Parse a polynomial in canonical (or any equivalent) text form."""

    def resolve(identifier: str, position: int) -> Polynomial:
        if parameters is not None and identifier not in parameters:
            raise ExpressionError(f"undeclared parameter '{identifier}'", position)
        return Polynomial.parameter(identifier)

    value = linear_combination(parse_expression(text), name=resolve)
    return _scalar_of(value)

"""Definition files for algebras, Hopf algebras and partial actions.

A definition file is line oriented::

    # full-line comment
    name = action_hss
    provenance = "free text"
    parameters = k1, k2, l1
    include hss

    [algebra hss]
    basis = 1, e1, e2, e3
    unit = [1]
    e1 * e2 = [e3]

    [hopf h4]
    algebra = h4
    delta(nu) = [g, nu] + [nu, 1]
    counit(nu) = 0
    antipode(nu) = -[gnu]

    [action action_hss]
    hopf = h4
    target = hss
    act(nu, e1) = k2*[1] + k1*[e1]
    omega(nu, nu) = (k1^2 + k2^2)*[1]
        + 2*k1*k2*[e1]

Indented lines continue the previous entry. Omitted table entries are zero.
``include <id>`` pulls in the blocks of ``<id>.def``; ``extends = <id>`` on
an action block starts from another action's tables. Block names share one
namespace across kinds and included files.
"""

from __future__ import annotations

import logging
import re
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .algebra import AlgebraElement, StructureAlgebra, TensorElement
from .errors import (
    DefinitionError,
    DefinitionSyntaxError,
    DuplicateBlock,
    ExpressionError,
    UndeclaredLabel,
    UndeclaredParameter,
    UnknownBlock,
)
from .expressions import Combination, linear_combination, parse_expression
from .hopf import HopfData
from .partial_action import PartialActionData
from .symbolic import ZERO, PARAMETER_PATTERN, Polynomial, format_linear_combination

log = logging.getLogger(__name__)

Coordinates = dict[str, Polynomial]

_HEADER = re.compile(r"\[\s*(\w+)\s+([^\]\s]+)\s*\]\Z")
_INCLUDE = re.compile(r"include\s+(\S+)\Z")
_PRODUCT = re.compile(r"([^\s*]+)\s*\*\s*([^\s*]+)\Z")
_CALL = re.compile(r"(act|omega|delta|counit|antipode)\s*\(\s*([^,()\s]+)\s*(?:,\s*([^,()\s]+)\s*)?\)\Z")
_LABEL = re.compile(r"[^\[\],\s#]+\Z")


@dataclass
class AlgebraBlock:
    name: str
    basis: tuple[str, ...] = ()
    unit: Coordinates = field(default_factory=dict)
    products: dict[tuple[str, str], Coordinates] = field(default_factory=dict)
    line: int = field(default=0, compare=False, repr=False)

    kind = "algebra"


@dataclass
class HopfBlock:
    name: str
    algebra: str = ""
    delta: dict[str, dict[tuple[str, str], Polynomial]] = field(default_factory=dict)
    counit: dict[str, Polynomial] = field(default_factory=dict)
    antipode: dict[str, Coordinates] = field(default_factory=dict)
    line: int = field(default=0, compare=False, repr=False)

    kind = "hopf"


@dataclass
class ActionBlock:
    name: str
    hopf: str = ""
    target: str = ""
    extends: Optional[str] = None
    action: dict[tuple[str, str], Coordinates] = field(default_factory=dict)
    cocycle: dict[tuple[str, str], Coordinates] = field(default_factory=dict)
    line: int = field(default=0, compare=False, repr=False)

    kind = "action"


Block = Union[AlgebraBlock, HopfBlock, ActionBlock]
Resolver = Callable[[str], "DefinitionDocument"]


@dataclass
class DefinitionDocument:
    name: Optional[str] = None
    provenance: Optional[str] = None
    parameters: tuple[str, ...] = ()
    includes: tuple[str, ...] = ()
    blocks: dict[str, Block] = field(default_factory=dict)
    source: str = field(default="<string>", compare=False, repr=False)
    included: dict[str, DefinitionDocument] = field(default_factory=dict, compare=False, repr=False)

    @property
    def algebras(self) -> dict[str, AlgebraBlock]:
        return {name: block for name, block in self.blocks.items() if isinstance(block, AlgebraBlock)}

    @property
    def hopfs(self) -> dict[str, HopfBlock]:
        return {name: block for name, block in self.blocks.items() if isinstance(block, HopfBlock)}

    @property
    def actions(self) -> dict[str, ActionBlock]:
        return {name: block for name, block in self.blocks.items() if isinstance(block, ActionBlock)}

    def scope(self) -> dict[str, tuple[Block, DefinitionDocument]]:
        """Every block visible from this document, with its defining document."""
        visible: dict[str, tuple[Block, DefinitionDocument]] = {}
        for document in self.included.values():
            for name, entry in document.scope().items():
                visible.setdefault(name, entry)
        for name, block in self.blocks.items():
            visible[name] = (block, self)
        return visible


class FileResolver:
    """Resolve ``include <id>`` to ``<id>.def`` in the given directories."""

    def __init__(self, search_path: Iterable[Path]):
        self.search_path = tuple(Path(p) for p in search_path)
        self._documents: dict[Path, DefinitionDocument] = {}
        self._loading: set[Path] = set()

    def locate(self, name: str) -> Path:
        for directory in self.search_path:
            candidate = directory / f"{name}.def"
            if candidate.is_file():
                return candidate.resolve()
        raise LookupError(f"no definition file '{name}.def' in {', '.join(map(str, self.search_path))}")

    def load(self, path: Path) -> DefinitionDocument:
        path = Path(path).resolve()
        if path in self._documents:
            return self._documents[path]
        if path in self._loading:
            raise DefinitionError("include cycle", source=str(path), line=1, column=1)
        self._loading.add(path)
        try:
            log.debug("loading %s", path)
            resolver = FileResolver((path.parent, *self.search_path))
            resolver._documents = self._documents
            resolver._loading = self._loading
            document = parse_definition(path.read_text(encoding="utf-8"), source=str(path), resolver=resolver)
        finally:
            self._loading.discard(path)
        self._documents[path] = document
        return document

    def __call__(self, name: str) -> DefinitionDocument:
        return self.load(self.locate(name))


@dataclass
class _Line:
    number: int
    column: int
    text: str


def _logical_lines(text: str) -> Iterator[_Line]:
    pending: Optional[_Line] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if raw[0] in " \t" and pending is not None:
            pending.text += " " + stripped
            continue
        if pending is not None:
            yield pending
        pending = _Line(number, len(raw) - len(raw.lstrip()) + 1, stripped)
    if pending is not None:
        yield pending


class _Parser:
    def __init__(self, text: str, source: str, resolver: Optional[Resolver]):
        self.text = text
        self.source = source
        self.resolver = resolver
        self.document = DefinitionDocument(source=source)
        self.block: Optional[Block] = None

    # -- helpers -----------------------------------------------------------

    def error(self, kind: type[DefinitionError], message: str, line: _Line, column: Optional[int] = None):
        return kind(message, source=self.source, line=line.number, column=column or line.column)

    def scope(self) -> dict[str, tuple[Block, DefinitionDocument]]:
        return self.document.scope()

    def lookup(self, name: str, kind: type, line: _Line, column: int) -> Block:
        entry = self.scope().get(name)
        if entry is None or not isinstance(entry[0], kind):
            raise self.error(UnknownBlock, f"no {kind.kind} block named '{name}'", line, column)
        return entry[0]

    def basis_of(self, name: str) -> tuple[str, ...]:
        block = self.scope()[name][0]
        return block.basis

    def labels(self, text: str, line: _Line, column: int) -> tuple[str, ...]:
        labels = tuple(part.strip() for part in text.split(","))
        for label in labels:
            if not _LABEL.match(label):
                raise self.error(DefinitionSyntaxError, f"invalid label '{label}'", line, column)
        if len(set(labels)) != len(labels):
            raise self.error(DefinitionSyntaxError, "labels must be distinct", line, column)
        return labels

    def combination(
        self,
        text: str,
        line: _Line,
        column: int,
        bases: Sequence[tuple[str, ...]],
        scalar: bool = False,
    ) -> Combination:
        try:
            node = parse_expression(text)
        except ExpressionError as exc:
            raise self.error(DefinitionSyntaxError, exc.message, line, column + (exc.position or 0)) from None

        def name(identifier: str, position: int) -> Polynomial:
            if identifier not in self.document.parameters:
                raise self.error(
                    UndeclaredParameter, f"undeclared parameter '{identifier}'", line, column + position
                )
            return Polynomial.parameter(identifier)

        def atom(labels: tuple[str, ...], position: int) -> None:
            if len(labels) != len(bases):
                raise self.error(
                    DefinitionSyntaxError,
                    f"expected {len(bases)} label(s) in brackets, got {len(labels)}",
                    line,
                    column + position,
                )
            for label, basis in zip(labels, bases):
                if label not in basis:
                    raise self.error(UndeclaredLabel, f"undeclared basis label '{label}'", line, column + position)

        try:
            value = linear_combination(node, name=name, atom=None if scalar else atom)
        except ExpressionError as exc:
            raise self.error(DefinitionSyntaxError, exc.message, line, column + (exc.position or 0)) from None
        if not scalar and () in value:
            raise self.error(DefinitionSyntaxError, "expected a combination of bracketed basis labels", line, column)
        return {legs: coefficient.over(self.document.parameters) for legs, coefficient in value.items()}

    def element(self, text: str, line: _Line, column: int, basis: tuple[str, ...]) -> Coordinates:
        return {legs[0]: c for legs, c in self.combination(text, line, column, (basis,)).items()}

    def require_label(self, label: str, basis: tuple[str, ...], line: _Line) -> None:
        if label not in basis:
            raise self.error(UndeclaredLabel, f"undeclared basis label '{label}'", line)

    # -- statements --------------------------------------------------------

    def parse(self) -> DefinitionDocument:
        for line in _logical_lines(self.text):
            header = _HEADER.match(line.text)
            if header:
                self.finish_block()
                self.start_block(header.group(1), header.group(2), line)
                continue
            include = _INCLUDE.match(line.text)
            if include:
                self.include(include.group(1), line)
                continue
            key, equals, value = line.text.partition("=")
            if not equals:
                raise self.error(DefinitionSyntaxError, "expected 'key = value'", line)
            value_column = line.column + len(key) + 1 + (len(value) - len(value.lstrip()))
            key, value = key.strip(), value.strip()
            if self.block is None:
                self.header_entry(key, value, line, value_column)
            elif isinstance(self.block, AlgebraBlock):
                self.algebra_entry(self.block, key, value, line, value_column)
            elif isinstance(self.block, HopfBlock):
                self.hopf_entry(self.block, key, value, line, value_column)
            else:
                self.action_entry(self.block, key, value, line, value_column)
        self.finish_block()
        return self.document

    def include(self, name: str, line: _Line) -> None:
        if self.block is not None or self.document.blocks:
            raise self.error(DefinitionSyntaxError, "include must precede every block", line)
        if self.resolver is None:
            raise self.error(UnknownBlock, f"cannot resolve include '{name}' here", line)
        try:
            included = self.resolver(name)
        except LookupError as exc:
            raise self.error(UnknownBlock, str(exc), line) from None
        self.document.includes += (name,)
        self.document.included[name] = included
        for block_name, (block, _) in included.scope().items():
            existing = self.scope().get(block_name)
            if existing is not None and existing[0] is not block:
                raise self.error(DuplicateBlock, f"block '{block_name}' is defined twice", line)

    def header_entry(self, key: str, value: str, line: _Line, column: int) -> None:
        if key == "name":
            self.document.name = value
        elif key == "provenance":
            if value.startswith('"'):
                if len(value) < 2 or not value.endswith('"'):
                    raise self.error(DefinitionSyntaxError, "unterminated string", line, column)
                value = value[1:-1]
            self.document.provenance = value
        elif key == "parameters":
            names = tuple(part.strip() for part in value.split(",") if part.strip())
            for name in names:
                if not PARAMETER_PATTERN.match(name):
                    raise self.error(DefinitionSyntaxError, f"invalid parameter name '{name}'", line, column)
            self.document.parameters += tuple(name for name in names if name not in self.document.parameters)
        else:
            raise self.error(DefinitionSyntaxError, f"unknown header key '{key}'", line)

    def start_block(self, kind: str, name: str, line: _Line) -> None:
        classes = {"algebra": AlgebraBlock, "hopf": HopfBlock, "action": ActionBlock}
        if kind not in classes:
            raise self.error(DefinitionSyntaxError, f"unknown block kind '{kind}'", line)
        if name in self.scope():
            raise self.error(DuplicateBlock, f"block '{name}' is defined twice", line)
        self.block = classes[kind](name, line=line.number)

    def finish_block(self) -> None:
        block = self.block
        if block is None:
            return
        line = _Line(block.line, 1, "")
        if isinstance(block, AlgebraBlock):
            if not block.basis:
                raise self.error(DefinitionSyntaxError, f"algebra '{block.name}' declares no basis", line)
            if not block.unit:
                raise self.error(DefinitionSyntaxError, f"algebra '{block.name}' declares no unit", line)
        elif isinstance(block, HopfBlock):
            if not block.algebra:
                raise self.error(DefinitionSyntaxError, f"hopf '{block.name}' names no algebra", line)
        elif not block.hopf or not block.target:
            raise self.error(DefinitionSyntaxError, f"action '{block.name}' needs hopf and target", line)
        self.document.blocks[block.name] = block
        self.block = None

    def algebra_entry(self, block: AlgebraBlock, key: str, value: str, line: _Line, column: int) -> None:
        if key == "basis":
            if block.basis:
                raise self.error(DefinitionSyntaxError, "basis declared twice", line)
            block.basis = self.labels(value, line, column)
            return
        if not block.basis:
            raise self.error(DefinitionSyntaxError, "basis must be declared first", line)
        if key == "unit":
            block.unit = self.element(value, line, column, block.basis)
            return
        product = _PRODUCT.match(key)
        if not product:
            raise self.error(DefinitionSyntaxError, f"unknown algebra entry '{key}'", line)
        left, right = product.groups()
        self.require_label(left, block.basis, line)
        self.require_label(right, block.basis, line)
        if (left, right) in block.products:
            raise self.error(DefinitionSyntaxError, f"duplicate product {left} * {right}", line)
        block.products[left, right] = self.element(value, line, column, block.basis)

    def hopf_entry(self, block: HopfBlock, key: str, value: str, line: _Line, column: int) -> None:
        if key == "algebra":
            self.lookup(value, AlgebraBlock, line, column)
            block.algebra = value
            return
        if not block.algebra:
            raise self.error(DefinitionSyntaxError, "algebra must be named first", line)
        basis = self.basis_of(block.algebra)
        call = _CALL.match(key)
        if not call or call.group(1) not in ("delta", "counit", "antipode") or call.group(3):
            raise self.error(DefinitionSyntaxError, f"unknown hopf entry '{key}'", line)
        function, label = call.group(1), call.group(2)
        self.require_label(label, basis, line)
        table = getattr(block, function)
        if label in table:
            raise self.error(DefinitionSyntaxError, f"duplicate entry {key}", line)
        if function == "delta":
            table[label] = dict(self.combination(value, line, column, (basis, basis)))
        elif function == "counit":
            table[label] = self.combination(value, line, column, (), scalar=True).get((), ZERO)
        else:
            table[label] = self.element(value, line, column, basis)

    def action_entry(self, block: ActionBlock, key: str, value: str, line: _Line, column: int) -> None:
        if key in ("hopf", "target", "extends"):
            if block.action or block.cocycle:
                raise self.error(DefinitionSyntaxError, f"'{key}' must precede the tables", line)
            if key == "hopf":
                self.lookup(value, HopfBlock, line, column)
                block.hopf = value
            elif key == "target":
                self.lookup(value, AlgebraBlock, line, column)
                block.target = value
            else:
                block.extends = value
            if block.extends is not None:
                base = self.lookup(block.extends, ActionBlock, line, column)
                for field_name in ("hopf", "target"):
                    own, inherited = getattr(block, field_name), getattr(base, field_name)
                    if own and own != inherited:
                        raise self.error(
                            DefinitionSyntaxError,
                            f"{field_name} '{own}' differs from '{inherited}' of extended action '{base.name}'",
                            line,
                            column,
                        )
                block.hopf = block.hopf or base.hopf
                block.target = block.target or base.target
            return
        if not block.hopf or not block.target:
            raise self.error(DefinitionSyntaxError, "hopf and target must be named first", line)
        source = self.basis_of(self.scope()[block.hopf][0].algebra)
        target = self.basis_of(block.target)
        call = _CALL.match(key)
        if not call or call.group(1) not in ("act", "omega") or not call.group(3):
            raise self.error(DefinitionSyntaxError, f"unknown action entry '{key}'", line)
        function, first, second = call.groups()
        self.require_label(first, source, line)
        self.require_label(second, source if function == "omega" else target, line)
        table = block.action if function == "act" else block.cocycle
        if (first, second) in table:
            raise self.error(DefinitionSyntaxError, f"duplicate entry {key}", line)
        table[first, second] = self.element(value, line, column, target)


def parse_definition(
    text: str,
    *,
    source: str = "<string>",
    resolver: Optional[Resolver] = None,
) -> DefinitionDocument:
    """Parse and validate a definition document.

    Raises a :class:`~partial_hopf.errors.DefinitionError` subclass located by
    line and column on the first problem found.
    """
    return _Parser(text, source, resolver).parse()


def _format_coordinates(coordinates: Coordinates) -> str:
    return format_linear_combination((f"[{label}]", c) for label, c in coordinates.items())


def format_definition(document: DefinitionDocument) -> str:
    """Print ``document`` in the definition format; parsing it gives it back."""
    lines: list[str] = []
    if document.name is not None:
        lines.append(f"name = {document.name}")
    if document.provenance is not None:
        lines.append(f'provenance = "{document.provenance}"')
    if document.parameters:
        lines.append(f"parameters = {', '.join(document.parameters)}")
    lines.extend(f"include {name}" for name in document.includes)
    for block in document.blocks.values():
        if lines:
            lines.append("")
        lines.append(f"[{block.kind} {block.name}]")
        if isinstance(block, AlgebraBlock):
            lines.append(f"basis = {', '.join(block.basis)}")
            lines.append(f"unit = {_format_coordinates(block.unit)}")
            for (left, right), value in block.products.items():
                lines.append(f"{left} * {right} = {_format_coordinates(value)}")
        elif isinstance(block, HopfBlock):
            lines.append(f"algebra = {block.algebra}")
            for label, value in block.delta.items():
                text = format_linear_combination((f"[{', '.join(legs)}]", c) for legs, c in value.items())
                lines.append(f"delta({label}) = {text}")
            for label, value in block.counit.items():
                lines.append(f"counit({label}) = {value}")
            for label, value in block.antipode.items():
                lines.append(f"antipode({label}) = {_format_coordinates(value)}")
        else:
            lines.append(f"hopf = {block.hopf}")
            lines.append(f"target = {block.target}")
            if block.extends:
                lines.append(f"extends = {block.extends}")
            for (h, a), value in block.action.items():
                lines.append(f"act({h}, {a}) = {_format_coordinates(value)}")
            for (h, l), value in block.cocycle.items():
                lines.append(f"omega({h}, {l}) = {_format_coordinates(value)}")
    return "\n".join(lines) + "\n"


Built = Union[StructureAlgebra, HopfData, PartialActionData]


class DefinitionSet:
    """Builds algebra, Hopf and action objects from a parsed document.

    Objects are built once per name, so an action and its Hopf algebra share
    the same algebra instances.
    """

    def __init__(self, document: DefinitionDocument):
        self.document = document
        self._scope = document.scope()
        self._built: dict[str, Built] = {}

    def names(self) -> tuple[str, ...]:
        return tuple(self._scope)

    def kind(self, name: str) -> str:
        return self._entry(name)[0].kind

    def _entry(self, name: str) -> tuple[Block, DefinitionDocument]:
        try:
            return self._scope[name]
        except KeyError:
            raise UnknownBlock(f"no block named '{name}'", source=self.document.source) from None

    @property
    def primary_name(self) -> str:
        if self.document.name and self.document.name in self._scope:
            return self.document.name
        if not self.document.blocks:
            raise UnknownBlock("document defines no blocks", source=self.document.source)
        return list(self.document.blocks)[-1]

    def primary(self) -> Built:
        return self.build(self.primary_name)

    def provenance(self, name: str) -> str:
        return self._entry(name)[1].provenance or ""

    def parameters(self, name: str) -> tuple[str, ...]:
        """Parameters declared by the document defining ``name``, then by the
        documents of the actions it extends."""
        block, document = self._entry(name)
        names = document.parameters
        if isinstance(block, ActionBlock) and block.extends is not None:
            names += tuple(p for p in self.parameters(block.extends) if p not in names)
        return names

    def build(self, name: str) -> Built:
        if name not in self._built:
            block = self._entry(name)[0]
            if isinstance(block, AlgebraBlock):
                built: Built = StructureAlgebra(block.name, block.basis, block.products, block.unit)
            elif isinstance(block, HopfBlock):
                built = self._build_hopf(block)
            else:
                built = self._build_action(block)
            self._built[name] = built
        return self._built[name]

    def algebra(self, name: str) -> StructureAlgebra:
        return self._typed(name, StructureAlgebra)

    def hopf(self, name: str) -> HopfData:
        return self._typed(name, HopfData)

    def action(self, name: str) -> PartialActionData:
        return self._typed(name, PartialActionData)

    def _typed(self, name: str, kind: type):
        built = self.build(name)
        if not isinstance(built, kind):
            raise UnknownBlock(f"'{name}' is a {self.kind(name)} block", source=self.document.source)
        return built

    def _build_hopf(self, block: HopfBlock) -> HopfData:
        algebra = self.algebra(block.algebra)
        pair = (algebra, algebra)
        return HopfData(
            block.name,
            algebra,
            {label: TensorElement(pair, value) for label, value in block.delta.items()},
            block.counit,
            {label: algebra.element_from(value) for label, value in block.antipode.items()},
        )

    def _tables(self, block: ActionBlock) -> tuple[dict, dict]:
        if block.extends is None:
            return dict(block.action), dict(block.cocycle)
        action, cocycle = self._tables(self._entry(block.extends)[0])
        action.update(block.action)
        cocycle.update(block.cocycle)
        return action, cocycle

    def _build_action(self, block: ActionBlock) -> PartialActionData:
        hopf = self.hopf(block.hopf)
        target = self.algebra(block.target)
        action, cocycle = self._tables(block)
        names = self.parameters(block.name)

        def lifted(value: Coordinates) -> AlgebraElement:
            return target.element_from({label: c.over(names) for label, c in value.items()})

        return PartialActionData(
            block.name,
            hopf,
            target,
            {key: lifted(value) for key, value in action.items()},
            {key: lifted(value) for key, value in cocycle.items()},
            names,
        )

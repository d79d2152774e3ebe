"""Text and record output for reports, bases and product tables.

Everything here is a pure function of its input, so two runs over the same
definitions print the same bytes.
"""

from __future__ import annotations

import json
from collections.abc import Iterable

from .catalog import CatalogEntry
from .crossed_product import BasisExtraction, ProductTable, express_in_basis, sharp_label
from .report import ReportEntry, VerificationReport, VerificationSuite


def _key(entry: ReportEntry) -> str:
    return f"({', '.join(entry.key)})"


def _sides(entry: ReportEntry) -> str:
    names = ("lhs", "mid", "rhs") if len(entry.sides) == 3 else ("lhs", "rhs")
    if len(entry.sides) > 3:
        names = tuple(f"side{index}" for index in range(len(entry.sides)))
    return "; ".join(f"{name} = {side}" for name, side in zip(names, entry.sides))


def _report_header(report: VerificationReport) -> str:
    header = f"[{report.check}] {report.title}: {report.holding}/{len(report)} hold"
    return header + " (informational)" if report.informational else header


def render_suite_text(suite: VerificationSuite) -> str:
    lines = [f"suite {suite.name}"]
    for report in suite.reports:
        lines.append(_report_header(report))
        for entry in report.entries:
            status = "ok  " if entry.passed else "FAIL"
            law = f" {entry.law}" if entry.law else ""
            lines.append(f"  {status} {_key(entry)}{law}: {_sides(entry)}")
    failures = len(suite.counterexamples)
    lines.append("result: pass" if suite.passed else f"result: FAIL ({failures} counterexamples)")
    return "\n".join(lines) + "\n"


def suite_records(suite: VerificationSuite) -> Iterable[dict]:
    for report in suite.reports:
        for entry in report.entries:
            yield {
                "suite": suite.name,
                "check": report.check,
                "informational": report.informational,
                "key": list(entry.key),
                "law": entry.law,
                "lhs": str(entry.lhs),
                "rhs": str(entry.rhs),
                "sides": [str(side) for side in entry.sides],
                "passed": entry.passed,
            }


def render_suite_records(suite: VerificationSuite) -> str:
    """One JSON object per line, one line per report entry."""
    return render_records(suite_records(suite))


def render_counterexamples(suite: VerificationSuite) -> str:
    return "".join(
        f"{report.check} fails at {_key(entry)}{' ' + entry.law if entry.law else ''}: {_sides(entry)}\n"
        for report, entry in suite.counterexamples
    )


def render_basis(basis: BasisExtraction) -> str:
    lines = [
        f"crossed product basis of {basis.action.name}",
        f"rank: {basis.rank}",
        f"selected: {', '.join(basis.selected_labels)}",
        "generators:",
    ]
    for pair, element in basis.generators:
        lines.append(f"  {sharp_label(pair)} = {basis.coordinates_text(express_in_basis(basis, element))}")
    lines.append("tensors:")
    for pivot in basis.pivots:
        pair, element = basis.generators[pivot.generator]
        lines.append(f"  {sharp_label(pair)} = {element}")
    return "\n".join(lines) + "\n"


def render_table(table: ProductTable, associative: bool) -> str:
    basis = table.basis
    lines = [
        f"product table of {basis.action.name}",
        f"rank: {basis.rank}",
        "associative: asserted (e5 and e6 hold)" if associative else "associative: not asserted",
    ]
    for left, right, coordinates in table.rows():
        lines.append(f"({left}) * ({right}) = {basis.coordinates_text(coordinates)}")
    return "\n".join(lines) + "\n"


def render_catalog(entries: Iterable[CatalogEntry]) -> str:
    rows = [(entry.id, entry.kind, entry.provenance) for entry in entries]
    width = max((len(row[0]) for row in rows), default=0)
    return "".join(f"{id_:<{width}}  {kind:<7}  {provenance}\n" for id_, kind, provenance in rows)


def basis_records(basis: BasisExtraction) -> Iterable[dict]:
    selected = set(basis.selected)
    for pair, element in basis.generators:
        yield {
            "action": basis.action.name,
            "generator": sharp_label(pair),
            "selected": pair in selected,
            "coordinates": basis.coordinates_text(express_in_basis(basis, element)),
            "tensor": str(element),
        }


def table_records(table: ProductTable) -> Iterable[dict]:
    for left, right, coordinates in table.rows():
        yield {
            "action": table.basis.action.name,
            "left": left,
            "right": right,
            "product": table.basis.coordinates_text(coordinates),
        }


def render_records(records: Iterable[dict]) -> str:
    return "".join(json.dumps(record, ensure_ascii=False) + "\n" for record in records)

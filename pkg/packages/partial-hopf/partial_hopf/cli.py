"""The ``partial-hopf`` command line.

Exit status: 0 when every required check holds, 1 when one fails, 2 for
unreadable input (definition, expression or catalog errors), 3 when a
crossed-product element falls outside the extracted basis.
"""

from __future__ import annotations

import contextlib
import enum
import logging
from collections.abc import Iterator
from fractions import Fraction
from pathlib import Path
from typing import Optional

import click

from . import __version__, catalog, config, render
from .algebra import StructureAlgebra, check_associative, check_unital
from .crossed_product import extract_basis, product_table
from .definition import DefinitionSet, FileResolver, format_definition
from .errors import PartialHopfError, SpanError
from .evaluate import evaluate
from .hopf import HopfData, check_antipode, check_bialgebra_compat, check_coalgebra
from .partial_action import PartialActionData, Profile, verify_all
from .report import VerificationSuite

log = logging.getLogger(__name__)


class ExitCode(enum.IntEnum):
    OK = 0
    FAILED = 1
    BAD_INPUT = 2
    SPAN = 3


# =============================================================================
# Shared plumbing
# =============================================================================


@contextlib.contextmanager
def handled() -> Iterator[None]:
    """Turn library errors into the documented exit codes."""
    ctx = click.get_current_context()
    try:
        yield
    except SpanError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(ExitCode.SPAN)
    except PartialHopfError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(ExitCode.BAD_INPUT)


def source_options(function):
    function = click.option(
        "--block", "block", metavar="NAME", help="Block to use instead of the document's primary block."
    )(function)
    function = click.option(
        "--input",
        "input_path",
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        help="Definition file to load.",
    )(function)
    function = click.option("--catalog", "catalog_id", metavar="ID", help="Built-in catalog id.")(function)
    return function


def load_definitions(catalog_id: Optional[str], input_path: Optional[Path]) -> DefinitionSet:
    if (catalog_id is None) == (input_path is None):
        raise click.UsageError("give exactly one of --catalog and --input")
    log.debug("source: %s", catalog_id or input_path)
    if catalog_id is not None:
        return catalog.definitions(catalog_id)
    resolver = FileResolver([input_path.parent, catalog.DATA_DIR])
    return DefinitionSet(resolver.load(input_path))


def selected_name(found: DefinitionSet, block: Optional[str]) -> str:
    return block if block is not None else found.primary_name


def parse_assignment(ctx, param, values: tuple[str, ...]) -> dict[str, Fraction]:
    assignment: dict[str, Fraction] = {}
    for value in values:
        for item in filter(None, (part.strip() for part in value.split(","))):
            name, equals, number = item.partition("=")
            if not equals:
                raise click.BadParameter(f"expected name=value, got '{item}'")
            try:
                assignment[name.strip()] = Fraction(number.strip())
            except (ValueError, ZeroDivisionError):
                raise click.BadParameter(f"'{number}' is not a rational number") from None
    return assignment


def structure_suites(target) -> list[VerificationSuite]:
    if isinstance(target, StructureAlgebra):
        return [VerificationSuite(target.name, (check_associative(target), check_unital(target)))]
    if isinstance(target, HopfData):
        return [
            VerificationSuite(
                target.name,
                (check_coalgebra(target), check_bialgebra_compat(target), check_antipode(target)),
            )
        ]
    return [
        *structure_suites(target.source),
        *structure_suites(target.hopf),
        *structure_suites(target.target),
    ]


# =============================================================================
# Commands
# =============================================================================


@click.group()
@click.version_option(__version__, prog_name="partial-hopf")
@click.option("--debug/--no-debug", default=None, help=f"Debug logging (default from {config.ENV_DEBUG}).")
@click.option(
    "--workers", type=click.IntRange(min=1), default=None, help=f"Worker threads (default from {config.ENV_WORKERS})."
)
def cli(debug: Optional[bool], workers: Optional[int]) -> None:
    """Exact verification of twisted partial actions of Hopf algebras."""
    config.override(debug=debug, workers=workers)
    config.configure_logging()


@cli.command()
@source_options
@click.option("--profile", type=click.Choice([p.value for p in Profile]), default=Profile.CORE.value, show_default=True)
@click.option("--format", "output", type=click.Choice(["text", "records"]), default="text", show_default=True)
@click.option("--structure", is_flag=True, help="Also check the Hopf algebra and both algebras of an action.")
def verify(catalog_id, input_path, block, profile, output, structure) -> None:
    """Check the axioms of an algebra, Hopf algebra or partial action."""
    ctx = click.get_current_context()
    with handled():
        found = load_definitions(catalog_id, input_path)
        target = found.build(selected_name(found, block))
        if isinstance(target, PartialActionData):
            suites = structure_suites(target) if structure else []
            suites.append(verify_all(target, profile))
        else:
            suites = structure_suites(target)
    for suite in suites:
        click.echo(render.render_suite_text(suite) if output == "text" else render.render_suite_records(suite), nl=False)
    failed = [suite for suite in suites if not suite.passed]
    for suite in failed:
        click.echo(render.render_counterexamples(suite), err=True, nl=False)
    ctx.exit(ExitCode.FAILED if failed else ExitCode.OK)


@cli.command()
@source_options
@click.option("--emit", type=click.Choice(["basis", "table"]), default="basis", show_default=True)
@click.option("--format", "output", type=click.Choice(["text", "records"]), default="text", show_default=True)
def crossed(catalog_id, input_path, block, emit, output) -> None:
    """Extract a basis of the partial crossed product or print its product table."""
    ctx = click.get_current_context()
    with handled():
        found = load_definitions(catalog_id, input_path)
        data = found.action(selected_name(found, block))
        suite = verify_all(data, Profile.CORE)
        if not suite.passed:
            click.echo(f"{data.name}: the core axioms fail, no crossed product", err=True)
            click.echo(render.render_counterexamples(suite), err=True, nl=False)
            ctx.exit(ExitCode.FAILED)
        basis = extract_basis(data)
        if emit == "basis":
            text = render.render_basis(basis) if output == "text" else render.render_records(render.basis_records(basis))
        else:
            table = product_table(data, basis)
            associative = suite.report("e5").passed and suite.report("e6").passed
            text = (
                render.render_table(table, associative)
                if output == "text"
                else render.render_records(render.table_records(table))
            )
    click.echo(text, nl=False)


@cli.command("eval")
@click.argument("expression")
@source_options
@click.option(
    "--set",
    "assignment",
    multiple=True,
    callback=parse_assignment,
    metavar="NAME=VALUE[,...]",
    help="Substitute rational values for parameters.",
)
def eval_command(expression, catalog_id, input_path, block, assignment) -> None:
    """Evaluate an expression over act, omega, sharp, delta, counit and antipode."""
    with handled():
        found = load_definitions(catalog_id, input_path)
        name = selected_name(found, block)
        click.echo(evaluate(found.build(name), expression, parameters=found.parameters(name), assignment=assignment))


@cli.group("catalog")
def catalog_group() -> None:
    """Built-in algebras, Hopf algebra and actions."""


@catalog_group.command("list")
def catalog_list() -> None:
    click.echo(render.render_catalog(catalog.list_entries()), nl=False)


@catalog_group.command("show")
@click.argument("catalog_id")
def catalog_show(catalog_id) -> None:
    """Print the definition file of a catalog entry."""
    with handled():
        click.echo(format_definition(catalog.definitions(catalog_id).document), nl=False)


def main() -> None:
    cli(prog_name="partial-hopf")

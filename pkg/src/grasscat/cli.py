"""Command-line interface for grasscat."""

import json
import logging
from collections.abc import Iterator
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

import click

from . import __version__, arquiver, mutation
from .character import cc_character, plucker_character, seed_variables
from .combinatorics import Arc, Triangulation, cut_polygon
from .config import get_config, init_config
from .constants import (
    CHARACTER_METHODS,
    CHECK_MODES,
    DEFAULT_EXCHANGE_FORMAT,
    EXCHANGE_FORMATS,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    FRIEZE_FORMATS,
    NMAX_LOWER,
    NMAX_UPPER,
    QUIVER_FORMATS,
    REPORT_FORMATS,
    SUITE_CHOICES,
)
from .exceptions import GrasscatError, UnknownQuiverError, UnsupportedKError
from .frieze import (
    Frieze,
    frieze_to_json,
    mesh_check,
    piece_friezes,
    ptolemy_check,
    ptolemy_frieze,
    render_ascii,
    restrict_frieze,
)
from .logging_util import get_logger, init_logger
from .parsing import parse_arc, parse_arcs, parse_sequence, parse_values
from .suites import run_suites


class InputError(click.ClickException):
    """Usage or input error, reported with exit code 2."""

    exit_code = EXIT_USAGE


@contextmanager
def input_errors() -> Iterator[None]:
    """Turn library errors into :class:`InputError`."""
    try:
        yield
    except GrasscatError as e:
        get_logger().debug(f"Input error: {e!r}")
        raise InputError(str(e))


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        click.echo(text, nl=False)
        return
    output.write_text(text, encoding="utf-8")
    get_logger().info(f"Wrote {len(text)} characters to {output}")


def _status(passed: bool, label: str) -> None:
    color = False if get_config().no_color else None
    marker = "PASS" if passed else "FAIL"
    click.secho(f"{label}: {marker}", fg="green" if passed else "red", color=color)


def _triangulation(n: int, text: str) -> Triangulation:
    return Triangulation(n, frozenset(parse_arcs(n, text)))


@click.group(invoke_without_command=True)
@click.option(
    "--config",
    "config_path",
    type=click.Path(path_type=Path),
    help="Path to a grasscat.yaml settings file",
)
@click.option("--verbose", "-v", is_flag=True, help="Log progress at INFO level")
@click.option("--debug", is_flag=True, help="Log at DEBUG level")
@click.option("--log-path", type=str, help="Log file path (supports {today}, {now}, {command})")
@click.pass_context
def main(
    ctx: click.Context,
    config_path: Path | None,
    verbose: bool,
    debug: bool,
    log_path: str | None,
) -> None:
    """grasscat - exact computations in the Grassmannian cluster category C(2,n).

    Builds Auslander-Reiten quivers and their reductions, friezes, cluster
    characters and quiver mutations, and verifies their properties.
    Arcs are written "i,j" with 1-based vertices and separated by ";".

    \b
    Quick Start:
      grasscat arquiver --n 6 --perp "1,4"          # AR quiver of a reduction
      grasscat frieze --n 6 --tri "1,3;1,4;1,5"     # Ptolemy frieze
      grasscat character --n 6 --tri "1,3;1,4;1,5" --arc "2,4"
      grasscat mutate --quiver Q37 --seq 4 --recognize E6
      grasscat verify --suite all --nmax 7
    """
    level = "DEBUG" if debug else "INFO" if verbose else None
    with input_errors():
        config = init_config(config_path=config_path, log_path=log_path, log_level=level)
        logger = init_logger(
            level=config.log_level,
            log_path=config.log_path,
            command=ctx.invoked_subcommand,
        )
    logger.debug(
        f"grasscat {__version__}: command {logger.command}, "
        f"level {logging.getLevelName(logger.level)}, log file {logger.log_file or 'none'}"
    )
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


# =============================================================================
# AR Quivers
# =============================================================================


@main.command("arquiver")
@click.option("--n", "n", type=int, required=True, help="Number of polygon vertices")
@click.option("--k", "k", type=int, default=2, show_default=True, help="Subset size")
@click.option("--perp", type=str, help='Rigid set to reduce at, e.g. "1,4;4,6"')
@click.option("--format", "fmt", type=click.Choice(QUIVER_FORMATS), help="Output format")
@click.option("--output", "-o", type=click.Path(path_type=Path), help="Write to a file")
def arquiver_cmd(
    n: int, k: int, perp: str | None, fmt: str | None, output: Path | None
) -> None:
    """Build the AR quiver of C(2,n) or of a reduction.

    \b
    Examples:
      grasscat arquiver --n 6 --format json
      grasscat arquiver --n 6 --perp "1,4" --format dot -o m14perp.dot
    """
    with input_errors():
        if k != 2:
            raise UnsupportedKError(k)
        fmt = fmt or get_config().quiver_format
        frozen = parse_arcs(n, perp)
        quiver = arquiver.reduce(n, frozen) if frozen else arquiver.build_c2n(n)
    text = arquiver.to_dot(quiver) if fmt == "dot" else arquiver.to_json(quiver)
    _emit(text, output)


# =============================================================================
# Friezes
# =============================================================================


def _render(frieze: Frieze, fmt: str) -> str:
    return frieze_to_json(frieze) if fmt == "json" else render_ascii(frieze)


def _render_pieces(frieze: Frieze, fmt: str) -> str:
    pieces = piece_friezes(frieze)
    if fmt == "json":
        payload = [
            {"piece": list(piece), "frieze": json.loads(frieze_to_json(local))}
            for piece, local in pieces
        ]
        return json.dumps(payload, indent=2) + "\n"
    blocks = []
    for piece, local in pieces:
        header = "# piece " + ",".join(str(v) for v in piece)
        blocks.append(header + "\n" + render_ascii(local))
    return "\n".join(blocks)


@main.command("frieze")
@click.option("--n", "n", type=int, required=True, help="Number of polygon vertices")
@click.option("--tri", required=True, help='Triangulation, e.g. "1,3;1,4;1,5"')
@click.option("--perp", type=str, help="Rigid set to restrict the frieze to")
@click.option("--values", type=str, help='Seed values on T and the boundary, e.g. "1,3=2;1,2=3/2"')
@click.option("--format", "fmt", type=click.Choice(FRIEZE_FORMATS), help="Output format")
@click.option("--check", type=click.Choice(CHECK_MODES), help="Check mesh and/or Ptolemy relations")
@click.option("--split", is_flag=True, help="Print one frieze per piece of the cut polygon")
@click.option("--output", "-o", type=click.Path(path_type=Path), help="Write to a file")
@click.pass_context
def frieze_cmd(
    ctx: click.Context,
    n: int,
    tri: str,
    perp: str | None,
    values: str | None,
    fmt: str | None,
    check: str | None,
    split: bool,
    output: Path | None,
) -> None:
    """Compute the Ptolemy frieze of a triangulation, optionally restricted.

    Exits with 1 when a requested check finds violations.

    \b
    Examples:
      grasscat frieze --n 6 --tri "1,3;1,4;1,5" --check both
      grasscat frieze --n 6 --tri "2,6;3,6;4,6" --perp "1,4" --check ptolemy
      grasscat frieze --n 6 --tri "2,6;3,6;4,6" --perp "1,4" --split
    """
    with input_errors():
        fmt = fmt or get_config().frieze_format
        triangulation = _triangulation(n, tri)
        frozen = parse_arcs(n, perp)
        frieze = ptolemy_frieze(n, triangulation, init=parse_values(n, values))
        if frozen:
            frieze = restrict_frieze(frieze, frozen)
        text = _render_pieces(frieze, fmt) if split else _render(frieze, fmt)
    _emit(text, output)

    if check is None:
        return
    failed = False
    with input_errors():
        if check in ("mesh", "both"):
            quiver = arquiver.reduce(n, frozen) if frozen else arquiver.build_c2n(n)
            violations = mesh_check(quiver, frieze)
            _status(not violations, "mesh")
            for violation in violations:
                click.echo(f"  {violation}")
            failed = failed or bool(violations)
        if check in ("ptolemy", "both"):
            pieces = cut_polygon(n, frozen) if frozen else None
            quadruples = ptolemy_check(n, frieze, pieces)
            _status(not quadruples, "ptolemy")
            for quad in quadruples:
                click.echo("  quadruple " + ",".join(str(v) for v in quad))
            failed = failed or bool(quadruples)
    if failed:
        ctx.exit(EXIT_VERIFICATION_FAILED)


# =============================================================================
# Cluster Characters
# =============================================================================


@main.command("character")
@click.option("--n", "n", type=int, required=True, help="Number of polygon vertices")
@click.option("--tri", required=True, help="Seed triangulation")
@click.option("--arc", "arc_text", required=True, help='Arc, e.g. "1,4"')
@click.option("--specialize", type=str, help='"all1" or values like "1,3=2;1,2=1"')
@click.option(
    "--method",
    type=click.Choice(CHARACTER_METHODS),
    default="ptolemy",
    show_default=True,
    help="Flip computation or the fan quiver-Grassmannian oracle",
)
def character_cmd(
    n: int, tri: str, arc_text: str, specialize: str | None, method: str
) -> None:
    """Print the cluster character of an arc over the seed of a triangulation.

    \b
    Examples:
      grasscat character --n 6 --tri "1,3;1,4;1,5" --arc "2,4"
      grasscat character --n 6 --tri "2,6;3,6;4,6" --arc "1,4" --specialize all1
      grasscat character --n 6 --tri "1,3;1,4;1,5" --arc "2,6" --method cc
    """
    with input_errors():
        triangulation = _triangulation(n, tri)
        arc = parse_arc(n, arc_text)
        if method == "cc":
            poly = cc_character(n, triangulation, arc)
        else:
            poly = plucker_character(n, triangulation, arc)
        if specialize is None:
            click.echo(str(poly))
            return
        assignment: dict[Arc, Fraction] = (
            {a: Fraction(1) for a in seed_variables(triangulation)}
            if specialize.strip() == "all1"
            else parse_values(n, specialize)
        )
        click.echo(str(poly.specialize(assignment)))


# =============================================================================
# Quiver Mutation
# =============================================================================


def _load_quiver(name: str) -> mutation.ExchangeQuiver:
    if mutation.is_builtin(name):
        return mutation.builtin(name)
    path = Path(name)
    if not path.is_file():
        raise UnknownQuiverError(name)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        return mutation.from_json(text)
    return mutation.from_text(text)


@main.command("mutate")
@click.option("--quiver", "quiver_name", required=True, help="Q37, Q38, fan_quiver(n, v) or a file")
@click.option("--seq", default="", help='Mutation sequence, e.g. "2,6,3"')
@click.option("--recognize", type=str, help="Dynkin type to recognize: A, D, E6, E7, E8 (or with rank)")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(EXCHANGE_FORMATS),
    default=DEFAULT_EXCHANGE_FORMAT,
    show_default=True,
    help="Output format",
)
@click.pass_context
def mutate_cmd(
    ctx: click.Context, quiver_name: str, seq: str, recognize: str | None, fmt: str
) -> None:
    """Mutate a quiver along a sequence and optionally recognize a Dynkin type.

    Exits with 1 when the recognized type does not match.

    \b
    Examples:
      grasscat mutate --quiver Q37 --seq 4 --recognize E6
      grasscat mutate --quiver Q38 --seq "2,6,3,4,8,1,7,6,5,3,4,5" --recognize E8
      grasscat mutate --quiver "fan_quiver(7, 1)" --format json
    """
    with input_errors():
        quiver = mutation.mutate_sequence(_load_quiver(quiver_name), parse_sequence(seq))
        verdict = mutation.is_dynkin_orientation(quiver, recognize) if recognize else None
    text = mutation.to_json(quiver) + "\n" if fmt == "json" else mutation.to_text(quiver)
    click.echo(text, nl=False)
    if verdict is None:
        return
    _status(verdict, recognize or "")
    if not verdict:
        ctx.exit(EXIT_VERIFICATION_FAILED)


# =============================================================================
# Verification
# =============================================================================


@main.command("verify")
@click.option(
    "--suite",
    type=click.Choice(SUITE_CHOICES),
    default="all",
    show_default=True,
    help="Property suite to run",
)
@click.option(
    "--nmax",
    type=click.IntRange(NMAX_LOWER, NMAX_UPPER),
    help="Largest polygon swept (default from config, else 8)",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(REPORT_FORMATS),
    default="text",
    show_default=True,
    help="Report format",
)
@click.pass_context
def verify_cmd(ctx: click.Context, suite: str, nmax: int | None, fmt: str) -> None:
    """Run the exhaustive property suites and report counts.

    Exits with 1 when any check fails, in either report format.

    \b
    Examples:
      grasscat verify --suite reduction --nmax 8
      grasscat verify --suite all --nmax 6 --verbose
      grasscat verify --suite frieze --nmax 7 --format json
    """
    with input_errors():
        bound = nmax if nmax is not None else get_config().nmax_default
        results = run_suites([suite], bound)

    if fmt == "json":
        report = {"nmax": bound, "suites": [r.to_dict() for r in results]}
        click.echo(json.dumps(report, indent=2))
    else:
        for result in results:
            _status(result.passed, f"{result.name} ({result.checks} checks, nmax={bound})")
            for key, value in sorted(result.counts.items()):
                click.echo(f"  {key}: {value}")
            for failure in result.failures:
                click.echo(f"  FAIL {failure}")
    if not all(r.passed for r in results):
        ctx.exit(EXIT_VERIFICATION_FAILED)


if __name__ == "__main__":
    main()

"""
Command line front end.

Exit codes: 0 affirmative verdict, 1 negative verdict, 2 input error, 3 I/O error.
"""
import enum
import json
import logging
import time
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

import click

from . import config, integers, propositions, surd
from ._version import __version__
from .construction import figure_to_svg, square_the_rectangle
from .errors import ExpressionError, PreconditionError
from .parsers import parse_sqrt_expression, parse_surd
from .propositions import ProofTrace, Rational

logger = logging.getLogger(__name__)

EXIT_AFFIRMATIVE = 0
EXIT_NEGATIVE = 1
EXIT_IO_ERROR = 3

EXPRESSION_HELP = """Expressions are written 'sqrt N', 'sqrt P/Q' or '(P/Q)*sqrt(K)'.
The canonical form '(P/Q)·√K' printed by this tool is accepted too."""


class OutputFormat(str, enum.Enum):
    """
    Output formats.

    Attributes:
        TEXT (str): Line oriented `key: value` blocks.
        STRUCTURED (str): A JSON document. Timing lines are left out so output is reproducible.
    """
    TEXT = "text"
    STRUCTURED = "structured"


@dataclass(frozen=True)
class Settings:
    output_format: OutputFormat = OutputFormat.TEXT
    trace: bool = False


def _emit(ctx: click.Context, document: Dict, lines: Iterable[Tuple[str, object]],
          traces: Iterable[ProofTrace] = (), timing: Optional[float] = None):
    settings = ctx.obj or Settings()
    traces = [trace for trace in traces if trace is not None]
    if settings.output_format is OutputFormat.STRUCTURED:
        if settings.trace and traces:
            document = dict(document, trace=[step for trace in traces for step in trace.to_document()])
        click.echo(json.dumps(document, indent=2, ensure_ascii=False))
        return

    for key, value in lines:
        click.echo(f"{key}: {value}")
    if timing is not None:
        click.echo(f"elapsed: {timing:.3f} s")
    if settings.trace and traces:
        click.echo("trace:")
        for trace in traces:
            for line in trace.to_lines():
                click.echo(f"  {line}")


@click.group(epilog=EXPRESSION_HELP)
@click.option("--format", "output_format", type=click.Choice([f.value for f in OutputFormat]),
              default=OutputFormat.TEXT.value, show_default=True, help="Output format.")
@click.option("--trace", is_flag=True, help="Print the proof traces of the decisions.")
@click.option("-v", "--verbose", is_flag=True, help="Log derivation details to stderr.")
@click.version_option(__version__)
@click.pass_context
def cli(ctx: click.Context, output_format: str, trace: bool, verbose: bool):
    """Decide rationality and commensurability of the sides of squares, exactly."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    ctx.obj = Settings(OutputFormat(output_format), trace)


@cli.command()
@click.argument("n", type=click.IntRange(min=1))
@click.pass_context
def classify(ctx: click.Context, n: int):
    """Classify N as square or oblong and list its rectangles."""
    integer_class = integers.classify(n)
    rectangles = integers.rectangle_representations(n)
    membership = "P" if integer_class.kind == "square" else "R"
    document = {
        "n": n,
        "result": str(integer_class),
        "class": {"kind": integer_class.kind, "sides": list(integer_class.sides)},
        "rectangles": [[a, b] for a, b in rectangles],
        "set": membership,
    }
    lines = [
        ("n", n),
        ("result", integer_class),
        ("rectangles", ", ".join(f"{a}×{b}" for a, b in rectangles)),
        ("set", membership),
    ]
    _emit(ctx, document, lines)


@cli.command(epilog=EXPRESSION_HELP)
@click.argument("expression", nargs=-1, required=True)
@click.pass_context
def decide(ctx: click.Context, expression: Tuple[str, ...]):
    """Decide whether 'sqrt N' or 'sqrt P/Q' is rational.

    Exits with 0 when rational, 1 when irrational.
    """
    text = " ".join(expression)
    try:
        parsed = parse_sqrt_expression(text)
    except ExpressionError as error:
        raise click.BadParameter(str(error), param_hint="EXPRESSION")

    if parsed.integral:
        proposition = "A"
        verdict, trace = propositions.prop_a_decide(parsed.radicand.num)
    else:
        proposition = "B (X.9)"
        verdict, trace = propositions.prop_b_decide(parsed.radicand)
    value = str(verdict.value) if isinstance(verdict, Rational) else None
    document = {
        "expression": text,
        "radicand": str(parsed.radicand),
        "proposition": proposition,
        "result": str(verdict),
        "rational": isinstance(verdict, Rational),
        "value": value,
    }
    lines = [("expression", text), ("proposition", proposition), ("result", verdict)]
    _emit(ctx, document, lines, [trace])
    ctx.exit(EXIT_AFFIRMATIVE if isinstance(verdict, Rational) else EXIT_NEGATIVE)


@cli.command(epilog=EXPRESSION_HELP)
@click.argument("first")
@click.argument("second")
@click.pass_context
def commensurable(ctx: click.Context, first: str, second: str):
    """Decide whether two magnitudes are commensurable in length.

    Exits with 0 when commensurable, 1 when commensurable in square only.
    """
    try:
        s1, s2 = parse_surd(first), parse_surd(second)
    except ExpressionError as error:
        raise click.BadParameter(str(error))

    result = surd.commensurable(s1, s2)
    affirmative = isinstance(result, surd.Commensurable)
    document = {"first": str(s1), "second": str(s2), "result": str(result), "commensurable": affirmative}
    lines = [("first", s1), ("second", s2), ("result", result)]
    if affirmative:
        document["ratio"] = str(result.ratio)
    else:
        document["square_ratio"] = str(result.square_ratio)
        lines.append(("square ratio", result.square_ratio))
    _emit(ctx, document, lines)
    ctx.exit(EXIT_AFFIRMATIVE if affirmative else EXIT_NEGATIVE)


@cli.command()
@click.pass_context
def lesson(ctx: click.Context):
    """The lesson on powers: the odd integers from 3 up to 17, 17 excluded."""
    report = propositions.theodorus_lesson()
    entries = []
    for entry in report:
        if isinstance(entry.verdict, Rational):
            entries.append({"n": entry.n, "verdict": "rational", "value": str(entry.verdict.value)})
        else:
            entries.append({"n": entry.n, "verdict": "power", "value": str(entry.verdict.surd)})
    _emit(ctx, {"entries": entries}, [(entry.n, entry.verdict) for entry in report])


@cli.command()
@click.argument("n", type=click.IntRange(min=1))
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None,
              help="SVG file to write. Defaults to square-N.svg.")
@click.option("--scale", type=click.FloatRange(min=0, min_open=True), default=config.DEFAULT_SVG_SCALE,
              show_default=True, help="Drawing units per unit length.")
@click.pass_context
def construct(ctx: click.Context, n: int, output: Optional[str], scale: float):
    """Construct the square equal to the rectangle 1×N and write it as SVG."""
    figure = square_the_rectangle(n)
    # Render before opening the file.
    try:
        svg_text = figure_to_svg(figure, scale)
    except PreconditionError as error:
        click.echo(f"Error: {error}", err=True)
        ctx.exit(EXIT_NEGATIVE)
    except ValueError as error:
        raise click.BadParameter(str(error), param_hint="'--scale'")

    side = figure.mean_value()
    path = output or f"square-{n}.svg"
    try:
        with open(path, "w", encoding="utf-8") as stream:
            stream.write(svg_text)
    except OSError as error:
        click.echo(f"Error: cannot write {path}: {error}", err=True)
        ctx.exit(EXIT_IO_ERROR)

    logger.debug("Wrote %s", path)
    document = {"n": n, "result": side.compact(), "side": str(side), "rational": surd.is_rational(side) is not None,
                "file": path}
    _emit(ctx, document, [("n", n), ("result", side.compact()), ("file", path)])


@cli.command("oracle-check")
@click.argument("limit", type=click.IntRange(min=1), default=config.DEFAULT_ORACLE_LIMIT)
@click.pass_context
def oracle_check(ctx: click.Context, limit: int):
    """Compare three deciders of Proposition A over 1..LIMIT.

    Exits with 0 when they agree everywhere.
    """
    start = time.perf_counter()
    mismatches = propositions.oracle_mismatches(limit)
    elapsed = time.perf_counter() - start
    document = {"limit": limit, "result": f"{len(mismatches)} mismatches", "mismatches": mismatches}
    lines = [("limit", limit), ("result", f"{len(mismatches)} mismatches")]
    if mismatches:
        lines.append(("mismatches", ", ".join(str(n) for n in mismatches)))
    _emit(ctx, document, lines, timing=elapsed)
    ctx.exit(EXIT_AFFIRMATIVE if not mismatches else EXIT_NEGATIVE)


@cli.command()
@click.argument("n", type=click.IntRange(min=1))
@click.pass_context
def gap(ctx: click.Context, n: int):
    """Set side by side what X.9 and Proposition A conclude about N.

    Exits with 0 when N is a perfect square, 1 otherwise.
    """
    report = propositions.gap_witness(n)
    document = {
        "n": n,
        "prop_b": str(report.prop_b_conclusion) if report.prop_b_conclusion else None,
        "prop_a": report.prop_a_conclusion,
        "bridge": report.bridge.value,
        "report": report.text,
    }
    lines = [tuple(line.split(": ", 1)) for line in report.text.splitlines()]
    traces = [propositions.prop_b_decide(propositions.Ratio(n, 1)).trace, propositions.prop_a_decide(n).trace]
    _emit(ctx, document, lines, traces)
    ctx.exit(EXIT_AFFIRMATIVE if report.prop_a_conclusion else EXIT_NEGATIVE)


@cli.command()
@click.argument("limit", type=click.IntRange(min=1))
@click.pass_context
def classes(ctx: click.Context, limit: int):
    """Group the sides of the squares equal to 1..LIMIT into classes of common measure."""
    grouped = surd.commensurability_classes(limit)
    document = {"limit": limit, "classes": [{"kernel": k, "members": members} for k, members in grouped.items()]}
    lines = [(f"√{k}", ", ".join(str(n) for n in members)) for k, members in grouped.items()]
    _emit(ctx, document, lines)


def main():
    cli(prog_name="theaetetus")


if __name__ == "__main__":
    main()

"""
Command-line front end.

Global options go before the subcommand::

    pyabel --json iso "C*" "S^1"
    pyabel --max-enum 100 divide 4 "qz:1/2"
    pyabel snf --matrix-file relations.json

Exit codes: 0 on success, 1 on a domain error, 2 on usage, parse and matrix format errors.
"""

import json
import logging
import sys
from fractions import Fraction
from typing import List

import typer
from typer.core import TyperGroup

from . import __version__
from .elements import chain_lift, divisibility_chain, elem_divide, elem_order, elem_smul, parse_element
from .errors import AbelError, MatrixFormatError, ParseError
from .independence import is_independent, is_independent_rational, max_independent_subset
from .lang import normalize, parse
from .matrix import IntMatrix, fp_classify, smith_normal_form
from .settings import Settings
from .structure import (
    classify,
    count_division_solutions,
    divisible_hull,
    group_cardinality,
    is_isomorphic,
    primary_decompose_element,
    primary_decompose_expr,
    socle_expr,
    split_divisible,
    torsion_split,
)

log = logging.getLogger(__name__)

USAGE_KINDS = (ParseError, MatrixFormatError)


class CommandResult:
    """
    Outcome of one subcommand: a text rendering, a JSON-ready ``result`` and, on failure, the
    error ``kind`` and ``message``.
    """

    __slots__ = ("command", "arguments", "result", "text", "error")

    def __init__(self, command, arguments, result=None, text="", error=None):
        self.command = command
        self.arguments = arguments
        self.result = result
        self.text = text
        self.error = error

    @classmethod
    def failure(cls, command, arguments, error):
        return cls(command, arguments, error={"kind": error.kind, "message": error.message})

    @property
    def ok(self):
        return self.error is None

    @property
    def exit_code(self):
        if self.ok:
            return 0
        return 2 if self.error["kind"] in [kind.kind for kind in USAGE_KINDS] else 1

    def to_json(self):
        return {"command": self.command, "input": self.arguments, "result": self.result, "error": self.error}

    def render(self, as_json=False):
        if as_json:
            return json.dumps(self.to_json(), sort_keys=True)
        if self.ok:
            return self.text
        return "error: {}: {}".format(self.error["kind"], self.error["message"])


class Session:
    def __init__(self):
        self.settings = None
        self.json = False
        self.result = None


class CommandGroup(TyperGroup):
    def resolve_command(self, ctx, args):
        name = args[0] if args else None
        if name and not name.startswith("-") and self.get_command(ctx, name) is None and not ctx.resilient_parsing:
            valid = ", ".join(self.list_commands(ctx))
            ctx.fail("No such command {!r}. Valid subcommands: {}.".format(name, valid))
        return super().resolve_command(ctx, args)


app = typer.Typer(
    name="pyabel",
    cls=CommandGroup,
    add_completion=False,
    no_args_is_help=True,
    help="Structure computations for divisible and finitely presented abelian groups.",
)


def _version(value):
    if value:
        typer.echo(__version__)
        raise typer.Exit()


@app.callback()
def main_options(
    ctx: typer.Context,
    json_output: bool = typer.Option(False, "--json", help="Print a JSON object instead of text."),
    max_factor_bound: int = typer.Option(None, "--max-factor-bound", help="Largest integer to factorize."),
    max_enum: int = typer.Option(None, "--max-enum", help="Largest number of tuples or solutions to enumerate."),
    config: str = typer.Option(None, "--config", help="JSON settings file."),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log to stderr."),
    version: bool = typer.Option(False, "--version", callback=_version, is_eager=True, help="Show the version."),
):
    if verbose:
        logging.basicConfig(stream=sys.stderr, level=logging.DEBUG, format="%(name)s: %(message)s")
    session = ctx.ensure_object(Session)
    session.json = json_output
    try:
        session.settings = Settings(config) if config else None
        if max_factor_bound is not None or max_enum is not None:
            base = session.settings or Settings()
            session.settings = base.copy(factor_bound=max_factor_bound, enum_bound=max_enum)
    except AbelError as e:
        _finish(ctx, CommandResult.failure("settings", {"config": config}, e))


def _finish(ctx, result):
    session = ctx.ensure_object(Session)
    session.result = result
    output = result.render(session.json)
    if output:
        typer.echo(output, err=not result.ok and not session.json)
    if not result.ok:
        raise typer.Exit(result.exit_code)


def _execute(ctx, command, arguments, fn):
    """
    Runs ``fn(settings)``, which returns ``(result, text)``, and reports the outcome.
    """
    settings = ctx.ensure_object(Session).settings
    try:
        result, text = fn(settings)
    except AbelError as e:
        log.debug("%s failed: %s", command, e)
        outcome = CommandResult.failure(command, arguments, e)
    except ValueError as e:
        ctx.fail(str(e))
    else:
        outcome = CommandResult(command, arguments, result, text)
    _finish(ctx, outcome)


def _element(text, group):
    return parse_element(text, group=group)


def _bool(value):
    return "true" if value else "false"


GROUP_HELP = "Parent group expression for sum-element literals."


@app.command("normalize")
def normalize_command(ctx: typer.Context, expr: str):
    """Print the canonical form of a group expression."""

    def fn(settings):
        normal = normalize(parse(expr), settings=settings)
        canonical = str(normal.to_expr())
        return {"expr": canonical, "normal_form": normal.to_json()}, canonical

    _execute(ctx, "normalize", {"expr": expr}, fn)


@app.command("invariants")
def invariants_command(ctx: typer.Context, expr: str):
    """Print the cardinal invariants and structure flags."""

    def fn(settings):
        report = classify(parse(expr), settings=settings)
        data = report.to_json()
        lines = [
            "free rank: {}".format(report.normal.free_rank),
            "elementary divisors: {}".format(
                ", ".join("{}^{} x{}".format(p, r, m) for p, r, m in report.normal.elementary_divisors) or "none"
            ),
            "m_p default: {}".format(report.normal.default_prufer),
        ]
        lines.extend("m_{}: {}".format(p, m) for p, m in report.normal.prufer_map)
        lines.append("n: {}".format(report.n))
        lines.extend(
            "{}: {}".format(flag, _bool(data[flag]))
            for flag in ("is_divisible", "is_torsion", "is_torsion_free", "is_reduced")
        )
        return data, "\n".join(lines)

    _execute(ctx, "invariants", {"expr": expr}, fn)


@app.command("iso")
def iso_command(ctx: typer.Context, a: str, b: str):
    """Decide whether two expressions describe isomorphic groups."""

    def fn(settings):
        verdict = is_isomorphic(parse(a), parse(b), settings=settings)
        return verdict, "isomorphic: {}".format(_bool(verdict))

    _execute(ctx, "iso", {"a": a, "b": b}, fn)


@app.command("torsion")
def torsion_command(ctx: typer.Context, expr: str):
    """Split off the torsion part."""

    def fn(settings):
        torsion, free = torsion_split(parse(expr))
        return (
            {"torsion": str(torsion), "torsion_free": str(free)},
            "torsion: {}\ntorsion-free: {}".format(torsion, free),
        )

    _execute(ctx, "torsion", {"expr": expr}, fn)


@app.command("socle")
def socle_command(ctx: typer.Context, expr: str):
    """Print the socle, the elements of square-free order."""

    def fn(settings):
        socle = socle_expr(parse(expr), settings=settings)
        return socle.to_json(), str(socle)

    _execute(ctx, "socle", {"expr": expr}, fn)


@app.command("split-divisible")
def split_divisible_command(ctx: typer.Context, expr: str):
    """Split into the maximal divisible part and a reduced complement."""

    def fn(settings):
        divisible, reduced = split_divisible(parse(expr))
        return (
            {"divisible": str(divisible), "reduced": str(reduced)},
            "divisible: {}\nreduced: {}".format(divisible, reduced),
        )

    _execute(ctx, "split-divisible", {"expr": expr}, fn)


@app.command("primary")
def primary_command(ctx: typer.Context, expr: str):
    """Decompose a torsion group into its p-primary components."""

    def fn(settings):
        decomposition = primary_decompose_expr(parse(expr), settings=settings)
        return decomposition.to_json(), decomposition.describe()

    _execute(ctx, "primary", {"expr": expr}, fn)


@app.command("hull")
def hull_command(ctx: typer.Context, expr: str):
    """Print the divisible hull of a finitely generated group."""

    def fn(settings):
        hull = divisible_hull(parse(expr), settings=settings)
        return str(hull), str(hull)

    _execute(ctx, "hull", {"expr": expr}, fn)


@app.command("count-solutions")
def count_solutions_command(ctx: typer.Context, expr: str, n: int):
    """Count the solutions of n*x = y in a divisible group."""

    def fn(settings):
        count = count_division_solutions(parse(expr), n, settings=settings)
        return count.to_json(), str(count)

    _execute(ctx, "count-solutions", {"expr": expr, "n": n}, fn)


@app.command("cardinality")
def cardinality_command(ctx: typer.Context, expr: str):
    """Print the cardinality of a group."""

    def fn(settings):
        size = group_cardinality(parse(expr))
        return size.to_json(), str(size)

    _execute(ctx, "cardinality", {"expr": expr}, fn)


@app.command("order")
def order_command(ctx: typer.Context, x: str, group: str = typer.Option(None, "--group", help=GROUP_HELP)):
    """Print the order of an element."""

    def fn(settings):
        order = elem_order(_element(x, group))
        return order.to_json(), str(order)

    _execute(ctx, "order", {"x": x, "group": group}, fn)


@app.command("add")
def add_command(ctx: typer.Context, x: str, y: str, group: str = typer.Option(None, "--group", help=GROUP_HELP)):
    """Add two elements of the same group."""

    def fn(settings):
        total = _element(x, group) + _element(y, group)
        return str(total), str(total)

    _execute(ctx, "add", {"x": x, "y": y, "group": group}, fn)


@app.command("smul")
def smul_command(ctx: typer.Context, n: int, x: str, group: str = typer.Option(None, "--group", help=GROUP_HELP)):
    """Multiply an element by an integer."""

    def fn(settings):
        product = elem_smul(n, _element(x, group))
        return str(product), str(product)

    _execute(ctx, "smul", {"n": n, "x": x, "group": group}, fn)


@app.command("divide")
def divide_command(ctx: typer.Context, n: int, x: str, group: str = typer.Option(None, "--group", help=GROUP_HELP)):
    """List the solutions y of n*y = x."""
    if n < 1:
        raise typer.BadParameter("must be a positive integer", param_hint="N")

    def fn(settings):
        division = elem_divide(n, _element(x, group), settings=settings)
        data = {
            "solutions": [str(y) for y in division.solutions],
            "count": division.count.to_json(),
            "truncated": division.truncated,
        }
        lines = ["count: {}".format(division.count)]
        if division.truncated:
            lines.append("witness: {}".format(division.solutions[0]))
        else:
            lines.extend(str(y) for y in division.solutions)
        return data, "\n".join(lines)

    _execute(ctx, "divide", {"n": n, "x": x, "group": group}, fn)


@app.command("lift")
def lift_command(
    ctx: typer.Context,
    x: str,
    k: int = typer.Argument(1),
    chain: int = typer.Option(None, "--chain", help="Print the divisibility chain of this length starting at x."),
):
    """The canonical y with p^k*y = x in a Prüfer group."""
    if not x.strip().startswith("pr:"):
        raise typer.BadParameter("needs a Prüfer element literal pr:P^inf:A/P^K", param_hint="X")
    if k < 1 or (chain is not None and chain < 1):
        raise typer.BadParameter("K and --chain must be positive")

    def fn(settings):
        element = _element(x, None)
        if chain is not None:
            links = divisibility_chain(element, chain, settings=settings)
            return [str(link) for link in links], "\n".join(str(link) for link in links)
        lifted = chain_lift(element, k)
        return str(lifted), str(lifted)

    _execute(ctx, "lift", {"x": x, "k": k, "chain": chain}, fn)


@app.command("decompose-element")
def decompose_element_command(ctx: typer.Context, x: str, group: str = typer.Option(None, "--group", help=GROUP_HELP)):
    """Write a torsion element as a sum of elements of prime-power order."""

    def fn(settings):
        parts = primary_decompose_element(_element(x, group), settings=settings)
        return (
            [{"p": p, "component": str(part)} for p, part in parts],
            "\n".join("{}: {}".format(p, part) for p, part in parts) or "0",
        )

    _execute(ctx, "decompose-element", {"x": x, "group": group}, fn)


def _vector(text):
    try:
        return [Fraction(part) for part in text.split(",")] if text.strip() else []
    except ValueError:
        raise typer.BadParameter("{!r} is not a comma-separated list of rationals".format(text))


@app.command("independent")
def independent_command(
    ctx: typer.Context,
    xs: List[str] = typer.Argument(None),
    group: str = typer.Option(None, "--group", help=GROUP_HELP),
    vectors: bool = typer.Option(False, "--vectors", help="Arguments are rational vectors such as 1,1/2,0."),
):
    """Test a finite system for linear independence."""
    xs = list(xs or [])

    def fn(settings):
        if vectors:
            vs = [_vector(x) for x in xs]
            verdict = is_independent_rational(vs)
            subset = max_independent_subset(vs)
            data = {"independent": verdict.independent, "certificate": verdict.certificate, "max_subset": subset}
            text = "independent: {}".format(_bool(verdict.independent))
            if verdict.certificate is not None:
                text += "\ncertificate: {}".format(" ".join(str(c) for c in verdict.certificate))
            return data, text + "\nmaximal independent subset: {}".format(" ".join(str(i) for i in subset))
        verdict = is_independent([_element(x, group) for x in xs], settings=settings)
        text = "independent: {}".format(_bool(verdict.independent))
        if verdict.certificate is not None:
            text += "\ncertificate: {}".format(" ".join(str(c) for c in verdict.certificate))
        return {"independent": verdict.independent, "certificate": verdict.certificate}, text

    _execute(ctx, "independent", {"xs": xs, "group": group, "vectors": vectors}, fn)


def _matrix(matrix, matrix_file):
    if matrix_file:
        return IntMatrix.load(matrix_file)
    if matrix is None:
        raise MatrixFormatError("give a matrix as JSON or with --matrix-file")
    return IntMatrix.from_json(matrix)


@app.command("snf")
def snf_command(
    ctx: typer.Context,
    matrix: str = typer.Argument(None, help='{"rows": r, "cols": c, "entries": [[...], ...]}'),
    matrix_file: str = typer.Option(None, "--matrix-file", help="Read the matrix from a JSON file."),
):
    """Smith normal form D = U*A*V with unimodular U and V."""

    def fn(settings):
        snf = smith_normal_form(_matrix(matrix, matrix_file))
        data = {"U": snf.U.to_json(), "D": snf.D.to_json(), "V": snf.V.to_json()}
        text = "\n".join(
            "{}: {}".format(name, json.dumps(M.to_json()["entries"])) for name, M in zip("UDV", snf)
        )
        return data, text

    _execute(ctx, "snf", {"matrix": matrix, "matrix_file": matrix_file}, fn)


@app.command("classify-fp")
def classify_fp_command(
    ctx: typer.Context,
    matrix: str = typer.Argument(None, help='{"rows": r, "cols": c, "entries": [[...], ...]}'),
    matrix_file: str = typer.Option(None, "--matrix-file", help="Read the matrix from a JSON file."),
):
    """Classify Z^cols modulo the row space of a relation matrix."""

    def fn(settings):
        group = fp_classify(_matrix(matrix, matrix_file))
        return str(group), str(group)

    _execute(ctx, "classify-fp", {"matrix": matrix, "matrix_file": matrix_file}, fn)


def run(argv):
    """
    Runs the command line ``argv`` and returns ``(CommandResult, exit code)``. The result is
    ``None`` when no subcommand ran (``--help``, ``--version`` or a usage error).
    """
    session = Session()
    command = typer.main.get_command(app)
    # Standalone mode reports usage errors and always ends in SystemExit.
    try:
        command.main(args=list(argv), prog_name="pyabel", obj=session, standalone_mode=True)
    except SystemExit as e:
        return session.result, e.code or 0
    return session.result, 0


def main():
    _, code = run(sys.argv[1:])
    sys.exit(code)

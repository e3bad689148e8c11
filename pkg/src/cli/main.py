"""
Command Line Interface for the operad characteristic workbench

Every subcommand is a pure function of its options and input documents:
results go to standard output as JSON or grid tables, diagnostics and
progress to the error stream.
"""
import functools
import json
import logging
import os
import sys
from fractions import Fraction
from typing import Callable, List, Optional

import click
from colorama import Fore, Style, init

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core.config import WorkbenchConfig, load_config
from src.core.errors import WorkbenchError
from src.core.models import DOCUMENTS, schema_for
from src.cli.serialize import FORMATS, from_document, render_table, serialize
from src.cli.verify import SUITES, feynman_inverts_free, run_verification
from src.graphzoo.canonical import canonicalize
from src.graphzoo.enumerate import enumerate_graphs
from src.graphzoo.graph import build_graph
from src.graphzoo.oracles import wick_rank_sum
from src.hlaurent.laurent import TruncationSpec
from src.hlaurent.modular import StableCharTable, cch, feynman_char, free_modular_char
from src.moduli.integrals import stirling_check
from src.moduli.psi import by_euler_class, euler_chi_extract, harer_zagier_b, psi
from src.opchar.legendre import cobar_char, legendre
from src.opchar.named import NAMED_OPERADS, named_char

# Initialize colorama
init()

# Setup logging
logging.basicConfig(level=logging.INFO, format='%(levelname)s: %(message)s')
logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_USAGE = 2


class WorkbenchCLI:
    """Main CLI application for the workbench"""

    def __init__(self, config: WorkbenchConfig):
        self.config = config
        self.logger = logging.getLogger(__name__)

    def print_header(self, title: str):
        """Print a formatted header"""
        click.echo(f"\n{Fore.CYAN}{'='*60}", err=True)
        click.echo(f"{title:^60}", err=True)
        click.echo(f"{'='*60}{Style.RESET_ALL}\n", err=True)

    def print_success(self, message: str):
        """Print success message"""
        click.echo(f"{Fore.GREEN}✓ {message}{Style.RESET_ALL}", err=True)

    def print_error(self, message: str):
        """Print error message"""
        click.echo(f"{Fore.RED}✗ {message}{Style.RESET_ALL}", err=True)

    def print_warning(self, message: str):
        """Print warning message"""
        click.echo(f"{Fore.YELLOW}⚠ {message}{Style.RESET_ALL}", err=True)

    @property
    def fmt(self) -> str:
        return self.config.output_format

    def trunc(self, max_weight: Optional[int] = None) -> TruncationSpec:
        """Truncation window from the configuration"""
        return TruncationSpec(
            max_weight=self.config.max_weight if max_weight is None else max_weight,
            hexp_min_x2=min(self.config.hexp_min_x2, 0),
            hexp_max_x2=self.config.hexp_max_x2,
        )

    def emit(self, value):
        """Write a workbench value to standard output"""
        click.echo(serialize(value, self.fmt).decode("utf-8"), nl=False)

    def emit_records(self, headers: List[str], rows: List[List[str]], document):
        """Write a result that is not a single value: JSON document or grid table"""
        if self.fmt == "json":
            click.echo(json.dumps(document, indent=2))
        else:
            click.echo(render_table(headers, rows))

    def read_document(self, path: str, kind: Optional[str] = None):
        with open(path, "r") as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as exc:
                raise WorkbenchError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})")
        return from_document(data, kind)


def handle_errors(command: Callable) -> Callable:
    """Map input and precondition errors to exit code 2 with a diagnostic"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except (WorkbenchError, ValueError, OSError) as exc:
            path = getattr(exc, "path", None)
            location = f" at {'/'.join(map(str, path))}" if path else ""
            ctx.obj['app'].print_error(f"{exc}{location}")
            ctx.exit(EXIT_USAGE)

    return wrapper


def _override(field: str) -> Callable:
    def callback(ctx, param, value):
        if value is None:
            return
        app = ctx.find_object(dict)['app']
        try:
            app.config = WorkbenchConfig(**{**app.config.model_dump(), field: value})
        except ValueError as exc:
            raise click.BadParameter(str(exc))
    return callback


def window_options(command: Callable) -> Callable:
    """--max-weight, --hbar-min and --format accepted after the subcommand too"""
    command = click.option('--format', 'fmt', type=click.Choice(FORMATS), expose_value=False,
                           callback=_override('output_format'), help='Output format')(command)
    command = click.option('--hbar-min', type=float, expose_value=False,
                           callback=_override('hbar_min'), help='Lower end of the hbar window')(command)
    return click.option('--max-weight', type=int, expose_value=False,
                        callback=_override('max_weight'), help='Truncation weight')(command)


def _rational(value) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@click.group()
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False),
              help='Configuration file (default configs/default.json)')
@click.option('--max-weight', type=int, help='Truncation weight (overrides OPCHAR_MAX_WEIGHT)')
@click.option('--hbar-min', type=float, help='Lower end of the hbar window')
@click.option('--format', 'fmt', type=click.Choice(FORMATS), help='Output format')
@click.option('--verbose', 'level', flag_value='DEBUG', help='Debug diagnostics')
@click.option('--quiet', 'level', flag_value='WARNING', help='Warnings only')
@click.pass_context
def cli(ctx, config_path, max_weight, hbar_min, fmt, level):
    """Exact characteristics of operads, modular operads and moduli spaces"""
    ctx.ensure_object(dict)
    try:
        config = load_config(config_path)
        overrides = {key: value for key, value in (
            ("max_weight", max_weight), ("hbar_min", hbar_min),
            ("output_format", fmt), ("log_level", level)) if value is not None}
        if overrides:
            config = WorkbenchConfig(**{**config.model_dump(), **overrides})
    except ValueError as exc:
        click.echo(f"{Fore.RED}✗ Invalid configuration: {exc}{Style.RESET_ALL}", err=True)
        ctx.exit(EXIT_USAGE)
    logging.getLogger().setLevel(config.log_level)
    ctx.obj['app'] = WorkbenchCLI(config)


# -- operads --------------------------------------------------------------------


@cli.command()
@click.argument('which', type=click.Choice(NAMED_OPERADS))
@window_options
@click.pass_context
@handle_errors
def char(ctx, which: str):
    """Characteristic of a named cyclic operad"""
    app = ctx.obj['app']
    app.emit(named_char(which, app.config.max_weight))


@cli.command(name='legendre')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@window_options
@click.pass_context
@handle_errors
def legendre_cmd(ctx, path: str):
    """Plethystic Legendre transform of a symmetric function document"""
    app = ctx.obj['app']
    f = app.read_document(path, "symfunc")
    app.emit(legendre(f.truncate(min(f.max_weight, app.config.max_weight))).f)


@cli.command()
@click.argument('path', required=False, type=click.Path(exists=True, dir_okay=False))
@click.option('--named', type=click.Choice(NAMED_OPERADS), help='Use a named operad instead of a file')
@window_options
@click.pass_context
@handle_errors
def cobar(ctx, path: Optional[str], named: Optional[str]):
    """Characteristic of the cobar construction, Ch(B a) = L(h_2 + a~) - h_2"""
    app = ctx.obj['app']
    if (path is None) == (named is None):
        raise click.UsageError("Give exactly one of PATH or --named")
    a = named_char(named, app.config.max_weight) if named else app.read_document(path, "symfunc")
    app.emit(cobar_char(a, min(a.max_weight, app.config.max_weight)))


# -- modular operads --------------------------------------------------------------


@cli.command(name='cch')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@window_options
@click.pass_context
@handle_errors
def cch_cmd(ctx, path: str):
    """CCh of a stable character table"""
    app = ctx.obj['app']
    app.emit(cch(app.read_document(path, "table"), app.trunc()))


@cli.command(name='free-modular')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@window_options
@click.pass_context
@handle_errors
def free_modular(ctx, path: str):
    """Characteristic of the free modular operad on a table"""
    app = ctx.obj['app']
    app.emit(free_modular_char(app.read_document(path, "table"), app.trunc()))


@cli.command()
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@window_options
@click.pass_context
@handle_errors
def feynman(ctx, path: str):
    """Characteristic of the Feynman transform of a table"""
    app = ctx.obj['app']
    app.emit(feynman_char(app.read_document(path, "table"), app.trunc()))


@cli.command()
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@window_options
@click.pass_context
@handle_errors
def homotopy(ctx, path: str):
    """Check that the Feynman transform undoes the free modular operad on a table"""
    app = ctx.obj['app']
    table = app.read_document(path, "table")
    left, right = feynman_inverts_free(table, app.trunc())
    if dict(left) != dict(right):
        app.print_error("Feynman transform of the free modular operad differs from CCh(V)")
        ctx.exit(EXIT_FAILED)
    app.print_success(f"Feynman after free modular is the identity through weight {app.config.max_weight}")


# -- graphs ---------------------------------------------------------------------


@cli.group()
def graphs():
    """Stable graph enumeration and graph sums"""


@graphs.command(name='enumerate')
@click.option('--genus', type=int, required=True, help='Genus g')
@click.option('--legs', type=int, required=True, help='Number of legs n')
@click.option('--unlabelled', is_flag=True, help='Treat the legs as interchangeable')
@click.option('--progress', is_flag=True, help='Show a progress bar')
@window_options
@click.pass_context
@handle_errors
def graphs_enumerate(ctx, genus: int, legs: int, unlabelled: bool, progress: bool):
    """Isomorphism classes of stable graphs of type (g, n) with |Aut|"""
    app = ctx.obj['app']
    classes = enumerate_graphs(genus, legs, not unlabelled, progress)
    rows, document = [], []
    for index, graph_class in enumerate(classes):
        graph = graph_class.representative
        rows.append([str(index), str(graph.num_vertices), str(graph_class.num_edges),
                     str(graph_class.aut_order), graph_class.key[:16]])
        document.append({"aut_order": graph_class.aut_order, "key": graph_class.key,
                         "graph": graph.to_dict()})
    app.emit_records(["class", "vertices", "edges", "|Aut|", "key"], rows,
                     {"genus": genus, "legs": legs, "labelled": not unlabelled, "classes": document})


def _parse_weight(text: str):
    try:
        left, value = text.split("=")
        g, n = left.split(",")
        return (int(g), int(n)), value
    except ValueError:
        raise click.BadParameter(f"expected g,n=value, got '{text}'")


@graphs.command(name='wick')
@click.option('--genus', type=int, required=True, help='Genus g')
@click.option('--legs', type=int, required=True, help='Number of legs n')
@click.option('--weight', 'weights', multiple=True,
              help='Vertex weight as g,n=value; unlisted types weigh 1')
@click.option('--only-listed', is_flag=True, help='Unlisted vertex types weigh 0')
@window_options
@click.pass_context
@handle_errors
def graphs_wick(ctx, genus: int, legs: int, weights, only_listed: bool):
    """Wick sum over leg-labelled graphs of type (g, n)"""
    app = ctx.obj['app']
    a = {}
    if not only_listed:
        top = 2 * (genus - 1) + legs
        a = {(g, n): 1 for g in range(genus + 1) for n in range(top + 3)
             if 0 < 2 * (g - 1) + n <= top}
    for text in weights:
        key, value = _parse_weight(text)
        a[key] = Fraction(value)
    total = wick_rank_sum(genus, legs, a)
    app.emit_records(["g", "n", "wick sum"], [[str(genus), str(legs), _rational(total)]],
                     {"genus": genus, "legs": legs, "num": str(total.numerator), "den": str(total.denominator)})


@graphs.command(name='show')
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@window_options
@click.pass_context
@handle_errors
def graphs_show(ctx, path: str):
    """Validate a graph document and print its invariants"""
    app = ctx.obj['app']
    with open(path, "r") as f:
        graph = build_graph(json.load(f))
    form = canonicalize(graph)
    app.print_success(f"Valid stable graph, |Aut| = {form.aut_order}")
    app.emit(graph)


# -- moduli ---------------------------------------------------------------------


@cli.group()
def moduli():
    """Euler characteristics of moduli spaces of curves"""


@moduli.command(name='psi')
@click.option('--order', type=int, help='hbar order (default from the configuration)')
@window_options
@click.pass_context
@handle_errors
def moduli_psi(ctx, order: Optional[int]):
    """The series Psi through hbar^order"""
    app = ctx.obj['app']
    series = psi(order or app.config.psi_order)
    app.emit(series)


@moduli.command(name='euler')
@click.option('--order', type=int, help='hbar order (default from the configuration)')
@window_options
@click.pass_context
@handle_errors
def moduli_euler(ctx, order: Optional[int]):
    """Euler-characteristic sums per Euler class chi = 1 - g"""
    app = ctx.obj['app']
    values = by_euler_class(euler_chi_extract(psi(order or app.config.psi_order)))
    app.emit_records(["chi", "sum of e(M/S)"], [[str(chi), _rational(v)] for chi, v in values.items()],
                     {str(chi): {"num": str(v.numerator), "den": str(v.denominator)}
                      for chi, v in values.items()})


@moduli.command(name='hz')
@click.option('--order', type=int, help='hbar order (default from the configuration)')
@window_options
@click.pass_context
@handle_errors
def moduli_hz(ctx, order: Optional[int]):
    """The one-puncture series, with its structural violations as warnings"""
    app = ctx.obj['app']
    report = harer_zagier_b(order or app.config.hz_order)
    for message in report.violations:
        app.print_warning(message)
    app.emit(report.series)


# -- integrals ------------------------------------------------------------------


@cli.group()
def integral():
    """Formal Gaussian integrals"""


@integral.command(name='stirling')
@click.option('--order', type=int, help='hbar order, at most 10')
@click.option('--xi-max', type=int, default=3, show_default=True, help='Largest xi-degree compared')
@window_options
@click.pass_context
@handle_errors
def integral_stirling(ctx, order: Optional[int], xi_max: int):
    """Both sides of the Stirling identity; exit 1 if they differ"""
    app = ctx.obj['app']
    lhs, rhs = stirling_check(order or app.config.stirling_order, xi_max)
    app.emit(lhs)
    if lhs.terms != rhs.terms:
        app.print_error("Formal integral and zeta series differ")
        ctx.exit(EXIT_FAILED)
    app.print_success("Formal integral equals the zeta series")


# -- verification and schemas -----------------------------------------------------


@cli.command()
@click.argument('suites', nargs=-1, type=click.Choice(list(SUITES)))
@click.option('--progress', is_flag=True, help='Show progress bars')
@window_options
@click.pass_context
@handle_errors
def verify(ctx, suites, progress: bool):
    """Run the cross-route verification suites (all when none is named)"""
    app = ctx.obj['app']
    app.print_header("VERIFICATION")
    report = run_verification(app.config, list(suites), progress)
    app.emit_records(["suite", "check", "result"], report.rows(), report.to_dict())
    if not report.passed:
        for failure in report.failures:
            app.print_error(f"{failure.suite}: {failure.name}")
        ctx.exit(EXIT_FAILED)
    app.print_success(f"All {len(report.checks)} checks passed")


@cli.command()
@click.argument('kind', type=click.Choice(sorted(DOCUMENTS)))
def schema(kind: str):
    """Print the JSON schema of a document kind"""
    click.echo(json.dumps(schema_for(kind), indent=2))


if __name__ == '__main__':
    cli()

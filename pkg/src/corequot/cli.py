"""CLI entry points for corequot"""

import logging
import sys

import click
from colorama import Fore, init

from .commands import BATCH_CHECKS, CommandRequest, run_command
from .config import load_settings
from .database import RunStore
from .exceptions import CoreQuotError
from .reporter import RunStatus, print_history, print_report, save_report

init(autoreset=True)

LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"


def _configure_logging(verbose: int, configured_level: str):
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, configured_level.upper(), logging.WARNING)
    logging.basicConfig(level=level, format=LOG_FORMAT, datefmt=LOG_DATEFMT, stream=sys.stderr, force=True)


def _fail(message: str):
    click.echo(f"{Fore.RED}Error: {message}", err=True)
    sys.exit(2)


def _execute(ctx: click.Context, name: str, arguments=(), **options):
    """Run one subcommand, print it, optionally save/record it, exit with its code"""
    obj = ctx.obj
    request = CommandRequest(name, tuple(arguments), options, "json" if obj["json"] else "pretty")
    report = run_command(request, obj["settings"])

    if report.status is RunStatus.error:
        click.echo(f"{Fore.RED}Error: {report.message}", err=True)
        if obj["json"]:
            print_report(report, as_json=True)
        sys.exit(report.exit_code)

    if name == "history" and not obj["json"]:
        print_history(report.payload["runs"])
    else:
        print_report(report, as_json=obj["json"])

    if obj["save_report"]:
        json_file, markdown_file = save_report(report, obj["output_dir"])
        click.echo(f"{Fore.GREEN}✓ Report saved: {json_file}, {markdown_file}", err=True)

    if obj["save_to_db"] and name != "history":
        try:
            with RunStore(obj["settings"].database_path) as store:
                run_id = store.record(report)
            click.echo(f"{Fore.GREEN}✓ Recorded run {run_id} in {obj['settings'].database_path}", err=True)
        except Exception as e:
            click.echo(f"{Fore.YELLOW}⚠️  Could not record run: {e}", err=True)

    sys.exit(report.exit_code)


@click.group()
@click.version_option(package_name="corequot")
@click.option("--json", "as_json", is_flag=True, help="Print canonical JSON instead of tables")
@click.option("--verbose", "-v", count=True, help="-v for INFO, -vv for DEBUG logging (stderr)")
@click.option("--config", "config_path", type=click.Path(), help="YAML config file (default: $COREQUOT_CONFIG)")
@click.option("--save-report", is_flag=True, help="Also write JSON + markdown reports")
@click.option("--output-dir", "-o", type=click.Path(file_okay=False), help="Report directory (default: output.directory)")
@click.option("--save-to-db", is_flag=True, help="Record the run in the SQLite run history")
@click.pass_context
def main(ctx, as_json, verbose, config_path, save_report, output_dir, save_to_db):
    """
    Exact 2-core / 2-quotient combinatorics, reduced Schur functions and
    weight-vector verification for the basic A1(1)-module.

    Exit codes: 0 pass, 1 verification failure, 2 usage error.

    \b
    Examples:
      corequot quotient 4,3,1,1
      corequot schur 3,1 --reduced
      corequot --json verify theorem3 --max-size 10
    """
    try:
        settings = load_settings(config_path)
    except CoreQuotError as e:
        _fail(str(e))
    _configure_logging(verbose, settings.log_level)
    ctx.obj = {
        "settings": settings,
        "json": as_json or settings.output_format == "json",
        "save_report": save_report,
        "output_dir": output_dir or settings.output_directory,
        "save_to_db": save_to_db,
    }


@main.command()
@click.argument("partition")
@click.option("--padding", "-n", type=int, help="Even beta-set length (default: smallest even >= length)")
@click.pass_context
def quotient(ctx, partition, padding):
    """Beta-set, 2-core and 2-quotient of a partition."""
    _execute(ctx, "quotient", [partition], padding=padding)


@main.command()
@click.argument("partition")
@click.pass_context
def core(ctx, partition):
    """2-core (a staircase K_r) of a partition."""
    _execute(ctx, "core", [partition])


@main.command()
@click.argument("partition")
@click.pass_context
def sign(ctx, partition):
    """The 2-sign delta_2 and the removable dominoes."""
    _execute(ctx, "sign", [partition])


@main.command()
@click.argument("partition")
@click.option("--reduced", is_flag=True, help="Set the even variables t2, t4, ... to zero")
@click.pass_context
def schur(ctx, partition, reduced):
    """Schur function S_Y(t) in the variables t_j."""
    _execute(ctx, "schur", [partition], reduced=reduced)


@main.command()
@click.argument("shape")
@click.argument("cycles")
@click.pass_context
def character(ctx, shape, cycles):
    """Irreducible character value chi_shape(cycles)."""
    _execute(ctx, "character", [shape, cycles])


@main.command()
@click.argument("outer")
@click.argument("inner")
@click.argument("content")
@click.pass_context
def lr(ctx, outer, inner, content):
    """Littlewood-Richardson coefficient c^outer_{inner, content}."""
    _execute(ctx, "lr", [outer, inner, content])


@main.command("lr-expand")
@click.argument("mu")
@click.argument("nu")
@click.pass_context
def lr_expand(ctx, mu, nu):
    """Schur expansion of S_mu * S_nu."""
    _execute(ctx, "lr-expand", [mu, nu])


@main.command()
@click.argument("partition")
@click.pass_context
def weight(ctx, partition):
    """Weight Lambda_r - n delta of the reduced Schur function of a partition."""
    _execute(ctx, "weight", [partition])


@main.command()
@click.argument("r")
@click.argument("n")
@click.pass_context
def basis(ctx, r, n):
    """Basis partitions of the weight space Lambda_r - n delta."""
    _execute(ctx, "basis", [r, n])


@main.command("weight-space")
@click.argument("r")
@click.argument("n")
@click.pass_context
def weight_space(ctx, r, n):
    """Every weight vector of weight Lambda_r - n delta."""
    _execute(ctx, "weight-space", [r, n])


@main.group()
def verify():
    """Verification suites (exit 1 on any mismatch)."""


@verify.command()
@click.option("--r", "r", type=int, help="Core index (default: all r <= verify.max_r)")
@click.option("--n", "n", type=int, help="Delta depth (default: all n <= verify.max_n)")
@click.pass_context
def theorem2(ctx, r, n):
    """Rank of the basis reduced Schur functions equals p(n)."""
    _execute(ctx, "verify theorem2", r=r, n=n)


@verify.command()
@click.argument("partition", required=False)
@click.option("--max-size", type=int, help="Check every partition of size <= S")
@click.pass_context
def theorem3(ctx, partition, max_size):
    """LR formula coefficients equal the exact linear-solve coefficients."""
    _execute(ctx, "verify theorem3", [partition] if partition is not None else [], max_size=max_size)


@verify.command()
@click.option("--max-degree", type=int, help="Largest degree d (default: verify.max_degree)")
@click.pass_context
def multiplicity(ctx, max_degree):
    """Sum of p(n) over the weights of degree d equals p_odd(d)."""
    _execute(ctx, "verify multiplicity", max_degree=max_degree)


@verify.command()
@click.option("--order", type=int, help="Truncation order of the series (default: verify.order)")
@click.pass_context
def gauss(ctx, order):
    """The Gauss identity for phi(q^2)/phi(q) as truncated series."""
    _execute(ctx, "verify gauss", order=order)


@verify.command()
@click.option("--max-size", type=int, help="Check every partition of size <= S")
@click.pass_context
def proposition1(ctx, max_size):
    """Reduced Schur functions are odd supported and homogeneous of their weight's degree."""
    _execute(ctx, "verify proposition1", max_size=max_size)


@verify.command()
@click.option("--max-r", type=int, help="Largest staircase index (default: verify.max_r)")
@click.pass_context
def maximal(ctx, max_r):
    """Staircase Schur functions involve no even variable."""
    _execute(ctx, "verify maximal", max_r=max_r)


@verify.command()
@click.argument("file", type=click.Path())
@click.option("--check", type=click.Choice(BATCH_CHECKS), default="theorem3", show_default=True)
@click.pass_context
def batch(ctx, file, check):
    """Run one check on every partition line of FILE."""
    _execute(ctx, "verify batch", [file], check=check)


@main.group()
def vertex():
    """Heisenberg and vertex operators on C[t1, t3, t5, ...]."""


@vertex.command()
@click.argument("polynomial")
@click.option("--k", "k", type=int, help="Mode of X_k to apply")
@click.option("--operator", "-o", help="Operator by name instead: a3, a-1, X0, I")
@click.pass_context
def apply(ctx, polynomial, k, operator):
    """Apply X_k to a polynomial (1/24*t1^4 + t1*t3) or to the reduced Schur function of a partition."""
    _execute(ctx, "vertex apply", [polynomial], k=k, operator=operator)


@vertex.command()
@click.option("--degree", type=int, help="Check on every monomial of degree <= D (default: verify.vertex_degree)")
@click.option("--max-a", type=int, help="Largest |j| for a_j (default: 7)")
@click.option("--max-k", type=int, help="Largest |k| for X_k in [a_j, X_k] (default: 4)")
@click.option("--max-x", type=int, help="Largest |j|, |k| for the [X_j, X_k] fits (default: 2)")
@click.pass_context
def commutators(ctx, degree, max_a, max_k, max_x):
    """Check [a_i, a_j] and [a_j, X_k]; fit [X_j, X_k] to a_s, X_s and I."""
    _execute(ctx, "vertex commutators", degree=degree, max_a=max_a, max_k=max_k, max_x=max_x)


@main.command()
@click.option("--limit", "-l", default=20, type=int, help="Number of runs to show (default: 20)")
@click.option("--filter", "command", help="Only runs of this command, e.g. 'verify theorem3'")
@click.pass_context
def history(ctx, limit, command):
    """Recent runs recorded with --save-to-db."""
    _execute(ctx, "history", limit=limit, filter=command)


if __name__ == "__main__":
    main()

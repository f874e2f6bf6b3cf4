"""Command-line interface for pitelescope."""

import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Any, List, NoReturn, Optional

import typer
import yaml
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.progress import BarColumn, MofNCompleteColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table

from pitelescope.arith.bigreal import BigReal
from pitelescope.arith.constants import pi_reference
from pitelescope.arith.rational import format_rational, parse_rational
from pitelescope.catalog.checks import verify_entry
from pitelescope.catalog.entries import all_entries, get_entry, select_entries
from pitelescope.catalog.models import CatalogEntry, EntryKind
from pitelescope.catalog.serialize import entry_to_dict
from pitelescope.config.defaults import DEFAULT_CONFIG_YAML
from pitelescope.config.loader import invocation_config
from pitelescope.config.models import CliConfig, RuntimeSettings, TelescopeConfig
from pitelescope.errors import CatalogLookupError, TelescopeError
from pitelescope.evaluator.numeric import (
    bits_for_digits,
    extrapolate_tau,
    levels_for_digits,
    sum_direct,
    sum_telescoped,
    verify_identity,
)
from pitelescope.evaluator.report import EvalReport
from pitelescope.logging import configure_logging
from pitelescope.renderers.base import BaseRenderer
from pitelescope.renderers.json.renderer import JsonRenderer
from pitelescope.renderers.latex.renderer import LatexRenderer
from pitelescope.series.family import limit_value
from pitelescope.series.params import FamilyId, SeriesParams, validate

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

RENDERERS: dict[str, type[BaseRenderer]] = {"json": JsonRenderer, "latex": LatexRenderer}

app = typer.Typer(
    name="pitelescope",
    help="Evaluate and verify telescoping series for products of sines over powers of pi.",
    add_completion=True,
)
console = Console()
err_console = Console(stderr=True)

CONFIG_OPTION = typer.Option(None, "--config", "-c", help="Configuration file (YAML)")
OUTPUT_OPTION = typer.Option(None, "--output", "-o", help="Output format: text or json")


def _fail(message: str, code: int = EXIT_USAGE) -> NoReturn:
    err_console.print(f"[red]{escape(message)}[/red]")
    raise typer.Exit(code)


def _echo_json(payload: Any) -> None:
    typer.echo(json.dumps(payload, indent=2, ensure_ascii=False))


def _settings(
    subcommand: str,
    config_path: Optional[Path],
    output: Optional[str],
    **evaluation: Any,
) -> tuple[TelescopeConfig, CliConfig]:
    """Flags over the config file over defaults; exits on a bad or unreadable config."""
    try:
        return invocation_config(subcommand, config_path, output, evaluation)
    except (ValidationError, yaml.YAMLError) as e:
        _fail(f"Invalid configuration: {e}")
    except OSError as e:
        _fail(str(e), EXIT_IO)


def _family(name: str) -> FamilyId:
    try:
        return FamilyId(name.upper())
    except ValueError:
        _fail(f"Unknown family: {name}. Use T1 or T12.")


def _lookup(ids: List[str]) -> list[CatalogEntry]:
    try:
        return [get_entry(entry_id) for entry_id in ids]
    except CatalogLookupError as e:
        _fail(str(e))


def _tolerance(cfg: TelescopeConfig) -> Fraction:
    exponent = cfg.evaluation.tolerance_exp or cfg.evaluation.digits
    return Fraction(1, 10**exponent)


def _workers() -> int:
    try:
        threads = RuntimeSettings().threads
    except ValidationError as e:
        _fail(f"Invalid PI_TELESCOPE_THREADS: {e}")
    return threads or os.cpu_count() or 1


def _status(passed: bool) -> str:
    return "[green]PASS[/green]" if passed else "[red]FAIL[/red]"


def _summary(entry: CatalogEntry) -> str:
    return f"{entry.id}  {entry.family_params.describe()}  sum = {entry.printed_lhs}"


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log numeric details to stderr"),
) -> None:
    """Telescoping series for prod sin(pi x)/pi^m and pi^m/prod sin(pi x)."""
    configure_logging(verbose, console=err_console)


@app.command("list")
def list_entries(
    family: Optional[str] = typer.Option(None, "--family", help="T1 or T12"),
    kind: Optional[str] = typer.Option(None, "--kind", help="example or corollary"),
    config: Optional[Path] = CONFIG_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
) -> None:
    """
    List catalog entries with their one-line identities.

    Examples:
        pitelescope list --family T1
        pitelescope list --kind corollary -o json
    """
    _, cli = _settings("list", config, output)
    wanted_family = _family(family) if family is not None else None
    wanted_kind: Optional[EntryKind] = None
    if kind is not None:
        try:
            wanted_kind = EntryKind(kind.lower())
        except ValueError:
            _fail(f"Unknown kind: {kind}. Use example or corollary.")

    entries = select_entries(wanted_family, wanted_kind)
    if cli.output_format == "json":
        _echo_json(
            [{"id": e.id, "identity": f"{e.family_params.describe()} sum = {e.printed_lhs}"}
             for e in entries]
        )
        return
    for entry in entries:
        console.print(_summary(entry), markup=False, highlight=False, soft_wrap=True)


@app.command()
def show(
    entry_id: str = typer.Argument(..., help="Catalog entry id, e.g. t1.ex9"),
    digits: Optional[int] = typer.Option(None, "--digits", "-d", help="Digits of the target"),
    config: Optional[Path] = CONFIG_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
) -> None:
    """
    Show one catalog entry: parameters, rho, printed value and its numeric target.
    """
    _, cli = _settings("show", config, output, digits=digits)
    (entry,) = _lookup([entry_id])
    target = entry.printed_lhs.numeric(bits_for_digits(cli.precision_digits))
    target_text = target.to_decimal_string(cli.precision_digits)

    if cli.output_format == "json":
        _echo_json({**entry_to_dict(entry), "target": target_text})
        return
    lines = [
        f"id:          {entry.id}",
        f"source:      {entry.provenance}",
        f"parameters:  {entry.family_params.describe()}",
        f"rho:         {format_rational(entry.rho)}",
        f"printed sum: {entry.printed_lhs}",
        f"target:      {target_text}",
    ]
    for line in lines:
        console.print(line, markup=False, highlight=False, soft_wrap=True)


@app.command()
def verify(
    ids: Optional[List[str]] = typer.Argument(None, help="Catalog entry ids"),
    all_: bool = typer.Option(False, "--all", help="Verify every catalog entry"),
    digits: Optional[int] = typer.Option(None, "--digits", "-d", help="Decimal digits"),
    tolerance_exp: Optional[int] = typer.Option(
        None, "--tolerance-exp", help="Pass at 10^-T (default: digits)"
    ),
    base: Optional[int] = typer.Option(None, "--base", help="First Richardson node"),
    levels: Optional[int] = typer.Option(None, "--levels", help="Richardson levels"),
    config: Optional[Path] = CONFIG_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
) -> None:
    """
    Verify printed identities numerically against their exact right-hand sides.

    Examples:
        pitelescope verify t1.ex9 --digits 10
        pitelescope verify --all
    """
    cfg, cli = _settings(
        "verify", config, output,
        digits=digits, tolerance_exp=tolerance_exp, base=base, levels=levels,
    )
    if all_ and ids:
        _fail("Give entry ids or --all, not both.")
    if all_:
        entries = all_entries()
    elif ids:
        entries = sorted(_lookup(ids), key=lambda entry: entry.id)
    else:
        _fail("Nothing to verify: give entry ids or --all.")

    precision = cfg.evaluation.precision_bits or max(
        bits_for_digits(cli.precision_digits), cfg.catalog.verify_precision_bits
    )
    tolerance = _tolerance(cfg)

    def run(entry: CatalogEntry) -> EvalReport:
        return verify_entry(entry, precision, tolerance, base=cli.base, levels=cli.levels)

    reports: list[EvalReport] = []
    try:
        with ThreadPoolExecutor(max_workers=_workers()) as pool:
            if cli.output_format == "json" or len(entries) == 1:
                reports = list(pool.map(run, entries))
            else:
                with Progress(
                    SpinnerColumn(),
                    TextColumn("[progress.description]{task.description}"),
                    BarColumn(),
                    MofNCompleteColumn(),
                    console=err_console,
                    transient=True,
                ) as progress:
                    task = progress.add_task("Verifying...", total=len(entries))
                    for report in pool.map(run, entries):
                        reports.append(report)
                        progress.advance(task)
    except TelescopeError as e:
        _fail(str(e))
    reports.sort(key=lambda report: report.label or "")
    failed = sum(not report.passed for report in reports)

    if cli.output_format == "json":
        _echo_json([report.to_json(cli.precision_digits + 2) for report in reports])
    else:
        exponent = cfg.evaluation.tolerance_exp or cli.precision_digits
        table = Table(title=f"Verification at 10^-{exponent}")
        table.add_column("id", no_wrap=True)
        table.add_column("result")
        table.add_column("abs error", justify="right")
        table.add_column("estimate", justify="right")
        table.add_column("nodes", justify="right")
        table.add_column("ms", justify="right")
        for report in reports:
            table.add_row(
                report.label or "",
                _status(report.passed),
                report.abs_error.to_decimal_string(3),
                report.error_estimate.to_decimal_string(3),
                str(report.work),
                f"{report.wall_time * 1000:.0f}",
            )
        console.print(table)
        console.print(f"{len(reports) - failed}/{len(reports)} passed")

    if failed:
        raise typer.Exit(EXIT_FAILED)


@app.command("eval")
def eval_series(
    family: str = typer.Option(..., "--family", help="T1 or T12"),
    m: Optional[int] = typer.Option(None, "--m", help="Number of indices (checked against --x)"),
    x: List[str] = typer.Option(..., "--x", help="Rational in (0, 1), repeated per index"),
    p: Optional[List[int]] = typer.Option(None, "--p", help="Repeated per index (default 0)"),
    q: Optional[List[int]] = typer.Option(None, "--q", help="Repeated per index (default 0)"),
    r: Optional[List[int]] = typer.Option(None, "--r", help="Repeated per index (default 0)"),
    digits: Optional[int] = typer.Option(None, "--digits", "-d", help="Decimal digits"),
    method: Optional[str] = typer.Option(
        None, "--method", help="richardson, direct or telescoped"
    ),
    base: Optional[int] = typer.Option(None, "--base", help="First Richardson node"),
    levels: Optional[int] = typer.Option(None, "--levels", help="Richardson levels"),
    max_terms: Optional[int] = typer.Option(None, "--max-terms", help="Terms for direct sums"),
    tolerance_exp: Optional[int] = typer.Option(
        None, "--tolerance-exp", help="Pass at 10^-T (default: digits)"
    ),
    config: Optional[Path] = CONFIG_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
) -> None:
    """
    Evaluate one series instance and compare it with its closed form.

    Examples:
        pitelescope eval --family T1 --x 1/2 --digits 12
        pitelescope eval --family T12 --x 1/2 --x 1/2
        pitelescope eval --family T1 --x 1/3 --p 1 --q 0 --r 1 --method direct
    """
    cfg, cli = _settings(
        "eval", config, output,
        digits=digits, method=method, base=base, levels=levels,
        max_terms=max_terms, tolerance_exp=tolerance_exp,
    )
    try:
        xs = [parse_rational(value) for value in x]
    except TelescopeError as e:
        _fail(str(e))
    if m is not None and m != len(xs):
        _fail(f"--m {m} does not match the {len(xs)} values given with --x")

    params = SeriesParams.build(_family(family), xs, p or None, q or None, r or None)
    violations = validate(params)
    if violations:
        for violation in violations:
            err_console.print(f"[red]{escape(violation)}[/red]")
        raise typer.Exit(EXIT_USAGE)

    precision = cfg.evaluation.precision_bits or bits_for_digits(cli.precision_digits)
    tolerance = _tolerance(cfg)
    try:
        if cfg.evaluation.method == "direct":
            report = sum_direct(params, precision, cli.max_terms, tolerance)
        elif cfg.evaluation.method == "telescoped":
            report = sum_telescoped(params, precision, cli.max_terms, tolerance)
        else:
            report = verify_identity(
                params, precision, tolerance, base=cli.base, levels=cli.levels
            )
    except TelescopeError as e:
        _fail(str(e))

    shown = cli.precision_digits + 2
    if cli.output_format == "json":
        _echo_json(report.to_json(shown))
    else:
        lines = [
            f"series:        {params.describe()}",
            f"approximation: {report.approximation.to_decimal_string(shown)}",
            f"target:        {report.target.to_decimal_string(shown)}",
            f"abs error:     {report.abs_error.to_decimal_string(3)}",
            f"estimate:      {report.error_estimate.to_decimal_string(3)}",
            f"method:        {report.method.value} ({report.work} "
            f"{'levels' if report.method.value == 'richardson' else 'terms'})",
            f"time:          {report.wall_time * 1000:.1f} ms",
        ]
        for line in lines:
            console.print(line, markup=False, highlight=False, soft_wrap=True)
        console.print(_status(report.passed))

    if not report.passed:
        raise typer.Exit(EXIT_FAILED)


@app.command("pi")
def compute_pi(
    via: str = typer.Option(..., "--via", help="Catalog entry whose series computes pi"),
    digits: Optional[int] = typer.Option(None, "--digits", "-d", help="Decimal digits"),
    levels: Optional[int] = typer.Option(None, "--levels", help="Richardson levels"),
    base: Optional[int] = typer.Option(None, "--base", help="First Richardson node"),
    config: Optional[Path] = CONFIG_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
) -> None:
    """
    Compute pi from the extrapolated limit of one catalog series.

    The digits come from the series alone; Machin's formula is used only to
    count the digits that differ.

    Examples:
        pitelescope pi --via t1.cor4.m1 --digits 15
    """
    _, cli = _settings("pi", config, output, digits=digits, levels=levels, base=base)
    (entry,) = _lookup([via])
    params = entry.family_params
    limit = limit_value(params)
    if limit.surd_factor is None:
        _fail(f"{entry.id} has no exact surd limit; pi cannot be isolated from it")

    started = time.perf_counter()
    wanted = cli.precision_digits
    precision = bits_for_digits(wanted)
    level_count = cli.levels or levels_for_digits(wanted)
    try:
        best, spread = extrapolate_tau(params, cli.base, level_count, precision)
    except TelescopeError as e:
        _fail(str(e))

    # lim tau = s pi^-m for T1 and s pi^m for T12
    surd = limit.surd_factor.evaluate(precision)
    ratio = surd / best if params.family is FamilyId.T1 else best / surd
    value = ratio.nth_root(params.m)
    error = (value * (spread / abs(best))).div_int(params.m)
    floor = value * BigReal.epsilon(precision)
    if error < floor:
        error = floor

    shown = max(1, min(wanted, math.floor(-error.log10_magnitude())))
    computed = value.to_decimal_string(shown)
    reference = pi_reference(precision).to_decimal_string(shown)
    diff = sum(a != b for a, b in zip(computed, reference)) + abs(len(computed) - len(reference))
    elapsed = time.perf_counter() - started

    if cli.output_format == "json":
        _echo_json(
            {
                "via": entry.id,
                "pi": computed,
                "digits": shown,
                "requested": wanted,
                "error_estimate": error.to_decimal_string(3),
                "diff": diff,
                "levels": level_count,
                "base": cli.base,
                "millis": round(elapsed * 1000, 3),
            }
        )
        return
    console.print(computed, markup=False, highlight=False)
    console.print(
        f"[dim]{shown} of {wanted} digits via {escape(entry.id)}, "
        f"error estimate {error.to_decimal_string(3)}, "
        f"{diff} differing from Machin's formula[/dim]"
    )


@app.command()
def emit(
    ids: Optional[List[str]] = typer.Argument(None, help="Catalog entry ids"),
    all_: bool = typer.Option(False, "--all", help="Emit every catalog entry as one document"),
    format: str = typer.Option("json", "--format", "-f", help="Emission format: json or latex"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write to this file instead of stdout"),
    config: Optional[Path] = CONFIG_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
) -> None:
    """
    Emit catalog entries as JSON or LaTeX.

    Examples:
        pitelescope emit t1.ex9 --format json
        pitelescope emit --all --format latex --out identities.tex
    """
    _, cli = _settings("emit", config, output)
    renderer_class = RENDERERS.get(format.lower())
    if renderer_class is None:
        _fail(f"Invalid format: {format}. Use 'json' or 'latex'.")
    if all_ and ids:
        _fail("Give entry ids or --all, not both.")
    if all_:
        entries = all_entries()
    elif ids:
        entries = _lookup(ids)
    else:
        _fail("Nothing to emit: give entry ids or --all.")

    renderer = renderer_class()
    if out is None:
        typer.echo(renderer.render_string(entries, standalone=all_), nl=False)
        return
    try:
        renderer.render(entries, out, standalone=all_)
    except OSError as e:
        _fail(f"Cannot write {out}: {e}", EXIT_IO)

    if cli.output_format == "json":
        _echo_json({"written": str(out), "format": format.lower(), "entries": len(entries)})
    else:
        console.print(f"[green]Wrote {len(entries)} entries to {escape(str(out))}[/green]")


@app.command()
def init(
    out: Path = typer.Option(
        Path("./pitelescope.yaml"),
        "--out",
        help="Output configuration file path",
    ),
    force: bool = typer.Option(
        False,
        "--force",
        "-f",
        help="Overwrite existing file",
    ),
    output: Optional[str] = OUTPUT_OPTION,
) -> None:
    """
    Initialize a new configuration file with defaults.
    """
    if output not in (None, "text", "json"):
        _fail(f"Invalid output format: {output}. Use 'text' or 'json'.")
    if out.exists() and not force:
        _fail(f"File already exists: {out}. Use --force to overwrite.")

    try:
        out.write_text(DEFAULT_CONFIG_YAML, encoding="utf-8")
    except OSError as e:
        _fail(f"Cannot write {out}: {e}", EXIT_IO)

    if output == "json":
        _echo_json({"written": str(out)})
    else:
        console.print(f"[green]Configuration file created: {escape(str(out))}[/green]")


if __name__ == "__main__":
    app()

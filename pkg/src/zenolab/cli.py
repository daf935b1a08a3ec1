"""``zenolab`` command line: scans, reproduction recipes, coefficient solving, bound checks."""

from __future__ import annotations

from pathlib import Path

import click

from .compact import SolverError, solve_compact_coefficients
from .experiments import RECIPES, parse_config, run_scan, verify_bounds, write_text


def _write_or_fail(path: str, text: str) -> None:
    try:
        write_text(path, text)
    except OSError as exc:
        raise click.ClickException(f"cannot write {path}: {exc}") from exc


@click.group()
def main():
    """Higher-order quantum Zeno sequence laboratory."""


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(dir_okay=False),
              help="Flat key = value scan description.")
@click.option("--output", default=None, help="CSV path (overrides the config's output key).")
@click.option("--jobs", default=1, show_default=True, type=click.IntRange(min=1))
def scan(config_path, output, jobs):
    """Evaluate a parameter grid and write one CSV row per point."""
    try:
        cfg = parse_config(Path(config_path).read_text())
        text = run_scan(cfg, jobs)
    except (OSError, ValueError) as exc:
        raise click.ClickException(str(exc)) from exc
    dest = output or cfg.output
    if dest:
        _write_or_fail(dest, text)
        click.echo(f"wrote {text.count(chr(10)) - 1} lines to {dest}")
    else:
        click.echo(text, nl=False)


@main.command()
@click.argument("name", type=click.Choice(sorted(RECIPES)))
@click.option("--output", default=None, help="CSV path; defaults to <name>.csv.")
@click.option("--jobs", default=1, show_default=True, type=click.IntRange(min=1))
def reproduce(name, output, jobs):
    """Run a pinned recipe, write its CSV and print PASS/FAIL verdicts."""
    result = RECIPES[name](jobs=jobs)
    dest = output or f"{name}.csv"
    _write_or_fail(dest, result.csv())
    for check in result.checks:
        click.echo(check.line())
    click.echo(f"data: {dest}")
    if not result.passed:
        raise SystemExit(1)


@main.command("solve-coeffs")
@click.argument("order", type=click.Choice(["3", "4"]))
def solve_coeffs(order):
    """Solve the compact-sequence coefficient system of order 3 or 4."""
    try:
        coeffs = solve_compact_coefficients(int(order))
    except SolverError as exc:
        raise click.ClickException(str(exc)) from exc
    for name, value in zip(("alpha", "beta", "gamma"), coeffs.values):
        click.echo(f"{name} = {value:.12f}")
    for i, r in enumerate(coeffs.residuals, 1):
        click.echo(f"residual[{i}] = {r:.3e}")


@main.command("verify-bounds")
@click.option("--trials", default=200, show_default=True, type=int)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--output", default=None, help="Optional path for the report text.")
def verify_bounds_cmd(trials, seed, output):
    """Check every analytic bound against simulation on seeded random systems."""
    if trials < 1:
        raise click.BadParameter("must be >= 1", param_hint="--trials")
    report = verify_bounds(trials, seed)
    text = report.text()
    click.echo(text)
    if output:
        _write_or_fail(output, text + "\n")
    click.echo("PASS" if report.passed else "FAIL")
    if not report.passed:
        raise SystemExit(1)


if __name__ == "__main__":
    main()

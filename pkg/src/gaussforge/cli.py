"""Command-line interface.

Machine-readable output (JSON or CSV) goes to stdout only; diagnostics go
to stderr.  Exit codes: 0 success, 1 domain error (invalid recipe, state
outside the supported class, failed reconstruction, non-CM input matrix),
2 input error (malformed files, bad argument ranges).
"""

from __future__ import annotations

import functools
import json
import pathlib
import sys

import click
import numpy as np

from . import jsonio, tolerances
from .engineering import Recipe, engineer_state, free_parameter_audit, validate_recipe
from .entanglement import entropy_one_vs_rest, full_report, log_negativity_pair
from .errors import GaussForgeError, InputFormatError
from .gmps import parity_table, table_csv
from .standard_form import (
    harmonic_ground_state,
    reconstruct_diagonal,
    ring_potential,
    standard_form_to_cm,
    to_standard_form,
)
from .symplectic import CovarianceMatrix, is_pure, williamson_spectrum

_EXIT_DOMAIN = 1
_EXIT_INPUT = 2


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InputFormatError as exc:
            _fail(str(exc), _EXIT_INPUT)
        except (GaussForgeError, ValueError, np.linalg.LinAlgError) as exc:
            _fail(str(exc), _EXIT_DOMAIN)

    return wrapper


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else pathlib.Path(path).read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None
    try:
        return jsonio.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from None


def _emit(text: str, out_path):
    if out_path is None or out_path == "-":
        click.echo(text, nl=False)
    else:
        pathlib.Path(out_path).write_text(text)


_precision_option = click.option(
    "--precision",
    type=click.IntRange(1, 17),
    default=17,
    show_default=True,
    help="Significant digits for floats in the output.",
)


@click.group()
def main():
    """Engineer, analyze, and convert pure N-mode Gaussian states."""
    try:
        tolerances.scale()
    except ValueError as exc:
        raise click.UsageError(str(exc))


@main.command("engineer")
@click.option("--recipe", "recipe_path", required=True, help="Recipe JSON (or - for stdin).")
@click.option("--out", "out_path", default=None, help="Write the CM JSON here instead of stdout.")
@_precision_option
@_handle_errors
def cmd_engineer(recipe_path, out_path, precision):
    """Build a pure state from a recipe and emit its covariance matrix."""
    recipe = Recipe.from_dict(_read_json(recipe_path))
    check = validate_recipe(recipe)
    for warning in check.warnings:
        click.echo(f"warning: {warning}", err=True)
    cm = engineer_state(recipe)
    click.echo(f"{free_parameter_audit(recipe)} parameters", err=True)
    click.echo(f"purity residual {is_pure(cm).residual:.3e}", err=True)
    _emit(jsonio.dumps(cm.to_dict(), precision) + "\n", out_path)


@main.command("analyze")
@click.option("--cm", "cm_path", required=True, help="Covariance-matrix JSON (or - for stdin).")
@_precision_option
@_handle_errors
def cmd_analyze(cm_path, precision):
    """Report spectrum, rank, purity, and entanglement of a state."""
    cm = CovarianceMatrix.from_dict(_read_json(cm_path))
    spectrum = williamson_spectrum(cm)
    purity = is_pure(cm)
    doc = {
        "n_modes": cm.n_modes,
        "symplectic_spectrum": list(spectrum.values),
        "symplectic_rank": spectrum.rank,
        "pure": purity.pure,
        "purity_residual": purity.residual,
        "entanglement": None,
    }
    if purity.pure:
        doc["entanglement"] = full_report(cm).to_dict()
    else:
        click.echo("state is not pure; entanglement report omitted", err=True)
    _emit(jsonio.dumps(doc, precision) + "\n", None)


@main.command("standard-form")
@click.option("--cm", "cm_path", default=None, help="Covariance-matrix JSON to normalize.")
@click.option("--vq", "vq_path", default=None, help="Standard-form JSON providing off-diagonals.")
@click.option("--reconstruct", is_flag=True, help="Complete the diagonal from --vq off-diagonals.")
@_precision_option
@_handle_errors
def cmd_standard_form(cm_path, vq_path, reconstruct, precision):
    """Convert a state to standard form, or rebuild one from correlations."""
    if (cm_path is None) == (vq_path is None):
        raise click.UsageError("provide exactly one of --cm or --vq")
    if cm_path is not None:
        if reconstruct:
            raise click.UsageError("--reconstruct applies only to --vq input")
        sf = to_standard_form(CovarianceMatrix.from_dict(_read_json(cm_path)))
        _emit(jsonio.dumps(sf.to_dict(), precision) + "\n", None)
        return
    if not reconstruct:
        raise click.UsageError("--vq input requires --reconstruct")
    doc = _read_json(vq_path)
    if not isinstance(doc, dict) or "n_modes" not in doc or "vq" not in doc:
        raise InputFormatError('expected an object with keys "n_modes" and "vq"')
    n_modes = doc["n_modes"]
    if not isinstance(n_modes, int) or n_modes < 1:
        raise InputFormatError("n_modes must be a positive integer")
    try:
        vq = np.array(doc["vq"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputFormatError(f"vq is not a numeric matrix: {exc}") from None
    if vq.shape != (n_modes, n_modes):
        raise InputFormatError(f"vq must be a {n_modes}x{n_modes} row-major array")
    if not np.array_equal(vq, vq.T):
        raise ValueError("vq must be symmetric")
    rows, cols = np.triu_indices(n_modes, k=1)
    sf = reconstruct_diagonal(vq[rows, cols], n_modes)
    out = {"standard_form": sf.to_dict(), "cm": standard_form_to_cm(sf).to_dict()}
    _emit(jsonio.dumps(out, precision) + "\n", None)


@main.command("gmps")
@click.option("--n-min", type=int, required=True, help="Smallest chain size.")
@click.option("--n-max", type=int, required=True, help="Largest chain size.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "csv"]),
    default="json",
    show_default=True,
)
@_precision_option
@_handle_errors
def cmd_gmps(n_min, n_max, fmt, precision):
    """Emit the EPR-bond lower-bound table over a size range."""
    if not 2 <= n_min <= n_max <= 10**6:
        raise click.UsageError(
            f"range must satisfy 2 <= n_min <= n_max <= 10^6, got [{n_min}, {n_max}]"
        )
    rows = parity_table(n_min, n_max)
    if fmt == "csv":
        _emit(table_csv(rows), None)
    else:
        _emit(jsonio.dumps([row.to_dict() for row in rows], precision) + "\n", None)


@main.command("ring")
@click.option("--n", "n_modes", type=int, required=True, help="Ring size, at least 3.")
@click.option("--coupling", type=float, required=True, help="Spring constant, nonnegative.")
@_precision_option
@_handle_errors
def cmd_ring(n_modes, coupling, precision):
    """Ground state of a spring-coupled ring, with entanglement summary."""
    if n_modes < 3:
        raise click.UsageError(f"ring size must be at least 3, got {n_modes}")
    if coupling < 0.0:
        raise click.UsageError(f"coupling must be nonnegative, got {coupling}")
    cm = harmonic_ground_state(ring_potential(n_modes, coupling))
    doc = {
        "n_modes": n_modes,
        "coupling": coupling,
        "cm": cm.to_dict(),
        "per_mode_entropy": [entropy_one_vs_rest(cm, k) for k in range(1, n_modes + 1)],
        "nearest_neighbor_logneg": log_negativity_pair(cm, 1, 2),
    }
    _emit(jsonio.dumps(doc, precision) + "\n", None)


if __name__ == "__main__":
    main()

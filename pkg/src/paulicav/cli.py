"""Command-line interface: count / table1 / spectrum / thermo.

All CSV output is UTF-8, comma-separated, LF-terminated, with a header
row; floats are printed with 12 significant digits so identical runs are
byte-identical.  Files are written atomically (temp file + rename).

Exit codes: 0 success, 2 validation error, 3 compute cap exceeded,
4 check-mode mismatch.
"""

from __future__ import annotations

import dataclasses
import functools
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from importlib import resources
from pathlib import Path

import click
import numpy as np

from .errors import ComputeCapError, ValidationError
from .hamiltonian import basis_for, build_hamiltonian, diagonalize, restrict
from .model import (
    CavityMode,
    EnsembleSpec,
    Manifold,
    MoleculeModel,
    Statistics,
    load_model,
    synthetic_model,
)
from .observables import DARK_MAX, PHOTONIC_MIN, brightness, classify_expectation
from .symmetry import count_first_excited, project
from .thermo import sector_thermo_compare

EXIT_VALIDATION = 2
EXIT_CAP = 3
EXIT_CHECK = 4

_TABLE1_SYSTEMS = ((2, (1,)), (5, (1, 2, 3, 4)), (10, (1, 3, 5, 7)))
_TABLE1_N = (2, 3, 4)
_SECTOR_ORDER = (Statistics.NONE, Statistics.BOSON, Statistics.FERMION)


def _fmt(x: float) -> str:
    """12 significant digits, locale-independent."""
    return format(float(x), ".12g")


def _pct_int(part: int, whole: int) -> int:
    """Percentage rounded half away from zero, exactly in integers."""
    if whole == 0:
        return 0
    return (200 * part + whole) // (2 * whole)


def _write_atomic(path: Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: str | None) -> None:
    if out:
        _write_atomic(Path(out), text)
    else:
        click.echo(text, nl=False)


def _handle_errors(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ValidationError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_VALIDATION)
        except ComputeCapError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_CAP)

    return wrapper


def _resolve_molecule(model_path, levels, ground, excitation) -> MoleculeModel:
    if model_path and levels:
        raise ValidationError("--model and --levels/--ground are exclusive")
    if model_path:
        return load_model(model_path)
    if levels is None:
        raise ValidationError("need either --model or --levels/--ground")
    if ground is None:
        raise ValidationError("--levels requires --ground")
    return synthetic_model(levels, ground, excitation=excitation)


def _parse_stats(values: tuple[str, ...]) -> tuple[Statistics, ...]:
    if not values or "all" in values:
        return _SECTOR_ORDER
    chosen = tuple(Statistics(v) for v in dict.fromkeys(values))
    return tuple(s for s in _SECTOR_ORDER if s in chosen)


def _count_row(molecule: MoleculeModel, n: int, manifold: Manifold, n_max: int):
    """Dims and brightness traces for the three sectors over one basis."""
    spec = EnsembleSpec(
        molecule=molecule,
        n=n,
        cavity=CavityMode(photon_energy=1.0, n_max=n_max),
        manifold=manifold,
    )
    basis = basis_for(spec)
    row = {}
    for stat in _SECTOR_ORDER:
        sub = project(basis, stat)
        rep = brightness(sub)
        row[stat] = (sub.dim, int(rep.trace_nph))
    return row


def _table1_rows():
    rows = []
    for m, ground_counts in _TABLE1_SYSTEMS:
        for m_g in ground_counts:
            for n in _TABLE1_N:
                molecule = synthetic_model(m, m_g)
                counts = _count_row(molecule, n, Manifold.FIRST_EXCITED, 1)
                rows.append((m, m_g, n, counts))
    return rows


def _table1_csv(stats: tuple[Statistics, ...]) -> str:
    per_sector = {
        Statistics.NONE: ("states_none", "bright_none"),
        Statistics.BOSON: (
            "states_boson,states_boson_pct",
            "bright_boson,bright_boson_pct",
        ),
        Statistics.FERMION: (
            "states_fermion,states_fermion_pct",
            "bright_fermion,bright_fermion_pct",
        ),
    }
    header = (
        "m,m_g,n,"
        + ",".join(per_sector[s][0] for s in stats)
        + ","
        + ",".join(per_sector[s][1] for s in stats)
    )
    lines = [header]
    for m, m_g, n, counts in _table1_rows():
        none_dim = counts[Statistics.NONE][0]
        cells = [str(m), str(m_g), str(n)]
        for stat in stats:
            dim = counts[stat][0]
            cells.append(str(dim))
            if stat is not Statistics.NONE:
                cells.append(str(_pct_int(dim, none_dim)))
        for stat in stats:
            dim, trace = counts[stat]
            cells.append(str(trace))
            if stat is not Statistics.NONE:
                cells.append(str(_pct_int(trace, dim)))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


@click.group()
@click.version_option(version="0.1.0", prog_name="paulicav")
def main():
    """Pauli-allowed state counting, spectra and thermodynamics for
    molecular ensembles coupled to a cavity mode."""


@main.command()
@click.option("--levels", type=int, help="Synthetic model: number of levels m.")
@click.option("--ground", type=int, help="Synthetic model: ground-manifold size m_g.")
@click.option("--model", "model_path", type=click.Path(exists=True, dir_okay=False),
              help="Model JSON file (exclusive with --levels/--ground).")
@click.option("--molecules", "-n", "n", type=int, required=True,
              help="Number of identical molecules.")
@click.option("--manifold", type=click.Choice(["first-excited", "full"]),
              default="first-excited", show_default=True)
@click.option("--nmax", type=int, default=1, show_default=True,
              help="Photon cap for --manifold full.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write a CSV row instead of only printing the table.")
@_handle_errors
def count(levels, ground, model_path, n, manifold, nmax, out):
    """State counts and brightness for one (m, m_g, n) configuration."""
    molecule = _resolve_molecule(model_path, levels, ground, 1500.0)
    mode = Manifold(manifold)
    counts = _count_row(molecule, n, mode, nmax)
    none_dim, none_tr = counts[Statistics.NONE]
    b_dim, b_tr = counts[Statistics.BOSON]
    f_dim, f_tr = counts[Statistics.FERMION]

    click.echo("states: none | boson | fermion ; bright: none | boson | fermion")
    click.echo(
        f"{none_dim} | {b_dim} ({_pct_int(b_dim, none_dim)}%)"
        f" | {f_dim} ({_pct_int(f_dim, none_dim)}%)"
        f" | {none_tr} | {b_tr} ({_pct_int(b_tr, b_dim)}%)"
        f" | {f_tr} ({_pct_int(f_tr, f_dim)}%)"
    )
    if mode is Manifold.FIRST_EXCITED:
        for stat in _SECTOR_ORDER:
            expected = count_first_excited(molecule.m, molecule.m_g, n, stat)
            if counts[stat][0] != expected:
                raise ValidationError(
                    f"projection dim {counts[stat][0]} disagrees with the "
                    f"closed-form count {expected} for {stat.value}"
                )
    if out:
        header = (
            "m,m_g,n,states_none,states_boson,states_boson_pct,"
            "states_fermion,states_fermion_pct,"
            "bright_none,bright_boson,bright_boson_pct,"
            "bright_fermion,bright_fermion_pct"
        )
        row = ",".join(
            [
                str(molecule.m), str(molecule.m_g), str(n), str(none_dim),
                str(b_dim), _fmt(100.0 * b_dim / none_dim),
                str(f_dim), _fmt(100.0 * f_dim / none_dim),
                str(none_tr),
                str(b_tr), _fmt(100.0 * b_tr / b_dim if b_dim else 0.0),
                str(f_tr), _fmt(100.0 * f_tr / f_dim if f_dim else 0.0),
            ]
        )
        _write_atomic(Path(out), header + "\n" + row + "\n")
        click.echo(f"wrote {out}", err=True)


@main.command()
@click.option("--stats", multiple=True,
              type=click.Choice(["none", "boson", "fermion", "all"]),
              default=("all",), show_default=True,
              help="Column selection; repeatable.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Output CSV path (stdout if omitted).")
@click.option("--check", is_flag=True,
              help="Compare the full table against the packaged reference "
                   "and exit 4 on any difference.")
@_handle_errors
def table1(stats, out, check):
    """First-excitation-manifold counting table over the standard grid of
    2/5/10-level systems (all columns, exact integers)."""
    if check:
        generated = _table1_csv(_SECTOR_ORDER)
        reference = (
            resources.files("paulicav")
            .joinpath("data/table1_reference.csv")
            .read_text(encoding="utf-8")
        )
        if generated != reference:
            click.echo("table1 check FAILED: output differs from reference",
                       err=True)
            sys.exit(EXIT_CHECK)
        click.echo("table1 check passed: all rows match the reference table")
        return
    _emit(_table1_csv(_parse_stats(stats)), out)
    if out:
        click.echo(f"wrote {out}", err=True)


def _sector_tag(stat: Statistics) -> str:
    return stat.value


def _spectrum_one(spec: EnsembleSpec, rwa: bool):
    basis = basis_for(spec)
    sub = project(basis, spec.statistics)
    h = build_hamiltonian(spec, basis, rwa=rwa)
    return sub, diagonalize(restrict(h, sub), sub)


@main.command()
@click.option("--levels", type=int)
@click.option("--ground", type=int)
@click.option("--model", "model_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--molecules", "-n", "n", type=int, required=True)
@click.option("--manifold", type=click.Choice(["first-excited", "full"]),
              default="full", show_default=True)
@click.option("--stats", multiple=True,
              type=click.Choice(["none", "boson", "fermion", "all"]),
              default=("all",), show_default=True)
@click.option("--cavity-wn", type=float, default=1681.0, show_default=True,
              help="Cavity photon energy (cm-1).")
@click.option("--coupling", type=float, default=490.0, show_default=True,
              help="Light-matter coupling g (cm-1 per a.u. of dipole).")
@click.option("--nmax", type=int, default=1, show_default=True)
@click.option("--rwa", is_flag=True, help="Keep only excitation-conserving coupling.")
@click.option("--absolute", is_flag=True,
              help="Report absolute energies instead of energies relative to "
                   "the unsymmetrized ground state.")
@click.option("--dark-max", type=float, default=DARK_MAX, show_default=True)
@click.option("--photonic-min", type=float, default=PHOTONIC_MIN, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default="spectrum.csv",
              show_default=True, help="Base path; sector tag is inserted "
                                      "before the extension.")
@_handle_errors
def spectrum(levels, ground, model_path, n, manifold, stats, cavity_wn, coupling,
             nmax, rwa, absolute, dark_max, photonic_min, out):
    """Sector-resolved eigenvalues with photon character, one CSV per sector."""
    molecule = _resolve_molecule(model_path, levels, ground, cavity_wn)
    cavity = CavityMode(photon_energy=cavity_wn, n_max=nmax, coupling_g=coupling)
    wanted = _parse_stats(stats)
    run = wanted if absolute or Statistics.NONE in wanted else (
        (Statistics.NONE,) + wanted
    )
    base_spec = EnsembleSpec(molecule=molecule, n=n, cavity=cavity,
                             manifold=Manifold(manifold))

    with ThreadPoolExecutor(max_workers=len(run)) as pool:
        results = dict(
            zip(
                run,
                pool.map(
                    lambda s: _spectrum_one(
                        dataclasses.replace(base_spec, statistics=s), rwa
                    ),
                    run,
                ),
            )
        )
    offset = 0.0
    if not absolute:
        none_energies = results[Statistics.NONE][1].energies
        if none_energies.size == 0:
            raise ValidationError("empty unsymmetrized spectrum")
        offset = float(none_energies[0])

    out_path = Path(out)
    for stat in wanted:
        sub, spec_result = results[stat]
        lines = ["energy_cm1,photon_expectation,brightness_class"]
        for e, x in zip(spec_result.energies, spec_result.photon_expectations):
            cls = classify_expectation(float(x), dark_max, photonic_min)
            lines.append(f"{_fmt(e - offset)},{_fmt(x)},{cls}")
        target = out_path.with_name(
            f"{out_path.stem}_{_sector_tag(stat)}{out_path.suffix or '.csv'}"
        )
        _write_atomic(target, "\n".join(lines) + "\n")
        click.echo(f"sector={_sector_tag(stat)} dim={sub.dim} file={target}")


@main.command()
@click.option("--levels", type=int)
@click.option("--ground", type=int)
@click.option("--model", "model_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--molecules", "-n", "n", type=int, required=True)
@click.option("--manifold", type=click.Choice(["first-excited", "full"]),
              default="full", show_default=True)
@click.option("--stats", multiple=True,
              type=click.Choice(["none", "boson", "fermion", "all"]),
              default=("all",), show_default=True)
@click.option("--cavity-wn", type=float, default=1681.0, show_default=True)
@click.option("--coupling", type=float, default=490.0, show_default=True)
@click.option("--nmax", type=int, default=1, show_default=True)
@click.option("--rwa", is_flag=True)
@click.option("--tmin", type=float, default=1.0, show_default=True)
@click.option("--tmax", type=float, default=1000.0, show_default=True)
@click.option("--tstep", type=float, default=1.0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Output CSV path (stdout if omitted).")
@_handle_errors
def thermo(levels, ground, model_path, n, manifold, stats, cavity_wn, coupling,
           nmax, rwa, tmin, tmax, tstep, out):
    """Direct-summation thermodynamics per sector, with difference columns
    against the unsymmetrized baseline."""
    molecule = _resolve_molecule(model_path, levels, ground, cavity_wn)
    cavity = CavityMode(photon_energy=cavity_wn, n_max=nmax, coupling_g=coupling)
    wanted = _parse_stats(stats)
    if tstep <= 0 or tmax < tmin or tmin <= 0:
        raise ValidationError("need 0 < tmin <= tmax and tstep > 0")
    t_grid = np.arange(tmin, tmax + tstep / 2, tstep)
    spec = EnsembleSpec(molecule=molecule, n=n, cavity=cavity,
                        manifold=Manifold(manifold))
    comparison = sector_thermo_compare(spec, t_grid, statistics=wanted, rwa=rwa)

    for stat in wanted:
        shift = comparison.ground_shifts[stat]
        click.echo(
            f"E0[{stat.value}] - E0[none] = {_fmt(shift)} cm-1", err=True
        )

    header = ["T"]
    for stat in wanted:
        header += [f"{c}_{stat.value}" for c in ("q", "u", "c", "s", "g")]
    for stat in wanted:
        header += [f"d{c}_{stat.value}" for c in ("q", "u", "c", "s", "g")]
    lines = [",".join(header)]
    diffs = {stat: comparison.difference(stat) for stat in wanted}
    for i, t in enumerate(t_grid):
        cells = [_fmt(t)]
        for stat in wanted:
            tab = comparison.tables[stat]
            cells += [_fmt(col[i]) for col in (tab.q, tab.u, tab.c, tab.s, tab.g)]
        for stat in wanted:
            d = diffs[stat]
            cells += [_fmt(d[c][i]) for c in ("q", "u", "c", "s", "g")]
        lines.append(",".join(cells))
    _emit("\n".join(lines) + "\n", out)
    if out:
        click.echo(f"wrote {out}", err=True)


if __name__ == "__main__":
    main()

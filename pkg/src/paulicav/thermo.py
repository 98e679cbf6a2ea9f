"""Direct-summation thermodynamics over a computed spectrum.

Every eigenvalue enters the Boltzmann sums (no cutoff), referenced to the
sector's own ground state, so all outputs are invariant under a constant
energy shift.  With x_i = (E_i - E_0) / (k_B/hc * T):

    Q = sum_i exp(-x_i)
    U = R T <x>                    (internal energy)
    C = R (<x^2> - <x>^2)          (heat capacity)
    S = R (<x> + ln Q)             (entropy)
    G = -R T ln Q                  (free-energy contribution)

U and G are reported in kJ/mol, C and S in J/(mol K).  The model has no
volume degree of freedom; G here is the -RT ln Q term common to the
Helmholtz and Gibbs functions for internal states, and cross-sector
zero-point offsets E_0(sector) - E_0(baseline) are reported separately
rather than folded in.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from .constants import GAS_CONSTANT, KB_WAVENUMBER_PER_K
from .errors import ValidationError
from .hamiltonian import sector_spectrum
from .model import EnsembleSpec, Statistics


@dataclass(frozen=True, eq=False)
class ThermoTable:
    """Thermodynamic functions on a temperature grid."""

    temperatures: np.ndarray
    q: np.ndarray
    u: np.ndarray  # kJ/mol
    c: np.ndarray  # J/(mol K)
    s: np.ndarray  # J/(mol K)
    g: np.ndarray  # kJ/mol

    def __post_init__(self):
        for f in dataclasses.fields(self):
            getattr(self, f.name).flags.writeable = False


def _checked(energies, t):
    e = np.asarray(energies, dtype=np.float64)
    if e.size == 0:
        raise ValidationError("empty spectrum")
    if np.any(np.asarray(t) <= 0):
        raise ValidationError("temperature must be > 0")
    return e - e.min()


def partition_function(energies: np.ndarray, t: float) -> float:
    """Q(T) by direct summation over all levels, relative to the lowest."""
    rel = _checked(energies, t)
    return float(np.exp(-rel / (KB_WAVENUMBER_PER_K * t)).sum())


def thermo_table(energies: np.ndarray, t_grid: np.ndarray) -> ThermoTable:
    """Q, U, C, S, G on an ascending positive temperature grid."""
    t = np.asarray(t_grid, dtype=np.float64)
    if t.ndim != 1 or t.size == 0 or np.any(np.diff(t) <= 0):
        raise ValidationError("temperature grid must be ascending")
    rel = _checked(energies, t)
    x = rel[:, None] / (KB_WAVENUMBER_PER_K * t[None, :])
    w = np.exp(-x)
    q = w.sum(axis=0)
    xm = (x * w).sum(axis=0) / q
    x2 = (x * x * w).sum(axis=0) / q
    r = GAS_CONSTANT
    return ThermoTable(
        temperatures=t,
        q=q,
        u=r * t * xm / 1000.0,
        c=r * (x2 - xm * xm),
        s=r * (xm + np.log(q)),
        g=-r * t * np.log(q) / 1000.0,
    )


@dataclass(frozen=True, eq=False)
class SectorThermoComparison:
    """Per-sector thermodynamics plus the unsymmetrized baseline.

    `ground_energies` holds each sector's absolute ground-state energy
    (cm^-1); zero-point elevations relative to the baseline sector are in
    `ground_shifts`.  Difference columns against the baseline come from
    `difference`.
    """

    temperatures: np.ndarray
    tables: dict[Statistics, ThermoTable]
    ground_energies: dict[Statistics, float]
    baseline: Statistics = Statistics.NONE

    @property
    def ground_shifts(self) -> dict[Statistics, float]:
        e0 = self.ground_energies[self.baseline]
        return {s: e - e0 for s, e in self.ground_energies.items()}

    def difference(self, statistics: Statistics) -> dict[str, np.ndarray]:
        """Column-wise table(statistics) minus table(baseline)."""
        a = self.tables[statistics]
        b = self.tables[self.baseline]
        return {
            name: getattr(a, name) - getattr(b, name)
            for name in ("q", "u", "c", "s", "g")
        }


def sector_thermo_compare(
    spec: EnsembleSpec,
    t_grid: np.ndarray,
    *,
    statistics: tuple[Statistics, ...] = (
        Statistics.NONE,
        Statistics.BOSON,
        Statistics.FERMION,
    ),
    rwa: bool = False,
    method: str = "orbit",
) -> SectorThermoComparison:
    """Run the full pipeline for each sector and tabulate thermodynamics.

    The baseline (unsymmetrized) sector is always computed so the
    difference columns are available even when it was not requested.
    """
    t = np.asarray(t_grid, dtype=np.float64)
    wanted = tuple(dict.fromkeys(statistics))
    run = wanted if Statistics.NONE in wanted else (Statistics.NONE,) + wanted
    tables: dict[Statistics, ThermoTable] = {}
    ground: dict[Statistics, float] = {}
    for stat in run:
        result = sector_spectrum(
            dataclasses.replace(spec, statistics=stat), rwa=rwa, method=method
        )
        if result.energies.size == 0:
            raise ValidationError(f"{stat.value} sector is empty; no thermodynamics")
        tables[stat] = thermo_table(result.energies, t)
        ground[stat] = float(result.energies[0])
    return SectorThermoComparison(
        temperatures=t, tables=tables, ground_energies=ground
    )

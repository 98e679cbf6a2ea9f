"""Photon-number observable, brightness accounting, state classification."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .symmetry import SubspaceBasis

#: Default classification cutoffs for the photon expectation value.
DARK_MAX = 0.1
PHOTONIC_MIN = 0.9


@dataclass(frozen=True)
class BrightnessReport:
    """Trace of the photon-number operator over a subspace.

    `trace_nph` counts the bright basis functions of the subspace;
    `bright_ratio` is trace/dim (0 for an empty subspace).
    """

    trace_nph: float
    dim: int
    bright_ratio: float


def photon_matrix(subspace: SubspaceBasis) -> np.ndarray:
    """Photon-number operator restricted to the subspace (B^T N B).

    Every subspace column lives inside a single photon block (enforced at
    construction) and N is a constant within each block, so B^T N B is
    exactly diagonal with the per-column photon numbers on the diagonal;
    the matrix is built directly from those integer tags.
    """
    return np.diag(subspace.column_photon.astype(np.float64))


def brightness(subspace: SubspaceBasis) -> BrightnessReport:
    dim = subspace.dim
    trace = float(subspace.column_photon.sum())
    return BrightnessReport(
        trace_nph=trace,
        dim=dim,
        bright_ratio=trace / dim if dim else 0.0,
    )


def photon_expectation(coefficients: np.ndarray, subspace: SubspaceBasis) -> float:
    """<psi|N|psi> for a unit-norm vector expressed over subspace columns."""
    v = np.asarray(coefficients, dtype=np.float64)
    if v.shape != (subspace.dim,):
        raise ValidationError("coefficient vector length must equal subspace dim")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > 1e-8:
        raise ValidationError(f"state vector norm {norm} deviates from 1")
    return float(subspace.column_photon @ (v * v))


def classify_expectation(value: float, dark_max: float = DARK_MAX,
                         photonic_min: float = PHOTONIC_MIN) -> str:
    """Label a photon expectation as dark / polaritonic / photonic."""
    if value < dark_max:
        return "dark"
    if value > photonic_min:
        return "photonic"
    return "polaritonic"

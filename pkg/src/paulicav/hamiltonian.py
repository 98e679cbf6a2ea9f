"""Cavity + molecules Hamiltonian: assembly, sector restriction, spectra.

The operator is

    H = sum_i E(k_i)  +  photon_energy * N  +  g * sum_i D^(i) (a^dag + a)

with the photon ladder truncated at the basis's photon cap.  There is no
dipole self-energy term and no zero-point photon offset; the optional RWA
switch keeps only the coupling terms that conserve the total excitation
count (photon number plus number of excited-manifold molecules).  The
coupling is identical for every molecule, which is what makes H commute
with the permutation action.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ValidationError
from .model import EnsembleSpec, Manifold, Statistics
from .statespace import BasisSet, enumerate_first_excited, enumerate_full
from .symmetry import SubspaceBasis, project


@dataclass(frozen=True, eq=False)
class HamiltonianMatrix:
    """Dense real-symmetric Hamiltonian (cm^-1) with its basis provenance."""

    matrix: np.ndarray
    basis_tag: str
    source: BasisSet

    def __post_init__(self):
        self.matrix.flags.writeable = False

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    """Sector eigenvalues with per-eigenstate photon expectations."""

    energies: np.ndarray
    photon_expectations: np.ndarray
    statistics: Statistics

    def __post_init__(self):
        self.energies.flags.writeable = False
        self.photon_expectations.flags.writeable = False


def basis_for(spec: EnsembleSpec) -> BasisSet:
    """Enumerate the basis selected by the spec's manifold mode."""
    if spec.manifold is Manifold.FULL:
        return enumerate_full(spec.molecule.m, spec.n, spec.cavity.n_max)
    return enumerate_first_excited(spec.molecule.m, spec.molecule.m_g, spec.n)


def build_hamiltonian(spec: EnsembleSpec, basis: BasisSet, *,
                      rwa: bool = False) -> HamiltonianMatrix:
    """Assemble H over `basis` for the given molecule/cavity parameters."""
    mol = spec.molecule
    if basis.m != mol.m:
        raise ValidationError(
            f"basis has m={basis.m} levels but the model has m={mol.m}"
        )
    if basis.n != spec.n:
        raise ValidationError(f"basis has n={basis.n} molecules, spec has n={spec.n}")
    if basis.mode is Manifold.FULL and basis.n_max != spec.cavity.n_max:
        raise ValidationError(
            f"basis photon cap {basis.n_max} != cavity n_max {spec.cavity.n_max}"
        )
    h = kernels.assemble_hamiltonian(
        basis.photon,
        basis.occ,
        basis.codes,
        basis.n_max,
        basis.m,
        mol.energies,
        mol.dipole,
        spec.cavity.photon_energy,
        spec.cavity.coupling_g,
        rwa,
        mol.m_g,
    )
    return HamiltonianMatrix(matrix=h, basis_tag="full", source=basis)


def restrict(h: HamiltonianMatrix, subspace: SubspaceBasis) -> HamiltonianMatrix:
    """Project H into the subspace: H_sub = B^T H B."""
    if subspace.source is not h.source:
        raise ValidationError("subspace was built over a different basis")
    b = subspace.matrix
    h_sub = np.asarray((b.T @ h.matrix) @ b)
    return HamiltonianMatrix(
        matrix=h_sub,
        basis_tag=f"subspace:{subspace.statistics.value}",
        source=h.source,
    )


def diagonalize(h: HamiltonianMatrix, subspace: SubspaceBasis) -> SpectrumResult:
    """Dense symmetric eigendecomposition plus photon expectations."""
    if h.dim != subspace.dim:
        raise ValidationError("hamiltonian must be restricted to the subspace first")
    if h.dim == 0:
        return SpectrumResult(
            energies=np.empty(0),
            photon_expectations=np.empty(0),
            statistics=subspace.statistics,
        )
    if not np.all(np.isfinite(h.matrix)):
        raise ValidationError("hamiltonian has non-finite entries")
    energies, vectors = np.linalg.eigh(h.matrix)
    expectations = subspace.column_photon.astype(np.float64) @ (vectors * vectors)
    return SpectrumResult(
        energies=energies,
        photon_expectations=expectations,
        statistics=subspace.statistics,
    )


def sector_spectrum(spec: EnsembleSpec, *, rwa: bool = False,
                    method: str = "orbit") -> SpectrumResult:
    """enumerate -> project -> build -> restrict -> diagonalize, one sector."""
    basis = basis_for(spec)
    subspace = project(basis, spec.statistics, method=method)
    h = build_hamiltonian(spec, basis, rwa=rwa)
    return diagonalize(restrict(h, subspace), subspace)

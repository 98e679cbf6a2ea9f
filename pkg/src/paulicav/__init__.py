"""Pauli-allowed collective states of identical molecules in a cavity.

Builds the direct-product state space of n identical m-level molecules
coupled to one quantized radiation mode, projects it onto the symmetric
(boson) or antisymmetric (fermion) representation of the molecular
permutation group, and computes state counts, brightness measures,
sector-resolved spectra and direct-summation thermodynamics.
"""

from .model import (
    CavityMode,
    EnsembleSpec,
    Manifold,
    MoleculeModel,
    Statistics,
    load_demo_model,
    load_model,
    save_model,
    synthetic_model,
    validate,
)
from .statespace import (
    BasisSet,
    BasisState,
    apply_transposition,
    enumerate_first_excited,
    enumerate_full,
)
from .symmetry import (
    Permutation,
    SubspaceBasis,
    count_first_excited,
    enumerate_group,
    project,
    project_orbit,
    project_reference,
    projector_matrix,
)
from .observables import (
    BrightnessReport,
    brightness,
    classify_expectation,
    photon_expectation,
    photon_matrix,
)
from .hamiltonian import (
    HamiltonianMatrix,
    SpectrumResult,
    build_hamiltonian,
    diagonalize,
    restrict,
    sector_spectrum,
)
from .thermo import (
    SectorThermoComparison,
    ThermoTable,
    partition_function,
    sector_thermo_compare,
    thermo_table,
)

__version__ = "0.1.0"

__all__ = [
    "BasisSet",
    "BasisState",
    "BrightnessReport",
    "CavityMode",
    "EnsembleSpec",
    "HamiltonianMatrix",
    "Manifold",
    "MoleculeModel",
    "Permutation",
    "SectorThermoComparison",
    "SpectrumResult",
    "Statistics",
    "SubspaceBasis",
    "ThermoTable",
    "apply_transposition",
    "brightness",
    "build_hamiltonian",
    "classify_expectation",
    "count_first_excited",
    "diagonalize",
    "enumerate_first_excited",
    "enumerate_full",
    "enumerate_group",
    "load_demo_model",
    "load_model",
    "partition_function",
    "photon_expectation",
    "photon_matrix",
    "project",
    "project_orbit",
    "project_reference",
    "projector_matrix",
    "restrict",
    "save_model",
    "sector_spectrum",
    "sector_thermo_compare",
    "synthetic_model",
    "thermo_table",
    "validate",
]

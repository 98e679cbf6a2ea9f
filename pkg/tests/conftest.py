import numpy as np
import pytest

from paulicav.model import CavityMode, EnsembleSpec, Manifold, MoleculeModel, Statistics
from paulicav.model import load_demo_model, synthetic_model


@pytest.fixture(scope="session")
def demo_model():
    return load_demo_model()


def two_level(wn=1681.0):
    """Resonant two-level molecule with unit transition dipole."""
    return MoleculeModel(
        name="two-level",
        energies=np.array([0.0, wn]),
        dipole=np.array([[0.0, 1.0], [1.0, 0.0]]),
        m_g=1,
    )


def ensemble(molecule, n, wn=1681.0, g=490.0, n_max=1,
             statistics=Statistics.NONE, manifold=Manifold.FULL):
    return EnsembleSpec(
        molecule=molecule,
        n=n,
        cavity=CavityMode(photon_energy=wn, n_max=n_max, coupling_g=g),
        statistics=statistics,
        manifold=manifold,
    )


def random_molecule(rng, m, m_g, scale=2000.0):
    """Random symmetric-dipole molecule with sorted level energies."""
    d = rng.normal(size=(m, m))
    energies = np.sort(rng.uniform(0.0, scale, m))
    return MoleculeModel(
        name="random", energies=energies, dipole=(d + d.T) / 2.0, m_g=m_g
    )


def brute_force_hamiltonian(basis, molecule, cavity, rwa=False):
    """Independent O(D^2) oracle: evaluate every matrix element from the
    operator definition, one state pair at a time."""
    import math

    def element(si, sj):
        dn = sj.photon_n - si.photon_n
        diffs = [p for p in range(len(si.occ)) if si.occ[p] != sj.occ[p]]
        if dn == 0:
            if diffs:
                return 0.0
            return (
                sum(molecule.energies[k] for k in si.occ)
                + si.photon_n * cavity.photon_energy
            )
        if abs(dn) != 1 or len(diffs) > 1:
            return 0.0
        ladder = math.sqrt(max(si.photon_n, sj.photon_n))
        if not diffs:
            if rwa:
                return 0.0
            permanent = sum(molecule.dipole[k, k] for k in si.occ)
            return cavity.coupling_g * permanent * ladder
        p = diffs[0]
        a, b = si.occ[p], sj.occ[p]
        if rwa:
            mg = molecule.m_g
            if dn == 1 and not (a >= mg > b):
                return 0.0
            if dn == -1 and not (a < mg <= b):
                return 0.0
        return cavity.coupling_g * molecule.dipole[a, b] * ladder

    states = basis.states
    d = len(states)
    h = np.zeros((d, d))
    for i in range(d):
        for j in range(d):
            h[i, j] = element(states[i], states[j])
    return h

import json

import numpy as np
import pytest

from paulicav.errors import ValidationError
from paulicav.model import (
    CavityMode,
    EnsembleSpec,
    MoleculeModel,
    load_model,
    save_model,
    synthetic_model,
    validate,
)


def write_model(tmp_path, payload):
    path = tmp_path / "model.json"
    path.write_text(json.dumps(payload))
    return path


MINIMAL = {
    "name": "minimal",
    "m_g": 1,
    "levels": [
        {"energy_cm1": 0.0, "label": "g"},
        {"energy_cm1": 1681.0, "label": "e"},
    ],
    "dipole_au": [[0.0, 1.0], [1.0, 0.0]],
}


def test_load_minimal_two_level(tmp_path):
    model = load_model(write_model(tmp_path, MINIMAL))
    assert model.m == 2
    assert model.m_g == 1
    assert model.energies[1] == 1681.0
    assert validate(model) == []


def test_load_rejects_asymmetric_dipole(tmp_path):
    bad = dict(MINIMAL, dipole_au=[[0.0, 1.0], [0.5, 0.0]])
    with pytest.raises(ValidationError, match="dipole"):
        load_model(write_model(tmp_path, bad))


def test_load_rejects_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(ValidationError, match="malformed"):
        load_model(path)


def test_load_rejects_missing_key(tmp_path):
    bad = {k: v for k, v in MINIMAL.items() if k != "dipole_au"}
    with pytest.raises(ValidationError):
        load_model(write_model(tmp_path, bad))


def test_demo_model_dimensions(demo_model):
    assert demo_model.m == 10
    assert demo_model.m_g == 5
    assert validate(demo_model) == []


def test_validate_m_g_out_of_range():
    model = MoleculeModel(
        "bad", np.array([0.0, 1.0]), np.zeros((2, 2)), m_g=2
    )
    assert any("m_g must be < m" in v for v in validate(model))


def test_validate_unsorted_energies():
    model = MoleculeModel(
        "bad", np.array([5.0, 3.0]), np.zeros((2, 2)), m_g=1
    )
    assert any("energies not nondecreasing" in v for v in validate(model))


def test_validate_wrong_dipole_shape():
    model = MoleculeModel(
        "bad", np.array([0.0, 1.0, 2.0]), np.zeros((2, 2)), m_g=1
    )
    assert any("dipole" in v for v in validate(model))


def test_degenerate_energies_are_valid():
    model = MoleculeModel(
        "degenerate", np.array([0.0, 0.0, 7.0]), np.zeros((3, 3)), m_g=2
    )
    assert validate(model) == []


def test_round_trip_is_bit_exact(tmp_path):
    # awkward binary floats must survive save -> load unchanged
    energies = np.array([0.0, 0.1 + 0.2, 1.0 / 3.0, 1681.0000000000002])
    dipole = np.zeros((4, 4))
    dipole[0, 3] = dipole[3, 0] = 0.1234567890123456789
    dipole[1, 2] = dipole[2, 1] = np.pi
    model = MoleculeModel("roundtrip", energies, dipole, m_g=2,
                          labels=("a", "b", "c", "d"))
    path = tmp_path / "rt.json"
    save_model(model, path)
    back = load_model(path)
    assert back.name == model.name
    assert back.m_g == model.m_g
    assert back.labels == model.labels
    np.testing.assert_array_equal(back.energies, model.energies)
    np.testing.assert_array_equal(back.dipole, model.dipole)


def test_model_arrays_are_immutable():
    model = synthetic_model(3, 1)
    with pytest.raises(ValueError):
        model.energies[0] = 99.0


def test_cavity_invariants():
    with pytest.raises(ValidationError):
        CavityMode(photon_energy=0.0)
    with pytest.raises(ValidationError):
        CavityMode(photon_energy=100.0, n_max=0)
    with pytest.raises(ValidationError):
        CavityMode(photon_energy=100.0, coupling_g=-1.0)


def test_ensemble_requires_positive_n():
    with pytest.raises(ValidationError):
        EnsembleSpec(synthetic_model(2, 1), 0, CavityMode(photon_energy=100.0))


def test_synthetic_model_shape():
    model = synthetic_model(5, 2, excitation=1681.0)
    assert model.m == 5
    assert model.m_g == 2
    assert validate(model) == []
    assert model.energies[2] == 1681.0
    # only cross-manifold couplings
    assert np.all(model.dipole[:2, :2] == 0.0)
    assert np.all(model.dipole[2:, 2:] == 0.0)
    assert np.all(model.dipole[:2, 2:] != 0.0)

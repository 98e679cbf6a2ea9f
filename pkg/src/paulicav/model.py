"""Input data model: molecular levels, cavity mode, ensemble description.

Model files are JSON objects of the form::

    {"name": str,
     "m_g": int,
     "levels": [{"energy_cm1": float, "label": str}, ...],
     "dipole_au": [[float, ...], ...]}

Energies are in cm^-1, dipole matrix elements in atomic units.  All types
here are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import ValidationError


class Statistics(enum.Enum):
    """Permutation symmetry enforced on the molecular ensemble."""

    NONE = "none"
    BOSON = "boson"
    FERMION = "fermion"


class Manifold(enum.Enum):
    """Which slice of the state space to enumerate."""

    FULL = "full"
    FIRST_EXCITED = "first-excited"


@dataclass(frozen=True, eq=False)
class MoleculeModel:
    """A single molecule as m energy levels plus a transition-dipole matrix.

    The lowest ``m_g`` levels form the ground-state manifold, the remaining
    ``m - m_g`` the excited manifold.  Level identity is the index, not the
    energy value, so degenerate energies are allowed.
    """

    name: str
    energies: np.ndarray
    dipole: np.ndarray
    m_g: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        energies = np.array(self.energies, dtype=np.float64)
        dipole = np.array(self.dipole, dtype=np.float64)
        energies.flags.writeable = False
        dipole.flags.writeable = False
        object.__setattr__(self, "energies", energies)
        object.__setattr__(self, "dipole", dipole)

    @property
    def m(self) -> int:
        return self.energies.shape[0]


@dataclass(frozen=True)
class CavityMode:
    """A single quantized radiation mode with a truncated Fock basis."""

    photon_energy: float
    n_max: int = 1
    coupling_g: float = 0.0

    def __post_init__(self):
        if not self.photon_energy > 0:
            raise ValidationError("photon_energy must be > 0")
        if self.n_max < 1:
            raise ValidationError("n_max must be >= 1")
        if self.coupling_g < 0:
            raise ValidationError("coupling_g must be >= 0")


@dataclass(frozen=True)
class EnsembleSpec:
    """n identical molecules coupled to one cavity mode."""

    molecule: MoleculeModel
    n: int
    cavity: CavityMode
    statistics: Statistics = Statistics.NONE
    manifold: Manifold = Manifold.FULL

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("n must be >= 1")
        violations = validate(self.molecule)
        if violations:
            raise ValidationError("; ".join(violations))


def validate(model: MoleculeModel) -> list[str]:
    """Check every MoleculeModel invariant; return violations as messages.

    An empty list means the model is valid.  Each message names the
    offending field.
    """
    violations = []
    m = model.m
    if m < 2:
        violations.append("energies: need at least 2 levels (m >= 2)")
    if model.energies.ndim != 1:
        violations.append("energies must be a flat list")
    if not np.all(np.isfinite(model.energies)):
        violations.append("energies must be finite")
    elif np.any(np.diff(model.energies) < 0):
        violations.append("energies not nondecreasing")
    if model.dipole.shape != (m, m):
        violations.append(f"dipole must be {m}x{m} to match the level count")
    else:
        if not np.all(np.isfinite(model.dipole)):
            violations.append("dipole must be finite")
        else:
            asym = np.abs(model.dipole - model.dipole.T)
            tol = 1e-12 * max(1.0, float(np.abs(model.dipole).max()))
            if asym.max() > tol:
                i, j = np.unravel_index(np.argmax(asym), asym.shape)
                violations.append(f"dipole not symmetric at [{i}][{j}]")
    if model.m_g < 1:
        violations.append("m_g must be >= 1")
    if model.m_g >= m:
        violations.append("m_g must be < m")
    if model.labels is not None and len(model.labels) != m:
        violations.append("labels length must equal the level count")
    return violations


def load_model(path: str | Path) -> MoleculeModel:
    """Parse and validate a model file.

    Raises ValidationError for malformed JSON, missing keys, or any
    invariant violation.
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: malformed JSON ({exc})") from exc
    return model_from_dict(raw, source=str(path))


def model_from_dict(raw: dict, source: str = "<dict>") -> MoleculeModel:
    """Build a validated MoleculeModel from the parsed JSON object."""
    try:
        levels = raw["levels"]
        energies = np.array([lv["energy_cm1"] for lv in levels], dtype=np.float64)
        labels = tuple(str(lv.get("label", f"L{i}")) for i, lv in enumerate(levels))
        model = MoleculeModel(
            name=str(raw.get("name", "unnamed")),
            energies=energies,
            dipole=np.array(raw["dipole_au"], dtype=np.float64),
            m_g=int(raw["m_g"]),
            labels=labels,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"{source}: bad model structure ({exc})") from exc
    violations = validate(model)
    if violations:
        raise ValidationError(f"{source}: " + "; ".join(violations))
    return model


def save_model(model: MoleculeModel, path: str | Path) -> None:
    """Write a model file that load_model round-trips bit-exactly.

    Floats are serialized with repr (shortest round-trip form), so the
    parsed numeric values are identical after a save/load cycle.
    """
    labels = model.labels or tuple(f"L{i}" for i in range(model.m))
    payload = {
        "name": model.name,
        "m_g": model.m_g,
        "levels": [
            {"energy_cm1": float(e), "label": lab}
            for e, lab in zip(model.energies, labels)
        ],
        "dipole_au": [[float(x) for x in row] for row in model.dipole],
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def demo_model_path() -> Path:
    """Filesystem path of the packaged 10-level demo model."""
    return Path(resources.files("paulicav").joinpath("data/demo_water10.json"))


def load_demo_model() -> MoleculeModel:
    return load_model(demo_model_path())


def synthetic_model(m: int, m_g: int, spacing: float = 50.0,
                    excitation: float = 1500.0, dipole_strength: float = 1.0) -> MoleculeModel:
    """Evenly spaced placeholder model for runs that need no real data.

    Ground-manifold levels sit at 0, spacing, 2*spacing, ...; excited levels
    start at `excitation` with the same spacing.  Every ground<->excited
    pair is dipole-coupled with `dipole_strength`; permanent dipoles are
    zero.  Counting and brightness results do not depend on these numbers.
    """
    if m < 2 or not (1 <= m_g < m):
        raise ValidationError("need m >= 2 and 1 <= m_g < m")
    energies = np.empty(m)
    energies[:m_g] = spacing * np.arange(m_g)
    energies[m_g:] = excitation + spacing * np.arange(m - m_g)
    dipole = np.zeros((m, m))
    dipole[:m_g, m_g:] = dipole_strength
    dipole[m_g:, :m_g] = dipole_strength
    return MoleculeModel(
        name=f"synthetic-{m}level", energies=energies, dipole=dipole, m_g=m_g
    )

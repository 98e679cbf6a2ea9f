"""Direct-product basis enumeration and indexing.

A basis state is (photon number N, molecular occupation tuple k_1..k_n)
with each k in 0..m-1.  States are stored column-wise in numpy arrays and
identified by an integer code::

    code = N * m**n + sum_p k_p * m**(n-1-p)

Enumeration order is ascending code, i.e. photon-major and lexicographic
in the occupation tuple, which makes the photon-number operator
block-diagonal by construction and every output reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from . import kernels
from .errors import ComputeCapError, ValidationError
from .model import Manifold

#: Refuse to materialize bases larger than this many states.
DEFAULT_MAX_STATES = 10_000_000


class BasisState(NamedTuple):
    photon_n: int
    occ: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class BasisSet:
    """An ordered, indexed direct-product basis.

    `photon` and `occ` hold the per-state quantum numbers, `codes` the
    ascending integer codes; `index_of` inverts the enumeration via binary
    search.  Immutable after construction.
    """

    m: int
    n: int
    n_max: int
    mode: Manifold
    photon: np.ndarray
    occ: np.ndarray
    codes: np.ndarray

    def __post_init__(self):
        for arr in (self.photon, self.occ, self.codes):
            arr.flags.writeable = False

    def __len__(self) -> int:
        return self.codes.shape[0]

    @property
    def radix(self) -> np.ndarray:
        """Positional weights: radix[p] = m**(n-1-p)."""
        return self.m ** np.arange(self.n - 1, -1, -1, dtype=np.int64)

    def encode(self, photon_n: int, occ: np.ndarray) -> np.ndarray:
        return photon_n * self.m**self.n + occ @ self.radix

    def state(self, i: int) -> BasisState:
        return BasisState(int(self.photon[i]), tuple(int(k) for k in self.occ[i]))

    @property
    def states(self) -> list[BasisState]:
        """All states in order (materializes the whole list)."""
        return [self.state(i) for i in range(len(self))]

    def iter_states(self) -> Iterator[BasisState]:
        return (self.state(i) for i in range(len(self)))

    def index_of(self, state: BasisState) -> int:
        """Position of `state` in the enumeration; KeyError if absent."""
        occ = np.asarray(state.occ, dtype=np.int64)
        if occ.shape != (self.n,) or occ.min() < 0 or occ.max() >= self.m:
            raise KeyError(f"state {state} not indexable in this basis")
        code = int(state.photon_n) * self.m**self.n + int(occ @ self.radix)
        pos = int(np.searchsorted(self.codes, code))
        if pos == len(self) or self.codes[pos] != code:
            raise KeyError(f"state {state} not in basis")
        return pos

    def lookup_codes(self, codes: np.ndarray) -> np.ndarray:
        """Vectorized index_of for an array of codes (all must be present)."""
        pos = np.searchsorted(self.codes, codes)
        if np.any(pos == len(self)) or np.any(self.codes[np.minimum(pos, len(self) - 1)] != codes):
            raise KeyError("code not present in basis")
        return pos


def _check_cap(size: int, max_states: int) -> None:
    if size > max_states:
        raise ComputeCapError(
            f"basis would need {size} states, above the cap of {max_states}"
        )


def enumerate_full(m: int, n: int, n_max: int,
                   max_states: int = DEFAULT_MAX_STATES) -> BasisSet:
    """All (n_max+1) * m**n direct-product states."""
    if m < 2 or n < 1 or n_max < 0:
        raise ValidationError("need m >= 2, n >= 1, n_max >= 0")
    mol_size = m**n
    size = (n_max + 1) * mol_size
    _check_cap(size, max_states)
    mol_occ = kernels.decode_occupations(mol_size, m, n)
    occ = np.tile(mol_occ, (n_max + 1, 1))
    photon = np.repeat(np.arange(n_max + 1, dtype=np.int64), mol_size)
    codes = np.arange(size, dtype=np.int64)
    return BasisSet(m=m, n=n, n_max=n_max, mode=Manifold.FULL,
                    photon=photon, occ=occ, codes=codes)


def enumerate_first_excited(m: int, m_g: int, n: int,
                            max_states: int = DEFAULT_MAX_STATES) -> BasisSet:
    """The single-excitation slice of the full basis with n_max = 1.

    Contains the zero-photon states with exactly one occupation index in
    the excited manifold (>= m_g) and the one-photon states with every
    index in the ground manifold (< m_g), ordered as in the full basis.
    """
    if m < 2 or n < 1 or not (1 <= m_g < m):
        raise ValidationError("need m >= 2, n >= 1, 1 <= m_g < m")
    n_exc = n * (m - m_g) * m_g ** (n - 1)
    size = m_g**n + n_exc
    _check_cap(size, max_states)

    ground_rest = kernels.decode_occupations(m_g ** (n - 1), m_g, n - 1)
    blocks = []
    for p in range(n):
        block = np.empty(((m - m_g) * ground_rest.shape[0], n), dtype=np.int64)
        block[:, p] = np.repeat(np.arange(m_g, m, dtype=np.int64), ground_rest.shape[0])
        rest_cols = [c for c in range(n) if c != p]
        block[:, rest_cols] = np.tile(ground_rest, (m - m_g, 1))
        blocks.append(block)
    occ0 = np.vstack(blocks) if blocks else np.empty((0, n), dtype=np.int64)
    occ1 = kernels.decode_occupations(m_g**n, m_g, n)

    radix = m ** np.arange(n - 1, -1, -1, dtype=np.int64)
    codes0 = occ0 @ radix
    order = np.argsort(codes0)
    occ = np.vstack([occ0[order], occ1])
    photon = np.concatenate([
        np.zeros(n_exc, dtype=np.int64),
        np.ones(m_g**n, dtype=np.int64),
    ])
    codes = np.concatenate([codes0[order], m**n + occ1 @ radix])
    return BasisSet(m=m, n=n, n_max=1, mode=Manifold.FIRST_EXCITED,
                    photon=photon, occ=occ, codes=codes)


def apply_transposition(i: int, j: int, state: BasisState) -> BasisState:
    """Swap molecular positions i and j; the photon part is untouched."""
    n = len(state.occ)
    if not (0 <= i < n and 0 <= j < n):
        raise ValidationError(f"transposition ({i},{j}) out of range for n={n}")
    occ = list(state.occ)
    occ[i], occ[j] = occ[j], occ[i]
    return BasisState(state.photon_n, tuple(occ))

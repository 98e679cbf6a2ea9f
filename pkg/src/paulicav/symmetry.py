"""Permutation group machinery and projection onto the symmetric /
antisymmetric subspaces.

Two routes produce the Pauli-allowed subspace:

* `project_reference` applies the group-averaged projector
  P = (1/h) * sum_R chi(R) R to every basis vector and extracts a maximal
  linearly independent set by pivoted orthonormalization.  It is the
  literal textbook construction, kept as the validation path.

* `project_orbit` builds the same subspace orbit by orbit: each multiset
  of occupied levels carries exactly one symmetric combination
  (normalized sum over its distinct rearrangements) and, when all levels
  are distinct, one antisymmetric combination (parity-signed sum).  This
  is exact, orthonormal by construction, and O(D n log n).

Molecule order is fixed by input position; permutations act on positions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.sparse as sp

from . import kernels
from .errors import ComputeCapError, ValidationError
from .model import Statistics
from .statespace import BasisSet

#: Largest permutation group the reference path will enumerate (8! elements).
MAX_GROUP_DEGREE = 8

#: Cap on max(h * D, D * D) work units for the dense reference projector.
DEFAULT_COMPUTE_CAP = 50_000_000

#: A projected vector is kept if its residual norm after orthogonalization
#: against the accepted columns exceeds this (inputs are unit-scale).
RANK_TOL = 1e-10


@dataclass(frozen=True)
class Permutation:
    """A permutation of molecule positions with its sign.

    `mapping` gathers: applying the permutation to an occupation tuple k
    yields k'[p] = k[mapping[p]].  `parity` is +1 for even permutations,
    -1 for odd ones.
    """

    mapping: tuple[int, ...]
    parity: int

    def apply(self, occ: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(occ[q] for q in self.mapping)

    def compose(self, other: "Permutation") -> "Permutation":
        """self applied after other."""
        mapping = tuple(other.mapping[q] for q in self.mapping)
        return Permutation(mapping, self.parity * other.parity)


def _inversion_parity(mapping: tuple[int, ...]) -> int:
    inv = sum(
        1
        for i in range(len(mapping))
        for j in range(i + 1, len(mapping))
        if mapping[i] > mapping[j]
    )
    return 1 if inv % 2 == 0 else -1


def enumerate_group(n: int) -> list[Permutation]:
    """All n! permutations of 0..n-1 in lexicographic order, with parities."""
    if n < 1:
        raise ValidationError("group degree must be >= 1")
    if n > MAX_GROUP_DEGREE:
        raise ComputeCapError(
            f"refusing to enumerate S_{n} ({math.factorial(n)} elements); "
            f"cap is n = {MAX_GROUP_DEGREE}"
        )
    return [
        Permutation(mapping, _inversion_parity(mapping))
        for mapping in itertools.permutations(range(n))
    ]


def character(perm: Permutation, statistics: Statistics) -> int:
    """Character of `perm` in the one-dimensional representation used for
    `statistics`: all +1 for bosons, the sign for fermions."""
    if statistics is Statistics.BOSON:
        return 1
    if statistics is Statistics.FERMION:
        return perm.parity
    raise ValidationError("characters are defined for BOSON or FERMION only")


def permuted_indices(basis: BasisSet, perm: Permutation) -> np.ndarray:
    """Index array t with t[s] = position of perm applied to state s."""
    mapping = np.asarray(perm.mapping, dtype=np.int64)
    codes = basis.photon * basis.m**basis.n + basis.occ[:, mapping] @ basis.radix
    return basis.lookup_codes(codes)


def action_matrix(basis: BasisSet, perm: Permutation) -> sp.csr_matrix:
    """Sparse matrix of the permutation action on the basis."""
    d = len(basis)
    tgt = permuted_indices(basis, perm)
    return sp.csr_matrix(
        (np.ones(d), (tgt, np.arange(d))), shape=(d, d)
    )


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Orthonormal symmetry-adapted basis as a sparse column map.

    `matrix` is D x dim with orthonormal columns spanning the projected
    subspace; `column_photon[j]` is the photon number carried by column j
    (every column lives inside a single photon block, which is checked at
    construction).
    """

    source: BasisSet
    matrix: sp.csc_matrix
    statistics: Statistics
    column_photon: np.ndarray

    def __post_init__(self):
        self.column_photon.flags.writeable = False
        if self.matrix.shape != (len(self.source), self.dim):
            raise ValidationError("subspace matrix shape mismatch")
        support_photon = self.source.photon[self.matrix.indices]
        declared = np.repeat(self.column_photon, np.diff(self.matrix.indptr))
        if not np.array_equal(support_photon, declared):
            raise ValidationError("subspace column leaves its photon block")

    @property
    def dim(self) -> int:
        return self.column_photon.shape[0]

    def column(self, j: int) -> tuple[np.ndarray, np.ndarray]:
        """Row indices and values of column j."""
        sl = slice(self.matrix.indptr[j], self.matrix.indptr[j + 1])
        return self.matrix.indices[sl], self.matrix.data[sl]

    def dense(self) -> np.ndarray:
        return self.matrix.toarray()


def _identity_subspace(basis: BasisSet, statistics: Statistics) -> SubspaceBasis:
    return SubspaceBasis(
        source=basis,
        matrix=sp.identity(len(basis), format="csc"),
        statistics=statistics,
        column_photon=basis.photon.copy(),
    )


def projector_matrix(basis: BasisSet, statistics: Statistics,
                     compute_cap: int = DEFAULT_COMPUTE_CAP) -> np.ndarray:
    """Dense group-averaged projector onto the chosen representation."""
    d = len(basis)
    group = enumerate_group(basis.n)
    h = len(group)
    if max(h * d, d * d) > compute_cap:
        raise ComputeCapError(
            f"reference projector needs {max(h * d, d * d)} work units, "
            f"above the cap of {compute_cap}"
        )
    proj = np.zeros((d, d))
    cols = np.arange(d)
    for perm in group:
        chi = character(perm, statistics)
        tgt = permuted_indices(basis, perm)
        np.add.at(proj, (tgt, cols), chi / h)
    return proj


def _pivoted_orthonormal_columns(mat: np.ndarray, tol: float) -> np.ndarray:
    """Rank-revealing orthonormalization: QR with column pivoting, keeping
    the columns whose residual norm against the earlier ones exceeds tol."""
    if mat.shape[1] == 0:
        return mat.copy()
    q, r, _ = scipy.linalg.qr(mat, mode="economic", pivoting=True)
    rank = int((np.abs(np.diag(r)) > tol).sum())
    return q[:, :rank]


def project_reference(basis: BasisSet, statistics: Statistics,
                      compute_cap: int = DEFAULT_COMPUTE_CAP) -> SubspaceBasis:
    """Project every basis vector with the group-averaged projector and
    orthonormalize the result (the literal construction).

    The projector never mixes photon blocks, so the orthonormalization is
    run block by block; that keeps every output column inside a single
    photon number, as the subspace contract requires.
    """
    if len(basis) == 0:
        raise ValidationError("empty basis")
    if statistics is Statistics.NONE:
        return _identity_subspace(basis, statistics)
    proj = projector_matrix(basis, statistics, compute_cap=compute_cap)
    block_edges = np.concatenate(
        [[0], np.flatnonzero(np.diff(basis.photon)) + 1, [len(basis)]]
    )
    blocks = []
    col_photon = []
    for a, b in zip(block_edges[:-1], block_edges[1:]):
        q = _pivoted_orthonormal_columns(proj[a:b, a:b], RANK_TOL)
        blocks.append(q)
        col_photon += [int(basis.photon[a])] * q.shape[1]
    matrix = sp.block_diag(blocks, format="csc")
    return SubspaceBasis(
        source=basis,
        matrix=matrix,
        statistics=statistics,
        column_photon=np.asarray(col_photon, dtype=np.int64),
    )


def project_orbit(basis: BasisSet, statistics: Statistics) -> SubspaceBasis:
    """Build the projected subspace orbit-by-orbit (fast path).

    Spans the same subspace as `project_reference`; columns are ordered by
    (photon number, canonical occupation) and are exactly orthonormal
    because orbits have disjoint support.
    """
    if len(basis) == 0:
        raise ValidationError("empty basis")
    if statistics is Statistics.NONE:
        return _identity_subspace(basis, statistics)

    canon, parity = kernels.sort_rows_with_parity(basis.occ)
    okey = basis.photon * basis.m**basis.n + canon @ basis.radix
    order = np.argsort(okey, kind="stable")
    sorted_key = okey[order]
    starts = np.concatenate([[0], np.flatnonzero(np.diff(sorted_key)) + 1,
                             [len(basis)]])

    fermion = statistics is Statistics.FERMION
    data: list[np.ndarray] = []
    indices: list[np.ndarray] = []
    indptr = [0]
    col_photon = []
    for a, b in zip(starts[:-1], starts[1:]):
        rows = order[a:b]
        if fermion:
            rep = canon[rows[0]]
            # repeated level -> annihilated by antisymmetrization
            if basis.n > 1 and not np.all(np.diff(rep) > 0):
                continue
            vals = parity[rows] / math.sqrt(b - a)
        else:
            vals = np.full(b - a, 1.0 / math.sqrt(b - a))
        srt = np.argsort(rows)
        indices.append(rows[srt])
        data.append(vals[srt])
        indptr.append(indptr[-1] + (b - a))
        col_photon.append(basis.photon[rows[0]])

    dim = len(col_photon)
    matrix = sp.csc_matrix(
        (
            np.concatenate(data) if data else np.empty(0),
            np.concatenate(indices) if indices else np.empty(0, dtype=np.int64),
            np.asarray(indptr, dtype=np.int64),
        ),
        shape=(len(basis), dim),
    )
    return SubspaceBasis(
        source=basis,
        matrix=matrix,
        statistics=statistics,
        column_photon=np.asarray(col_photon, dtype=np.int64),
    )


def project(basis: BasisSet, statistics: Statistics, *,
            method: str = "orbit") -> SubspaceBasis:
    """Dispatch to the orbit or reference path."""
    if method == "orbit":
        return project_orbit(basis, statistics)
    if method == "reference":
        return project_reference(basis, statistics)
    raise ValidationError(f"unknown projection method {method!r}")


def count_first_excited(m: int, m_g: int, n: int, statistics: Statistics) -> int:
    """Closed-form dimension of the projected first-excitation manifold.

    Symmetric combinations are counted by multisets (one per multiset of
    occupied levels), antisymmetric ones by strictly increasing level
    tuples; the unprojected count is the raw product-state count.
    """
    if not (1 <= m_g < m) or n < 1:
        raise ValidationError("need 1 <= m_g < m and n >= 1")
    m_e = m - m_g
    if statistics is Statistics.NONE:
        return m_g**n + n * m_e * m_g ** (n - 1)
    if statistics is Statistics.BOSON:
        return math.comb(m_g + n - 1, n) + m_e * math.comb(m_g + n - 2, n - 1)
    return math.comb(m_g, n) + m_e * math.comb(m_g, n - 1)

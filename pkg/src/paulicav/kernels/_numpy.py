"""Pure-numpy implementations of the hot kernels.

These are the reference semantics; `kernels._numba` mirrors each function
one-to-one.  All integer arrays are int64, all floats float64.
"""

import numpy as np


def decode_occupations(count: int, m: int, n: int) -> np.ndarray:
    """Rows 0..count-1 as big-endian base-m digit tuples of length n."""
    idx = np.arange(count, dtype=np.int64)
    occ = np.empty((count, n), dtype=np.int64)
    for p in range(n - 1, -1, -1):
        occ[:, p] = idx % m
        idx //= m
    return occ


def sort_rows_with_parity(occ: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Row-sorted copy of `occ` plus the sign of each sorting permutation.

    The sign is computed from the inversion count of the row; ties do not
    count as inversions, so rows with repeated entries get the sign of any
    minimal-swap sort.
    """
    canon = np.sort(occ, axis=1)
    n = occ.shape[1]
    inversions = np.zeros(occ.shape[0], dtype=np.int64)
    for i in range(n - 1):
        for j in range(i + 1, n):
            inversions += occ[:, i] > occ[:, j]
    parity = np.where(inversions % 2 == 0, 1, -1).astype(np.int64)
    return canon, parity


def assemble_hamiltonian(
    photon: np.ndarray,
    occ: np.ndarray,
    codes: np.ndarray,
    n_max: int,
    m: int,
    energies: np.ndarray,
    dipole: np.ndarray,
    photon_wn: float,
    coupling: float,
    rwa: bool,
    m_g: int,
) -> np.ndarray:
    """Dense Hamiltonian over the basis described by (photon, occ, codes).

    Diagonal: sum of occupied level energies plus photon_wn * photon number.
    Off-diagonal: coupling * dipole[k, l] * ladder factor between states that
    differ in one photon quantum and at most one molecular index.  `codes`
    must be ascending (photon-major mixed-radix encoding) so targets can be
    located by binary search; couplings whose target lies outside the basis
    are dropped, which is what restricting the operator to the basis means.
    With `rwa` only terms pairing photon gain with manifold de-excitation
    (and vice versa) survive; manifold membership is level index >= m_g.
    """
    d = codes.shape[0]
    n = occ.shape[1]
    h = np.zeros((d, d))
    rows = np.arange(d)
    h[rows, rows] = energies[occ].sum(axis=1) + photon * photon_wn
    if coupling == 0.0:
        return h
    mol_size = m**n
    for p in range(n):
        stride = m ** (n - 1 - p)
        src_lvl = occ[:, p]
        for lvl in range(m):
            amp = coupling * dipole[src_lvl, lvl]
            if not amp.any():
                continue
            shifted = codes + (lvl - src_lvl) * stride
            for dn in (1, -1):
                tgt_n = photon + dn
                ok = (tgt_n >= 0) & (tgt_n <= n_max)
                if rwa:
                    if dn == 1:
                        ok &= (src_lvl >= m_g) & (lvl < m_g)
                    else:
                        ok &= (src_lvl < m_g) & (lvl >= m_g)
                tgt_code = shifted + dn * mol_size
                pos = np.minimum(np.searchsorted(codes, tgt_code), d - 1)
                ok &= codes[pos] == tgt_code
                if not ok.any():
                    continue
                ladder = np.sqrt(np.maximum(photon, tgt_n).astype(np.float64))
                h[rows[ok], pos[ok]] += amp[ok] * ladder[ok]
    return h

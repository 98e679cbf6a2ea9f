"""Numba-compiled twins of the kernels in `kernels._numpy`."""

import numpy as np
from numba import njit


@njit(cache=True)
def decode_occupations(count, m, n):
    occ = np.empty((count, n), dtype=np.int64)
    for i in range(count):
        rem = i
        for p in range(n - 1, -1, -1):
            occ[i, p] = rem % m
            rem //= m
    return occ


@njit(cache=True)
def sort_rows_with_parity(occ):
    count, n = occ.shape
    canon = occ.copy()
    parity = np.empty(count, dtype=np.int64)
    for r in range(count):
        row = canon[r]
        swaps = 0
        # insertion sort; each shift removes exactly one inversion
        for i in range(1, n):
            key = row[i]
            j = i - 1
            while j >= 0 and row[j] > key:
                row[j + 1] = row[j]
                j -= 1
                swaps += 1
            row[j + 1] = key
        parity[r] = 1 if swaps % 2 == 0 else -1
    return canon, parity


@njit(cache=True)
def assemble_hamiltonian(
    photon, occ, codes, n_max, m, energies, dipole, photon_wn, coupling, rwa, m_g
):
    d = codes.shape[0]
    n = occ.shape[1]
    h = np.zeros((d, d))
    for s in range(d):
        e = photon[s] * photon_wn
        for p in range(n):
            e += energies[occ[s, p]]
        h[s, s] = e
    if coupling == 0.0:
        return h
    mol_size = 1
    for _ in range(n):
        mol_size *= m
    strides = np.empty(n, dtype=np.int64)
    strides[n - 1] = 1
    for p in range(n - 2, -1, -1):
        strides[p] = strides[p + 1] * m
    for s in range(d):
        nph = photon[s]
        for p in range(n):
            k = occ[s, p]
            for lvl in range(m):
                amp = coupling * dipole[k, lvl]
                if amp == 0.0:
                    continue
                shifted = codes[s] + (lvl - k) * strides[p]
                for t in range(2):
                    dn = 1 if t == 0 else -1
                    tgt_n = nph + dn
                    if tgt_n < 0 or tgt_n > n_max:
                        continue
                    if rwa:
                        if dn == 1:
                            if k < m_g or lvl >= m_g:
                                continue
                        else:
                            if k >= m_g or lvl < m_g:
                                continue
                    tgt_code = shifted + dn * mol_size
                    pos = np.searchsorted(codes, tgt_code)
                    if pos < d and codes[pos] == tgt_code:
                        f = float(nph) if dn == -1 else float(tgt_n)
                        h[s, pos] += amp * np.sqrt(f)
    return h

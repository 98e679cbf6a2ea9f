#!/usr/bin/env python3
"""Benchmark the numba kernel path against the pure-numpy fallback.

Runs each kernel on representative problem sizes and reports the best of
`--repeat` timed runs per path.  The numba functions are called once
before timing so compilation is excluded.

    python benchmarks/bench_kernels.py
"""

import argparse
import time

import numpy as np

from paulicav.kernels import _numba, _numpy
from paulicav.model import synthetic_model
from paulicav.statespace import enumerate_full


def best_of(fn, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def bench(name, numpy_fn, numba_fn, repeat):
    numba_fn()  # trigger compilation outside the timed region
    t_np, r_np = best_of(numpy_fn, repeat)
    t_nb, r_nb = best_of(numba_fn, repeat)
    if isinstance(r_np, tuple):
        agree = all(np.array_equal(a, b) for a, b in zip(r_np, r_nb))
    else:
        agree = np.allclose(r_np, r_nb, atol=1e-12)
    print(
        f"{name:<28} numpy {t_np * 1e3:9.2f} ms   numba {t_nb * 1e3:9.2f} ms"
        f"   speedup {t_np / t_nb:6.2f}x   agree={agree}"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print("kernel benchmarks (best of", args.repeat, "runs)")

    # mixed-radix decoding: 8**7 = 2,097,152 states of 7 molecules
    m, n = 8, 7
    count = m**n
    bench(
        f"decode_occupations {count}x{n}",
        lambda: _numpy.decode_occupations(count, m, n),
        lambda: _numba.decode_occupations(count, m, n),
        args.repeat,
    )

    occ = _numpy.decode_occupations(count, m, n)
    bench(
        f"sort_rows_with_parity {count}x{n}",
        lambda: _numpy.sort_rows_with_parity(occ),
        lambda: _numba.sort_rows_with_parity(occ),
        args.repeat,
    )

    # dense Hamiltonian assembly at the 2000-state scale
    mol = synthetic_model(10, 5, excitation=1681.0, dipole_strength=0.1)
    basis = enumerate_full(10, 3, 1)
    hargs = (
        basis.photon, basis.occ, basis.codes, basis.n_max, basis.m,
        mol.energies, mol.dipole, 1681.0, 490.0, False, mol.m_g,
    )
    bench(
        f"assemble_hamiltonian D={len(basis)}",
        lambda: _numpy.assemble_hamiltonian(*hargs),
        lambda: _numba.assemble_hamiltonian(*hargs),
        args.repeat,
    )

    # and a bigger assembly: 4 molecules, D = 4802
    mol4 = synthetic_model(7, 3, excitation=1400.0, dipole_strength=0.1)
    basis4 = enumerate_full(7, 4, 1)
    hargs4 = (
        basis4.photon, basis4.occ, basis4.codes, basis4.n_max, basis4.m,
        mol4.energies, mol4.dipole, 1400.0, 300.0, False, mol4.m_g,
    )
    bench(
        f"assemble_hamiltonian D={len(basis4)}",
        lambda: _numpy.assemble_hamiltonian(*hargs4),
        lambda: _numba.assemble_hamiltonian(*hargs4),
        args.repeat,
    )


if __name__ == "__main__":
    main()

"""Hot numeric kernels with a numba JIT path and a pure-numpy fallback.

The numba path is used whenever numba imports cleanly.  Set the
environment variable ``PAULICAV_NO_NUMBA=1`` (before import) to force the
pure-numpy path; ``BACKEND`` records which one is active.  Both paths
implement identical semantics (see ``kernels._numpy`` for the documented
reference); ``benchmarks/bench_kernels.py`` times them against each other.
"""

import os

from . import _numpy

if os.environ.get("PAULICAV_NO_NUMBA", "0") not in ("", "0"):
    _impl = _numpy
    BACKEND = "numpy"
else:
    try:
        from . import _numba as _impl

        BACKEND = "numba"
    except ImportError:
        _impl = _numpy
        BACKEND = "numpy"

decode_occupations = _impl.decode_occupations
sort_rows_with_parity = _impl.sort_rows_with_parity
assemble_hamiltonian = _impl.assemble_hamiltonian

__all__ = [
    "BACKEND",
    "decode_occupations",
    "sort_rows_with_parity",
    "assemble_hamiltonian",
]

"""Kernel backend selection.

The compiled extension (`_kernels_cy`, built from Cython) and the pure
Python module (`_kernels_py`) export the same four functions.  The
compiled one wins when present; `PLANAR_ARENA_PURE=1` forces the pure
backend (used by the benchmark to compare the two lanes).
"""

from __future__ import annotations

import os

if os.environ.get("PLANAR_ARENA_PURE") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
hamiltonian_cycle = _impl.hamiltonian_cycle
hamiltonian_path = _impl.hamiltonian_path
subgraph_isomorphism = _impl.subgraph_isomorphism
minor_contains = _impl.minor_contains

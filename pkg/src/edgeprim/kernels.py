"""Kernel selection.

The compiled extension ``edgeprim._kernels`` is used when it imports;
otherwise the pure-Python ``_pykernels`` take over. Setting
``EDGEPRIM_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("EDGEPRIM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
    if _compiled is not None:
        _impl = _compiled
        BACKEND = "compiled"


def _as_rows(gens, n):
    if _impl is _pykernels:
        return [list(g) for g in gens]
    import numpy as np

    if len(gens) == 0:
        return np.empty((0, n), dtype=np.int32)
    return np.asarray([list(g) for g in gens], dtype=np.int32)


def orbit_labels(gens, n):
    return list(_impl.orbit_labels(_as_rows(gens, n), n))


def minimal_block(gens, n, p, q):
    return list(_impl.minimal_block(_as_rows(gens, n), n, p, q))


def block_size(gens, n, p, q):
    return int(_impl.block_size(_as_rows(gens, n), n, p, q))


def orbit_with_schreier(gens, n, root):
    return _impl.orbit_with_schreier(_as_rows(gens, n), n, root)


def map_pairs(perm, a, b, keys, nv):
    return _impl.map_pairs(perm, a, b, keys, nv)


def use_backend(name: str) -> None:
    """Switch backend at runtime (``"python"`` or ``"compiled"``); for
    benchmarks and equivalence tests."""
    global _impl, BACKEND
    if name == "python":
        _impl, BACKEND = _pykernels, "python"
    elif name == "compiled":
        from . import _kernels as compiled

        _impl, BACKEND = compiled, "compiled"
    else:
        raise ValueError(f"unknown backend {name!r}")

from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from edgeprim import _pykernels, kernels

compiled = pytest.importorskip("edgeprim._kernels")


def rows(gens, n):
    return np.asarray([list(g) for g in gens], dtype=np.int32).reshape(len(gens), n)


@st.composite
def generator_sets(draw, max_degree=30):
    n = draw(st.integers(2, max_degree))
    k = draw(st.integers(0, 3))
    gens = [draw(st.permutations(range(n))) for _ in range(k)]
    return n, gens


@given(generator_sets())
@settings(max_examples=150, deadline=None)
def test_orbit_labels_agree(data):
    n, gens = data
    assert list(compiled.orbit_labels(rows(gens, n), n)) == _pykernels.orbit_labels(gens, n)


@given(generator_sets(), st.data())
@settings(max_examples=150, deadline=None)
def test_blocks_agree(data, draw):
    n, gens = data
    p = draw.draw(st.integers(0, n - 1))
    q = draw.draw(st.integers(0, n - 1).filter(lambda x: x != p))
    assert list(compiled.minimal_block(rows(gens, n), n, p, q)) == \
        _pykernels.minimal_block(gens, n, p, q)
    py_size = _pykernels.block_size(gens, n, p, q)
    assert compiled.block_size(rows(gens, n), n, p, q) == py_size
    labels = _pykernels.minimal_block(gens, n, p, q)
    full = labels.count(labels[p])
    # the early exit reports n whenever the block exceeds half the domain
    assert py_size == (n if full > n // 2 else full)


@given(generator_sets(), st.data())
@settings(max_examples=150, deadline=None)
def test_schreier_orbits_agree(data, draw):
    n, gens = data
    root = draw.draw(st.integers(0, n - 1))
    a = compiled.orbit_with_schreier(rows(gens, n), n, root)
    b = _pykernels.orbit_with_schreier(gens, n, root)
    assert [list(x) for x in a] == [list(x) for x in b]


@given(st.integers(3, 25), st.data())
@settings(max_examples=100, deadline=None)
def test_map_pairs_agree(nv, draw):
    perm = draw.draw(st.permutations(range(nv)))
    pairs = sorted({(min(a, b), max(a, b)) for a in range(nv) for b in range(nv) if a != b})
    a = np.asarray([x for x, _ in pairs], dtype=np.int32)
    b = np.asarray([y for _, y in pairs], dtype=np.int32)
    keys = a.astype(np.int64) * nv + b
    got = compiled.map_pairs(np.asarray(perm, dtype=np.int32), a, b, keys, nv)
    want = _pykernels.map_pairs(perm, a.tolist(), b.tolist(), keys.tolist(), nv)
    assert list(got) == want


def test_map_pairs_missing_pair_raises():
    keys = np.asarray([0 * 3 + 1], dtype=np.int64)
    a = np.asarray([0], dtype=np.int32)
    b = np.asarray([1], dtype=np.int32)
    perm = np.asarray([0, 2, 1], dtype=np.int32)
    with pytest.raises(KeyError):
        compiled.map_pairs(perm, a, b, keys, 3)
    with pytest.raises(KeyError):
        _pykernels.map_pairs([0, 2, 1], [0], [1], [1], 3)


def test_use_backend_switches_and_restores():
    before = kernels.BACKEND
    try:
        kernels.use_backend("python")
        assert kernels.BACKEND == "python"
        assert kernels.orbit_labels([(1, 0, 2)], 3) == [0, 0, 2]
        kernels.use_backend("compiled")
        assert kernels.BACKEND == "compiled"
        assert kernels.orbit_labels([(1, 0, 2)], 3) == [0, 0, 2]
        with pytest.raises(ValueError):
            kernels.use_backend("fortran")
    finally:
        kernels.use_backend(before)


def test_environment_forces_fallback():
    env = dict(os.environ, EDGEPRIM_PURE_PYTHON="1")
    code = ("from edgeprim import kernels; from edgeprim.catalog import find_entry, verify_entry;"
            "r = verify_entry(find_entry('M10-K10')); print(kernels.BACKEND, r.verdict)")
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert proc.stdout.split() == ["python", "pass"], proc.stderr

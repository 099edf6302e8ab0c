import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prepea import _kernels_py, kernels
from prepea.canon import _parts
from prepea.enumeration import all_gppea, all_wppea, enumerate_posets_with_bottom

compiled = pytest.importorskip("prepea._kernels")


@st.composite
def partial_tables(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    cells = draw(st.lists(st.integers(-1, n - 1), min_size=n * n, max_size=n * n))
    return np.array(cells, dtype=np.int32).reshape(n, n)


@settings(max_examples=300, deadline=None)
@given(partial_tables())
def test_assoc_scan_agrees(t):
    assert compiled.assoc_scan(t) == _kernels_py.assoc_scan(t)


_ORDERS = [p for k in range(1, 6) for p in enumerate_posets_with_bottom(k)]


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_residuation_scan_agrees(data):
    po = data.draw(st.sampled_from(_ORDERS))
    n = po.size
    leq = np.array(po.leq, dtype=np.uint8)
    cell = st.integers(-1, n - 1)
    p = np.array(data.draw(st.lists(cell, min_size=n * n, max_size=n * n)), dtype=np.int32).reshape(n, n)
    m = np.array(data.draw(st.lists(cell, min_size=n * n, max_size=n * n)), dtype=np.int32).reshape(n, n)
    right = data.draw(st.booleans())
    assert compiled.residuation_scan(p, m, leq, right) == _kernels_py.residuation_scan(p, m, leq, right)


_OBJECTS = [m for k in range(1, 5) for m in all_gppea(k)] + [m for k in range(2, 6) for m in all_wppea(k)]


@pytest.mark.parametrize("idx", range(0, len(_OBJECTS), 3))
def test_min_encoding_agrees(idx):
    _, tables, maps, rels, perms = _parts(_OBJECTS[idx])
    assert compiled.min_encoding(tables, maps, rels, perms) == _kernels_py.min_encoding(tables, maps, rels, perms)


def test_backend_selection_honours_environment():
    code = "from prepea import kernels; print(kernels.BACKEND)"
    env = {**os.environ, "PREPEA_PURE": "1"}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("cython", "python")

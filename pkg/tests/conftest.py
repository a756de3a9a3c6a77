"""Shared test helpers: backend discovery and exhaustive enumeration."""

from __future__ import annotations

import numpy as np
import pytest

from qeca import _kernels_py
from qeca.rules import Configuration

try:
    from qeca import _kernels_c
except ImportError:  # extension not built; fallback-only run
    _kernels_c = None

BACKENDS = [_kernels_py] if _kernels_c is None else [_kernels_py, _kernels_c]


@pytest.fixture(params=BACKENDS, ids=lambda mod: mod.BACKEND)
def kernel_backend(request):
    return request.param


def all_configurations(n: int):
    """Every n-cell configuration, in encoding order."""
    return [Configuration.from_int(k, n) for k in range(1 << n)]


def reference_outputs(rule: int, n: int, periodic: bool) -> np.ndarray:
    """Cell-by-cell truth-table stepping, vectorized over all states.

    Independent of the shifted-word kernels: unpacks every state to a bit
    matrix, gathers each cell's neighborhood, and looks the result up in the
    rule's 8-entry table.
    """
    table = np.array([(rule >> k) & 1 for k in range(8)], dtype=np.uint32)
    states = np.arange(1 << n, dtype=np.uint32)
    positions = np.arange(n)
    bits = (states[:, None] >> positions) & 1
    left = bits[:, (positions - 1) % n].copy()
    right = bits[:, (positions + 1) % n].copy()
    if not periodic:
        left[:, 0] = 0
        right[:, n - 1] = 0
    neighborhood = 4 * left + 2 * bits + right
    out_bits = table[neighborhood]
    return (out_bits << positions).sum(axis=1).astype(np.uint32)

"""Enumeration kernels with a compiled core and a pure-Python fallback.

The Cython extension is preferred when it imported cleanly; setting
SHADOWCODES_PURE=1 in the environment forces the fallback (used by the
benchmark and to debug backend discrepancies).
"""

import os

import numpy as np

from . import _pure

if os.environ.get("SHADOWCODES_PURE"):
    _impl = _pure
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pure
        BACKEND = "python"

weight_enum_r2 = _impl.weight_enum_r2
weight_enum_modr = _impl.weight_enum_modr


def pack_rows(rows: np.ndarray) -> np.ndarray:
    """Pack (L, n) rows of bits into (L, ceil(n/64)) uint64 words.

    Bit j of a row lands in word j >> 6 at position j & 63.
    """
    L, n = rows.shape
    W = (n + 63) // 64
    padded = np.zeros((L, W * 64), dtype=np.uint64)
    padded[:, :n] = rows
    weights = np.uint64(1) << np.arange(64, dtype=np.uint64)
    return (padded.reshape(L, W, 64) * weights).sum(axis=2, dtype=np.uint64)

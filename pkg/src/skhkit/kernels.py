"""Backend selection for the hot kernels.

The compiled extension ``skhkit._core`` is used when it imports; otherwise the
pure-Python module ``skhkit._core_py`` takes over.  ``SKHKIT_PURE_PYTHON=1``
forces the fallback.  Every entry point also takes an explicit ``backend``.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _core_py

_compiled = None
if not os.environ.get("SKHKIT_PURE_PYTHON"):
    try:
        from . import _core as _compiled
    except ImportError:
        _compiled = None

HAVE_COMPILED = _compiled is not None
BACKEND = "cython" if HAVE_COMPILED else "python"
BACKENDS = ("cython", "python") if HAVE_COMPILED else ("python",)

MAX_CIRCLES = 40


def _module(backend: str | None):
    backend = backend or BACKEND
    if backend == "python":
        return _core_py
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e .`")
        return _compiled
    raise ValueError(f"unknown backend {backend!r}")


def pack(vectors: Sequence[int], width: int) -> np.ndarray:
    """Pack int bitsets into a (len(vectors), ceil(width/64)) uint64 array."""
    nwords = max(1, (width + 63) // 64)
    nbytes = nwords * 8
    buf = b"".join(v.to_bytes(nbytes, "little") for v in vectors)
    return np.frombuffer(buf, dtype="<u8").reshape(len(vectors), nwords).astype(np.uint64)


def rank_packed(packed: np.ndarray, backend: str | None = None) -> int:
    return _module(backend).rank_packed(packed)


def rank_vectors(vectors: Sequence[int], width: int, backend: str | None = None) -> int:
    """GF(2) rank of int bitsets (bit r = coordinate r)."""
    vectors = [v for v in vectors if v]
    if not vectors:
        return 0
    if (backend or BACKEND) == "python":
        return _core_py.rank_int_vectors(vectors)
    return rank_packed(pack(vectors, width), backend)


def rank_entries(nrows: int, ncols: int, src, tgt, backend: str | None = None) -> int:
    """GF(2) rank of the nrows x ncols matrix with xor-accumulated ones at (src, tgt)."""
    return _module(backend).rank_entries(nrows, ncols, src, tgt)


@lru_cache(maxsize=1 << 16)
def _edge_terms_cached(backend, nc, moves_src, moves_dst, merge, a, b, c1, c2, s_nt, t_nt):
    src, tgt = _module(backend).edge_terms(nc, moves_src, moves_dst, merge, a, b, c1, c2, s_nt, t_nt)
    src.flags.writeable = False
    tgt.flags.writeable = False
    return src, tgt


def edge_terms(nc, moves_src, moves_dst, merge, a, b, c1, c2, s_nt, t_nt, backend: str | None = None):
    """Label-mask pairs (source, target) of the k-preserving part of one edge map."""
    if nc > MAX_CIRCLES:
        raise ValueError(f"{nc} circles in one resolution is beyond the supported range")
    return _edge_terms_cached(
        backend or BACKEND, nc, tuple(moves_src), tuple(moves_dst), bool(merge), a, b, c1, c2, s_nt, t_nt
    )

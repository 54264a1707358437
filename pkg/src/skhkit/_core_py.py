"""Pure-Python versions of the compiled kernels in ``_core.pyx``."""

from __future__ import annotations

from typing import Iterable

import numpy as np


def rank_int_vectors(vectors: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    for v in vectors:
        while v:
            lead = v.bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = v
                break
            v ^= p
    return len(pivots)


def rank_packed(packed: np.ndarray) -> int:
    if packed.size == 0:
        return 0
    data = np.ascontiguousarray(packed, dtype="<u8")
    nbytes = data.shape[1] * 8
    raw = data.tobytes()
    return rank_int_vectors(
        int.from_bytes(raw[r * nbytes : (r + 1) * nbytes], "little") for r in range(data.shape[0])
    )


def rank_entries(nrows: int, ncols: int, src, tgt) -> int:
    if nrows == 0 or ncols == 0 or len(src) == 0:
        return 0
    rows = [0] * nrows
    for s, t in zip(np.asarray(src).tolist(), np.asarray(tgt).tolist()):
        rows[s] ^= 1 << t
    return rank_int_vectors(rows)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def edge_terms(nc, moves_src, moves_dst, merge, a, b, c1, c2, s_nt, t_nt):
    moves = list(zip(moves_src, moves_dst))
    s_k0, t_k0 = _popcount(s_nt), _popcount(t_nt)
    out_s: list[int] = []
    out_t: list[int] = []
    for x in range(1 << nc):
        y = 0
        for s, d in moves:
            if (x >> s) & 1:
                y |= 1 << d
        if merge:
            xa, xb = (x >> a) & 1, (x >> b) & 1
            if xa and xb:
                cands = (y | (1 << c1),)
            elif xa or xb:
                cands = (y,)
            else:
                continue
        elif (x >> a) & 1:
            cands = (y | (1 << c1), y | (1 << c2))
        else:
            cands = (y,)
        kx = 2 * _popcount(x & s_nt) - s_k0
        for z in cands:
            if 2 * _popcount(z & t_nt) - t_k0 == kx:
                out_s.append(x)
                out_t.append(z)
    return np.array(out_s, dtype=np.int64), np.array(out_t, dtype=np.int64)

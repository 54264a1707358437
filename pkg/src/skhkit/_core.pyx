# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: GF(2) elimination on bit-packed rows and per-edge label maps.

Same signatures and results as ``skhkit._core_py``.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

cnp.import_array()


cdef extern from *:
    int _ctz "__builtin_ctzll"(unsigned long long x) nogil
    int _popcount "__builtin_popcountll"(unsigned long long x) nogil


cdef Py_ssize_t _eliminate(uint64_t* base, Py_ssize_t nrows, Py_ssize_t nwords) nogil:
    """Incremental reduction: each stored pivot row owns its lowest set bit."""
    cdef Py_ssize_t nbits = nwords * 64
    cdef Py_ssize_t* owner = <Py_ssize_t*> malloc(nbits * sizeof(Py_ssize_t))
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t r, w, x, lead, p
    cdef uint64_t word
    cdef uint64_t* row
    cdef uint64_t* prow
    if owner == NULL:
        return -1
    for x in range(nbits):
        owner[x] = -1
    for r in range(nrows):
        row = base + r * nwords
        w = 0
        while True:
            while w < nwords and row[w] == 0:
                w += 1
            if w == nwords:
                break
            word = row[w]
            lead = w * 64 + _ctz(word)
            p = owner[lead]
            if p < 0:
                owner[lead] = r
                rank += 1
                break
            prow = base + p * nwords
            for x in range(w, nwords):
                row[x] ^= prow[x]
    free(owner)
    return rank


def rank_packed(packed):
    """Rank of a (rows, words) uint64 array; the input is not modified."""
    if packed.size == 0:
        return 0
    cdef cnp.ndarray[cnp.uint64_t, ndim=2, mode="c"] m = np.array(packed, dtype=np.uint64, order="C", copy=True)
    cdef Py_ssize_t r
    with nogil:
        r = _eliminate(<uint64_t*> m.data, m.shape[0], m.shape[1])
    if r < 0:
        raise MemoryError()
    return r


def rank_entries(Py_ssize_t nrows, Py_ssize_t ncols, src, tgt):
    """Rank of the GF(2) matrix with a 1 (xor-accumulated) at each (src[e], tgt[e])."""
    if nrows == 0 or ncols == 0 or len(src) == 0:
        return 0
    cdef Py_ssize_t nwords = (ncols + 63) // 64
    cdef cnp.ndarray[cnp.uint64_t, ndim=2, mode="c"] m = np.zeros((nrows, nwords), dtype=np.uint64)
    cdef int64_t[:] s = np.ascontiguousarray(src, dtype=np.int64)
    cdef int64_t[:] t = np.ascontiguousarray(tgt, dtype=np.int64)
    cdef uint64_t* base = <uint64_t*> m.data
    cdef Py_ssize_t e, n = s.shape[0], r
    with nogil:
        for e in range(n):
            base[s[e] * nwords + (t[e] >> 6)] ^= (<uint64_t> 1) << (t[e] & 63)
        r = _eliminate(base, nrows, nwords)
    if r < 0:
        raise MemoryError()
    return r


def edge_terms(int nc, tuple moves_src, tuple moves_dst, bint merge, int a, int b,
               int c1, int c2, int64_t s_nt, int64_t t_nt):
    """k-preserving terms of one merge/split edge map on label masks (bit set = v+).

    merge: source circles a, b become target circle c1.
    split: source circle a becomes target circles c1, c2.
    Other circles move from ``moves_src[i]`` to ``moves_dst[i]``.
    Returns (source masks, target masks) as int64 arrays.
    """
    cdef Py_ssize_t nmoves = len(moves_src)
    cdef int[64] ms
    cdef int[64] md
    cdef Py_ssize_t i
    for i in range(nmoves):
        ms[i] = moves_src[i]
        md[i] = moves_dst[i]
    cdef int64_t total = (<int64_t> 1) << nc
    out_s = np.empty(2 * total, dtype=np.int64)
    out_t = np.empty(2 * total, dtype=np.int64)
    cdef int64_t[:] os_ = out_s
    cdef int64_t[:] ot = out_t
    cdef Py_ssize_t n = 0
    cdef int64_t x, y, z, s_k0 = _popcount(s_nt), t_k0 = _popcount(t_nt)
    cdef int64_t kx
    cdef int xa, xb
    with nogil:
        for x in range(total):
            y = 0
            for i in range(nmoves):
                if (x >> ms[i]) & 1:
                    y |= (<int64_t> 1) << md[i]
            kx = 2 * _popcount(x & s_nt) - s_k0
            if merge:
                xa = (x >> a) & 1
                xb = (x >> b) & 1
                if xa and xb:
                    z = y | ((<int64_t> 1) << c1)
                elif xa or xb:
                    z = y
                else:
                    continue
                if 2 * _popcount(z & t_nt) - t_k0 == kx:
                    os_[n] = x
                    ot[n] = z
                    n += 1
            else:
                if (x >> a) & 1:
                    z = y | ((<int64_t> 1) << c1)
                    if 2 * _popcount(z & t_nt) - t_k0 == kx:
                        os_[n] = x
                        ot[n] = z
                        n += 1
                    z = y | ((<int64_t> 1) << c2)
                    if 2 * _popcount(z & t_nt) - t_k0 == kx:
                        os_[n] = x
                        ot[n] = z
                        n += 1
                else:
                    z = y
                    if 2 * _popcount(z & t_nt) - t_k0 == kx:
                        os_[n] = x
                        ot[n] = z
                        n += 1
    return out_s[:n].copy(), out_t[:n].copy()

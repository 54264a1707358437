"""Sutured annular Khovanov homology of braid closures over GF(2).

Diagram model.  Level lines 0..m sit between the m crossings (line 0 on top);
each line carries n ports, node id ``line * n + position``.  Every node has a
high half-edge (towards the crossing above, or the closure arc on line 0) and
a low half-edge (towards the crossing below, or the closure arc on line m).
A resolution is a perfect matching of half-edges, and its circles are the
cycles.  Passing a closure arc downwards (line m back to line 0) counts +1
towards the winding number of a circle, passing it upwards counts -1.

Smoothing convention: a positive crossing's 0-smoothing keeps both strands
vertical and its 1-smoothing is the cap-cup; a negative crossing swaps them.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import kernels
from .braid import BraidWord
from .laurent import ZERO, LaurentPolynomial, render

DEFAULT_MAX_CROSSINGS = 18


class ComplexTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class CubeVertex:
    bits: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.bits)

    @classmethod
    def from_int(cls, value: int, m: int) -> "CubeVertex":
        return cls(tuple((value >> c) & 1 for c in range(m)))

    def to_int(self) -> int:
        return sum(b << c for c, b in enumerate(self.bits))


@dataclass(frozen=True)
class Circle:
    id: int
    winding: int
    nodes: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return self.winding == 0


@dataclass(frozen=True)
class AnnularCircleDiagram:
    circles: tuple[Circle, ...]

    def __len__(self):
        return len(self.circles)

    @property
    def trivial_count(self) -> int:
        return sum(c.trivial for c in self.circles)

    @property
    def nontrivial_count(self) -> int:
        return len(self.circles) - self.trivial_count


@dataclass(frozen=True)
class ComplexGenerator:
    vertex: CubeVertex
    labels: tuple[str, ...]  # "+" or "-" per circle, in circle order
    i: int
    j: int
    k: int


class _Diagram:
    """Half-edge matching data shared by every vertex of one braid's cube."""

    def __init__(self, w: BraidWord):
        n, m = w.strands, len(w.letters)
        self.n, self.m = n, m
        self.nodes = (m + 1) * n
        base = [-1] * (2 * self.nodes)
        sign = [0] * (2 * self.nodes)

        def link(u: int, v: int) -> None:
            base[u] = v
            base[v] = u

        for p in range(n):
            low = 2 * (m * n + p) + 1
            high = 2 * p
            link(low, high)
            sign[low] = 1
            sign[high] = -1
        # per crossing: (vertical pairs, capcup pairs)
        self.options: list[tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]] = []
        self.ports: list[tuple[int, int, int, int]] = []
        self.positive: list[bool] = []
        for c, x in enumerate(w.letters):
            a, b = abs(x) - 1, abs(x)
            for p in range(n):
                if p not in (a, b):
                    link(2 * (c * n + p) + 1, 2 * ((c + 1) * n + p))
            ta, tb = c * n + a, c * n + b
            ba, bb = (c + 1) * n + a, (c + 1) * n + b
            vertical = ((2 * ta + 1, 2 * ba), (2 * tb + 1, 2 * bb))
            capcup = ((2 * ta + 1, 2 * tb + 1), (2 * ba, 2 * bb))
            self.options.append((vertical, capcup))
            self.ports.append((ta, tb, ba, bb))
            self.positive.append(x > 0)
        self.base = base
        self.sign = sign

    def resolve(self, vertex: int):
        """Return (node -> circle id, windings, circle representative nodes)."""
        partner = list(self.base)
        for c, (vertical, capcup) in enumerate(self.options):
            one = (vertex >> c) & 1
            use_capcup = one if self.positive[c] else not one
            for u, v in capcup if use_capcup else vertical:
                partner[u] = v
                partner[v] = u
        sign = self.sign
        label = [-1] * self.nodes
        windings: list[int] = []
        reps: list[int] = []
        for start in range(self.nodes):
            if label[start] >= 0:
                continue
            cid = len(windings)
            h0 = 2 * start + 1
            h = h0
            wind = 0
            label[start] = cid
            while True:
                wind += sign[h]
                h2 = partner[h]
                label[h2 >> 1] = cid
                h = h2 ^ 1
                if h == h0:
                    break
            windings.append(wind)
            reps.append(start)
        return label, windings, reps


def resolve(w: BraidWord, v: CubeVertex) -> AnnularCircleDiagram:
    if len(v.bits) != len(w.letters):
        raise ValueError(f"vertex has {len(v.bits)} bits for a word of length {len(w.letters)}")
    label, windings, _ = _Diagram(w).resolve(v.to_int())
    members: dict[int, list[int]] = defaultdict(list)
    for node, cid in enumerate(label):
        members[cid].append(node)
    return AnnularCircleDiagram(
        tuple(Circle(cid, windings[cid], tuple(members[cid])) for cid in range(len(windings)))
    )


class _Resolved:
    __slots__ = ("label", "windings", "reps", "nc", "nontrivial")

    def __init__(self, label, windings, reps):
        self.label = label
        self.windings = windings
        self.reps = reps
        self.nc = len(windings)
        self.nontrivial = sum(1 << c for c, wd in enumerate(windings) if wd)


def _edge_signature(src: _Resolved, tgt: _Resolved, ports):
    """Arguments for ``kernels.edge_terms`` describing the edge src -> tgt."""
    s_inv = sorted({src.label[p] for p in ports})
    t_inv = sorted({tgt.label[p] for p in ports})
    if len(s_inv) + len(t_inv) != 3:
        raise AssertionError("a planar smoothing change must merge two circles or split one")
    moves_src = tuple(s for s in range(src.nc) if s not in s_inv)
    moves_dst = tuple(tgt.label[src.reps[s]] for s in moves_src)
    merge = len(s_inv) == 2
    if merge:
        a, b = s_inv
        c1, c2 = t_inv[0], -1
    else:
        a, b = s_inv[0], -1
        c1, c2 = t_inv
    return src.nc, moves_src, moves_dst, merge, a, b, c1, c2, src.nontrivial, tgt.nontrivial


@lru_cache(maxsize=None)
def _grading_table(nc: int, nontrivial: int) -> tuple[np.ndarray, np.ndarray]:
    """Per label mask: (#plus - #minus, annular grading k)."""
    masks = np.arange(1 << nc, dtype=np.int64)
    pop = np.zeros_like(masks)
    pop_nt = np.zeros_like(masks)
    for c in range(nc):
        bit = (masks >> c) & 1
        pop += bit
        if (nontrivial >> c) & 1:
            pop_nt += bit
    n_nt = bin(nontrivial).count("1")
    return 2 * pop - nc, 2 * pop_nt - n_nt


@dataclass
class AnnularComplex:
    """Associated graded Khovanov complex, split into cells by (height, j, k).

    Generators are numbered globally (vertex-major, then label mask) and
    locally inside their cell.  ``differential[cell]`` holds the nonzero
    entries (source local index, target local index) of the map from ``cell``
    to ``(height + 1, j, k)``.
    """

    braid: BraidWord
    sizes: dict
    differential: dict
    shift_i: int
    gen_vertex: np.ndarray
    gen_mask: np.ndarray
    gen_cell: list
    circles_at: np.ndarray

    def cells(self) -> list:
        return sorted(self.sizes)

    @property
    def n_generators(self) -> int:
        return len(self.gen_vertex)

    def columns(self, cell) -> list[int]:
        """Images of the cell's generators as int bitsets over the next cell."""
        cols = [0] * self.sizes[cell]
        src, tgt = self.differential.get(cell, (np.empty(0, np.int64), np.empty(0, np.int64)))
        for s, t in zip(src.tolist(), tgt.tolist()):
            cols[s] ^= 1 << t
        return cols

    def generators(self) -> Iterator[ComplexGenerator]:
        m = len(self.braid.letters)
        for gid in range(self.n_generators):
            v = int(self.gen_vertex[gid])
            mask = int(self.gen_mask[gid])
            h, j, k = self.gen_cell[gid]
            nc = int(self.circles_at[v])
            labels = tuple("+" if (mask >> c) & 1 else "-" for c in range(nc))
            yield ComplexGenerator(CubeVertex.from_int(v, m), labels, h - self.shift_i, j, k)


def build_annular_complex(
    w: BraidWord, max_crossings: int = DEFAULT_MAX_CROSSINGS, backend: str | None = None
) -> AnnularComplex:
    m = len(w.letters)
    if m > max_crossings:
        raise ComplexTooLarge(f"word length {m} exceeds the bound of {max_crossings} crossings")
    diag = _Diagram(w)
    qshift = w.n_plus - 2 * w.n_minus
    nv = 1 << m
    verts = [_Resolved(*diag.resolve(v)) for v in range(nv)]
    nc = np.array([r.nc for r in verts], dtype=np.int64)
    heights = np.array([bin(v).count("1") for v in range(nv)], dtype=np.int64)
    counts = np.left_shift(1, nc)
    offsets = np.zeros(nv + 1, dtype=np.int64)
    np.cumsum(counts, out=offsets[1:])

    gen_vertex = np.repeat(np.arange(nv, dtype=np.int64), counts)
    gen_mask = np.arange(offsets[-1], dtype=np.int64) - offsets[gen_vertex]
    jrel = np.empty(offsets[-1], dtype=np.int64)
    kk = np.empty(offsets[-1], dtype=np.int64)
    for v, r in enumerate(verts):
        jt, kt = _grading_table(r.nc, r.nontrivial)
        jrel[offsets[v] : offsets[v + 1]] = jt
        kk[offsets[v] : offsets[v + 1]] = kt
    hh = heights[gen_vertex]
    jj = jrel + hh + qshift

    keys = np.stack([hh, jj, kk], axis=1)
    cell_keys, cell_id = np.unique(keys, axis=0, return_inverse=True)
    cell_id = cell_id.reshape(-1)
    order = np.argsort(cell_id, kind="stable")
    cell_sizes = np.bincount(cell_id, minlength=len(cell_keys))
    starts = np.zeros(len(cell_keys), dtype=np.int64)
    np.cumsum(cell_sizes[:-1], out=starts[1:])
    local = np.empty_like(cell_id)
    local[order] = np.arange(len(order), dtype=np.int64) - starts[cell_id[order]]
    cells = [tuple(int(x) for x in key) for key in cell_keys]

    src_parts, tgt_parts = [], []
    for v in range(nv):
        src = verts[v]
        for c in range(m):
            if (v >> c) & 1:
                continue
            u = v | (1 << c)
            sig = _edge_signature(src, verts[u], diag.ports[c])
            sm, tm = kernels.edge_terms(*sig, backend=backend)
            if len(sm):
                src_parts.append(sm + offsets[v])
                tgt_parts.append(tm + offsets[u])

    differential = {}
    if src_parts:
        s_all = np.concatenate(src_parts)
        t_all = np.concatenate(tgt_parts)
        s_cell = cell_id[s_all]
        order = np.argsort(s_cell, kind="stable")
        s_all, t_all, s_cell = s_all[order], t_all[order], s_cell[order]
        bounds = np.flatnonzero(np.diff(s_cell)) + 1
        for lo, hi in zip(np.r_[0, bounds], np.r_[bounds, len(s_cell)]):
            cid = int(s_cell[lo])
            differential[cells[cid]] = (local[s_all[lo:hi]], local[t_all[lo:hi]])

    sizes = {cells[i]: int(cell_sizes[i]) for i in range(len(cells))}
    gen_cell = [cells[i] for i in cell_id.tolist()]
    return AnnularComplex(w, sizes, differential, w.n_minus, gen_vertex, gen_mask, gen_cell, nc)


def edge_map(w: BraidWord, vertex: CubeVertex, crossing: int, backend: str | None = None):
    """The k-preserving edge map out of ``vertex`` along ``crossing``, on circle labels."""
    v = vertex.to_int()
    if (v >> crossing) & 1:
        raise ValueError("edge must flip a 0 to a 1")
    diag = _Diagram(w)
    src = _Resolved(*diag.resolve(v))
    tgt = _Resolved(*diag.resolve(v | (1 << crossing)))
    sm, tm = kernels.edge_terms(*_edge_signature(src, tgt, diag.ports[crossing]), backend=backend)

    def lab(mask, n):
        return tuple("+" if (mask >> c) & 1 else "-" for c in range(n))

    out = {lab(x, src.nc): [] for x in range(1 << src.nc)}
    for x, z in zip(sm.tolist(), tm.tolist()):
        out[lab(x, src.nc)].append(lab(z, tgt.nc))
    return out


def d_squared_is_zero(cx: AnnularComplex) -> bool:
    for (h, j, k) in cx.differential:
        nxt_cell = (h + 1, j, k)
        if nxt_cell not in cx.differential:
            continue
        nxt = cx.columns(nxt_cell)
        for col in cx.columns((h, j, k)):
            acc = 0
            while col:
                low = col & -col
                acc ^= nxt[low.bit_length() - 1]
                col ^= low
            if acc:
                return False
    return True


TriGradedTable = dict  # (i, j, k) -> dimension


def homology(cx: AnnularComplex, backend: str | None = None) -> dict:
    """Dimensions of SKh over GF(2), keyed by (i, j, k)."""
    ranks = {}
    for (h, j, k), (src, tgt) in cx.differential.items():
        ranks[(h, j, k)] = kernels.rank_entries(
            cx.sizes[(h, j, k)], cx.sizes[(h + 1, j, k)], src, tgt, backend=backend
        )
    table = {}
    for (h, j, k), size in cx.sizes.items():
        dim = size - ranks.get((h, j, k), 0) - ranks.get((h - 1, j, k), 0)
        if dim < 0:
            raise AssertionError(f"negative homology dimension at {(h, j, k)}")
        if dim:
            table[(h - cx.shift_i, j, k)] = dim
    return dict(sorted(table.items()))


def skh(w: BraidWord, max_crossings: int = DEFAULT_MAX_CROSSINGS, backend: str | None = None) -> dict:
    return homology(build_annular_complex(w, max_crossings, backend), backend)


def euler_from_table(table: dict[tuple[int, int, int], int]) -> LaurentPolynomial:
    terms: dict[tuple[int, int], int] = defaultdict(int)
    for (i, j, k), dim in table.items():
        terms[(j, k)] += (-1) ** i * dim
    return LaurentPolynomial(terms) if terms else ZERO


def skh_equal(a: dict, b: dict) -> bool:
    return {k: v for k, v in a.items() if v} == {k: v for k, v in b.items() if v}


def render_table(table: dict[tuple[int, int, int], int]) -> str:
    return "\n".join(f"{i} {j} {k} {d}" for (i, j, k), d in sorted(table.items()))


def table_to_json(w: BraidWord, table: dict[tuple[int, int, int], int]) -> dict:
    return {
        "strands": w.strands,
        "word": list(w.letters),
        "table": [[i, j, k, d] for (i, j, k), d in sorted(table.items())],
        "euler": render(euler_from_table(table)),
    }

"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times GF(2) rank on random dense matrices, the edge-map kernel, and the full
SKh computation of the 5-strand mutant pair at k=1.
"""

import argparse
import random
import time

import numpy as np

from skhkit import kernels
from skhkit.braid import family_menasco, family_morton
from skhkit.homology import _Diagram, _Resolved, _edge_signature, build_annular_complex, homology


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def random_entries(rng, nrows, ncols, density):
    nnz = int(nrows * ncols * density)
    return (
        np.array([rng.randrange(nrows) for _ in range(nnz)], dtype=np.int64),
        np.array([rng.randrange(ncols) for _ in range(nnz)], dtype=np.int64),
    )


def edge_signatures(w):
    diag = _Diagram(w)
    m = len(w.letters)
    sigs = set()
    for v in range(1 << m):
        src = None
        for c in range(m):
            if (v >> c) & 1:
                continue
            src = src or _Resolved(*diag.resolve(v))
            tgt = _Resolved(*diag.resolve(v | (1 << c)))
            sigs.add(_edge_signature(src, tgt, diag.ports[c]))
        if len(sigs) > 400:
            break
    return sorted(sigs)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.HAVE_COMPILED:
        print("compiled extension not available; only the Python backend can run")
    backends = kernels.BACKENDS
    rng = random.Random(1)
    rows = []

    for size in (200, 800, 2000):
        src, tgt = random_entries(rng, size, size, 0.02)
        res = {b: best_of(lambda b=b: kernels.rank_entries(size, size, src, tgt, backend=b), args.repeat) for b in backends}
        rows.append((f"rank {size}x{size} dense 2%", res))

    sigs = edge_signatures(family_morton(0)[0])
    res = {}
    for b in backends:
        mod = kernels._module(b)
        res[b] = best_of(lambda mod=mod: [mod.edge_terms(*s) for s in sigs], args.repeat)
    rows.append((f"edge_terms x{len(sigs)} signatures", res))

    w = family_menasco(1)[0]
    res = {}
    for b in backends:
        def run(b=b):
            kernels._edge_terms_cached.cache_clear()
            homology(build_annular_complex(w, backend=b), backend=b)
        res[b] = best_of(run, max(1, args.repeat - 1))
    rows.append((f"SKh of a {len(w.letters)}-crossing 5-braid", res))

    header = f"{'benchmark':40s}" + "".join(f"{b:>12s}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    for name, res in rows:
        line = f"{name:40s}" + "".join(f"{res[b]:11.4f}s" for b in backends)
        if len(backends) == 2:
            line += f"{res['python'] / res['cython']:9.1f}x"
        print(line)


if __name__ == "__main__":
    main()

"""Benchmark: compiled GF(2) kernel vs the pure-Python fallback.

Two workloads: dense random matrices, and the real boundary matrices of
the 3-dimensional pair complex built from two subdivided tetrahedron
boundaries (4224 cells).  Run as `python benchmarks/bench_gf2.py`.
"""

import random
import time

from clcc import build_clcc, gen_barycentric_pair
from clcc.gf2 import IMPLEMENTATION, _pack, rank_pure
from clcc.simplicial import SimplicialComplex

try:
    from clcc import _gf2fast
except ImportError:
    _gf2fast = None


def time_call(fn, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return result, best


def bench_case(name, rows, ncols):
    pure, t_pure = time_call(lambda: rank_pure(rows))
    line = f"{name:<34} rank={pure:<6} pure={t_pure * 1000:9.2f} ms"
    if _gf2fast is not None:
        data, nwords = _pack(rows, ncols)
        fast, t_fast = time_call(
            lambda: _gf2fast.rank_words(data[:], len(rows), nwords)
        )
        assert fast == pure
        line += f"  compiled={t_fast * 1000:9.2f} ms  speedup={t_pure / t_fast:6.1f}x"
    print(line)


def boundary_rows(host, k):
    index = {c: i for i, c in enumerate(host.cells(k - 1))}
    rows = []
    for c in host.cells(k):
        row = 0
        for f in host.boundary_of(c):
            row ^= 1 << index[f]
        rows.append(row)
    return rows, len(index)


def main():
    print(f"active implementation: {IMPLEMENTATION}")
    r = random.Random(0)
    for n in (256, 1024, 2048):
        rows = [r.getrandbits(n) for _ in range(n)]
        bench_case(f"random {n}x{n}", rows, n)

    tetra = SimplicialComplex.from_maximal(
        ["p", "q", "r", "s"],
        [["p", "q", "r"], ["p", "q", "s"], ["p", "r", "s"], ["q", "r", "s"]],
    )
    ga, gb = gen_barycentric_pair(
        tetra, tetra, {"V": 1, "E": 2, "F": 3}, {"V": 2, "E": 1, "F": 3}
    )
    X = build_clcc(ga, gb)
    for k in (1, 2, 3):
        rows, ncols = boundary_rows(X, k)
        bench_case(f"boundary d_{k} ({len(rows)}x{ncols})", rows, ncols)


if __name__ == "__main__":
    main()

"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends get identical inputs; results are checked for equality before
timings are reported.
"""
from __future__ import annotations

import argparse
import random
import time
from itertools import combinations

from gturan import kernels
from gturan.cliques import forward_rows
from gturan.graph import Graph
from gturan.norm_graph import norm_graph
from gturan.oracle import extremal_number
from gturan.patterns import EvenCycle


def _gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def _canon_inputs(count: int, n: int, seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    return [list(_gnp(n, rng.random(), rng.randrange(1 << 30)).rows) for _ in range(count)]


def _best(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    yield "k4(H(7,3)), n=294", forward_rows(norm_graph(7, 3)), "count", 4
    yield "k5(G(60, 0.6))", forward_rows(_gnp(60, 0.6, 1)), "count", 5
    yield "profile G(100, 0.4), rmax=8", forward_rows(_gnp(100, 0.4, 2)), "profile", 8
    yield "canonicity x2000, n=8", _canon_inputs(2000, 8, 3), "canon", 8
    yield "search ex(9, K_2, C_4)", (9, 2, EvenCycle(4)), "search", None


def run_case(impl, data, kind, arg):
    if kind == "count":
        return impl.clique_count(data, arg)
    if kind == "profile":
        return impl.clique_profile(data, arg)
    if kind == "canon":
        return [impl.is_canonical(rows, arg) for rows in data]
    # whole exhaustive search with the backend swapped in
    saved = kernels.clique_count, kernels.is_canonical
    kernels.clique_count, kernels.is_canonical = impl.clique_count, impl.is_canonical
    try:
        return extremal_number(*data, workers=1).value
    finally:
        kernels.clique_count, kernels.is_canonical = saved


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if "cython" not in kernels.BACKENDS:
        raise SystemExit("compiled backend not built; run `pip install --no-build-isolation -e .`")
    py, cy = kernels.BACKENDS["python"], kernels.BACKENDS["cython"]
    print(f"{'case':32s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, data, kind, arg in cases():
        tp, rp = _best(lambda: run_case(py, data, kind, arg), args.repeat)
        tc, rc = _best(lambda: run_case(cy, data, kind, arg), args.repeat)
        if rp != rc:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:32s} {tp:9.4f}s {tc:9.4f}s {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()

"""Time the numba kernels against their pure-numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat N] [--side S]

The compiled versions are warmed up once before timing, so compilation is excluded.
Both paths are also checked for identical output on every workload.
"""
import argparse
import time

import numpy as np

from ferrers import _kernels


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _random_adjacency(rng, n, density):
    a = np.triu((rng.random((n, n)) < density).astype(np.int64), 1)
    return a + a.T


def workloads(side, seed):
    rng = np.random.default_rng(seed)
    mats = [rng.integers(-2, 3, size=(120, 160)) for _ in range(5)]
    graphs = [_random_adjacency(rng, 60, d) for d in (0.1, 0.5, 0.9)]
    masks = np.arange(1 << (side * side), dtype=np.int64)
    return {
        "rank_mod_p 5x(120x160)": lambda nb: [_kernels.rank_mod_p(m, use_numba=nb) for m in mats],
        "elimination_order 3x60": lambda nb: [
            (tuple(o), v) for o, v in (_kernels.elimination_order(g, use_numba=nb) for g in graphs)],
        f"complement_chordal_batch {side}x{side} ({len(masks)} graphs)":
            lambda nb: _kernels.complement_chordal_batch(masks, side, side, use_numba=nb).tolist(),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--side", type=int, default=4, help="exhaustive bipartite side for the batch kernel")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if not _kernels.HAVE_NUMBA:
        print("numba unavailable (or FERRERS_DISABLE_NUMBA set); nothing to compare")
        return 1
    print(f"{'kernel':<48} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for name, run in workloads(args.side, args.seed).items():
        run(True)  # compile
        t_np, out_np = _best(lambda: run(False), args.repeat)
        t_nb, out_nb = _best(lambda: run(True), args.repeat)
        if out_np != out_nb:
            raise SystemExit(f"{name}: numba and numpy disagree")
        print(f"{name:<48} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

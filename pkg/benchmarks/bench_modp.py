"""Benchmark the GF(p) kernel backends against each other.

Runs the same workloads through k3family.modp._kernels_py and, when
importable, k3family.modp._kernels_nb, and prints per-call timings with the
speedup.  Inputs are seeded, so runs are comparable across machines.

    python3 benchmarks/bench_modp.py
    python3 benchmarks/bench_modp.py --trials 50 --prime 1000003
"""

from __future__ import annotations

import argparse
import time

from k3family import DEFAULT_PRIME, modp
from k3family.modp import _kernels_py as kpy
from k3family.rng import Stream

try:
    import numpy as np

    from k3family.modp import _kernels_nb as knb
except ImportError:
    np = None
    knb = None


def rand_coeffs(stream: Stream, length: int, p: int, monic: bool = False) -> list[int]:
    out = [stream.below(p) for _ in range(length)]
    out[-1] = 1 if monic else stream.nonzero_below(p)
    return out


def bench(fn, args_list, trials: int) -> float:
    """Best-of-3 mean milliseconds per call over the prepared argument sets."""
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(trials):
            for args in args_list:
                fn(*args)
        dt = (time.perf_counter() - t0) * 1000 / (trials * len(args_list))
        best = min(best, dt)
    return best


def workloads(p: int):
    s = Stream(0, "bench")
    g2 = rand_coeffs(s, 5, p)
    g3 = rand_coeffs(s, 8, p, monic=True)
    h = rand_coeffs(s, 15, p)
    hp = [(i * c) % p for i, c in enumerate(h)][1:]
    a100 = rand_coeffs(s, 100, p)
    b100 = rand_coeffs(s, 100, p)
    a200 = rand_coeffs(s, 200, p)
    xs = list(range(50))
    ys = [s.below(p) for _ in range(50)]
    scalars = [(s.below(p), s.below(p), p) for _ in range(64)]
    return {
        "mulmod (64 pairs)": ("mulmod", scalars),
        "poly_mul deg 99 x 99": ("poly_mul", [(a100, b100, p)]),
        "poly_divmod deg 199 / 99": ("poly_divmod", [(a200, b100, p)]),
        "poly_gcd deg 99, 99": ("poly_gcd", [(a100, b100, p)]),
        "lagrange_interp 50 nodes": ("lagrange_interp", [(xs, ys, p)]),
        "sylvester_det 11x11 (r)": ("sylvester_det", [(g2, g3, p)]),
        "sylvester_det 27x27 (k)": ("sylvester_det", [(h, hp, p)]),
        "linear_roots deg 14": ("linear_roots", [(h, p, 7)]),
    }


def to_nb_args(name: str, args):
    if name == "mulmod":
        return args
    if name == "linear_roots":
        H, p, seed = args
        return (np.asarray(H, dtype=np.int64), p, np.uint64(seed))
    if name == "lagrange_interp":
        xs, ys, p = args
        return (np.asarray(xs, dtype=np.int64), np.asarray(ys, dtype=np.int64), p)
    *polys, p = args
    return tuple(np.asarray(A, dtype=np.int64) for A in polys) + (p,)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=20, help="calls per timing loop")
    ap.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    args = ap.parse_args()
    p = args.prime

    print(f"prime = {p}")
    print(f"active wrapper backend: {modp.backend_name()}")
    if knb is None:
        print("numba backend not importable; timing the Python kernels only\n")
    else:
        print("warming up the jitted kernels (compilation excluded from timings)\n")
        for fn_name, args_list in workloads(p).values():
            getattr(knb, fn_name)(*to_nb_args(fn_name, args_list[0]))

    rows = []
    for label, (fn_name, args_list) in workloads(p).items():
        t_py = bench(getattr(kpy, fn_name), args_list, args.trials)
        if knb is not None:
            nb_args = [to_nb_args(fn_name, a) for a in args_list]
            t_nb = bench(getattr(knb, fn_name), nb_args, args.trials)
            rows.append((label, t_py, t_nb, t_py / t_nb))
        else:
            rows.append((label, t_py, None, None))

    w = max(len(r[0]) for r in rows)
    if knb is not None:
        print(f"{'workload':<{w}}  {'python ms':>10}  {'numba ms':>10}  {'speedup':>8}")
        for label, t_py, t_nb, ratio in rows:
            print(f"{label:<{w}}  {t_py:>10.4f}  {t_nb:>10.4f}  {ratio:>7.1f}x")
    else:
        print(f"{'workload':<{w}}  {'python ms':>10}")
        for label, t_py, _, _ in rows:
            print(f"{label:<{w}}  {t_py:>10.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

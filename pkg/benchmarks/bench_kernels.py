"""Compare the numba and numpy implementations of the floating-point kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

The first numba call includes JIT compilation (or cache loading); it is
timed separately and excluded from the per-call figures.
"""

import argparse
import time

import numpy as np

from cxvec import _accel


def per_call(fn, args, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn(*args)
    return (time.perf_counter() - t0) / repeat


def cases(rng):
    def c(*shape):
        return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)

    geo = np.array([[0.9 ** n, 0.5 ** n] for n in range(2000)])
    return [
        ("cmatmul 5x5", _accel.nb_cmatmul, _accel.np_cmatmul, (c(5, 5), c(5, 5))),
        ("cmatmul 64x64", _accel.nb_cmatmul, _accel.np_cmatmul, (c(64, 64), c(64, 64))),
        ("cdot_rows 1000x3", _accel.nb_cdot_rows, _accel.np_cdot_rows, (c(1000, 3), c(1000, 3))),
        ("cauchy_window 2000x2 w=200", _accel.nb_cauchy_window, _accel.np_cauchy_window, (geo, 200, 1e-12)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()
    if not _accel.HAVE_NUMBA:
        print("numba unavailable or disabled; both columns run the numpy/python fallback")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<28} {'first numba':>12} {'numba/call':>12} {'numpy/call':>12} {'speedup':>8}")
    for name, nb, npf, a in cases(rng):
        t0 = time.perf_counter()
        nb(*a)
        first = time.perf_counter() - t0
        t_nb = per_call(nb, a, args.repeat)
        t_np = per_call(npf, a, args.repeat)
        print(f"{name:<28} {first * 1e3:>10.2f}ms {t_nb * 1e6:>10.1f}us {t_np * 1e6:>10.1f}us {t_np / t_nb:>7.2f}x")


if __name__ == "__main__":
    main()

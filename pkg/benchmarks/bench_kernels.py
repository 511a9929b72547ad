"""Time the numba and numpy kernels side by side and check they agree.

    python3 benchmarks/bench_kernels.py [--q 6561] [--repeat 5]
"""

import argparse
import time

import numpy as np

from jacobi_products import kernels
from jacobi_products.characters import compute_Rq
from jacobi_products.cyclotomic import cyclotomic_ring
from jacobi_products.finite_field import field_of_order, prime_power


def best_of(fn, repeat):
    fn()  # warm-up, includes JIT compile for numba
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def cases(q):
    p, f = prime_power(q)
    F = field_of_order(q)
    low = np.array(F._low, dtype=np.int64)
    s = F.square_indices
    ring = cyclotomic_ring(q - 1)
    rng = np.random.default_rng(0)
    a = rng.integers(-1000, 1000, ring.d, dtype=np.int64)
    b = rng.integers(-1000, 1000, ring.d, dtype=np.int64)
    exps = (3 * F.log[s]) % F.m
    weights = rng.integers(-1, 2, exps.shape[0], dtype=np.int64)
    return {
        "power_table": (low, p, F.m),
        "index_axpy": (np.repeat(s, 4), np.tile(s, 4)[::-1].copy(), 1, p, f),
        "exponent_histogram": (exps, weights, F.m),
        "jacobi_histogram": (1, F.n, F.one_minus_log.astype(np.int64), F.m),
        "polymulmod": (a, b, ring._red_i64),
        "jenkins_sweep": (min(q, 2001),),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, default=6561)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"q = {args.q}, best of {args.repeat}")
    print(f"{'kernel':<20}{'numba [ms]':>12}{'numpy [ms]':>12}{'speedup':>10}  agree")
    for name, call_args in cases(args.q).items():
        t_nb, r_nb = best_of(lambda: kernels.NUMBA[name](*call_args), args.repeat)
        t_np, r_np = best_of(lambda: kernels.NUMPY[name](*call_args), args.repeat)
        if isinstance(r_nb, tuple):
            agree = all(np.array_equal(x, y) for x, y in zip(r_nb, r_np))
        else:
            agree = np.array_equal(r_nb, r_np)
        print(f"{name:<20}{t_nb * 1e3:>12.3f}{t_np * 1e3:>12.3f}{t_np / t_nb:>10.1f}  {agree}")

    # end to end, whichever backend the environment selected
    t = time.perf_counter()
    compute_Rq(min(args.q, 729))
    print(f"compute_Rq({min(args.q, 729)}) end to end: {time.perf_counter() - t:.2f} s")


if __name__ == "__main__":
    main()

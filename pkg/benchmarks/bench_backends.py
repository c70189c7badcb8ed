#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure Python/NumPy fallback.

Runs a fixed set of kernel-heavy workloads twice, in subprocesses with
QMU_BACKEND=numba and QMU_BACKEND=numpy, and prints a side-by-side table.
Workloads use a large nome (long series) so kernel time dominates.

Usage:
    python benchmarks/bench_backends.py            # compare both backends
    python benchmarks/bench_backends.py --child    # internal: one backend
"""

import json
import os
import subprocess
import sys
import time


def workloads():
    import numpy as np

    from qmu import ModularPoint, Truncation, theta11, theta_q, theta_q_sum
    from qmu.modular import R_func, mu_tilde
    from qmu.mufun import MuPoint, mu_general, mu_zwegers
    from qmu.qhyper import phi_f, psi_f, q_appell_phi1

    rng = np.random.default_rng(0)
    tau_slow = ModularPoint.from_nome(0.75)   # long series
    tau_mid = ModularPoint.from_nome(0.4)
    trunc = Truncation()

    def uv():
        return (complex(rng.uniform(-0.4, 0.4), rng.uniform(0.02, 0.1)),
                complex(rng.uniform(-0.4, 0.4), rng.uniform(0.02, 0.1)))

    def w_mu_general(n=500):
        acc = 0.0
        for _ in range(n):
            u, v = uv()
            acc += abs(mu_general(MuPoint(u, v, 1.4, tau_slow), trunc).value)
        return acc

    def w_mu_zwegers(n=1500):
        acc = 0.0
        for _ in range(n):
            u, v = uv()
            acc += abs(mu_zwegers(u, v, tau_slow, trunc).value)
        return acc

    def w_theta(n=2500):
        acc = 0.0
        for _ in range(n):
            x = complex(rng.uniform(0.3, 0.9), rng.uniform(-0.2, 0.2))
            acc += abs(theta_q(x, 0.75, trunc).value)
            acc += abs(theta_q_sum(x, 0.75, trunc).value)
            acc += abs(theta11(x / 4, tau_slow, trunc).value)
        return acc

    def w_series(n=600):
        acc = 0.0
        for _ in range(n):
            a = rng.uniform(0.2, 0.6)
            b = rng.uniform(0.2, 0.6)
            acc += abs(phi_f((a, b), (0.4,), 0.6, 0.55, trunc).value)
            acc += abs(psi_f((0.8,), (0.3,), 0.4, 0.6, trunc).value)
            acc += abs(q_appell_phi1(a, 0.0, 0.0, 0.5, 0.5, 0.5, 0.45, trunc).value)
        return acc

    def w_completion(n=400):
        acc = 0.0
        for _ in range(n):
            u, v = uv()
            acc += abs(R_func(u - v, tau_mid, trunc).value)
            acc += abs(mu_tilde(u, v, ModularPoint(1.1j), trunc).value)
        return acc

    return [
        ("mu_general(alpha=1.4), q=0.75", w_mu_general),
        ("mu (two-variable), q=0.75", w_mu_zwegers),
        ("theta product+sum forms, q=0.75", w_theta),
        ("phi/psi/double series, q=0.5-0.6", w_series),
        ("completion sums R / mu~", w_completion),
    ]


def run_child():
    from qmu import BACKEND

    results = {"backend": BACKEND, "timings": {}}
    for name, fn in workloads():
        fn()                       # warm up (jit compile on the numba path)
        t0 = time.perf_counter()
        fn()
        results["timings"][name] = time.perf_counter() - t0
    print(json.dumps(results))


def main():
    if "--child" in sys.argv:
        run_child()
        return
    rows = {}
    for backend in ("numba", "numpy"):
        env = dict(os.environ, QMU_BACKEND=backend)
        out = subprocess.run([sys.executable, __file__, "--child"],
                             env=env, capture_output=True, text=True, check=True)
        doc = json.loads(out.stdout.strip().splitlines()[-1])
        assert doc["backend"] == backend
        rows[backend] = doc["timings"]
    names = list(rows["numba"])
    width = max(len(n) for n in names)
    print(f"{'workload':<{width}}  {'numba':>9}  {'numpy':>9}  {'speedup':>8}")
    for n in names:
        tn, tp = rows["numba"][n], rows["numpy"][n]
        print(f"{n:<{width}}  {tn:>8.3f}s  {tp:>8.3f}s  {tp / tn:>7.1f}x")


if __name__ == "__main__":
    main()

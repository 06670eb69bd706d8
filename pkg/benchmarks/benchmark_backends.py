"""Throughput comparison of the two counting backends.

Times the raw kernels of both lanes in one process (the jit lane is warmed
first so compilation is not billed), then runs the full simulation once per
lane in a subprocess, since the lane is chosen by SQCHAN_BACKEND at import.

Run:  python benchmarks/benchmark_backends.py [--trials N]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from sqchan import _kernels_numba, _kernels_numpy


def uniform_block(seed, n):
    gen = np.random.Generator(np.random.Philox(key=np.array([seed, 0], dtype=np.uint64)))
    return gen.random(n)


def time_call(func, *args, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        func(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(trials):
    u2 = uniform_block(1, 2 * trials)
    u4 = uniform_block(2, 4 * trials)
    cases = [
        ("count_at_or_above", (u2, 0.3, 0.7, 0.5)),
        ("count_outside", (u2, 0.3, 0.7, -0.4, 0.9)),
        ("count_at_or_above_mixed", (u4, 0.8, 0.5, 0.7, 0.5)),
        ("count_outside_mixed", (u4, 0.8, 0.5, 0.7, -0.4, 0.9)),
    ]
    # warm the jit lane so compile time is excluded
    for name, args in cases:
        getattr(_kernels_numba, name)(*args)

    print(f"kernel timings, {trials:,} trials per call (best of 5)")
    print(f"{'kernel':<26}{'numpy':>12}{'numba':>12}{'speedup':>10}")
    for name, args in cases:
        t_np = time_call(getattr(_kernels_numpy, name), *args)
        t_nb = time_call(getattr(_kernels_numba, name), *args)
        print(
            f"{name:<26}{t_np * 1e3:>10.2f}ms{t_nb * 1e3:>10.2f}ms"
            f"{t_np / t_nb:>9.2f}x"
        )


SIM_SNIPPET = """\
import time
from sqchan.channel import ChannelConfig, realize
from sqchan.detection import threshold_from_size
from sqchan.montecarlo import simulate
from sqchan._accel import active_backend

config = ChannelConfig(total_energy=1.0, squeezing_fraction=0.25)
strategy = threshold_from_size(realize(config), 0.05)
simulate(config, strategy, 1024, seed=0)  # warm-up, includes any jit compile
t0 = time.perf_counter()
simulate(config, strategy, {trials}, seed=0)
dt = time.perf_counter() - t0
print(f"{{active_backend():>6}} lane: {{dt * 1e3:8.2f}}ms "
      f"({{2 * {trials} / dt / 1e6:6.1f}}M samples/s)")
"""


def bench_simulation(trials):
    print(f"\nfull simulation, {trials:,} trials per hypothesis")
    for lane in ("numpy", "numba"):
        env = dict(os.environ, SQCHAN_BACKEND=lane)
        code = SIM_SNIPPET.format(trials=trials)
        result = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        if result.returncode != 0:
            print(f"{lane:>6} lane failed:\n{result.stderr}", file=sys.stderr)
            continue
        print(result.stdout, end="")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--trials", type=int, default=1_000_000, help="trials per timed call"
    )
    args = parser.parse_args()
    bench_kernels(args.trials)
    bench_simulation(args.trials)


if __name__ == "__main__":
    main()

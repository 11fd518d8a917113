#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs identical workloads through both backends, checks the results agree,
and prints a table with per-kernel timings and speedups.  Usage:

    python benchmarks/bench_kernels.py [--max-m 4] [--max-atom 4] [--seed 0]
"""

import argparse
import random
import time

from eulerhall._kernels import HAVE_COMPILED, _pyref

if HAVE_COMPILED:
    from eulerhall._kernels import _fast


def bench(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def batch(fn, inputs, repeat=3):
    def run():
        return [fn(*args) for args in inputs]

    return bench(run, repeat=repeat)


def random_rows(rng, m, ncols):
    return tuple(
        tuple(sorted(rng.sample(range(ncols), rng.randint(1, ncols))))
        for _ in range(m)
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=4)
    parser.add_argument("--max-atom", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if not HAVE_COMPILED:
        print("compiled kernels not built; nothing to compare "
              "(reinstall without EULERHALL_PURE to build them)")
        return

    rng = random.Random(args.seed)
    full = (1 << args.max_atom) - 1

    euler_inputs = [(random_rows(rng, rng.randint(1, 8), 10), 10) for _ in range(2000)]
    matching_inputs = [(random_rows(rng, rng.randint(1, 30), 24), 24) for _ in range(500)]
    perm_inputs = [(random_rows(rng, 12, 12), 12) for _ in range(50)]
    hall_inputs = [(random_rows(rng, rng.randint(1, 12), 16), 16) for _ in range(500)]

    rows = []
    cases = [
        ("sweep_equivalence", "sweep_equivalence_range",
         lambda mod: bench(mod.sweep_equivalence_range, args.max_m, args.max_atom, 1, full + 1)),
        ("euler_terms x2000", "euler_terms",
         lambda mod: batch(mod.euler_terms, euler_inputs)),
        ("max_matching x500", "max_matching",
         lambda mod: batch(mod.max_matching, matching_inputs)),
        ("permanent(12) x50", "permanent",
         lambda mod: batch(mod.permanent, perm_inputs)),
        ("hall_violation x500", "hall_violation",
         lambda mod: batch(mod.hall_violation, hall_inputs)),
    ]
    for label, _, runner in cases:
        t_fast, r_fast = runner(_fast)
        t_py, r_py = runner(_pyref)
        if r_fast != r_py:
            raise SystemExit(f"backend mismatch in {label}!")
        rows.append((label, t_py, t_fast, t_py / t_fast))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")
    for label, t_py, t_fast, speedup in rows:
        print(f"{label:<{width}}  {t_py:>9.4f}s  {t_fast:>9.4f}s  {speedup:>7.1f}x")


if __name__ == "__main__":
    main()

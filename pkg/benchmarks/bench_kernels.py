"""Benchmark the compiled bitset kernel against the pure-Python twin.

Times the two kernel entry points and the end-to-end mining strategies
on seeded random contexts, then prints a comparison table.

    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

import galmine._kernel as kernel
from galmine import GenSpec, mine_frequent, random_context
from galmine.miner import render_itemsets_text

CASES = [
    # rows, cols, density, relative minsup
    (5000, 30, 0.2, 0.05),
    (2000, 24, 0.35, 0.02),
    (600, 40, 0.3, 0.02),
    (300, 18, 0.5, 0.05),
]

QUICK_CASES = CASES[:2]


def time_call(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - start, result


def bench_case(rows, cols, density, minsup, backends):
    ctx = random_context(GenSpec(rows=rows, cols=cols, density=density, seed=7))
    label = f"{rows}x{cols} d={density} minsup={minsup:.0%}"
    timings = {}
    outputs = {}
    for name in backends:
        kernel.use_backend(name)
        t_dfs, out_dfs = time_call(mine_frequent, ctx, minsup, "dfs")
        t_lw, out_lw = time_call(mine_frequent, ctx, minsup, "levelwise")
        timings[name] = (t_dfs, t_lw)
        outputs[name] = render_itemsets_text(out_dfs, ctx.attribute_labels)
        assert out_dfs == out_lw, "strategies disagree"
    first = next(iter(outputs.values()))
    assert all(o == first for o in outputs.values()), "backends disagree"
    return label, len(first), timings


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="run only the first two cases")
    args = parser.parse_args()

    backends = kernel.available_backends()
    print(f"kernel backends: {', '.join(backends)} (default: {kernel.active_backend()})")
    if "c" not in backends:
        print("compiled kernel not built; timing the pure backend only")
    previous = kernel.active_backend()
    header = f"{'case':<34} {'sets':>6}"
    for name in backends:
        header += f" {name + ' dfs':>12} {name + ' lw':>12}"
    if len(backends) == 2:
        header += f" {'dfs speedup':>12} {'lw speedup':>11}"
    print(header)
    try:
        for case in QUICK_CASES if args.quick else CASES:
            label, count, timings = bench_case(*case, backends=backends)
            row = f"{label:<34} {count:>6}"
            for name in backends:
                row += f" {timings[name][0]:>11.4f}s {timings[name][1]:>11.4f}s"
            if len(backends) == 2:
                row += f" {timings['python'][0] / max(timings['c'][0], 1e-9):>11.1f}x"
                row += f" {timings['python'][1] / max(timings['c'][1], 1e-9):>10.1f}x"
            print(row)
    finally:
        kernel.use_backend(previous)


if __name__ == "__main__":
    main()

"""Time the compiled and pure-Python kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Prints one row per (kernel, workload) with the best-of-N time for each
available backend and the speed-up.  Results are checked for equality
before timing, so a mismatch aborts the run.
"""

from __future__ import annotations

import argparse
import itertools
import sys
import timeit

from permrel import kernels
from permrel.permgroup import Permutation, cyclic_group, generate_closure, regular_representation


def _groups():
    sym3 = generate_closure([Permutation((2, 1, 3)), Permutation((2, 3, 1))], 3)
    return {
        "C3 l=2": (3, 2, cyclic_group(3)),
        "C4 l=3": (4, 3, cyclic_group(4)),
        "V4 on 4": (4, 2, generate_closure([Permutation((2, 1, 4, 3)), Permutation((3, 4, 1, 2))], 4)),
        "(12)(34) l=2": (4, 2, generate_closure([Permutation((2, 1, 4, 3))], 4)),
        "Sym3 regular": (6, 2, regular_representation(sym3)),
    }


def workloads(quick: bool):
    g = _groups()
    m = 6 if quick else 8
    for name in ("C3 l=2", "C4 l=3", "(12)(34) l=2"):
        n, l, H = g[name]
        mm = m if n == 3 else m - 1
        yield "label_words", f"{name}, m={mm}", lambda mod, n=n, l=l, H=H, mm=mm: mod.label_words(
            mm, n, l, H.action_table, 10**8
        )
    n, l, H = g["Sym3 regular"]
    w = [0, 1, 2, 3, 4, 5] if quick else [0, 1, 2, 3, 4, 5, 0]
    code = kernels.encode(w, n)
    yield "closure_codes", f"Sym3 regular, |w|={len(w)}", lambda mod: mod.closure_codes(
        code, len(w), n, l, H.action_table, 10**7
    )
    for name in ("C4 l=3", "V4 on 4"):
        n, l, H = g[name]
        size = 4 if quick else 5
        words = [list(u) for u in itertools.product(range(n), repeat=size)][:: 3]
        pairs = list(zip(words, reversed(words)))
        yield "sweep_equal", f"{name}, {len(pairs)} pairs of length {size}", lambda mod, l=l, H=H, pairs=pairs: [
            mod.sweep_equal(u, v, l, H.action_table, H.mul_table) for u, v in pairs
        ]


def _normalise(x):
    if isinstance(x, tuple):
        return tuple(_normalise(y) for y in x)
    return list(x) if not isinstance(x, (int, bool)) else x


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend not built; timing the pure-Python kernels only", file=sys.stderr)
    names = sorted(backends, key=lambda b: b != "python")
    header = f"{'kernel':<14} {'workload':<34}" + "".join(f"{b + ' (s)':>14}" for b in names)
    if len(names) > 1:
        header += f"{'speed-up':>10}"
    print(header)
    print("-" * len(header))
    for kernel, label, fn in workloads(args.quick):
        outputs = {b: _normalise(fn(backends[b])) for b in names}
        if len({repr(o) for o in outputs.values()}) != 1:
            print(f"backends disagree on {kernel} / {label}", file=sys.stderr)
            return 1
        times = {
            b: min(timeit.repeat(lambda b=b: fn(backends[b]), number=1, repeat=args.repeat)) for b in names
        }
        row = f"{kernel:<14} {label:<34}" + "".join(f"{times[b]:>14.4f}" for b in names)
        if len(names) > 1:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())

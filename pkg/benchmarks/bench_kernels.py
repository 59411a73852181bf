"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import timeit

from gridshadow import kernels
from gridshadow.graphs import grotzsch_graph, mycielski_chain, random_graph
from gridshadow.numbers import small_primes


def cases():
    base = small_primes(1 << 12)
    g50 = random_graph(50, 0.5, seed=7).masks
    g40 = random_graph(40, 0.3, seed=3).masks
    myc = mycielski_chain(3).masks
    grz = grotzsch_graph().masks
    return [
        ("sieve 2^24 + [0, 2^20)", lambda: kernels.sieve_segment(1 << 24, 1 << 20, base)),
        ("grid adjacency 7x7", lambda: kernels.grid_adjacency(7, 7)),
        ("max clique G(50, 0.5)", lambda: kernels.max_clique(g50)),
        ("4-colouring G(40, 0.3)", lambda: kernels.k_coloring(g40, 4)),
        ("4-colouring M4 (none exists)", lambda: kernels.k_coloring(myc, 4)),
        ("3-colouring Grotzsch (none exists)", lambda: kernels.k_coloring(grz, 3)),
    ]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    names = kernels.available_backends()
    print(f"{'kernel':38}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in cases():
        times = {}
        for name in names:
            with kernels.using(name):
                fn()
                times[name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        row = f"{label:38}" + "".join(f"{times[n] * 1e3:10.2f}ms" for n in names)
        if "compiled" in times:
            row += f"{times['python'] / times['compiled']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()

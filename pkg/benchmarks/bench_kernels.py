"""Compare the compiled and pure-Python kernels.

Run with ``python3 benchmarks/bench_kernels.py [--crossings 400] [--repeat 5]``.
Times each kernel on inputs drawn from a large random diagram, then a full
certification with each backend swapped in.
"""

from __future__ import annotations

import argparse
import time

from adequa import _kernels_py, kernels
from adequa.certifier import certify
from adequa.generators import random_alternating, random_diagram
from adequa.kauffman import _build_H, _port_partners, _resolve, Resolution
from adequa.twist import twist_regions

try:
    from adequa import _kernels as _compiled
except ImportError:
    _compiled = None

KERNELS = ("perm_cycles", "involution_components", "flood")


def _best(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def _use(backend) -> None:
    for name in KERNELS:
        setattr(kernels, name, getattr(backend, name))
    for cached in (_resolve, _build_H, twist_regions):
        cached.cache_clear()


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--crossings", type=int, default=400)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    D = random_alternating(args.crossings, seed=7)
    other = D.other
    nxt = [(j & ~3) | ((j + 3) & 3) for j in other]
    part = _port_partners(D, [Resolution.A] * D.num_crossings)
    no_cross = bytes(D.num_crossings)
    no_port = bytes(4 * D.num_crossings)
    cases = {
        "perm_cycles": (nxt,),
        "involution_components": (other, part),
        "flood": (other, [0], no_cross, no_port),
    }
    backends = [("python", _kernels_py)] + ([("compiled", _compiled)] if _compiled else [])
    print(f"{args.crossings} crossings, best of {args.repeat}")
    print(f"{'kernel':<24}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for name in KERNELS:
        row = [_best(lambda m=mod: getattr(m, name)(*cases[name]), args.repeat) for _, mod in backends]
        speed = f"{row[0] / row[1]:>9.1f}x" if len(row) > 1 else ""
        print(f"{name:<24}" + "".join(f"{t * 1e3:>10.3f}ms" for t in row) + speed)

    corpus = [random_diagram(args.crossings // 4, seed=s) for s in range(5)]
    row = []
    for _, mod in backends:
        _use(mod)

        def run():
            for cached in (_resolve, _build_H, twist_regions):
                cached.cache_clear()
            for E in corpus:
                certify(E)

        row.append(_best(run, args.repeat))
    _use(_compiled or _kernels_py)
    speed = f"{row[0] / row[1]:>9.1f}x" if len(row) > 1 else ""
    print(f"{'certify (5 diagrams)':<24}" + "".join(f"{t * 1e3:>10.1f}ms" for t in row) + speed)
    print(f"active backend: {kernels.BACKEND}")


if __name__ == "__main__":
    main()

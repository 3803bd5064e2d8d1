"""Compare the compiled and pure-Python kernels on representative workloads.

    python3 benchmarks/bench_kernels.py --repeat 5
"""

import argparse
import random
import sys
import timeit

from latpoly import _pykernels
from latpoly.polytope import simplex

try:
    from latpoly import _ckernels
except ImportError:
    _ckernels = None


def workloads(seed: int):
    rng = random.Random(seed)
    P = simplex(4)
    H = P.hrep
    t = 30
    box = ([t * 0] * 4, [t] * 4)
    yield "box_points 30*simplex(4)", "box_points", (H.A, [t * b for b in H.b], *box)
    mats = [[[rng.randint(-9, 9) for _ in range(6)] for _ in range(6)] for _ in range(200)]
    yield "det 200 x (6x6)", "det_many", (mats,)
    A = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(40)]
    b = [rng.randint(-5, 0) for _ in range(40)]
    pts = [[rng.randint(-2, 2) for _ in range(5)] for _ in range(2000)]
    yield "tight_sets 40 rows x 2000 points", "tight_sets", (A, b, pts)


def run(mod, kind, args):
    if kind == "det_many":
        return [mod.det(m) for m in args[0]]
    if kind == "box_points":
        return mod.box_points(*args)
    return mod.tight_sets(*args)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions (best is kept)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; only the Python timings are shown")
    print(f"{'workload':<36}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for name, kind, data in workloads(args.seed):
        py = min(timeit.repeat(lambda: run(_pykernels, kind, data), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:<36}{py:>12.4f}{'-':>12}{'-':>10}")
            continue
        assert run(_ckernels, kind, data) == run(_pykernels, kind, data), name
        cy = min(timeit.repeat(lambda: run(_ckernels, kind, data), number=1, repeat=args.repeat))
        print(f"{name:<36}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--ports 16 18 20] [--repeat 3]

Each row reports the best of ``--repeat`` runs for one kernel over a universe
of 2**ports runs, and checks that both backends return the same mask.
"""
import argparse
import random
import time

from hrcontracts import _kernels_py

try:
    from hrcontracts import _kernels
except ImportError:
    _kernels = None


def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases(n, rng):
    radices = (2,) * n
    mask = rng.getrandbits(1 << n)
    small = rng.getrandbits(1 << (n - 2))
    keep = tuple(range(0, n, 2))
    placement = tuple(range(1, n - 1))
    return [
        ("quantify forall", lambda k: k.quantify(mask, radices, n // 2, True)),
        ("quantify exists", lambda k: k.quantify(mask, radices, 0, False)),
        ("project", lambda k: k.project(mask, radices, keep)),
        ("extend", lambda k: k.extend(small, (2,) * (n - 2), radices, placement)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ports", type=int, nargs="+", default=[16, 18, 20])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled kernels not built; run `pip install --no-build-isolation -e .`")
    rng = random.Random(args.seed)
    print(f"{'kernel':<16} {'ports':>5} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n in args.ports:
        for name, call in cases(n, rng):
            tp, out_p = best(lambda: call(_kernels_py), args.repeat)
            if _kernels is None:
                print(f"{name:<16} {n:>5} {tp:>10.4f} {'-':>10} {'-':>8}")
                continue
            tc, out_c = best(lambda: call(_kernels), args.repeat)
            assert out_p == out_c, f"{name}: backends disagree"
            print(f"{name:<16} {n:>5} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()

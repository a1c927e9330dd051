"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Each workload runs on both backends and the results are compared, so a
speedup is only reported for identical output.
"""

import argparse
import random
import timeit

from covrough import kernels
from covrough.enumeration import family_to_masks


def _random_masks(n, m, seed):
    rng = random.Random(seed)
    full = (1 << n) - 1
    masks = [rng.randint(1, full) for _ in range(m)]
    covered = 0
    for x in masks:
        covered |= x
    if covered != full:
        masks.append(full & ~covered)
    return sorted(set(masks))


def workloads():
    fams = kernels.pure.covering_families(4)
    all4 = [family_to_masks(f) for f in fams]

    def tables_n4(k):
        out = 0
        for masks in all4:
            nb = k.neighborhoods(masks, 4)
            out ^= hash((tuple(k.lower_table(masks, 4)), tuple(k.upper_def3_table(masks, nb, 4)),
                         tuple(k.upper_subcov_table(masks, 4))))
        return out

    wide = [_random_masks(12, 16, s) for s in range(20)]

    def tables_n12(k):
        out = 0
        for masks in wide:
            nb = k.neighborhoods(masks, 12)
            out ^= hash((tuple(k.lower_table(masks, 12)), tuple(k.upper_neigh_table(nb, 12)),
                         tuple(k.upper_subcov_table(masks, 12))))
        return out

    return {
        "enumerate coverings n=4": lambda k: len(k.covering_families(4)),
        "all tables, every covering n=4": tables_n4,
        "all tables, 20 coverings n=12, 16 members": tables_n12,
    }


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    if kernels.fast is None:
        print("compiled kernels unavailable; only the pure-Python backend is installed")
    print(f"{'workload':<44} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in workloads().items():
        t_py = min(timeit.repeat(lambda: fn(kernels.pure), number=1, repeat=args.repeat))
        if kernels.fast is None:
            print(f"{name:<44} {t_py:>10.3f} {'-':>10} {'-':>8}")
            continue
        if fn(kernels.pure) != fn(kernels.fast):
            raise SystemExit(f"{name}: backends disagree")
        t_c = min(timeit.repeat(lambda: fn(kernels.fast), number=1, repeat=args.repeat))
        print(f"{name:<44} {t_py:>10.3f} {t_c:>10.3f} {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()

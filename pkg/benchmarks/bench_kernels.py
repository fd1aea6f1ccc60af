"""Time each hot kernel under the numba and pure-numpy backends.

    python benchmarks/bench_kernels.py [--repeat 3]

numba compilation is triggered once before timing.
"""
import argparse
import time

import numpy as np

from bingspace import core
from bingspace.action import conjugation_action, trivial_action
from bingspace.groups import symmetric_group
from bingspace.invariants import pair_masks
from bingspace.kernels import available_backends, get_backend


def workloads():
    rng = np.random.default_rng(0)
    perms4 = core.permutations_array(4)
    tables3 = core.all_tables_array(3)
    F = rng.integers(0, 4, size=(200_000, 4, 4))
    G = rng.integers(0, 4, size=(200_000, 4, 4))
    S4 = conjugation_action(symmetric_group(4))
    S3 = conjugation_action(symmetric_group(3))
    masks = pair_masks(trivial_action(symmetric_group(1), 18))
    return {
        "compose_batch 2e5 x 4x4": lambda k: k.compose_batch(F, G),
        "rows_bijective 2e5 x 4x4": lambda k: k.rows_bijective(F),
        "row_product_tables n=4": lambda k: k.row_product_tables(perms4, 4),
        "all_tables n=3": lambda k: k.all_tables(3),
        "inverse_search 3^9 x 3^9": lambda k: k.inverse_search(tables3, tables3),
        "action_witness S4 conj": lambda k: k.action_witness(S4.act, S4.group.mul, S4.group.identity, True),
        "distributive_witness S3 conj": lambda k: k.distributive_witness(S3.act),
        "invariant_images n=18": lambda k: k.invariant_images(masks),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = {name: get_backend(name) for name in available_backends()}
    jobs = workloads()
    for impl in backends.values():
        for job in jobs.values():
            job(impl)
    names = list(backends)
    print(f"{'kernel':32s}" + "".join(f"{n:>12s}" for n in names) + (f"{'speedup':>10s}" if len(names) == 2 else ""))
    for label, job in jobs.items():
        best = {}
        for name, impl in backends.items():
            times = []
            for _ in range(args.repeat):
                start = time.perf_counter()
                job(impl)
                times.append(time.perf_counter() - start)
            best[name] = min(times)
        row = f"{label:32s}" + "".join(f"{best[n] * 1e3:10.1f}ms" for n in names)
        if len(names) == 2:
            row += f"{best['numpy'] / best['numba']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()

"""Compare the compiled and pure-Python integer kernels.

    python benchmarks/bench_kernel.py [--n 200000] [--trials 300]

Part one times the four kernel functions directly on random small-integer
triples.  Part two times a whole gen_desargues campaign under each backend,
in a subprocess so that TRISUM_PURE_PYTHON takes effect at import.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from trisum import _kernel_py

try:
    from trisum import _kernel
except ImportError:
    _kernel = None

CAMPAIGN = (
    "import time; from trisum.campaigns import CampaignSpec, run_campaign; "
    "t = time.perf_counter(); r = run_campaign(CampaignSpec('gen_desargues', {trials}, 1)); "
    "print(time.perf_counter() - t, r.ok)"
)


def kernel_table(n):
    rng = random.Random(0)
    vecs = [tuple(rng.randint(-10**4, 10**4) for _ in range(3)) for _ in range(n + 2)]
    pairs = list(zip(vecs, vecs[1:]))
    triples = list(zip(vecs, vecs[1:], vecs[2:]))
    cases = {
        "cross": lambda m: [m.cross(a, b) for a, b in pairs],
        "dot": lambda m: [m.dot(a, b) for a, b in pairs],
        "det3": lambda m: [m.det3(a, b, c) for a, b, c in triples],
        "canon": lambda m: [m.canon(a) for a in vecs],
    }
    print(f"{'kernel':<8}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, fn in cases.items():
        py = min(timeit.repeat(lambda: fn(_kernel_py), number=1, repeat=3))
        if _kernel is None:
            print(f"{name:<8}{py:>12.4f}{'n/a':>12}{'':>10}")
            continue
        assert fn(_kernel) == fn(_kernel_py)
        cy = min(timeit.repeat(lambda: fn(_kernel), number=1, repeat=3))
        print(f"{name:<8}{py:>12.4f}{cy:>12.4f}{py / cy:>9.2f}x")


def campaign_time(trials, pure):
    env = dict(os.environ)
    env.pop("TRISUM_PURE_PYTHON", None)
    if pure:
        env["TRISUM_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", CAMPAIGN.format(trials=trials)],
                         env=env, capture_output=True, text=True, check=True).stdout.split()
    return float(out[0]), out[1] == "True"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=200_000)
    ap.add_argument("--trials", type=int, default=300)
    args = ap.parse_args()
    kernel_table(args.n)
    py, ok_py = campaign_time(args.trials, pure=True)
    cy, ok_cy = campaign_time(args.trials, pure=False)
    print(f"\ngen_desargues x{args.trials}: python {py:.3f}s, default backend {cy:.3f}s "
          f"({py / cy:.2f}x), both passed: {ok_py and ok_cy}")


if __name__ == "__main__":
    main()

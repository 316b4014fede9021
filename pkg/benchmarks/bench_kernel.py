"""Compare the compiled field kernel against the pure Python twin.

Kernel rows time both implementations in process on identical inputs.
The end-to-end row reruns a flag test in a subprocess with and without
EDSX_PURE=1, since the kernel is bound at import time.
"""

import argparse
import os
import random
import subprocess
import sys
import time

from edsx import _fallback
from edsx._rat import RAT

try:
    from edsx import _speedups
except ImportError:
    _speedups = None


def rand_scalar(rng, radicals):
    out = {}
    for _ in range(rng.randrange(1, 3 if radicals else 2)):
        q = RAT(rng.randrange(-9, 10), rng.randrange(1, 8))
        if q:
            out[rng.randrange(16) if radicals else 0] = q
    return out


def rand_rows(rng, nrows, ncols, density, radicals):
    rows = []
    for _ in range(nrows):
        row = []
        for _ in range(ncols):
            if rng.random() < density:
                row.append(rand_scalar(rng, radicals))
            else:
                row.append({})
        rows.append(row)
    return rows


def copy_rows(rows):
    return [[dict(x) for x in row] for row in rows]


def time_rref(impl, rows, ncols, repeat):
    best = None
    for _ in range(repeat):
        work = copy_rows(rows)
        t0 = time.perf_counter()
        impl.rref(work, ncols)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def time_scalars(impl, cases, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        acc = {}
        for a, b, c in cases:
            acc = impl.s_add(acc, impl.s_mul(a, b))
            acc = impl.s_submul(acc, b, c)
            if a:
                impl.s_inv(a)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def time_flag_test(pure):
    env = dict(os.environ)
    env.pop("EDSX_PURE", None)
    if pure:
        env["EDSX_PURE"] = "1"
    code = ("from edsx.cartan import flag_test\n"
            "from edsx.catalog import get_structure\n"
            "import time\n"
            "s = get_structure('su-even:3')\n"
            "t0 = time.perf_counter()\n"
            "flag_test(s)\n"
            "print(time.perf_counter() - t0)\n")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip().splitlines()[-1])


def report(label, pure_t, fast_t):
    print("%-34s pure %8.4fs   compiled %8.4fs   speedup %.2fx"
          % (label, pure_t, fast_t, pure_t / fast_t if fast_t else 0.0))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scale", type=float, default=1.0,
                    help="scale factor on the matrix sizes")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()

    if _speedups is None:
        print("compiled kernel not built; nothing to compare")
        return 1

    rng = random.Random(args.seed)
    # dense exact elimination blows up coefficient sizes, so the dense
    # cases stay small on purpose
    for label, nr, nc, density, radicals in (
            ("rational, sparse", 70, 95, 0.12, False),
            ("rational, dense", 40, 55, 0.5, False),
            ("radical, dense", 10, 14, 0.5, True)):
        nr = max(2, int(nr * args.scale))
        nc = max(2, int(nc * args.scale))
        rows = rand_rows(rng, nr, nc, density, radicals)
        pure_t = time_rref(_fallback, rows, nc, args.repeat)
        fast_t = time_rref(_speedups, rows, nc, args.repeat)
        report("rref %dx%d %s" % (nr, nc, label), pure_t, fast_t)

    cases = [(rand_scalar(rng, True), rand_scalar(rng, True),
              rand_scalar(rng, True)) for _ in range(20000)]
    report("scalar ops x20000",
           time_scalars(_fallback, cases, args.repeat),
           time_scalars(_speedups, cases, args.repeat))

    if not args.skip_end_to_end:
        report("flag test su-even:3 (subprocess)",
               time_flag_test(True), time_flag_test(False))
    return 0


if __name__ == "__main__":
    sys.exit(main())

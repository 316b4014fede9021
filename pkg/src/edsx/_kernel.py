"""Selects the compiled field kernel, falling back to pure Python.

EDSX_PURE=1 forces the fallback; EDSX_THREADS is parsed here as the cap
on internal parallelism (the current kernels are single threaded, so any
cap is honored trivially).
"""

import os
import warnings

if os.environ.get("EDSX_PURE"):
    from . import _fallback as impl

    COMPILED = False
else:
    try:
        from . import _speedups as impl  # type: ignore[attr-defined]

        COMPILED = True
    except ImportError:
        from . import _fallback as impl

        COMPILED = False


def _thread_cap():
    raw = os.environ.get("EDSX_THREADS", "")
    if not raw:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        warnings.warn("EDSX_THREADS=%r is not an integer, using 1" % raw)
        return 1
    return max(1, cap)


THREADS = _thread_cap()

PRIMES = impl.PRIMES
DIVISORS = impl.DIVISORS
MASK_OF_DIVISOR = impl.MASK_OF_DIVISOR
s_from_rat = impl.s_from_rat
s_add = impl.s_add
s_sub = impl.s_sub
s_neg = impl.s_neg
s_rat_scale = impl.s_rat_scale
s_mul = impl.s_mul
s_submul = impl.s_submul
s_inv = impl.s_inv
rref = impl.rref

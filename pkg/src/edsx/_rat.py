"""Rational number backend.

gmpy2.mpq is used when available; fractions.Fraction is the drop-in
fallback.  Both reduce automatically and keep the denominator positive,
which the rest of the package relies on.
"""

try:
    from gmpy2 import mpq as RAT

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - depends on environment
    from fractions import Fraction as RAT

    BACKEND = "fractions"

R0 = RAT(0)
R1 = RAT(1)

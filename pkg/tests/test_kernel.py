"""The compiled kernel and the pure fallback must agree bit for bit."""

import random

import pytest

from edsx import _fallback
from edsx._rat import RAT

speedups = pytest.importorskip("edsx._speedups")


def rand_scalar(rng, terms=3):
    out = {}
    for _ in range(rng.randrange(0, terms + 1)):
        q = RAT(rng.randrange(-20, 21), rng.randrange(1, 12))
        if q:
            out[rng.randrange(16)] = q
    return out


def test_scalar_ops_agree():
    rng = random.Random(77)
    for _ in range(800):
        a, b, c = rand_scalar(rng), rand_scalar(rng), rand_scalar(rng)
        assert speedups.s_add(a, b) == _fallback.s_add(a, b)
        assert speedups.s_sub(a, b) == _fallback.s_sub(a, b)
        assert speedups.s_neg(a) == _fallback.s_neg(a)
        assert speedups.s_mul(a, b) == _fallback.s_mul(a, b)
        if b and c:
            assert speedups.s_submul(a, c, b) == _fallback.s_submul(a, c, b)
        if a:
            inv = speedups.s_inv(a)
            assert inv == _fallback.s_inv(a)
            assert speedups.s_mul(a, inv) == {0: RAT(1)}


def test_inverse_of_zero_raises_in_both():
    with pytest.raises(ZeroDivisionError):
        speedups.s_inv({})
    with pytest.raises(ZeroDivisionError):
        _fallback.s_inv({})


def test_rref_agrees_including_row_order():
    rng = random.Random(78)
    for _ in range(120):
        nr = rng.randrange(1, 8)
        nc = rng.randrange(1, 8)
        m1 = [[rand_scalar(rng, 2) for _ in range(nc)] for _ in range(nr)]
        m2 = [[dict(x) for x in row] for row in m1]
        p1 = speedups.rref(m1, nc)
        p2 = _fallback.rref(m2, nc)
        assert p1 == p2
        assert m1 == m2


def test_constant_tables_agree():
    assert speedups.PRIMES == _fallback.PRIMES
    assert speedups.DIVISORS == _fallback.DIVISORS
    assert speedups.MASK_OF_DIVISOR == _fallback.MASK_OF_DIVISOR

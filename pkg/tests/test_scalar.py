import random

import pytest

from edsx.scalar import Scalar


def test_rational_arithmetic():
    a = Scalar.of(3) / Scalar.of(4)
    b = Scalar.of(-2) / Scalar.of(5)
    assert a + b == Scalar.parse("7/20")
    assert a * b == Scalar.parse("-3/10")
    assert a - a == Scalar.of(0)
    assert (a / b) * b == a


def test_sqrt_products():
    r2 = Scalar.sqrt(2)
    r3 = Scalar.sqrt(3)
    assert r2 * r2 == Scalar.of(2)
    assert r2 * r3 == Scalar.sqrt(6)
    assert Scalar.sqrt(6) * Scalar.sqrt(10) == Scalar.of(2) * Scalar.sqrt(15)
    assert Scalar.sqrt(210) * Scalar.sqrt(210) == Scalar.of(210)


def test_sqrt_rejects_outside_tower():
    with pytest.raises(ValueError):
        Scalar.sqrt(11)
    with pytest.raises(ValueError):
        Scalar.sqrt(4)


def test_parse_literals():
    assert Scalar.parse("5") == Scalar.of(5)
    assert Scalar.parse("-7/3") == Scalar.of(-7) / Scalar.of(3)
    assert Scalar.parse("r2") == Scalar.sqrt(2)
    assert Scalar.parse("1/2*r6") == Scalar.sqrt(6) / Scalar.of(2)
    assert Scalar.parse("1+r2") == Scalar.of(1) + Scalar.sqrt(2)


def test_parse_rejects_garbage():
    for text in ("x", "r11", "1//2", ""):
        with pytest.raises(ValueError):
            Scalar.parse(text)


def test_inverse_of_radical_combinations():
    one = Scalar.of(1)
    a = Scalar.of(1) + Scalar.sqrt(2)
    assert a * (one / a) == one
    b = Scalar.sqrt(3) - Scalar.of(2) * Scalar.sqrt(5) + Scalar.of(1) / Scalar.of(3)
    assert b * (one / b) == one
    with pytest.raises(ZeroDivisionError):
        one / Scalar.of(0)


def test_zero_and_bool():
    z = Scalar.of(0)
    assert z.is_zero()
    assert not z
    assert not Scalar.sqrt(7).is_zero()
    assert Scalar.sqrt(7)


def test_equality_and_hash():
    a = Scalar.of(1) / Scalar.of(2) + Scalar.sqrt(3)
    b = Scalar.sqrt(3) + Scalar.parse("1/2")
    assert a == b
    assert hash(a) == hash(b)
    assert a != Scalar.sqrt(3)


def test_str_roundtrip():
    vals = [Scalar.of(0), Scalar.of(-3), Scalar.parse("2/7"),
            Scalar.sqrt(2), Scalar.of(1) - Scalar.sqrt(5) / Scalar.of(4)]
    for v in vals:
        assert Scalar.parse(str(v)) == v


def test_random_field_identities():
    rng = random.Random(99)
    for _ in range(300):
        parts = []
        for _ in range(3):
            q = Scalar.of(rng.randrange(-8, 9)) / Scalar.of(rng.randrange(1, 7))
            d = rng.choice((1, 2, 3, 5, 7, 6, 10, 35))
            parts.append(q * (Scalar.of(1) if d == 1 else Scalar.sqrt(d)))
        a = parts[0]
        b = parts[1]
        c = parts[2]
        assert (a + b) * c == a * c + b * c
        assert a - (b - c) == (a - b) + c
        if not b.is_zero():
            assert (a / b) * b == a

import random

import pytest

from a2zeta.errors import UnsupportedOrder
from a2zeta.gf import (
    GF,
    format_poly,
    padd,
    parse_poly,
    pmul,
    pmod_tpow,
    pshift,
    psub,
    ptrim,
    punit_inverse,
    pval,
)


def test_unsupported_orders():
    for q in (1, 6, 10, 12):
        with pytest.raises(UnsupportedOrder):
            GF(q)


def test_large_prime_field():
    F = GF(101)
    assert F.mul(2, F.inv(2)) == 1
    assert F.sub(0, 1) == 100


@pytest.mark.parametrize("q", [2, 3, 4, 9])
def test_unit_inverse(q):
    F = GF(q)
    rng = random.Random(q)
    for _ in range(20):
        u = ptrim([rng.randrange(1, q)] + [rng.randrange(q) for _ in range(4)])
        inv = punit_inverse(F, u, 8)
        assert pmod_tpow(pmul(F, u, inv), 8) == (1,)


def test_poly_helpers():
    F = GF(3)
    a = (1, 2)
    b = (0, 1, 1)
    assert padd(F, a, b) == (1, 0, 1)
    assert psub(F, padd(F, a, b), b) == a
    assert pval(b) == 1 and pval(()) is None
    assert pshift(a, 2) == (0, 0, 1, 2)
    assert pmul(F, a, b) == ptrim([0, 1, 0, 2])


def test_parse_and_format_round_trip():
    F = GF(3)
    for text, expect in (
        ("1+t^2", (1, 0, 1)),
        ("2t", (0, 2)),
        ("0", ()),
        ("1-t", (1, 2)),
        ("t+t", (0, 2)),
    ):
        assert parse_poly(F, text) == expect
    for poly in ((1, 0, 2), (0, 1), (2,), ()):
        assert parse_poly(F, format_poly(poly)) == poly

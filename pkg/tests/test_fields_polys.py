from fractions import Fraction

import pytest

from affkl.errors import SolverError
from affkl.fields import ExtField, PrimeField, Rationals, field_for
from affkl.polys import PolyRing


def test_prime_field():
    f = PrimeField(5)
    assert f.add(3, 4) == 2
    assert f.mul(3, 4) == 2
    assert f.inv(2) == 3
    assert f.neg(2) == 3
    assert f.parse(f.to_str(4)) == 4


def test_ext_field_arithmetic():
    f = ExtField(2, 2)
    elems = list(f.elements())
    assert len(elems) == 4
    for a in elems:
        if f.is_zero(a):
            continue
        assert f.mul(a, f.inv(a)) == f.one
        # Frobenius has order 2
        sq = f.mul(a, a)
        assert f.mul(sq, sq) == a
    # the multiplicative group has order 3
    gen = next(a for a in elems if a not in (f.zero, f.one))
    assert f.pow(gen, 3) == f.one


def test_ext_field_modulus_irreducible():
    for p, d in ((2, 2), (2, 3), (3, 2), (5, 2)):
        f = ExtField(p, d)
        # no roots in the prime field
        for a in range(p):
            val = 0
            for c in reversed(f.modulus):
                val = (val * a + c) % p
            assert val != 0


def test_poly_ring_basic():
    ring = PolyRing(Rationals(), 2)
    x = ring.gen(0)
    y = ring.gen(1)
    f = ring.add(ring.mul(x, x), ring.smul(Fraction(2), ring.mul(x, y)))
    g = ring.mul(f, f)
    q = ring.exact_div(g, f)
    assert q == f
    with pytest.raises(SolverError):
        ring.exact_div(ring.add(g, ring.one), f)


def test_poly_homogeneous_degree():
    ring = PolyRing(PrimeField(3), 2)
    x, y = ring.gen(0), ring.gen(1)
    f = ring.add(x, y)
    assert ring.degree(f) == 2
    g = ring.mul(f, f)
    assert ring.degree(g) == 4
    with pytest.raises(SolverError):
        ring.degree(ring.add(f, ring.one))


def test_apply_linear():
    ring = PolyRing(Rationals(), 2)
    x, y = ring.gen(0), ring.gen(1)
    swap = ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))
    f = ring.add(ring.mul(x, x), y)
    g = ring.apply_linear(f, swap)
    assert g == ring.add(ring.mul(y, y), x)
    # substitution is a ring homomorphism
    prod = ring.apply_linear(ring.mul(f, f), swap)
    assert prod == ring.mul(g, g)


def test_poly_str_round_trip():
    for field in (Rationals(), PrimeField(5), ExtField(2, 2)):
        ring = PolyRing(field, 3)
        f = ring.add(
            ring.mul(ring.gen(0), ring.gen(2)),
            ring.smul(field.from_int(2), ring.mul(ring.gen(1), ring.gen(1))),
        )
        f = ring.add(f, ring.const(3))
        assert ring.parse(ring.to_str(f)) == f
        assert ring.parse(ring.to_str(ring.zero)) == {}


def test_field_for():
    assert field_for(0).char == 0
    assert field_for(7).order == 7
    assert field_for(3, 2).order == 9

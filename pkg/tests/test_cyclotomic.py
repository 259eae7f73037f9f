"""Cyclotomic arithmetic tests: ring axioms, Galois action, minimal forms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from formata.cyclotomic import Cyclotomic, cyclotomic_poly, phi

zeta = Cyclotomic.zeta
rat = Cyclotomic.rational


def test_cyclotomic_poly_small():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_zeta_relations():
    assert zeta(4) * zeta(4) == rat(-1)
    assert zeta(3) ** 3 == rat(1)
    assert zeta(3) + zeta(3) ** 2 == rat(-1)
    assert sum(zeta(5, k) for k in range(5)) == rat(0)
    assert zeta(8) ** 4 == rat(-1)
    assert zeta(6) == 1 + zeta(3)  # zeta_6 = -zeta_3^2 = 1 + zeta_3


def test_cross_conductor_equality():
    assert zeta(4) == zeta(8) ** 2
    assert zeta(2) == rat(-1)
    assert zeta(10) ** 5 == rat(-1)
    assert hash(zeta(8) ** 2) == hash(zeta(4))
    assert hash(rat(7)) == hash(7)


def test_rational_detection():
    x = zeta(5) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4)
    assert x.is_rational() and x.as_fraction() == -1
    y = zeta(8) + zeta(8, 7)  # sqrt(2)
    assert not y.is_rational()
    assert (y * y).as_int() == 2


def test_conjugate_and_galois():
    z = zeta(7)
    assert z.conjugate() == zeta(7, 6)
    assert (z * z.conjugate()).as_int() == 1
    x = 2 * zeta(5) - zeta(5, 2) / 3
    assert x.galois(2) == 2 * zeta(5, 2) - zeta(5, 4) / 3
    with pytest.raises(ValueError):
        zeta(6).galois(2)


def test_reduced_minimal_conductor():
    assert (zeta(12) ** 3).reduced().n == 4
    assert (zeta(12) ** 4).reduced().n == 3
    assert (zeta(9) ** 3).reduced().n == 3
    assert rat(5).reduced().n == 1
    # conductor 2m with m odd collapses to m
    assert zeta(6).reduced().n == 3
    gauss = sum(zeta(5, k * k % 5) for k in range(1, 5))  # sqrt(5) - 1 over 2 doubled
    assert gauss.reduced().n == 5


def test_str_and_json_round_trip():
    x = zeta(8, 3) - zeta(8) + rat(Fraction(1, 2))
    assert str(x) == "z8^3 - z8 + 1/2"
    j = x.to_json()
    assert j["conductor"] == 8
    assert Cyclotomic.from_json(j) == x
    assert str(rat(Fraction(-3, 4))) == "-3/4"
    assert Cyclotomic.from_json(rat(0).to_json()) == rat(0)


def test_division():
    x = zeta(3) * 6
    assert x / 3 == 2 * zeta(3)
    assert x / Fraction(1, 2) == 12 * zeta(3)
    assert x / rat(2) == 3 * zeta(3)
    with pytest.raises(ZeroDivisionError):
        x / 0


small = st.integers(min_value=-4, max_value=4)


@st.composite
def cyclos(draw):
    n = draw(st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12]))
    coeffs = draw(st.lists(small, min_size=1, max_size=phi(n)))
    return Cyclotomic(n, [Fraction(c) for c in coeffs])


@settings(max_examples=60, deadline=None)
@given(cyclos(), cyclos(), cyclos())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + rat(0) == a
    assert a * rat(1) == a
    assert a - a == rat(0)


@settings(max_examples=60, deadline=None)
@given(cyclos())
def test_conjugation_is_involution(a):
    assert a.conjugate().conjugate() == a
    norm = a * a.conjugate()
    assert norm.conjugate() == norm


@settings(max_examples=60, deadline=None)
@given(cyclos())
def test_reduced_preserves_value(a):
    r = a.reduced()
    assert r == a
    assert r.n <= a.n


@settings(max_examples=30, deadline=None)
@given(cyclos(), cyclos())
def test_galois_is_ring_map(a, b):
    from math import gcd, lcm

    m = lcm(a.n, b.n)
    am = a + zeta(m) - zeta(m)  # force both onto the common conductor
    bm = b + zeta(m) - zeta(m)
    units = [k for k in range(2, m + 1) if gcd(k, m) == 1][:3]
    for k in units:
        assert (am + bm).galois(k) == am.galois(k) + bm.galois(k)
        assert (am * bm).galois(k) == am.galois(k) * bm.galois(k)

import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from gridshadow.errors import ResourceBudgetError
from gridshadow.geometry import (ExactPoint, LatticePoint, extended_gcd, lattice_points_by_enumeration,
                                 lattice_points_strictly_between, orientation, strictly_between)

P = ExactPoint


def dyadic_points(max_abs=1000, max_pow=4):
    return st.builds(lambda x, k, y: P(x, k, y), st.integers(-max_abs << max_pow, max_abs << max_pow),
                     st.integers(0, max_pow), st.integers(-max_abs, max_abs))


def test_point_normalization():
    assert P(4, 2, 1) == P(1, 0, 1)
    assert P(6, 3, 0) == P(3, 2, 0)
    assert P(0, 5, 7) == P(0, 0, 7)
    assert P.from_xy(Fraction(5, 8), 2) == P(5, 3, 2)
    assert P(1, 1, 1).x == Fraction(1, 2)
    with pytest.raises(ValueError):
        P.from_xy(Fraction(1, 3), 0)
    with pytest.raises(ValueError):
        P(1, -1, 0)


def test_orientation_examples():
    assert orientation(P(0), P(1), P(2)) == 0
    assert orientation(P(0), P(1), P(1, 0, 1)) == 1
    assert orientation(P(0), P(1, 1, 1), P(1, 0, 2)) == 0
    assert orientation(P(0), P(1, 0, 1), P(1)) == -1


@given(dyadic_points(), dyadic_points(), dyadic_points())
def test_orientation_antisymmetric(a, b, c):
    o = orientation(a, b, c)
    assert orientation(b, a, c) == -o
    assert orientation(a, c, b) == -o
    assert orientation(c, b, a) == -o
    assert orientation(b, c, a) == o


def test_segment_examples():
    hits = lattice_points_strictly_between(P(0), P(4, 0, 2))
    assert (hits.count, hits.witness) == (1, LatticePoint(2, 1))
    assert lattice_points_strictly_between(P(0), P(3, 0, 2)).count == 0
    # (1/2, 0)-(5/2, 1): columns x=1, 2 meet the segment at y=1/4, 3/4
    assert lattice_points_strictly_between(P(1, 1, 0), P(5, 1, 1)).count == 0
    assert lattice_points_by_enumeration(P(1, 1, 0), P(5, 1, 1)).count == 0


def test_enumeration_examples():
    assert lattice_points_by_enumeration(P(0), P(4, 0, 2)).points == (LatticePoint(2, 1),)
    vertical = lattice_points_by_enumeration(P(0), P(0, 0, 5))
    assert vertical.points == tuple(LatticePoint(0, y) for y in range(1, 5))
    assert lattice_points_strictly_between(P(0), P(0, 0, 5)).count == 4
    assert lattice_points_by_enumeration(P(1, 1, 0), P(1, 1, 9)).count == 0
    assert lattice_points_strictly_between(P(1, 1, 0), P(1, 1, 9)).count == 0


def test_horizontal_and_reversed():
    for a, b in [(P(-3, 0, 7), P(4, 0, 7)), (P(4, 0, 7), P(-3, 0, 7))]:
        d = lattice_points_strictly_between(a, b)
        assert d.count == 6 and d.witness == LatticePoint(-2, 7)
        assert lattice_points_by_enumeration(a, b).witness == d.witness


def test_witness_is_smallest_x_for_descending_segment():
    a, b = P(10, 0, 0), P(0, 0, 20)
    for hits in (lattice_points_strictly_between(a, b), lattice_points_by_enumeration(a, b)):
        assert hits.count == 9 and hits.witness == LatticePoint(1, 18)


def test_identical_endpoints_rejected():
    with pytest.raises(ValueError):
        lattice_points_strictly_between(P(1), P(1))
    with pytest.raises(ValueError):
        lattice_points_by_enumeration(P(1), P(1))


def test_enumeration_budget():
    with pytest.raises(ResourceBudgetError):
        lattice_points_by_enumeration(P(0), P(1000, 0, 1), budget=100)
    with pytest.raises(ResourceBudgetError):
        lattice_points_by_enumeration(P(0), P(0, 0, 1000), budget=100)


def test_gcd_identity_exhaustive():
    for dx in range(-50, 51):
        for dy in range(-50, 51):
            if dx == dy == 0:
                continue
            hits = lattice_points_strictly_between(P(3), P(3 + dx, 0, dy))
            assert hits.count == gcd(dx, dy) - 1


def random_segment(rng):
    kind = rng.random()
    if kind < 0.4:
        # integer endpoints sharing a common step so that hits are frequent
        g = rng.randint(1, 40)
        a = P(rng.randint(-1000, 1000), 0, rng.randint(-1000, 1000))
        dx, dy = rng.randint(-25, 25) * g, rng.randint(-25, 25) * g
        b = P(max(-1000, min(1000, a.x_num + dx)), 0, max(-1000, min(1000, a.y + dy)))
    else:
        a = P(rng.randint(-8000, 8000), rng.randint(0, 3), rng.randint(-1000, 1000))
        b = P(rng.randint(-8000, 8000), rng.randint(0, 3), rng.randint(-1000, 1000))
        if kind < 0.5:
            b = P(a.x_num, a.x_pow2, b.y)
    return a, b


def test_diophantine_matches_enumeration_random():
    rng = random.Random(20240611)
    checked = positive = 0
    while checked < 3000:
        a, b = random_segment(rng)
        if a == b:
            continue
        d, e = lattice_points_strictly_between(a, b), lattice_points_by_enumeration(a, b)
        assert (d.count, d.witness) == (e.count, e.witness), (a, b)
        checked += 1
        positive += d.count > 0
    assert positive > 500


@given(dyadic_points(), dyadic_points())
def test_diophantine_matches_enumeration_property(a, b):
    assume(a != b)
    d, e = lattice_points_strictly_between(a, b), lattice_points_by_enumeration(a, b)
    assert (d.count, d.witness) == (e.count, e.witness)
    for pt in e.points:
        assert strictly_between(a, b, P(pt.x, 0, pt.y))


@given(st.integers(-10 ** 40, 10 ** 40), st.integers(-10 ** 40, 10 ** 40))
def test_extended_gcd(a, b):
    g, s, t = extended_gcd(a, b)
    assert g == gcd(a, b)
    assert a * s + b * t == g


def test_strictly_between():
    assert strictly_between(P(0), P(4, 0, 2), P(2, 0, 1))
    assert not strictly_between(P(0), P(4, 0, 2), P(4, 0, 2))
    assert not strictly_between(P(0), P(4, 0, 2), P(6, 0, 3))
    assert strictly_between(P(0), P(0, 0, 4), P(0, 0, 1))

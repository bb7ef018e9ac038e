from fractions import Fraction
import math

from hypothesis import given
from hypothesis import strategies as st
import pytest

from arithsite import bigcell as bc
from arithsite import supernatural as sn
from arithsite.errors import InvalidInput
from strategies import supernaturals

import oracles

L = bc.ConwayLattice
F = Fraction


def test_hyperdistance_examples():
    assert bc.hyperdistance(L(1), L(1)) == 1
    assert bc.hyperdistance(L(2), L(1)) == 2
    assert bc.hyperdistance(L(2), L(3)) == 6
    assert bc.hyperdistance(L(2), L(1, F(1, 2))) == 2


def test_lattice_canonical_form():
    assert L(2, F(3, 2)) == L(2, F(1, 2))
    assert str(L(F(3, 2), F(1, 3))) == "(3/2, 1/3)"
    with pytest.raises(InvalidInput):
        L(0)


def test_neighbors():
    assert bc.bigcell_neighbors(1, 10) == [2, 3, 5, 7]
    assert bc.bigcell_neighbors(2, 10) == [1, 4, 6, 10]
    for M in range(1, 20):
        assert M not in bc.bigcell_neighbors(M, 40)


def test_truncations():
    two_inf = sn.Supernatural.make(0, {2: sn.INF})
    assert bc.divisor_truncation(two_inf, 10).members == (1, 2, 4, 8)
    assert bc.divisor_truncation(sn.s_from_nat(6), 20).members == (1, 2, 3, 6)
    assert bc.divisor_truncation(sn.s_from_nat(1), 50).members == (1,)
    assert bc.is_point_truncation(bc.DivisorTruncation(20, (1, 2, 3, 6)))
    assert not bc.is_point_truncation(bc.DivisorTruncation(20, (1, 2, 3)))
    assert bc.is_point_truncation(bc.DivisorTruncation(7, (1,)))
    assert not bc.is_point_truncation(bc.DivisorTruncation(20, (2,)))
    with pytest.raises(InvalidInput):
        bc.DivisorTruncation(5, (1, 6))
    with pytest.raises(InvalidInput):
        bc.divisor_truncation(two_inf, 0)


rationals = st.builds(F, st.integers(1, 12), st.integers(1, 12))
lattices = st.builds(lambda M, g, h: L(M, F(g % h, h)), rationals, st.integers(0, 11), st.integers(1, 12))


@given(lattices, lattices)
def test_hyperdistance_properties(a, b):
    d = bc.hyperdistance(a, b)
    assert d == bc.hyperdistance(b, a) >= 1
    assert (d == 1) == (a == b)
    assert d == oracles.hyperdistance(a.M, a.gh, b.M, b.gh)


@given(st.integers(1, 80), st.integers(1, 80))
def test_integer_closed_form(M, N):
    g = math.gcd(M, N)
    assert bc.hyperdistance(L(M), L(N)) == M * N // (g * g)


@given(supernaturals(), st.integers(1, 150), st.integers(0, 100))
def test_truncations_are_points_and_monotone(s, bound, extra):
    t = bc.divisor_truncation(s, bound)
    assert bc.is_point_truncation(t)
    assert set(t.members) <= set(bc.divisor_truncation(s, bound + extra).members)

from hypothesis import assume, given, settings
from hypothesis import strategies as st
import pytest

from arithsite import sieve as om
from arithsite.errors import ArithmeticOverflow, EmptyPremise, InvalidFrameElement, InvalidInput, UndefinedGcd
from arithsite.sieve import ONE, ZERO, Sieve
from strategies import sieves

import oracles

S = Sieve.of


class TestExamples:
    def test_normalize(self):
        assert om.normalize([4, 2, 6]) == S(2)
        assert om.normalize([]) == ZERO
        assert om.normalize([3, 5, 15]) == S(3, 5)
        assert om.normalize([6, 1]) == ONE

    def test_normalize_rejects_nonpositive(self):
        with pytest.raises(InvalidInput):
            om.normalize([0, 2])
        with pytest.raises(InvalidInput):
            om.normalize([True])

    def test_overflow_is_an_error(self):
        with pytest.raises(ArithmeticOverflow):
            om.normalize([2**64])
        big = S(2**40)
        with pytest.raises(ArithmeticOverflow):
            om.meet(big, S(3**30))

    def test_member_and_leq(self):
        assert om.member(6, S(2, 3)) and not om.member(7, S(2, 3))
        assert om.member(97, ONE) and not om.member(1, ZERO)
        assert om.leq(S(4), S(2)) and not om.leq(S(2), S(4))
        assert om.leq(ZERO, S(5))

    def test_lattice_operations(self):
        assert om.join(S(2), S(4)) == S(2)
        assert om.join(S(2), S(3)) == S(2, 3)
        assert om.meet(S(2, 3), S(5)) == S(10, 15)
        assert om.meet(S(2), S(4)) == S(4)
        assert om.meet(S(7), ONE) == S(7)

    def test_implies(self):
        assert om.implies(S(2), S(6)) == S(3)
        assert om.implies(S(6), S(2)) == ONE
        assert om.implies(S(4, 9), S(4, 9)) == ONE
        assert om.implies(ZERO, S(5)) == ONE

    def test_neg(self):
        assert om.neg(S(2)) == ZERO
        assert om.neg(ZERO) == ONE
        assert om.neg(ONE) == ZERO

    def test_act(self):
        assert om.act(S(6, 10), 2) == S(3, 5)
        assert om.act(S(15), 2) == S(15)
        assert om.act(S(4, 9), 1) == S(4, 9)
        with pytest.raises(InvalidInput):
            om.act(S(2), 0)

    def test_orbit(self):
        assert om.orbit(S(4), S(6)) == {S(2), ONE}
        assert om.orbit(S(2), ONE) == {S(2), ONE}
        assert om.orbit(ONE, S(5)) == {ONE}
        with pytest.raises(EmptyPremise):
            om.orbit(S(2), ZERO)

    def test_gcd(self):
        assert om.gcd_of(S(12, 18)) == 6
        assert om.gcd_of(S(2, 3)) == 1
        assert om.gcd_of(S(7)) == 7
        with pytest.raises(UndefinedGcd):
            om.gcd_of(ZERO)

    def test_relative_double_negation(self):
        assert om.relative_double_neg(S(2), S(6)) == ONE
        assert om.relative_double_neg(ZERO, S(6)) == ZERO
        assert om.relative_double_neg(ONE, S(6)) == ONE
        with pytest.raises(InvalidFrameElement):
            om.relative_double_neg(S(3), S(2))
        with pytest.raises(EmptyPremise):
            om.relative_double_neg(S(2), ZERO)

    def test_operators_and_text(self):
        assert str(S(3, 2)) == "<2,3>" and str(ZERO) == "<>" and str(ONE) == "<1>"
        assert S(2) & S(3) == S(6) and (S(2) | S(3)) == S(2, 3)
        assert S(2) >> S(6) == S(3) and ~S(2) == ZERO
        assert 4 in S(2) and S(4) <= S(2)


# -- properties -------------------------------------------------------------


@given(sieves(), sieves(), sieves())
def test_heyting_conditions(x, y, z):
    assert om.meet(x, om.meet(y, z)) == om.meet(om.meet(x, y), z)
    assert om.join(x, om.join(y, z)) == om.join(om.join(x, y), z)
    assert om.meet(x, y) == om.meet(y, x) and om.join(x, y) == om.join(y, x)
    assert om.meet(x, x) == x == om.join(x, x)
    assert om.meet(ONE, x) == x == om.join(ZERO, x)
    assert om.meet(x, om.join(y, x)) == x == om.join(om.meet(x, y), x)
    assert om.meet(x, om.join(y, z)) == om.join(om.meet(x, y), om.meet(x, z))
    assert om.join(x, om.meet(y, z)) == om.meet(om.join(x, y), om.join(x, z))
    assert om.leq(x, y) == (x == om.meet(x, y)) == (y == om.join(x, y))
    assert om.leq(om.meet(x, y), z) == om.leq(x, om.implies(y, z))
    assert om.leq(x, om.neg(om.neg(x)))


@given(sieves())
def test_canonical_form(x):
    g = x.generators
    assert list(g) == sorted(set(g))
    assert not any(a != b and b % a == 0 for a in g for b in g)
    assert 1 not in g or g == (1,)


@settings(max_examples=60)
@given(sieves(3, 30), sieves(3, 30), st.integers(1, 12))
def test_against_multiple_set_oracle(x, y, n):
    X, Y = list(x.generators), list(y.generators)
    assert list(om.meet(x, y).generators) == oracles.meet(X, Y)
    assert list(om.join(x, y).generators) == oracles.join(X, Y)
    assert list(om.act(x, n).generators) == oracles.act(X, n)


@settings(max_examples=30)
@given(sieves(2, 20), sieves(2, 20))
def test_implies_against_oracle(x, y):
    assert list(om.implies(x, y).generators) == oracles.implies(list(x.generators), list(y.generators), 120)


@given(sieves(), sieves(), st.integers(1, 60), st.integers(1, 60))
def test_action_laws(x, y, m, n):
    assert om.act(om.act(x, m), n) == om.act(x, m * n)
    assert om.leq(om.act(x, n), om.act(om.join(x, y), n))


@settings(max_examples=40)
@given(sieves(2, 20), sieves(2, 20, nonzero=True))
def test_orbit_matches_sampling(r, s):
    from arithsite.laws import orbit_by_sampling
    from arithsite import arith

    bound = 10 * arith.lcm_all(r.generators + s.generators)
    assume(bound <= 40000)
    assert om.orbit(r, s) == orbit_by_sampling(r, s, bound)


@given(sieves(), sieves(nonzero=True))
def test_barr_double_negation(y, s):
    t = om.join(s, y)
    assert om.relative_double_neg(t, s) == ONE

from fractions import Fraction

from hypothesis import given
import pytest

from arithsite import sheaves as sh
from arithsite import sieve as om
from arithsite import supernatural as sn
from arithsite.errors import UndefinedGcd
from arithsite.sieve import Sieve
from arithsite.supernatural import PrimeSetDesc, SupernaturalClass
from strategies import sieves

S = Sieve.of
F = Fraction


def test_sections_and_stalks():
    assert sh.sections_i([2, 3]) == sh.invert([2, 3])
    assert sh.sections_i([5]) == sh.invert([5])
    assert sh.stalk_i(sn.i_point(2)) == sh.invert_all_except([2])
    assert sh.stalk_i(SupernaturalClass(PrimeSetDesc.finite([]))) == sh.invert_all_except([])
    assert sh.stalk_i(sn.j_point(5)) == sh.invert([5])
    assert sh.sections_j(S(12, 18)) == sh.invert([2, 3])
    assert sh.sections_j(S(2, 3)) == sh.invert([])
    assert sh.stalk_j(sn.j_point(5)) == sh.invert_all_except([5])
    assert sh.stalk_j(sn.i_point(2)) == sh.invert([2])
    with pytest.raises(UndefinedGcd):
        sh.sections_j(om.ZERO)


def test_local_rings():
    z2 = sh.stalk_i(sn.i_point(2))
    assert F(1, 3) in z2 and F(5, 7) in z2 and F(1, 2) not in z2
    z5 = sh.stalk_j(sn.j_point(5))
    assert F(1, 2) in z5 and F(1, 3) in z5 and F(1, 5) not in z5
    assert sh.contains_rational(z2, -F(7, 9))


def test_text():
    assert str(sh.invert([])) == "Z"
    assert str(sh.invert([3, 2])) == "Z[1/2,1/3]"
    assert str(sh.invert_all_except([])) == "Q"
    assert str(sh.invert_all_except([2])) == "Z_(2)"


@given(sieves(nonzero=True), sieves())
def test_sections_j_monotone(s, t):
    big = om.join(s, t)
    assert om.gcd_of(s) % om.gcd_of(big) == 0
    assert sh.sections_j(big) <= sh.sections_j(s)


@given(sieves(3, 40, nonzero=True))
def test_stalk_j_contains_sections_over_opens(s):
    from arithsite import topologies as top

    for p in (2, 3, 5, 7):
        c = sn.j_point(p)
        if top.in_Xs(c, s):
            assert sh.sections_j(s) <= sh.stalk_j(c)

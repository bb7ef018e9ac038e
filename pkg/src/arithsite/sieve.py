"""Sieves on the multiplicative monoid of positive integers.

A sieve is a right ideal ``S = n_1 N u ... u n_k N``.  Only finitely generated
sieves are representable; every one of them has a unique canonical form, the
divisibility-minimal antichain of generators sorted ascending.  Equality of
sieves is therefore structural equality of the generator tuples.

The operations here realise the Heyting algebra structure of the subobject
classifier (join is union, meet is intersection via pairwise lcm, implication
and negation as below) together with the right action ``S . n``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable

from . import arith
from .errors import EmptyPremise, InvalidFrameElement, InvalidInput, UndefinedGcd


@dataclass(frozen=True)
class Sieve:
    """Canonical finitely generated sieve.  Build through :func:`normalize` or :meth:`of`."""

    generators: tuple[int, ...]

    @classmethod
    def of(cls, *gens: int) -> "Sieve":
        return normalize(gens)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_one(self) -> bool:
        return self.generators == (1,)

    def __contains__(self, n: int) -> bool:
        return member(n, self)

    def __le__(self, other: "Sieve") -> bool:
        return leq(self, other)

    def __and__(self, other: "Sieve") -> "Sieve":
        return meet(self, other)

    def __or__(self, other: "Sieve") -> "Sieve":
        return join(self, other)

    def __rshift__(self, other: "Sieve") -> "Sieve":
        return implies(self, other)

    def __invert__(self) -> "Sieve":
        return neg(self)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"

    def __repr__(self) -> str:
        return f"Sieve{self}"


ZERO = Sieve(())
ONE = Sieve((1,))


def normalize(gens: Iterable[int]) -> Sieve:
    """Canonical form of the sieve generated by ``gens``."""
    values = sorted(set(gens))
    for g in values:
        if not isinstance(g, int) or isinstance(g, bool) or g < 1:
            raise InvalidInput(f"sieve generators must be positive integers, got {g!r}")
        arith.checked(g)
    minimal: list[int] = []
    # ascending order: a value is redundant iff some smaller kept value divides it
    for g in values:
        if not any(g % m == 0 for m in minimal):
            minimal.append(g)
    return Sieve(tuple(minimal))


def member(n: int, S: Sieve) -> bool:
    return any(n % g == 0 for g in S.generators)


def leq(S: Sieve, T: Sieve) -> bool:
    return all(member(g, T) for g in S.generators)


def join(S: Sieve, T: Sieve) -> Sieve:
    return normalize(S.generators + T.generators)


def meet(S: Sieve, T: Sieve) -> Sieve:
    return normalize(arith.lcm(n, m) for n in S.generators for m in T.generators)


def _exponent_caps(gens: Iterable[int]) -> dict[int, int]:
    caps: dict[int, int] = {}
    for g in gens:
        for p, e in arith.factorize(g):
            caps[p] = max(caps.get(p, 0), e)
    return caps


def _grid(caps: dict[int, int]) -> Iterable[int]:
    primes = sorted(caps)
    for exps in itertools.product(*(range(caps[p] + 1) for p in primes)):
        yield arith.checked_product(p**e for p, e in zip(primes, exps))


def implies(S: Sieve, T: Sieve) -> Sieve:
    """Heyting implication: the sieve of all ``e`` with ``lcm(e, n_i)`` in ``T`` for every generator ``n_i`` of ``S``.

    Whether ``e`` qualifies depends only on its exponents at the primes of
    ``T``'s generators, capped at their maximal exponent there, so the
    minimal qualifying ``e`` all lie on that finite exponent grid.
    """
    winners = [
        e
        for e in _grid(_exponent_caps(T.generators))
        if all(member(arith.lcm(e, n), T) for n in S.generators)
    ]
    return normalize(winners)


def neg(S: Sieve) -> Sieve:
    return ONE if S.is_zero else ZERO


def act(S: Sieve, n: int) -> Sieve:
    """Right action ``S . n = {k : n k in S}``."""
    if n < 1:
        raise InvalidInput(f"action by a non-positive integer {n}")
    return normalize(g // math.gcd(g, n) for g in S.generators)


def orbit(R: Sieve, S: Sieve) -> frozenset[Sieve]:
    """The finite set ``{R . s : s in S}``.

    ``R . s`` only sees ``min(v_p(s), cap_p)`` at the primes ``p`` of ``R``'s
    generators (``cap_p`` being their maximal exponent), so it suffices to
    enumerate the capped exponent vectors reachable from some generator of
    ``S``.
    """
    if S.is_zero:
        raise EmptyPremise("orbit over the empty sieve")
    caps = _exponent_caps(R.generators)
    primes = sorted(caps)
    result = set()
    for w in itertools.product(*(range(caps[p] + 1) for p in primes)):
        for m in S.generators:
            ok = True
            for p, wp in zip(primes, w):
                vp = arith.valuation(m, p)
                if (vp <= caps[p] and wp < vp) or (vp > caps[p] and wp != caps[p]):
                    ok = False
                    break
            if ok:
                result.add(act(R, arith.checked_product(p**e for p, e in zip(primes, w))))
                break
    return frozenset(result)


def gcd_of(S: Sieve) -> int:
    if S.is_zero:
        raise UndefinedGcd("gcd of the empty sieve is undefined")
    return arith.gcd_all(S.generators)


def _in_closed_frame(T: Sieve, S: Sieve) -> bool:
    return T.is_zero or leq(S, T)


def relative_neg(T: Sieve, S: Sieve) -> Sieve:
    """Pseudocomplement of ``T`` inside the frame ``{U : S <= U} u {0}``.

    The frame is a sublattice of Omega containing 0 and 1, so the relative
    pseudocomplement is the largest frame element below ``neg(T)``.
    """
    if S.is_zero:
        raise EmptyPremise("the closed complement of the empty sieve is not a proper frame")
    if not _in_closed_frame(T, S):
        raise InvalidFrameElement(f"{T} is neither 0 nor above {S}")
    candidate = neg(T)
    return candidate if _in_closed_frame(candidate, S) else ZERO


def relative_double_neg(T: Sieve, S: Sieve) -> Sieve:
    return relative_neg(relative_neg(T, S), S)

"""Sections and stalks of the push-forward sheaves ``i_* O_Z`` and ``j_* O_Z``.

Every ring involved is a localization of the integers, so it is described
by the primes it inverts (:class:`DenominatorSpec`).  No ring arithmetic is
implemented, only membership of rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import arith
from .sieve import Sieve, gcd_of
from .supernatural import Mode, PrimeSetDesc, SupernaturalClass


@dataclass(frozen=True)
class DenominatorSpec:
    invertible: PrimeSetDesc

    def __contains__(self, q) -> bool:
        return contains_rational(self, q)

    def __le__(self, other: "DenominatorSpec") -> bool:
        return self.invertible.issubset(other.invertible)

    def __str__(self) -> str:
        primes = self.invertible.primes
        if self.invertible.mode is Mode.FINITE:
            if not primes:
                return "Z"
            return "Z[" + ",".join(f"1/{p}" for p in primes) + "]"
        if not primes:
            return "Q"
        return "Z_(" + ",".join(map(str, primes)) + ")"


def invert(primes: Iterable[int]) -> DenominatorSpec:
    return DenominatorSpec(PrimeSetDesc.finite(primes))


def invert_all_except(primes: Iterable[int]) -> DenominatorSpec:
    return DenominatorSpec(PrimeSetDesc.cofinite(primes))


def sections_i(P: Iterable[int]) -> DenominatorSpec:
    """Sections over ``X_a(P)``: ``Z[1/prod P]``."""
    return invert(P)


def stalk_i(c: SupernaturalClass) -> DenominatorSpec:
    """Fractions whose denominator avoids every prime with infinite exponent."""
    return DenominatorSpec(c.inf_support.complement())


def sections_j(S: Sieve) -> DenominatorSpec:
    """Sections over ``X_s(S)``: ``Z[1/gcd(S)]``."""
    return invert(arith.prime_support(gcd_of(S)))


def stalk_j(c: SupernaturalClass) -> DenominatorSpec:
    """``Z[1/p : p^inf divides s]``."""
    return DenominatorSpec(c.inf_support)


def contains_rational(spec: DenominatorSpec, q) -> bool:
    q = Fraction(q)
    return spec.invertible.contains_all(arith.prime_support(q.denominator))

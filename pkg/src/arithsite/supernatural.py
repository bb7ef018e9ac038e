"""Finitely described supernatural numbers and their equivalence classes.

A representable supernatural number has a default exponent (0 or infinity)
at all but finitely many primes.  That covers the naturals, ``p^inf`` and
``prod_{q != p} q^inf`` while keeping divisibility and equivalence decidable.

Two supernaturals are equivalent when they have the same infinite exponents
and agree at all but finitely many primes.  On the representable fragment the
second condition is automatic: both numbers carry finitely many exceptions
over their defaults, and equal infinity-supports force equal defaults, so
they differ at most at the union of their exception primes.  Equivalence is
therefore decided by comparing infinity-supports alone, and the class of a
point is fully described by its :class:`PrimeSetDesc`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from . import arith
from .errors import InvalidInput

INF = math.inf

Exponent = Union[int, float]  # a non-negative int, or INF


class Mode(enum.Enum):
    FINITE = "finite"
    COFINITE = "cofinite"


@dataclass(frozen=True)
class PrimeSetDesc:
    """A finite set of primes, or the complement of one."""

    mode: Mode
    primes: tuple[int, ...] = ()

    @classmethod
    def finite(cls, primes: Iterable[int] = ()) -> "PrimeSetDesc":
        return cls(Mode.FINITE, _prime_tuple(primes))

    @classmethod
    def cofinite(cls, excluded: Iterable[int] = ()) -> "PrimeSetDesc":
        return cls(Mode.COFINITE, _prime_tuple(excluded))

    def __contains__(self, p: int) -> bool:
        return (p in self.primes) == (self.mode is Mode.FINITE)

    def contains_all(self, primes: Iterable[int]) -> bool:
        return all(p in self for p in primes)

    def meets(self, primes: Iterable[int]) -> bool:
        return any(p in self for p in primes)

    def issubset(self, other: "PrimeSetDesc") -> bool:
        a, b = set(self.primes), set(other.primes)
        if self.mode is Mode.FINITE:
            return a <= b if other.mode is Mode.FINITE else not (a & b)
        if other.mode is Mode.FINITE:
            return False
        return b <= a

    def complement(self) -> "PrimeSetDesc":
        mode = Mode.COFINITE if self.mode is Mode.FINITE else Mode.FINITE
        return PrimeSetDesc(mode, self.primes)

    def __str__(self) -> str:
        body = "{" + ",".join(map(str, self.primes)) + "}"
        return body if self.mode is Mode.FINITE else "all-" + body


def _prime_tuple(primes: Iterable[int]) -> tuple[int, ...]:
    out = sorted(set(primes))
    for p in out:
        arith.require_prime(p)
    return tuple(out)


@dataclass(frozen=True)
class Supernatural:
    """``prod_p p^{s_p}`` with ``s_p = default`` outside the finite ``exceptions``."""

    default: Exponent
    exceptions: tuple[tuple[int, Exponent], ...] = ()

    @classmethod
    def make(cls, default: Exponent = 0, exceptions: Mapping[int, Exponent] | None = None) -> "Supernatural":
        if default not in (0, INF):
            raise InvalidInput("the default exponent must be 0 or inf")
        items = []
        for p, e in sorted((exceptions or {}).items()):
            arith.require_prime(p)
            if e != INF and (not isinstance(e, int) or e < 0):
                raise InvalidInput(f"bad exponent {e!r} at {p}")
            if e != default:
                items.append((p, INF if e == INF else int(e)))
        return cls(INF if default == INF else 0, tuple(items))

    def exponent(self, p: int) -> Exponent:
        for q, e in self.exceptions:
            if q == p:
                return e
        return self.default

    @property
    def exception_map(self) -> dict[int, Exponent]:
        return dict(self.exceptions)

    def __mul__(self, other: "Supernatural") -> "Supernatural":
        return s_mul(self, other)

    def __str__(self) -> str:
        def factor(p: int, e: Exponent) -> str:
            if e == INF:
                return f"{p}^inf"
            return str(p) if e == 1 else f"{p}^{e}"

        if self.default == INF:
            parts = ["all^inf"] + [f"{p}^{e}" for p, e in self.exceptions]
            return "sn(" + " / ".join(parts) + ")"
        if not self.exceptions:
            return "sn(1)"
        return "sn(" + " * ".join(factor(p, e) for p, e in self.exceptions) + ")"


@dataclass(frozen=True)
class SupernaturalClass:
    """A point of the arithmetic site, described by its infinity-support."""

    inf_support: PrimeSetDesc

    def representative(self) -> Supernatural:
        desc = self.inf_support
        if desc.mode is Mode.FINITE:
            return Supernatural.make(0, {p: INF for p in desc.primes})
        return Supernatural.make(INF, {p: 0 for p in desc.primes})

    def __str__(self) -> str:
        return f"class({self.representative()})"


def s_from_nat(n: int) -> Supernatural:
    return Supernatural.make(0, dict(arith.factorize(n)))


def s_mul(s: Supernatural, t: Supernatural) -> Supernatural:
    default = INF if INF in (s.default, t.default) else 0
    primes = set(s.exception_map) | set(t.exception_map)
    return Supernatural.make(default, {p: s.exponent(p) + t.exponent(p) for p in primes})


def s_divides(s: Supernatural, t: Supernatural) -> bool:
    """``s_p <= t_p`` at every prime: checked at the exception primes, then at the defaults."""
    primes = set(s.exception_map) | set(t.exception_map)
    return all(s.exponent(p) <= t.exponent(p) for p in primes) and s.default <= t.default


def inf_support(s: Supernatural) -> PrimeSetDesc:
    if s.default == INF:
        return PrimeSetDesc.cofinite(p for p, e in s.exceptions if e != INF)
    return PrimeSetDesc.finite(p for p, e in s.exceptions if e == INF)


def class_of(s: Supernatural) -> SupernaturalClass:
    """The projection ``s -> [s]`` at the level of points."""
    return SupernaturalClass(inf_support(s))


def equivalent(s: Supernatural, t: Supernatural) -> bool:
    # the cofinite-agreement clause holds automatically for representable inputs
    return inf_support(s) == inf_support(t)


def i_point(p: int) -> SupernaturalClass:
    """``p -> [p^inf]``."""
    return SupernaturalClass(PrimeSetDesc.finite([arith.require_prime(p)]))


def j_point(p: int) -> SupernaturalClass:
    """``p -> [prod_{q != p} q^inf]``."""
    return SupernaturalClass(PrimeSetDesc.cofinite([arith.require_prime(p)]))

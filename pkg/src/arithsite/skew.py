"""The noncommutative frame of constructible truth fluctuations.

An element is a pair ``(S, x)``: a sieve ``S`` and a patch-continuous map
``x : X_s(S) -> {0, 1}``, stored as the constructible set where ``x`` is 1.
Meet restricts the left argument, join lets the right argument override
the left one on its domain.  Both are noncommutative; identifying pairs
with the same domain collapses them onto the Heyting algebra of sieves
(:func:`shadow`).

The graph ``{([s], x([s]))}`` of a fluctuation is recoverable from the pair
via :func:`value_at`; the total space of all graphs is not built.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sieve as om
from .sieve import Sieve
from .supernatural import SupernaturalClass
from .topologies import (
    FALSE,
    Constructible,
    atom,
    c_and,
    c_equal,
    c_member,
    c_not,
    c_or,
    in_Xs,
)


@dataclass(frozen=True, eq=False)
class Fluctuation:
    """A pair ``(domain, support)``; the support is clipped to ``X_s(domain)``.

    Equality is semantic: equal canonical domains and equal supports as
    point sets.
    """

    domain: Sieve
    support: Constructible

    def __post_init__(self):
        object.__setattr__(self, "support", c_and(self.support, atom(self.domain)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Fluctuation):
            return NotImplemented
        return self.domain == other.domain and c_equal(self.support, other.support)

    def __hash__(self) -> int:
        return hash(self.domain)

    def __and__(self, other: "Fluctuation") -> "Fluctuation":
        return t_meet(self, other)

    def __or__(self, other: "Fluctuation") -> "Fluctuation":
        return t_join(self, other)

    def __rshift__(self, other: "Fluctuation") -> "Fluctuation":
        return t_implies(self, other)

    def __le__(self, other: "Fluctuation") -> bool:
        return t_leq(self, other)

    def __str__(self) -> str:
        return f"th({self.domain}, {self.support})"

    __repr__ = __str__


ThetaElement = Fluctuation

BOTTOM = Fluctuation(om.ZERO, FALSE)


def constant(S: Sieve, value: bool) -> Fluctuation:
    return Fluctuation(S, atom(S) if value else FALSE)


def value_at(x: Fluctuation, c: SupernaturalClass) -> bool | None:
    """``x([s])``, or None when ``[s]`` lies outside the domain."""
    if not in_Xs(c, x.domain):
        return None
    return c_member(c, x.support)


def restrict(x: Fluctuation, T: Sieve) -> Fluctuation:
    return Fluctuation(om.meet(x.domain, T), c_and(x.support, atom(T)))


def t_meet(a: Fluctuation, b: Fluctuation) -> Fluctuation:
    return restrict(a, b.domain)


def t_join(a: Fluctuation, b: Fluctuation) -> Fluctuation:
    return Fluctuation(
        om.join(a.domain, b.domain),
        c_or(b.support, c_and(a.support, c_not(atom(b.domain)))),
    )


def t_leq(a: Fluctuation, b: Fluctuation) -> bool:
    return om.leq(a.domain, b.domain) and c_equal(restrict(b, a.domain).support, a.support)


def t_equiv(a: Fluctuation, b: Fluctuation) -> bool:
    return a.domain == b.domain


def shadow(a: Fluctuation) -> Sieve:
    return a.domain


def embed_omega(S: Sieve) -> Fluctuation:
    return constant(S, True)


def commutes(a: Fluctuation, b: Fluctuation) -> bool:
    common = atom(om.meet(a.domain, b.domain))
    return c_equal(c_and(a.support, common), c_and(b.support, common))


def t_implies(a: Fluctuation, b: Fluctuation) -> Fluctuation:
    """``(S, x) -> (T, y)``: domain ``S -> T``, with ``y`` extended by truth off ``X_s(T)``."""
    domain = om.implies(a.domain, b.domain)
    return Fluctuation(domain, c_or(b.support, c_and(atom(domain), c_not(atom(b.domain)))))

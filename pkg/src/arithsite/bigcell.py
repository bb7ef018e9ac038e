"""Conway's hyperdistance and finite truncations of points of the big cell.

Lattices commensurable with ``<e1, e2>`` have the canonical form
``L = <M e1 + (g/h) e2, e2>`` with ``M`` a positive rational and ``g/h``
taken modulo 1.  The hyperdistance of ``L`` and ``L'`` is ``det(alpha D)``
where ``D = A B^{-1}`` for the basis matrices ``A``, ``B`` and ``alpha`` is
the least positive rational making ``alpha D`` integral.  ``D`` always has
a 1 on its diagonal, so ``alpha`` is an integer: the lcm of the reduced
denominators of the entries.

A point of the presheaf topos on the big cell is a set of positive integers
closed under divisors and lcm.  Such a set is only ever inspected up to a
bound, and a truncation does not determine the point's exponents beyond
the bound; the round trip ``supernatural -> truncation`` is the only one
offered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import arith
from .errors import ArithSiteError, InvalidInput
from .supernatural import Supernatural, s_divides, s_from_nat


@dataclass(frozen=True)
class ConwayLattice:
    M: Fraction
    gh: Fraction = Fraction(0)

    def __post_init__(self):
        M, gh = Fraction(self.M), Fraction(self.gh)
        if M <= 0:
            raise InvalidInput(f"M must be positive, got {M}")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "gh", gh - math.floor(gh))

    def matrix(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return ((self.M, self.gh), (Fraction(0), Fraction(1)))

    def __str__(self) -> str:
        return f"({_frac(self.M)}, {_frac(self.gh)})"


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _inverse(m):
    (a, b), (c, d) = m
    det = a * d - b * c
    return ((d / det, -b / det), (-c / det, a / det))


def _mul(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def hyperdistance(L: ConwayLattice, L2: ConwayLattice) -> int:
    D = _mul(L.matrix(), _inverse(L2.matrix()))
    alpha = arith.lcm_all(entry.denominator for row in D for entry in row)
    (a, b), (c, d) = D
    det = (alpha * a) * (alpha * d) - (alpha * b) * (alpha * c)
    if det.denominator != 1 or det <= 0:
        raise ArithSiteError(f"hyperdistance came out as {det}, not a positive integer")
    return int(det)


def integer_lattice(M: int) -> ConwayLattice:
    return ConwayLattice(Fraction(M))


def bigcell_neighbors(M: int, bound: int) -> list[int]:
    """The ``N <= bound`` whose integer lattice is at prime hyperdistance from ``L_M``."""
    LM = integer_lattice(M)
    return [N for N in range(1, bound + 1) if arith.is_prime(hyperdistance(LM, integer_lattice(N)))]


@dataclass(frozen=True)
class DivisorTruncation:
    bound: int
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        if members and (members[0] < 1 or members[-1] > self.bound):
            raise InvalidInput(f"members must lie in 1..{self.bound}")
        object.__setattr__(self, "members", members)

    def __str__(self) -> str:
        return f"trunc({self.bound}: " + ", ".join(map(str, self.members)) + ")"


def divisor_truncation(s: Supernatural, bound: int) -> DivisorTruncation:
    if bound < 1:
        raise InvalidInput("bound must be at least 1")
    return DivisorTruncation(bound, tuple(n for n in range(1, bound + 1) if s_divides(s_from_nat(n), s)))


def is_point_truncation(T: DivisorTruncation) -> bool:
    members = set(T.members)
    if 1 not in members:
        return False
    for n in members:
        if any(n % d == 0 and d not in members for d in range(1, n)):
            return False
    for k in members:
        for l in members:
            m = arith.lcm(k, l)
            if m <= T.bound and m not in members:
                return False
    return True

"""Grothendieck topologies on the one-object category with monoid N^x.

A topology is a family of sieves containing the top sieve, stable under the
action and satisfying the transitivity (local character) axiom.  The
families ``G_P`` consist of the sieves containing ``m N`` for some ``m``
supported on the primes ``P``; they are topologies, the smallest containing
every ``p N`` with ``p`` in ``P``.

:func:`axiom_check` is a refuter.  It can exhibit a violated axiom, but a
clean report only certifies the sampled instances.  For ``G_P`` closure
under the action and transitivity also follow directly from the membership
criterion: acting by ``n`` divides a ``P``-supported generator by a
``P``-supported gcd, and if every ``R . s`` (``s`` in ``S``) is in ``G_P``
then so is ``R . m`` for a ``P``-supported ``m`` in ``S``, which yields a
``P``-supported element ``m * k`` of ``R``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Union

from . import arith
from .errors import InconsistentSpec
from .sieve import ONE, Sieve, act, normalize, orbit


def in_GP(S: Sieve, P: Iterable[int]) -> bool:
    """Some generator of ``S`` has all prime divisors in ``P``.

    An element ``m`` of ``S`` supported on ``P`` is a multiple of some
    generator, which is then supported on ``P`` as well.
    """
    allowed = frozenset(P)
    return any(arith.prime_support(g) <= allowed for g in S.generators)


@dataclass(frozen=True)
class GP:
    primes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "primes", tuple(sorted({arith.require_prime(p) for p in self.primes})))

    def __contains__(self, S: Sieve) -> bool:
        return in_GP(S, self.primes)

    def __str__(self) -> str:
        return "GP{" + ",".join(map(str, self.primes)) + "}"


@dataclass(frozen=True)
class Table:
    """An explicitly listed finite family of sieves.

    ``closed_upward=True`` asserts the listed family is already upward
    closed in Omega.  A finite family can only be that when every member is
    the top sieve: above any ``S != 1`` sit the infinitely many distinct
    sieves ``S v <q>`` for primes ``q`` outside ``S``.
    """

    members: frozenset[Sieve]
    closed_upward: bool = False

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))

    def __contains__(self, S: Sieve) -> bool:
        return S in self.members

    def __str__(self) -> str:
        return "TABLE{" + ", ".join(str(S) for S in sorted(self.members, key=_sieve_key)) + "}"


FamilySpec = Union[GP, Table]


def _sieve_key(S: Sieve):
    return (len(S.generators), S.generators)


def validate(family: FamilySpec) -> None:
    if isinstance(family, Table) and family.closed_upward:
        offenders = [S for S in family.members if S != ONE]
        if offenders:
            raise InconsistentSpec(
                f"table declared upward closed but contains {offenders[0]}, whose up-set is infinite"
            )


@dataclass
class AxiomReport:
    family: str
    cases: int
    top_in_family: bool
    stability: list[tuple[Sieve, int]] = field(default_factory=list)
    transitivity: list[tuple[Sieve, Sieve]] = field(default_factory=list)
    stability_checks: int = 0
    transitivity_checks: int = 0

    @property
    def clean(self) -> bool:
        return self.top_in_family and not self.stability and not self.transitivity

    def as_record(self) -> dict:
        return {
            "family": self.family,
            "cases": self.cases,
            "top_in_family": self.top_in_family,
            "stability_checks": self.stability_checks,
            "transitivity_checks": self.transitivity_checks,
            "stability_counterexamples": [{"S": str(S), "n": n} for S, n in self.stability],
            "transitivity_counterexamples": [{"S": str(S), "R": str(R)} for S, R in self.transitivity],
            "clean": self.clean,
        }

    def render(self) -> str:
        lines = [
            f"family {self.family}: {self.cases} sampled members",
            f"  axiom 1 (top in family): {'ok' if self.top_in_family else 'VIOLATED'}",
            f"  stability: {self.stability_checks} checks, {len(self.stability)} counterexamples",
        ]
        lines += [f"    {S} . {n} leaves the family" for S, n in self.stability]
        lines.append(
            f"  transitivity: {self.transitivity_checks} checks, {len(self.transitivity)} counterexamples"
        )
        lines += [f"    S={S}, R={R}: orbit inside the family, R outside" for S, R in self.transitivity]
        return "\n".join(lines)


def random_sieve(rng: random.Random, max_gen: int, max_val: int) -> Sieve:
    k = rng.randint(1, max_gen)
    return normalize(rng.randint(1, max_val) for _ in range(k))


def _supported_value(rng: random.Random, primes: tuple[int, ...], max_val: int) -> int:
    value = 1
    for _ in range(rng.randint(0, 3)):
        p = rng.choice(primes)
        if value * p > max_val:
            break
        value *= p
    return value


def _sample_member(family, rng: random.Random, max_gen: int, max_val: int) -> Sieve:
    if isinstance(family, Table):
        return rng.choice(sorted(family.members, key=_sieve_key))
    if not family.primes:
        return ONE
    while True:
        gens = [rng.randint(1, max_val) for _ in range(rng.randint(0, max_gen - 1))]
        gens.append(_supported_value(rng, family.primes, max_val))
        S = normalize(gens)
        if S in family:
            return S


def _candidate_rs(S: Sieve, rng: random.Random, max_gen: int, max_val: int) -> list[Sieve]:
    """Random sieves plus sieves just below ``S``; the latter are where transitivity bites."""
    small_primes = (2, 3, 5, 7)
    out = [random_sieve(rng, max_gen, max_val)]
    g = rng.choice(S.generators)
    out.append(normalize([g * rng.choice(small_primes)]))
    out.append(normalize(x * rng.choice(small_primes) for x in S.generators))
    return out


def axiom_check(
    family: FamilySpec,
    cases: int = 200,
    seed: int = 0,
    max_gen: int = 3,
    max_val: int = 60,
    contains: Callable[[Sieve], bool] | None = None,
) -> AxiomReport:
    """Search for violations of the three topology axioms.

    Stability is tested for sampled ``n``; the transitivity premise
    ``R . S inside F`` is evaluated exactly through the finite orbit.
    """
    validate(family)
    inside = contains or (lambda S: S in family)
    rng = random.Random(seed)
    report = AxiomReport(family=str(family), cases=cases, top_in_family=inside(ONE))
    if isinstance(family, Table) and not family.members:
        return report
    for _ in range(cases):
        S = _sample_member(family, rng, max_gen, max_val)
        ns = {rng.randint(1, max_val), rng.choice(S.generators), rng.randint(1, 4 * max_val)}
        for n in sorted(ns):
            report.stability_checks += 1
            if not inside(act(S, n)) and (S, n) not in report.stability:
                report.stability.append((S, n))
        for R in _candidate_rs(S, rng, max_gen, max_val):
            report.transitivity_checks += 1
            if (S, R) in report.transitivity:
                continue
            if not inside(R) and all(inside(X) for X in orbit(R, S)):
                report.transitivity.append((S, R))
    return report


def upward_witness(S: Sieve, P: Iterable[int]) -> int | None:
    """A generator of ``S`` supported on ``P``, if any (the membership certificate for ``G_P``)."""
    allowed = frozenset(P)
    for g in S.generators:
        if arith.prime_support(g) <= allowed:
            return g
    return None


__all__ = ["AxiomReport", "FamilySpec", "GP", "Table", "axiom_check", "in_GP", "upward_witness", "validate"]

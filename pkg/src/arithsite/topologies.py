"""Topologies on supernatural numbers and on their classes.

* localic opens ``X_l(S) = {s : some generator of S divides s}`` on supernaturals;
* sieve opens ``X_s(S)`` and arithmetic opens ``X_a(P)`` on classes;
* the patch-constructible sets, i.e. boolean combinations of sieve opens,
  kept as formula trees with an exact emptiness test.

Sieve opens only see infinity-supports.  A class ``[s]`` lies in ``X_s(S)``
iff an infinite product of elements of ``S`` divides ``s``.  For finitely
generated ``S`` that happens iff some generator has all of its prime divisors
among the infinite exponents of ``s``: by pigeonhole one generator divides
infinitely many factors of such a product, so its infinite power divides
``s``; conversely one generator repeated forever gives the product.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Union

from . import arith
from .errors import InvalidInput, ResourceLimit
from .sieve import Sieve, gcd_of
from .supernatural import PrimeSetDesc, Supernatural, SupernaturalClass, s_divides, s_from_nat

DEFAULT_MAX_PRIMES = 20


def in_Xl(s: Supernatural, S: Sieve) -> bool:
    return any(s_divides(s_from_nat(g), s) for g in S.generators)


def in_Xs(c: SupernaturalClass, S: Sieve) -> bool:
    return any(c.inf_support.contains_all(arith.prime_support(g)) for g in S.generators)


def in_Xa(c: SupernaturalClass, P: Iterable[int]) -> bool:
    return not c.inf_support.meets(P)


# -- constructible sets -----------------------------------------------------


@dataclass(frozen=True)
class Const:
    """The whole class space or the empty set, written as the opens they equal."""

    value: bool

    def __str__(self) -> str:
        return "Xs<1>" if self.value else "Xs<>"


@dataclass(frozen=True)
class Atom:
    """The sieve open ``X_s(sieve)``."""

    sieve: Sieve

    def __str__(self) -> str:
        return f"Xs{self.sieve}"


@dataclass(frozen=True)
class Not:
    arg: "Constructible"

    def __str__(self) -> str:
        return "!" + _wrap(self.arg, Not)


@dataclass(frozen=True)
class And:
    args: tuple["Constructible", ...]

    def __str__(self) -> str:
        return " & ".join(_wrap(a, And) for a in self.args)


@dataclass(frozen=True)
class Or:
    args: tuple["Constructible", ...]

    def __str__(self) -> str:
        return " | ".join(_wrap(a, Or) for a in self.args)


Constructible = Union[Const, Atom, Not, And, Or]

TRUE = Const(True)
FALSE = Const(False)

_BINDING = {Or: 1, And: 2, Not: 3, Atom: 4, Const: 4}


def _wrap(child: Constructible, parent: type) -> str:
    text = str(child)
    if _BINDING[type(child)] <= _BINDING[parent] and type(child) is not Not:
        return f"({text})"
    return text


def atom(S: Sieve) -> Constructible:
    if S.is_zero:
        return FALSE
    if S.is_one:
        return TRUE
    return Atom(S)


def c_not(C: Constructible) -> Constructible:
    if isinstance(C, Const):
        return Const(not C.value)
    if isinstance(C, Not):
        return C.arg
    return Not(C)


def _nary(kind: type, absorbing: bool, args: Iterable[Constructible]) -> Constructible:
    flat: list[Constructible] = []
    for a in args:
        parts = a.args if isinstance(a, kind) else (a,)
        for part in parts:
            if isinstance(part, Const):
                if part.value is absorbing:
                    return part
                continue
            if part not in flat:
                flat.append(part)
    if not flat:
        return Const(not absorbing)
    if len(flat) == 1:
        return flat[0]
    return kind(tuple(flat))


def c_and(*args: Constructible) -> Constructible:
    return _nary(And, False, args)


def c_or(*args: Constructible) -> Constructible:
    return _nary(Or, True, args)


def c_build(kind: str, *args) -> Constructible:
    """Build a formula node by connective name, folding constants."""
    kind = kind.upper()
    if kind == "ATOM":
        (S,) = args
        return atom(S)
    if kind in ("TRUE", "FALSE"):
        if args:
            raise InvalidInput(f"{kind} takes no arguments")
        return Const(kind == "TRUE")
    if kind == "NOT":
        if len(args) != 1:
            raise InvalidInput("NOT is unary")
        return c_not(args[0])
    if kind == "AND":
        return c_and(*args)
    if kind == "OR":
        return c_or(*args)
    raise InvalidInput(f"unknown connective {kind!r}")


def xa(P: Iterable[int]) -> Constructible:
    """``X_a(P)`` as the complement of the sieve open generated by ``P``."""
    primes = sorted(set(P))
    for p in primes:
        arith.require_prime(p)
    return c_not(atom(Sieve.of(*primes)))


def atoms(C: Constructible) -> set[Sieve]:
    if isinstance(C, Atom):
        return {C.sieve}
    if isinstance(C, Const):
        return set()
    if isinstance(C, Not):
        return atoms(C.arg)
    return set().union(*(atoms(a) for a in C.args))


def relevant_primes(*formulas: Constructible) -> list[int]:
    primes: set[int] = set()
    for C in formulas:
        for S in atoms(C):
            for g in S.generators:
                primes |= arith.prime_support(g)
    return sorted(primes)


def c_member(c: SupernaturalClass, C: Constructible) -> bool:
    if isinstance(C, Const):
        return C.value
    if isinstance(C, Atom):
        return in_Xs(c, C.sieve)
    if isinstance(C, Not):
        return not c_member(c, C.arg)
    if isinstance(C, And):
        return all(c_member(c, a) for a in C.args)
    return any(c_member(c, a) for a in C.args)


# The decision procedure evaluates a formula at every subset I of the
# relevant primes simultaneously: bit number I of a truth table (an int of
# 2**n bits, subsets encoded as bitmasks) holds the formula's value at any
# class whose infinity-support meets the relevant primes exactly in I.


@lru_cache(maxsize=None)
def _contains_bit(n: int, b: int) -> int:
    """Truth table of ``b in I`` over all subsets ``I`` of ``n`` indexed primes."""
    width = 1 << b
    block = ((1 << width) - 1) << width
    period = width << 1
    reps = ((1 << (1 << n)) - 1) // ((1 << period) - 1)
    return block * reps


def _table(C: Constructible, index: dict[int, int], n: int, full: int) -> int:
    if isinstance(C, Const):
        return full if C.value else 0
    if isinstance(C, Atom):
        out = 0
        for g in C.sieve.generators:
            out |= reduce(operator.and_, (_contains_bit(n, index[p]) for p in arith.prime_support(g)), full)
        return out
    if isinstance(C, Not):
        return full ^ _table(C.arg, index, n, full)
    tables = (_table(a, index, n, full) for a in C.args)
    if isinstance(C, And):
        return reduce(operator.and_, tables, full)
    return reduce(operator.or_, tables, 0)


def truth_table(C: Constructible, primes: list[int], max_primes: int = DEFAULT_MAX_PRIMES) -> int:
    if len(primes) > max_primes:
        raise ResourceLimit(f"{len(primes)} relevant primes exceed the budget of {max_primes}")
    n = len(primes)
    return _table(C, {p: i for i, p in enumerate(primes)}, n, (1 << (1 << n)) - 1)


def c_is_empty(C: Constructible, max_primes: int = DEFAULT_MAX_PRIMES) -> bool:
    """Decide whether no point of the class space lies in ``C``.

    Atom truth depends only on the infinity-support intersected with the
    relevant primes ``R``, and every subset of ``R`` is the infinity-support
    of a representable class, so checking all ``2^|R|`` subsets is exact.
    """
    return truth_table(C, relevant_primes(C), max_primes) == 0


def c_equal(C: Constructible, D: Constructible, max_primes: int = DEFAULT_MAX_PRIMES) -> bool:
    return c_is_empty(c_or(c_and(C, c_not(D)), c_and(D, c_not(C))), max_primes)


def c_leq(C: Constructible, D: Constructible, max_primes: int = DEFAULT_MAX_PRIMES) -> bool:
    return c_is_empty(c_and(C, c_not(D)), max_primes)


def witness(C: Constructible, max_primes: int = DEFAULT_MAX_PRIMES) -> SupernaturalClass | None:
    """Some class in ``C``, or None when ``C`` is empty."""
    primes = relevant_primes(C)
    table = truth_table(C, primes, max_primes)
    if not table:
        return None
    mask = (table & -table).bit_length() - 1
    return SupernaturalClass(PrimeSetDesc.finite(p for i, p in enumerate(primes) if mask >> i & 1))


def preimage_i(P: Iterable[int]) -> int:
    """``i^{-1}(X_a(P))`` is the Zariski open ``X_Z(prod P)``; returns ``prod P``."""
    primes = sorted(set(P))
    if not primes:
        raise InvalidInput("preimage_i needs a nonempty prime set")
    for p in primes:
        arith.require_prime(p)
    return arith.checked_product(primes)


def preimage_j(S: Sieve) -> int:
    """``j^{-1}(X_s(S))`` is the Zariski open ``X_Z(gcd S)``; returns ``gcd S``."""
    return gcd_of(S)


def zariski_contains(n: int, q: int) -> bool:
    """Whether the prime ``q`` lies in ``X_Z(n) = {q : q does not divide n}``."""
    return n % q != 0


__all__ = [
    "And",
    "Atom",
    "Const",
    "Constructible",
    "FALSE",
    "Not",
    "Or",
    "TRUE",
    "atom",
    "c_and",
    "c_build",
    "c_equal",
    "c_is_empty",
    "c_leq",
    "c_member",
    "c_not",
    "c_or",
    "in_Xa",
    "in_Xl",
    "in_Xs",
    "preimage_i",
    "preimage_j",
    "relevant_primes",
    "truth_table",
    "witness",
    "xa",
    "zariski_contains",
]

"""Seeded property suites over every module.

Each suite draws random instances from a ``random.Random`` seeded with the
suite name and the user seed, checks a list of named laws, and records
counterexamples as expression-language literals.  Identical seed and budget
give byte-identical reports.
"""

from __future__ import annotations

import contextlib
import itertools
import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterator

import numpy as np

from . import arith, bigcell, grothendieck, sampling, sheaves, skew, supernatural
from . import sieve as om
from . import topologies as top
from .sieve import ONE, ZERO, Sieve

SUITES = (
    "heyting",
    "oracle",
    "action",
    "grothendieck",
    "topologies",
    "sheaves",
    "skew-frame",
    "skew-heyting",
    "bigcell",
)


@dataclass(frozen=True)
class Budget:
    cases: int = 200
    max_gen: int = 4
    max_val: int = 60
    max_primes: int = top.DEFAULT_MAX_PRIMES


DEFAULT_BUDGETS = {
    "heyting": Budget(cases=1000, max_gen=4, max_val=60),
    "oracle": Budget(cases=500, max_gen=4, max_val=60),
    "action": Budget(cases=300, max_gen=4, max_val=60),
    "grothendieck": Budget(cases=200, max_gen=3, max_val=60),
    "topologies": Budget(cases=300, max_gen=3, max_val=60),
    "sheaves": Budget(cases=200, max_gen=3, max_val=60),
    "skew-frame": Budget(cases=500, max_gen=3, max_val=30),
    "skew-heyting": Budget(cases=500, max_gen=3, max_val=30),
    "bigcell": Budget(cases=200, max_gen=3, max_val=12),
}


@dataclass
class LawResult:
    name: str
    cases: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class SuiteReport:
    suite: str
    seed: int
    budget: Budget
    laws: list[LawResult]

    @property
    def violations(self) -> int:
        return sum(len(law.violations) for law in self.laws)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def law(self, name: str) -> LawResult:
        for law in self.laws:
            if law.name == name:
                return law
        raise KeyError(name)

    def render(self, max_examples: int = 3) -> str:
        b = self.budget
        lines = [
            f"suite {self.suite} (seed {self.seed}, cases {b.cases}, max-gen {b.max_gen}, "
            f"max-val {b.max_val}, max-primes {b.max_primes})"
        ]
        for law in self.laws:
            tag = "ok  " if law.ok else "FAIL"
            lines.append(f"  [{tag}] {law.name}: {law.cases} cases, {len(law.violations)} violations")
            for v in law.violations[:max_examples]:
                lines.append(f"         counterexample: {v}")
            if len(law.violations) > max_examples:
                lines.append(f"         ... {len(law.violations) - max_examples} more")
        lines.append(f"  total: {len(self.laws)} laws, {self.violations} violations")
        return "\n".join(lines)

    def as_record(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "budget": vars(self.budget) if not hasattr(self.budget, "__dataclass_fields__") else {
                k: getattr(self.budget, k) for k in self.budget.__dataclass_fields__
            },
            "violations": self.violations,
            "laws": [
                {"name": law.name, "cases": law.cases, "violations": law.violations} for law in self.laws
            ],
        }


class _Laws:
    """Accumulates law results in first-use order."""

    def __init__(self) -> None:
        self.results: dict[str, LawResult] = {}

    def check(self, name: str, holds: bool, witness: Callable[[], str] | str = "") -> None:
        result = self.results.setdefault(name, LawResult(name))
        result.cases += 1
        if not holds:
            result.violations.append(witness() if callable(witness) else witness)

    def declare(self, *names: str) -> None:
        for name in names:
            self.results.setdefault(name, LawResult(name))

    def finish(self) -> list[LawResult]:
        return list(self.results.values())


def _fmt(**values) -> str:
    return "; ".join(f"{k}={v}" for k, v in values.items())


# -- heyting ----------------------------------------------------------------


def _heyting(rng: random.Random, b: Budget, laws: _Laws) -> None:
    laws.declare(
        "meet-associative",
        "join-associative",
        "commutative",
        "idempotent",
        "units",
        "absorption",
        "distributive",
        "order-characterization",
        "adjunction",
        "double-negation-inflationary",
        "negation-case-formula",
        "barr-double-negation",
    )
    meet, join, implies, leq, neg = om.meet, om.join, om.implies, om.leq, om.neg
    for _ in range(b.cases):
        x, y, z = (sampling.sieve(rng, b.max_gen, b.max_val) for _ in range(3))
        w = lambda: _fmt(x=x, y=y, z=z)
        laws.check("meet-associative", meet(x, meet(y, z)) == meet(meet(x, y), z), w)
        laws.check("join-associative", join(x, join(y, z)) == join(join(x, y), z), w)
        laws.check("commutative", meet(x, y) == meet(y, x) and join(x, y) == join(y, x), w)
        laws.check("idempotent", meet(x, x) == x and join(x, x) == x, w)
        laws.check("units", meet(ONE, x) == x and join(ZERO, x) == x, w)
        laws.check("absorption", meet(x, join(y, x)) == x == join(meet(x, y), x), w)
        laws.check(
            "distributive",
            meet(x, join(y, z)) == join(meet(x, y), meet(x, z))
            and join(x, meet(y, z)) == meet(join(x, y), join(x, z)),
            w,
        )
        laws.check("order-characterization", leq(x, y) == (x == meet(x, y)) == (y == join(x, y)), w)
        laws.check("adjunction", leq(meet(x, y), z) == leq(x, implies(y, z)), w)
        laws.check("double-negation-inflationary", leq(x, neg(neg(x))), w)
        expected = ONE if not x.generators else ZERO
        laws.check("negation-case-formula", neg(x) == expected == implies(x, ZERO), w)
        S = sampling.nonzero_sieve(rng, b.max_gen, b.max_val)
        T = join(S, y) if rng.random() < 0.8 else ZERO
        laws.check(
            "barr-double-negation",
            om.relative_double_neg(T, S) == (ZERO if T == ZERO else ONE),
            lambda: _fmt(T=T, S=S),
        )


# -- oracle -----------------------------------------------------------------

ORACLE_LIMIT = 5000
ORACLE_ACTIONS = 30


def multiples_mask(gens, limit: int) -> np.ndarray:
    """Boolean array ``a`` with ``a[n]`` true iff some generator divides ``n`` (``a[0]`` unused)."""
    mask = np.zeros(limit + 1, dtype=bool)
    for g in gens:
        mask[g::g] = True
    mask[0] = False
    return mask


def _oracle(rng: random.Random, b: Budget, laws: _Laws) -> None:
    """Membership in each operation's result against set algebra on multiple-sets.

    The implication oracle scans multiples: ``n`` is in ``S -> T`` iff no
    ``n k`` lies in ``S`` but not in ``T``.  If some ``n k`` does, then so does
    ``n k'`` with ``k' = g / gcd(g, n)`` for a generator ``g`` of ``S``
    dividing ``n k``, so ``k <= max generator of S`` suffices.
    """
    laws.declare("join-membership", "meet-membership", "implies-membership", "act-membership")
    N = ORACLE_LIMIT
    idx = np.arange(1, N + 1)
    for _ in range(b.cases):
        S = sampling.sieve(rng, b.max_gen, b.max_val)
        T = sampling.sieve(rng, b.max_gen, b.max_val)
        w = lambda: _fmt(S=S, T=T)
        kmax = max(S.generators, default=1)
        ext = N * max(kmax, ORACLE_ACTIONS)
        inS = multiples_mask(S.generators, ext)
        inT = multiples_mask(T.generators, ext)
        laws.check(
            "join-membership",
            np.array_equal(multiples_mask(om.join(S, T).generators, N)[1:], inS[1 : N + 1] | inT[1 : N + 1]),
            w,
        )
        laws.check(
            "meet-membership",
            np.array_equal(multiples_mask(om.meet(S, T).generators, N)[1:], inS[1 : N + 1] & inT[1 : N + 1]),
            w,
        )
        bad = np.zeros(N, dtype=bool)
        for k in range(1, kmax + 1):
            bad |= inS[idx * k] & ~inT[idx * k]
        laws.check(
            "implies-membership",
            np.array_equal(multiples_mask(om.implies(S, T).generators, N)[1:], ~bad),
            w,
        )
        for m in range(1, ORACLE_ACTIONS + 1):
            laws.check(
                "act-membership",
                np.array_equal(multiples_mask(om.act(S, m).generators, N)[1:], inS[idx * m]),
                lambda: _fmt(S=S, n=m),
            )


# -- action -----------------------------------------------------------------

ORBIT_SAMPLE_LIMIT = 60000


def orbit_by_sampling(R: Sieve, S: Sieve, bound: int) -> frozenset[Sieve]:
    """``{R . s : s in S, s <= bound}`` by direct enumeration."""
    found = set()
    for s in range(1, bound + 1):
        if om.member(s, S):
            found.add(om.act(R, s))
    return frozenset(found)


def _action(rng: random.Random, b: Budget, laws: _Laws) -> None:
    laws.declare("act-composition", "act-monotone", "act-identity", "order-coherence", "orbit-exact")
    for _ in range(b.cases):
        S = sampling.sieve(rng, b.max_gen, b.max_val)
        U = sampling.sieve(rng, b.max_gen, b.max_val)
        m, n = rng.randint(1, b.max_val), rng.randint(1, b.max_val)
        laws.check(
            "act-composition",
            om.act(om.act(S, m), n) == om.act(S, m * n),
            lambda: _fmt(S=S, m=m, n=n),
        )
        T = om.join(S, U)
        laws.check("act-monotone", om.leq(om.act(S, n), om.act(T, n)), lambda: _fmt(S=S, T=T, n=n))
        laws.check("act-identity", om.act(S, 1) == S, lambda: _fmt(S=S))
        laws.check(
            "order-coherence",
            om.leq(S, U) == (om.meet(S, U) == S) == (om.join(S, U) == U),
            lambda: _fmt(S=S, T=U),
        )
        while True:
            R = sampling.sieve(rng, 2, 30)
            V = sampling.nonzero_sieve(rng, 2, 30)
            bound = 10 * arith.lcm_all(R.generators + V.generators)
            if bound <= ORBIT_SAMPLE_LIMIT:
                break
        laws.check(
            "orbit-exact",
            om.orbit(R, V) == orbit_by_sampling(R, V, bound),
            lambda: _fmt(R=R, S=V),
        )


# -- grothendieck -----------------------------------------------------------


def _grothendieck(rng: random.Random, b: Budget, laws: _Laws) -> None:
    laws.declare(
        "gp-axioms",
        "chaotic-axioms",
        "broken-table-refuted",
        "prime-action-identity",
        "gp-upward-closed",
        "gp-witness",
        "g-empty-is-chaotic",
    )
    pool = sampling.SMALL_PRIMES[:6]
    for trial in range(5):
        P = sorted(rng.sample(pool, rng.randint(1, 3)))
        report = grothendieck.axiom_check(
            grothendieck.GP(tuple(P)), b.cases, rng.randrange(2**31), b.max_gen, b.max_val
        )
        laws.check("gp-axioms", report.clean, lambda: report.render())
    chaotic = grothendieck.axiom_check(grothendieck.Table({ONE}), b.cases, rng.randrange(2**31))
    laws.check("chaotic-axioms", chaotic.clean, lambda: chaotic.render())
    broken = grothendieck.axiom_check(
        grothendieck.Table({ONE, Sieve.of(2)}), b.cases, rng.randrange(2**31)
    )
    laws.check("broken-table-refuted", not broken.clean, "TABLE{<1>, <2>} was not refuted")

    for _ in range(b.cases):
        m = rng.randint(1, 1000)
        p = rng.choice(sampling.SMALL_PRIMES[:6])
        Sm = Sieve.of(m)
        expected = Sieve.of(m // p) if m % p == 0 else Sm
        orb = om.orbit(Sm, Sieve.of(p))
        # divisors d of m with p | d when p | m, all divisors otherwise
        brute = frozenset(
            Sieve.of(m // d) for d in range(1, m + 1) if m % d == 0 and (m % p or d % p == 0)
        )
        least = [X for X in orb if all(om.leq(X, Y) for Y in orb)]
        laws.check(
            "prime-action-identity",
            om.act(Sm, p) == expected and orb == brute and least == [expected],
            lambda: _fmt(m=m, p=p),
        )

        P = sampling.prime_set(rng, pool, 3)
        S = sampling.sieve(rng, b.max_gen, b.max_val)
        S2 = om.join(S, sampling.sieve(rng, b.max_gen, b.max_val))
        laws.check(
            "gp-upward-closed",
            not grothendieck.in_GP(S, P) or grothendieck.in_GP(S2, P),
            lambda: _fmt(S=S, S2=S2, P="{" + ",".join(map(str, P)) + "}"),
        )
        brute_member = any(
            om.member(k, S) and arith.prime_support(k) <= set(P) for k in range(1, 1001)
        )
        laws.check(
            "gp-witness",
            grothendieck.in_GP(S, P) == brute_member == (grothendieck.upward_witness(S, P) is not None),
            lambda: _fmt(S=S, P="{" + ",".join(map(str, P)) + "}"),
        )
        laws.check("g-empty-is-chaotic", grothendieck.in_GP(S, ()) == (S == ONE), lambda: _fmt(S=S))


# -- topologies -------------------------------------------------------------

PRIMES_BELOW_100 = arith.primes_below(100)


def classes_over(primes: list[int]) -> Iterator[supernatural.SupernaturalClass]:
    """Every class whose infinity-support meets ``primes`` in each possible subset, in both modes."""
    for r in range(len(primes) + 1):
        for I in itertools.combinations(primes, r):
            yield supernatural.SupernaturalClass(supernatural.PrimeSetDesc.finite(I))
            rest = [p for p in primes if p not in I]
            yield supernatural.SupernaturalClass(supernatural.PrimeSetDesc.cofinite(rest))


def _topologies(rng: random.Random, b: Budget, laws: _Laws) -> None:
    laws.declare(
        "j-preimage",
        "i-preimage",
        "xa-closed-in-sieve-topology",
        "frame-meet",
        "frame-join",
        "density",
        "decision-exhaustive",
        "class-invariance",
    )
    mp = b.max_primes
    for _ in range(b.cases):
        S = sampling.nonzero_sieve(rng, b.max_gen, b.max_val)
        n = top.preimage_j(S)
        laws.check(
            "j-preimage",
            all(top.in_Xs(supernatural.j_point(q), S) == top.zariski_contains(n, q) for q in PRIMES_BELOW_100),
            lambda: _fmt(S=S),
        )
    first5 = arith.first_primes(5)
    for r in range(1, 6):
        for P in itertools.combinations(first5, r):
            n = top.preimage_i(P)
            laws.check(
                "i-preimage",
                all(top.in_Xa(supernatural.i_point(q), P) == top.zariski_contains(n, q) for q in PRIMES_BELOW_100),
                lambda: "P={" + ",".join(map(str, P)) + "}",
            )
    for _ in range(b.cases):
        c = sampling.klass(rng)
        P = sampling.prime_set(rng)
        laws.check(
            "xa-closed-in-sieve-topology",
            top.in_Xa(c, P) == (not top.in_Xs(c, Sieve.of(*P))),
            lambda: _fmt(c=c, P="{" + ",".join(map(str, P)) + "}"),
        )
        S = sampling.sieve(rng, b.max_gen, b.max_val)
        T = sampling.sieve(rng, b.max_gen, b.max_val)
        w = lambda: _fmt(S=S, T=T)
        laws.check(
            "frame-meet",
            top.c_equal(top.atom(om.meet(S, T)), top.c_and(top.atom(S), top.atom(T)), mp),
            w,
        )
        laws.check(
            "frame-join",
            top.c_equal(top.atom(om.join(S, T)), top.c_or(top.atom(S), top.atom(T)), mp),
            w,
        )
        S1 = sampling.nonzero_sieve(rng, b.max_gen, b.max_val)
        T1 = sampling.nonzero_sieve(rng, b.max_gen, b.max_val)
        both = top.c_and(top.atom(S1), top.atom(T1))
        everything = supernatural.SupernaturalClass(supernatural.PrimeSetDesc.cofinite())
        laws.check(
            "density",
            not top.c_is_empty(both, mp) and top.c_member(everything, both),
            lambda: _fmt(S=S1, T=T1),
        )
        s = sampling.supernatural(rng)
        k = rng.randint(1, b.max_val)
        laws.check(
            "class-invariance",
            supernatural.class_of(supernatural.s_mul(s, supernatural.s_from_nat(k))) == supernatural.class_of(s),
            lambda: _fmt(s=s, n=k),
        )
    pool = arith.first_primes(8)
    for _ in range(b.cases):
        primes = sorted(rng.sample(pool, rng.randint(1, 8)))
        C = sampling.formula_over(rng, rng.randint(1, 4), primes, 200)
        R = top.relevant_primes(C)
        exhaustive = not any(top.c_member(c, C) for c in classes_over(R))
        laws.check("decision-exhaustive", top.c_is_empty(C, mp) == exhaustive, lambda: f"C={C}")


# -- sheaves ----------------------------------------------------------------


def _test_rationals(limit: int) -> list[Fraction]:
    return [Fraction(1, d) for d in range(1, limit + 1)]


def _included(A: sheaves.DenominatorSpec, B: sheaves.DenominatorSpec, qs: list[Fraction]) -> bool:
    return all(sheaves.contains_rational(B, q) for q in qs if sheaves.contains_rational(A, q))


def _sheaves(rng: random.Random, b: Budget, laws: _Laws) -> None:
    laws.declare(
        "local-ring-at-i-point",
        "local-ring-at-j-point",
        "sections-j-monotone",
        "stalk-j-colimit",
        "stalk-i-colimit",
        "i-j-stalks-agree",
    )
    qs = _test_rationals(1000)
    q2 = sheaves.stalk_i(supernatural.i_point(2))
    q5 = sheaves.stalk_j(supernatural.j_point(5))
    has = sheaves.contains_rational
    laws.check(
        "local-ring-at-i-point",
        has(q2, Fraction(1, 3)) and has(q2, Fraction(5, 7)) and not has(q2, Fraction(1, 2)),
        "stalk i class(sn(2^inf))",
    )
    laws.check(
        "local-ring-at-j-point",
        has(q5, Fraction(1, 2)) and has(q5, Fraction(1, 3)) and not has(q5, Fraction(1, 5)),
        "stalk j class(sn(all^inf / 5^0))",
    )
    for _ in range(b.cases):
        S = sampling.nonzero_sieve(rng, b.max_gen, b.max_val)
        T = om.join(S, sampling.sieve(rng, b.max_gen, b.max_val))
        laws.check(
            "sections-j-monotone",
            om.gcd_of(S) % om.gcd_of(T) == 0 and _included(sheaves.sections_j(T), sheaves.sections_j(S), qs),
            lambda: _fmt(S=S, T=T),
        )
        c = sampling.klass(rng)
        opens = [U for U in (sampling.nonzero_sieve(rng, b.max_gen, b.max_val) for _ in range(4)) if top.in_Xs(c, U)]
        laws.check(
            "stalk-j-colimit",
            all(_included(sheaves.sections_j(U), sheaves.stalk_j(c), qs) for U in opens),
            lambda: _fmt(c=c, opens="{" + ", ".join(map(str, opens)) + "}"),
        )
        P = sampling.prime_set(rng)
        if top.in_Xa(c, P):
            laws.check(
                "stalk-i-colimit",
                _included(sheaves.sections_i(P), sheaves.stalk_i(c), qs),
                lambda: _fmt(c=c, P="{" + ",".join(map(str, P)) + "}"),
            )
        p = rng.choice(PRIMES_BELOW_100)
        a = sheaves.stalk_i(supernatural.i_point(p))
        bj = sheaves.stalk_j(supernatural.j_point(p))
        laws.check(
            "i-j-stalks-agree",
            all(has(a, q) == has(bj, q) for q in qs),
            lambda: _fmt(p=p),
        )


# -- skew -------------------------------------------------------------------


def _skew_frame(rng: random.Random, b: Budget, laws: _Laws) -> None:
    names = [f"axiom-{i}" for i in range(1, 14)]
    laws.declare(
        *names,
        "order-coherence",
        "commutation-meet",
        "commutation-join",
        "leech-congruence",
        "shadow-homomorphism",
        "embedding-homomorphism",
    )
    m, j = skew.t_meet, skew.t_join
    O = skew.BOTTOM
    for _ in range(b.cases):
        x, y, z = (sampling.theta(rng, b.max_gen, b.max_val) for _ in range(3))
        w = lambda: _fmt(x=x, y=y, z=z)
        chk = laws.check
        chk("axiom-1", m(x, m(y, z)) == m(m(x, y), z), w)
        chk("axiom-2", j(x, j(y, z)) == j(j(x, y), z), w)
        chk("axiom-3", m(x, x) == x, w)
        chk("axiom-4", j(x, x) == x, w)
        chk("axiom-5", m(x, j(x, y)) == x == j(x, m(x, y)), w)
        chk("axiom-6", m(j(y, x), x) == x == j(m(y, x), x), w)
        chk("axiom-7", m(x, O) == O == m(O, x), w)
        chk("axiom-8", j(x, O) == x == j(O, x), w)
        chk("axiom-9", m(x, j(y, z)) == j(m(x, y), m(x, z)), w)
        chk("axiom-10", m(j(y, z), x) == j(m(y, x), m(z, x)), w)
        chk("axiom-11", m(m(x, y), x) == m(x, y), w)
        chk("axiom-12", j(j(x, y), x) == j(y, x), w)
        chk("axiom-13", m(m(x, y), z) == m(m(x, z), y), w)

        leq = skew.t_leq(x, y)
        chk(
            "order-coherence",
            leq == (m(x, y) == x == m(y, x)) == (j(x, y) == y == j(y, x)),
            w,
        )
        c = skew.commutes(x, y)
        chk("commutation-meet", (m(x, y) == m(y, x)) == c, w)
        chk("commutation-join", (j(x, y) == j(y, x)) == c, w)
        # x ~ y iff x y x = x and y x y = y
        equiv = m(m(x, y), x) == x and m(m(y, x), y) == y
        x2 = skew.Fluctuation(x.domain, z.support)
        chk(
            "leech-congruence",
            equiv == skew.t_equiv(x, y)
            and skew.t_equiv(m(x, y), m(x2, y))
            and skew.t_equiv(j(x, y), j(x2, y))
            and skew.t_equiv(m(y, x), m(y, x2))
            and skew.t_equiv(j(y, x), j(y, x2)),
            w,
        )
        chk(
            "shadow-homomorphism",
            skew.shadow(m(x, y)) == om.meet(skew.shadow(x), skew.shadow(y))
            and skew.shadow(j(x, y)) == om.join(skew.shadow(x), skew.shadow(y)),
            w,
        )
        S, T = x.domain, y.domain
        E = skew.embed_omega
        chk(
            "embedding-homomorphism",
            E(om.meet(S, T)) == m(E(S), E(T)) and E(om.join(S, T)) == j(E(S), E(T)) and skew.shadow(E(S)) == S,
            lambda: _fmt(S=S, T=T),
        )


def _skew_heyting(rng: random.Random, b: Budget, laws: _Laws) -> None:
    laws.declare(
        "condition-1",
        "condition-3",
        "condition-4",
        "condition-5",
        "condition-5-inner-domain",
        "self-implication-rule",
    )
    m, j, imp = skew.t_meet, skew.t_join, skew.t_implies
    for _ in range(b.cases):
        x, y, z, u = (sampling.theta(rng, b.max_gen, b.max_val) for _ in range(4))
        w = lambda: _fmt(x=x, y=y)
        laws.check("condition-1", imp(x, y) == imp(j(j(y, x), y), y), w)
        laws.check("condition-3", m(m(x, imp(x, y)), x) == m(m(x, y), x), w)
        laws.check("condition-4", m(y, imp(x, y)) == y and m(imp(x, y), y) == y, w)
        lhs = imp(x, j(j(u, m(y, z)), u))
        rhs = m(imp(x, j(j(u, y), u)), imp(x, j(j(u, z), u)))
        laws.check("condition-5", lhs == rhs, lambda: _fmt(x=x, y=y, z=z, u=u))
        # The two sides of (5) always agree on X_s(U v (T /\ Z)); they can
        # differ on the rest of the common domain, where the left side is
        # extended by truth and the right side keeps y.
        inner = om.join(u.domain, om.meet(y.domain, z.domain))
        laws.check(
            "condition-5-inner-domain",
            lhs.domain == rhs.domain and skew.restrict(lhs, inner) == skew.restrict(rhs, inner),
            lambda: _fmt(x=x, y=y, z=z, u=u),
        )
        outside = top.c_not(top.atom(x.domain))
        laws.check(
            "self-implication-rule",
            imp(x, x) == skew.Fluctuation(ONE, top.c_or(x.support, outside)),
            lambda: _fmt(x=x),
        )


# -- bigcell ----------------------------------------------------------------


def _bigcell(rng: random.Random, b: Budget, laws: _Laws) -> None:
    laws.declare(
        "hyperdistance-symmetric",
        "hyperdistance-one-iff-equal",
        "integer-closed-form",
        "neighbors-prime-distance",
        "truncation-is-point",
        "truncation-monotone",
    )
    for _ in range(b.cases):
        L, L2 = sampling.rational_lattice(rng, b.max_val), sampling.rational_lattice(rng, b.max_val)
        if rng.random() < 0.2:
            L2 = L
        d = bigcell.hyperdistance(L, L2)
        w = lambda: f"hyperdistance {L} {L2}"
        laws.check("hyperdistance-symmetric", d == bigcell.hyperdistance(L2, L) and d >= 1, w)
        laws.check("hyperdistance-one-iff-equal", (d == 1) == (L == L2), w)
    for M in range(1, 51):
        for N in range(1, 51):
            g = math.gcd(M, N)
            laws.check(
                "integer-closed-form",
                bigcell.hyperdistance(bigcell.integer_lattice(M), bigcell.integer_lattice(N)) == M * N // (g * g),
                lambda: f"hyperdistance ({M}, 0) ({N}, 0)",
            )
    for M in range(1, 13):
        neighbors = bigcell.bigcell_neighbors(M, 50)
        expected = [N for N in range(1, 51) if arith.is_prime(M * N // math.gcd(M, N) ** 2)]
        laws.check("neighbors-prime-distance", neighbors == expected and M not in neighbors, lambda: f"M={M}")
    for _ in range(min(b.cases, 100)):
        s = sampling.supernatural(rng)
        t = bigcell.divisor_truncation(s, 200)
        laws.check("truncation-is-point", bigcell.is_point_truncation(t), lambda: f"divisors {s} --bound 200")
        smaller = bigcell.divisor_truncation(s, 100)
        laws.check(
            "truncation-monotone",
            set(smaller.members) <= set(t.members) and [n for n in t.members if n <= 100] == list(smaller.members),
            lambda: f"s={s}",
        )


_RUNNERS = {
    "heyting": _heyting,
    "oracle": _oracle,
    "action": _action,
    "grothendieck": _grothendieck,
    "topologies": _topologies,
    "sheaves": _sheaves,
    "skew-frame": _skew_frame,
    "skew-heyting": _skew_heyting,
    "bigcell": _bigcell,
}


def resolve_budget(name: str, cases=None, max_gen=None, max_val=None, max_primes=None) -> Budget:
    base = DEFAULT_BUDGETS[name]
    overrides = {
        k: v
        for k, v in dict(cases=cases, max_gen=max_gen, max_val=max_val, max_primes=max_primes).items()
        if v is not None
    }
    return replace(base, **overrides)


def run_suite(name: str, seed: int = 42, budget: Budget | None = None) -> SuiteReport:
    if name not in _RUNNERS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    budget = budget or DEFAULT_BUDGETS[name]
    rng = random.Random(f"{name}:{seed}")
    laws = _Laws()
    _RUNNERS[name](rng, budget, laws)
    return SuiteReport(name, seed, budget, laws.finish())


# -- mutation injection -----------------------------------------------------


def _meet_gcd(S: Sieve, T: Sieve) -> Sieve:
    return om.normalize(math.gcd(n, m) for n in S.generators for m in T.generators)


def _act_mul(S: Sieve, n: int) -> Sieve:
    return om.normalize(g * n for g in S.generators)


def _join_drop(S: Sieve, T: Sieve) -> Sieve:
    return om.normalize(S.generators + T.generators[1:])


MUTATIONS = {
    "meet-gcd": ("meet", _meet_gcd),
    "act-mul": ("act", _act_mul),
    "join-drop": ("join", _join_drop),
}


@contextlib.contextmanager
def mutated(name: str):
    """Temporarily swap a sieve operation for a broken one, to show the suites catch it."""
    attr, fn = MUTATIONS[name]
    original = getattr(om, attr)
    setattr(om, attr, fn)
    try:
        yield
    finally:
        setattr(om, attr, original)

"""Brute-force oracles, independent of the package's algorithms.

Sieves are modelled as explicit sets of multiples up to a bound, supernatural
numbers as explicit exponent tables, lattices as rational matrices.  Running
this file regenerates ``data/derived.json``; the tests compare both the
package and these oracles against the frozen file.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

FROZEN = Path(__file__).parent / "data" / "derived.json"
BOUND = 1000
INF = "inf"


def small_primes(limit: int = 100) -> list[int]:
    return [p for p in range(2, limit) if all(p % d for d in range(2, int(p**0.5) + 1))]


# -- sieves as multiple sets ------------------------------------------------


def multiples(gens, bound: int = BOUND) -> set[int]:
    return {n for n in range(1, bound + 1) if any(n % g == 0 for g in gens)}


def minimal(elements: set[int]) -> list[int]:
    """The divisibility-minimal elements, i.e. the generators of the set's up-closure."""
    return sorted(n for n in elements if not any(d != n and n % d == 0 for d in elements))


def normalize(gens) -> list[int]:
    return minimal(multiples(gens))


def member(n: int, gens) -> bool:
    return n in multiples(gens, max(n, 1))


def leq(S, T) -> bool:
    return multiples(S) <= multiples(T)


def join(S, T) -> list[int]:
    return minimal(multiples(S) | multiples(T))


def meet(S, T) -> list[int]:
    return minimal(multiples(S) & multiples(T))


def implies(S, T, bound: int = 200) -> list[int]:
    """Least elements ``e <= bound`` with ``e k in T`` whenever ``e k in S``."""
    big = bound * bound
    inS, inT = multiples(S, big), multiples(T, big)
    good = {e for e in range(1, bound + 1) if all(m in inT for m in range(e, big + 1, e) if m in inS)}
    return minimal(good)


def act(S, n: int, bound: int = BOUND) -> list[int]:
    return minimal({k for k in range(1, bound + 1) if any((k * n) % g == 0 for g in S)})


def orbit(R, S, bound: int = 500) -> list[list[int]]:
    inS = multiples(S, bound)
    found = {tuple(act(R, s, 100)) for s in sorted(inS)}
    return sorted(list(t) for t in found)


def euclid(values) -> int:
    g = 0
    for v in values:
        a, b = g, v
        while b:
            a, b = b, a % b
        g = a
    return g


# -- supernaturals as exponent tables ---------------------------------------


def table(default, exceptions: dict[int, object], primes=None) -> dict[int, object]:
    """Exponents at every prime below 100."""
    return {p: exceptions.get(p, default) for p in (primes or small_primes())}


def exp_leq(a, b) -> bool:
    if b == INF:
        return True
    if a == INF:
        return False
    return a <= b


def factor_table(n: int) -> dict[int, int]:
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divides_nat(n: int, default, exceptions) -> bool:
    t = table(default, exceptions)
    return all(exp_leq(e, t.get(p, default)) for p, e in factor_table(n).items())


def inf_primes(default, exceptions) -> list[int]:
    return [p for p, e in table(default, exceptions).items() if e == INF]


def in_Xs(inf_set: set[int], gens, bound: int = BOUND) -> bool:
    """Some element of the sieve has every prime factor with infinite exponent."""
    return any(set(factor_table(n)) <= inf_set for n in multiples(gens, bound))


def in_GP(gens, P) -> bool:
    return any(set(factor_table(m)) <= set(P) for m in multiples(gens))


# -- lattices ---------------------------------------------------------------


def hyperdistance(M, gh, N, ij) -> int:
    A = [[Fraction(M), Fraction(gh)], [Fraction(0), Fraction(1)]]
    B = [[Fraction(N), Fraction(ij)], [Fraction(0), Fraction(1)]]
    det = B[0][0] * B[1][1] - B[0][1] * B[1][0]
    Binv = [[B[1][1] / det, -B[0][1] / det], [-B[1][0] / det, B[0][0] / det]]
    D = [[sum(A[i][k] * Binv[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    alpha = 1
    while any((alpha * x).denominator != 1 for row in D for x in row):
        alpha += 1
    aD = [[alpha * x for x in row] for row in D]
    return int(aD[0][0] * aD[1][1] - aD[0][1] * aD[1][0])


def is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


def neighbors(M: int, bound: int) -> list[int]:
    return [N for N in range(1, bound + 1) if is_prime(hyperdistance(M, 0, N, 0))]


def invertible(ring_inverts, d: int) -> bool:
    """``1/d`` lies in the ring whose invertible primes satisfy ``ring_inverts``."""
    return all(ring_inverts(p) for p in factor_table(d))


# -- the frozen record ------------------------------------------------------


def compute_all() -> dict:
    return {
        "normalize": {"4,2,6": normalize([4, 2, 6]), "3,5,15": normalize([3, 5, 15])},
        "member": {"6 in 2,3": member(6, [2, 3]), "7 in 2,3": member(7, [2, 3])},
        "leq": {"4 <= 2": leq([4], [2]), "2 <= 4": leq([2], [4])},
        "join": {"2 v 4": join([2], [4]), "2 v 3": join([2], [3])},
        "meet": {"2,3 ^ 5": meet([2, 3], [5]), "2 ^ 4": meet([2], [4])},
        "implies": {"2 -> 6": implies([2], [6]), "6 -> 2": implies([6], [2])},
        "act": {"6,10 . 2": act([6, 10], 2), "15 . 2": act([15], 2)},
        "orbit": {"4 over 6": orbit([4], [6]), "2 over 1": orbit([2], [1])},
        "gcd": {"12,18": euclid([12, 18]), "2,3": euclid([2, 3])},
        "divides": {
            "4 | 2^inf": divides_nat(4, 0, {2: INF}),
            "12 | 2^2*3": divides_nat(12, 0, {2: 2, 3: 1}),
        },
        "inf_support": {
            "2^inf*3": inf_primes(0, {2: INF, 3: 1}),
            "all^inf/5^0 below 20": [p for p in inf_primes(INF, {5: 0}) if p < 20],
        },
        "in_Xs": {
            "[2^inf] in <2>": in_Xs({2}, [2]),
            "[2^inf] in <6>": in_Xs({2}, [6]),
            "j(5) in <2,5>": in_Xs(set(small_primes()) - {5}, [2, 5]),
        },
        "in_GP": {"<6> {2,3}": in_GP([6], [2, 3]), "<6> {2}": in_GP([6], [2])},
        "preimage_j": {"12,18": euclid([12, 18]), "2,3": euclid([2, 3])},
        "sections_j_units": {
            "12,18": [d for d in range(2, 13) if invertible(lambda p: euclid([12, 18]) % p == 0, d)],
        },
        "hyperdistance": {
            "2,0 vs 1,0": hyperdistance(2, 0, 1, 0),
            "2,0 vs 3,0": hyperdistance(2, 0, 3, 0),
            "2,0 vs 1,1/2": hyperdistance(2, 0, 1, Fraction(1, 2)),
        },
        "neighbors": {"1,10": neighbors(1, 10), "2,10": neighbors(2, 10), "2,50": neighbors(2, 50)},
        "truncation": {
            "2^inf,10": [n for n in range(1, 11) if divides_nat(n, 0, {2: INF})],
            "6,20": [n for n in range(1, 21) if divides_nat(n, 0, {2: 1, 3: 1})],
        },
    }


if __name__ == "__main__":
    FROZEN.parent.mkdir(exist_ok=True)
    FROZEN.write_text(json.dumps(compute_all(), indent=2, sort_keys=True) + "\n")
    print(f"wrote {FROZEN}")

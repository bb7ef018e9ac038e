"""The expression language: tokenizer, parser, sort checker, evaluator, renderer.

Precedence, tightest first::

    S . n        action (postfix)
    ! neg        negation (prefix)
    /\\ &         meet / and
    \\/ |         join / or
    ->           implication (right-associative)
    in ... ?     membership query (non-associative)

Every value has exactly one sort and sorts are never coerced: ``<2>`` is a
sieve, ``Xs<2>`` the constructible set it opens, ``2`` a natural number and
``2/1`` a rational.  Rendering is canonical and parses back to an equal
value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import bigcell, grothendieck, sheaves, skew
from . import sieve as om
from . import supernatural as sn
from . import topologies as top
from .errors import ArithSiteError, InvalidInput
from .sieve import Sieve

SORTS = (
    "sieve",
    "supernatural",
    "class",
    "theta",
    "constructible",
    "primeset",
    "rational",
    "nat",
    "bool",
    "ring",
    "lattice",
    "sieveset",
    "truncation",
    "natlist",
)


class LangError(Exception):
    """A diagnostic tied to a byte offset of the source text."""

    kind = "error"

    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.message = message
        self.offset = offset

    def __str__(self) -> str:
        return f"{self.kind} at byte {self.offset}: {self.message}"


class ParseError(LangError):
    kind = "parse error"

    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        super().__init__(message, offset)
        self.expected = expected

    def __str__(self) -> str:
        text = super().__str__()
        if self.expected:
            text += "; expected one of: " + " ".join(sorted(self.expected))
        return text


class SortError(LangError):
    kind = "sort error"


class EvalError(LangError):
    kind = "evaluation error"

    def __init__(self, cause: ArithSiteError, offset: int):
        super().__init__(f"{type(cause).__name__}: {cause}", offset)
        self.cause = cause


# -- tokens -----------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*(?:-[A-Za-z]+)*\??)
  | (?P<op>/\\|\\/|->|[!&|.<>{}\[\]()?,^*/\-:=])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "end" or the operator text itself
    text: str
    offset: int  # byte offset


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte(text, pos))
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            tokens.append(Token(value if kind == "op" else kind, value, _byte(text, pos)))
        pos = m.end()
    tokens.append(Token("end", "", _byte(text, len(text))))
    return tokens


def _byte(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


# -- syntax tree ------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    offset: int


@dataclass(frozen=True)
class Lit(Node):
    sort: str
    value: Any


@dataclass(frozen=True)
class Var(Node):
    name: str


@dataclass(frozen=True)
class Op(Node):
    """An operator or function application; ``name`` selects the overload table."""

    name: str
    args: tuple[Node, ...]


@dataclass(frozen=True)
class Let:
    name: str
    expr: Node


KEYWORDS = {
    "in",
    "let",
    "neg",
    "stalk",
    "sections",
    "hyperdistance",
    "member?",
    "true",
    "false",
    "sn",
    "th",
    "trunc",
    "Xs",
    "Xa",
    "Z",
    "Q",
    "Z_",
    "all",
    "inf",
}

_PRIMARY_START = frozenset({"num", "ident", "<", "{", "[", "(", "-"})


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self._expected: dict[int, set[str]] = {}

    # helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def _note(self, *kinds: str) -> None:
        self._expected.setdefault(self.i, set()).update(kinds)

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        ok = t.kind == kind and (text is None or t.text == text)
        if not ok:
            self._note(text if text is not None else kind)
        return ok

    def accept(self, kind: str, text: str | None = None) -> Token | None:
        if self.at(kind, text):
            t = self.tok
            self.i += 1
            return t
        return None

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.accept(kind, text)
        if t is None:
            self.fail()
        return t

    def fail(self, message: str | None = None):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(
            message or f"unexpected {found}", t.offset, frozenset(self._expected.get(self.i, ()))
        )

    def keyword(self, word: str) -> bool:
        return self.accept("ident", word) is not None

    # grammar

    def statement(self) -> Node | Let:
        if self.keyword("let"):
            name = self.expect("ident")
            if name.text in KEYWORDS or name.text.endswith("?"):
                raise ParseError(f"{name.text!r} is reserved", name.offset)
            self.expect("=")
            expr = self.expr()
            self.expect("end")
            return Let(name.text, expr)
        expr = self.expr()
        self.expect("end")
        return expr

    def expr(self) -> Node:
        start = self.tok
        if self.keyword("member?"):
            elem = self.implication()
            if not self.at("ident", "in") and isinstance(elem, Op) and elem.name == "lattice":
                # the call form member?(a, b)
                return Op(start.offset, "in", elem.args)
            self.expect("ident", "in")
            container = self.implication()
            self.accept("?")
            return Op(start.offset, "in", (elem, container))
        left = self.implication()
        if self.keyword("in"):
            right = self.implication()
            self.accept("?")
            return Op(start.offset, "in", (left, right))
        return left

    def implication(self) -> Node:
        left = self.disjunction()
        t = self.accept("->")
        if t:
            return Op(t.offset, "implies", (left, self.implication()))
        return left

    def disjunction(self) -> Node:
        left = self.conjunction()
        while True:
            t = self.accept("\\/") or self.accept("|")
            if not t:
                return left
            left = Op(t.offset, "join", (left, self.conjunction()))

    def conjunction(self) -> Node:
        left = self.unary()
        while True:
            t = self.accept("/\\") or self.accept("&")
            if not t:
                return left
            left = Op(t.offset, "meet", (left, self.unary()))

    def unary(self) -> Node:
        t = self.tok
        if self.accept("!"):
            return Op(t.offset, "not", (self.unary(),))
        if self.keyword("neg"):
            return Op(t.offset, "neg", (self.unary(),))
        if self.keyword("stalk") or self.keyword("sections"):
            which = self.tok
            if not (self.keyword("i") or self.keyword("j")):
                self.fail()
            return Op(t.offset, f"{t.text}-{which.text}", (self.unary(),))
        if self.keyword("hyperdistance"):
            a = self.postfix()
            b = self.postfix()
            return Op(t.offset, "hyperdistance", (a, b))
        return self.postfix()

    def postfix(self) -> Node:
        node = self.primary()
        while True:
            t = self.accept(".")
            if not t:
                return node
            node = Op(t.offset, "act", (node, self.primary()))

    def primary(self) -> Node:
        t = self.tok
        if self.accept("-"):
            return self._number(t, negative=True)
        if t.kind == "num":
            return self._number(t)
        if self.accept("<"):
            return Lit(t.offset, "sieve", self._sieve_body())
        if self.accept("{"):
            return self._set(t)
        if self.accept("["):
            items = self._nat_list("]")
            return Lit(t.offset, "natlist", tuple(items))
        if self.accept("("):
            first = self.expr()
            if self.accept(","):
                second = self.expr()
                self.expect(")")
                return Op(t.offset, "lattice", (first, second))
            self.expect(")")
            return first
        if t.kind == "ident":
            return self._word(t)
        self._note(*_PRIMARY_START)
        self.fail()

    def _number(self, t: Token, negative: bool = False) -> Lit:
        n = self.expect("num")
        value = int(n.text)
        if self.accept("/"):
            d = self.expect("num")
            if int(d.text) == 0:
                raise ParseError("zero denominator", d.offset)
            q = Fraction(value, int(d.text))
            return Lit(t.offset, "rational", -q if negative else q)
        if negative:
            raise ParseError("negative numbers are written as rationals, e.g. -3/1", t.offset)
        return Lit(t.offset, "nat", value)

    def _nat_list(self, close: str) -> list[int]:
        items = []
        if self.accept(close):
            return items
        while True:
            items.append(int(self.expect("num").text))
            if self.accept(close):
                return items
            self.expect(",")

    def _sieve_body(self) -> Sieve:
        t = self.tok
        gens = self._nat_list(">")
        try:
            return om.normalize(gens)
        except ArithSiteError as exc:
            raise EvalError(exc, t.offset) from exc

    def _set(self, t: Token) -> Lit:
        if self.accept("<"):
            members = [self._sieve_body()]
            while self.accept(","):
                self.expect("<")
                members.append(self._sieve_body())
            self.expect("}")
            return Lit(t.offset, "sieveset", frozenset(members))
        primes = self._nat_list("}")
        return Lit(t.offset, "primeset", self._primes(primes, t.offset))

    @staticmethod
    def _primes(values, offset: int) -> tuple[int, ...]:
        try:
            return sn.PrimeSetDesc.finite(values).primes
        except ArithSiteError as exc:
            raise EvalError(exc, offset) from exc

    def _word(self, t: Token) -> Node:
        word = t.text
        self.i += 1
        if word in ("true", "false"):
            return Lit(t.offset, "bool", word == "true")
        if word == "sn":
            return Lit(t.offset, "supernatural", self._supernatural(t))
        if word == "Xs":
            if self.accept("<"):
                return Op(t.offset, "Xs", (Lit(t.offset, "sieve", self._sieve_body()),))
            return Op(t.offset, "Xs", tuple(self._call_args()))
        if word == "Xa":
            b = self.expect("{")
            return Lit(t.offset, "constructible", top.xa(self._primes(self._nat_list("}"), b.offset)))
        if word == "th":
            args = self._call_args()
            if len(args) != 2:
                raise ParseError("th takes a domain sieve and a support formula", t.offset)
            return Op(t.offset, "th", tuple(args))
        if word == "trunc":
            self.expect("(")
            bound = int(self.expect("num").text)
            self.expect(":")
            members = self._nat_list(")")
            try:
                return Lit(t.offset, "truncation", bigcell.DivisorTruncation(bound, tuple(members)))
            except ArithSiteError as exc:
                raise EvalError(exc, t.offset) from exc
        if word == "Z":
            if self.accept("["):
                primes = []
                while True:
                    one = self.expect("num")
                    if one.text != "1":
                        raise ParseError("ring generators are written 1/p", one.offset)
                    self.expect("/")
                    primes.append(int(self.expect("num").text))
                    if self.accept("]"):
                        break
                    self.expect(",")
                return Lit(t.offset, "ring", sheaves.invert(self._primes(primes, t.offset)))
            return Lit(t.offset, "ring", sheaves.invert(()))
        if word == "Q":
            return Lit(t.offset, "ring", sheaves.invert_all_except(()))
        if word == "Z_":
            self.expect("(")
            primes = self._nat_list(")")
            if not primes:
                raise ParseError("Z_() needs at least one prime", t.offset)
            return Lit(t.offset, "ring", sheaves.invert_all_except(self._primes(primes, t.offset)))
        if word in KEYWORDS:
            self.i -= 1
            self._note(*_PRIMARY_START)
            self.fail(f"unexpected keyword {word!r}")
        if self.at("("):
            return Op(t.offset, word, tuple(self._call_args()))
        return Var(t.offset, word)

    def _call_args(self) -> list[Node]:
        self.expect("(")
        args = []
        if self.accept(")"):
            return args
        while True:
            args.append(self.expr())
            if self.accept(")"):
                return args
            self.expect(",")

    def _supernatural(self, t: Token) -> sn.Supernatural:
        self.expect("(")
        if self.keyword("all"):
            self.expect("^")
            self.expect("ident", "inf")
            exceptions: dict[int, int] = {}
            while self.accept("/"):
                p, e = self._factor()
                if p in exceptions:
                    raise ParseError(f"prime {p} listed twice", t.offset)
                exceptions[p] = e
            self.expect(")")
            default = sn.INF
        else:
            exceptions = {}
            while True:
                p, e = self._factor()
                if p == 1 and e == 1:
                    pass
                else:
                    exceptions[p] = exceptions.get(p, 0) + e
                if not self.accept("*"):
                    break
            self.expect(")")
            default = 0
        try:
            return sn.Supernatural.make(default, exceptions)
        except ArithSiteError as exc:
            raise EvalError(exc, t.offset) from exc

    def _factor(self) -> tuple[int, Any]:
        p = int(self.expect("num").text)
        if not self.accept("^"):
            return p, 1
        if self.keyword("inf"):
            return p, sn.INF
        return p, int(self.expect("num").text)


def parse(text: str) -> Node | Let:
    return Parser(text).statement()


def parse_expr(text: str) -> Node:
    node = parse(text)
    if isinstance(node, Let):
        raise ParseError("a binding is not an expression", 0)
    return node


# -- overloads --------------------------------------------------------------


def _in_xs(c: sn.SupernaturalClass, C: top.Constructible) -> bool:
    return top.c_member(c, C)


def _hyperdistance(a: bigcell.ConwayLattice, b: bigcell.ConwayLattice) -> int:
    return bigcell.hyperdistance(a, b)


def _lattice(M, gh) -> bigcell.ConwayLattice:
    return bigcell.ConwayLattice(Fraction(M), Fraction(gh))


def _witness(C):
    w = top.witness(C)
    if w is None:
        raise InvalidInput("the constructible set is empty")
    return w


def _eq(sort: str) -> Callable[[Any, Any], bool]:
    if sort == "constructible":
        return top.c_equal
    return lambda a, b: a == b


# name -> list of (argument sorts, result sort, implementation)
Overloads = list[tuple[tuple[str, ...], str, Callable]]

OPS: dict[str, Overloads] = {
    "meet": [
        (("sieve", "sieve"), "sieve", lambda a, b: om.meet(a, b)),
        (("theta", "theta"), "theta", skew.t_meet),
        (("constructible", "constructible"), "constructible", top.c_and),
        (("bool", "bool"), "bool", lambda a, b: a and b),
    ],
    "join": [
        (("sieve", "sieve"), "sieve", lambda a, b: om.join(a, b)),
        (("theta", "theta"), "theta", skew.t_join),
        (("constructible", "constructible"), "constructible", top.c_or),
        (("bool", "bool"), "bool", lambda a, b: a or b),
    ],
    "implies": [
        (("sieve", "sieve"), "sieve", lambda a, b: om.implies(a, b)),
        (("theta", "theta"), "theta", skew.t_implies),
        (("constructible", "constructible"), "constructible", lambda a, b: top.c_or(top.c_not(a), b)),
        (("bool", "bool"), "bool", lambda a, b: (not a) or b),
    ],
    "not": [
        (("sieve",), "sieve", lambda a: om.neg(a)),
        (("constructible",), "constructible", top.c_not),
        (("bool",), "bool", lambda a: not a),
    ],
    "neg": [(("sieve",), "sieve", lambda a: om.neg(a))],
    "act": [
        (("sieve", "nat"), "sieve", lambda S, n: om.act(S, n)),
        (("sieveset", "nat"), "sieveset", lambda X, n: frozenset(om.act(S, n) for S in X)),
    ],
    "in": [
        (("nat", "sieve"), "bool", lambda n, S: om.member(n, S)),
        (("class", "constructible"), "bool", _in_xs),
        (("supernatural", "constructible"), "bool", lambda s, C: _in_xs(sn.class_of(s), C)),
        (("rational", "ring"), "bool", lambda q, R: sheaves.contains_rational(R, q)),
        (("nat", "ring"), "bool", lambda q, R: sheaves.contains_rational(R, q)),
        (("nat", "primeset"), "bool", lambda n, P: n in P),
        (("sieve", "sieveset"), "bool", lambda S, X: S in X),
        (("nat", "truncation"), "bool", lambda n, T: n in T.members),
        (("nat", "natlist"), "bool", lambda n, L: n in L),
    ],
    "lattice": [
        ((a, b), "lattice", _lattice) for a in ("nat", "rational") for b in ("nat", "rational")
    ],
    "Xs": [(("sieve",), "constructible", top.atom)],
    "th": [(("sieve", "constructible"), "theta", skew.Fluctuation)],
    "gcd": [(("sieve",), "nat", om.gcd_of)],
    "orbit": [(("sieve", "sieve"), "sieveset", om.orbit)],
    "dneg": [(("sieve", "sieve"), "sieve", om.relative_double_neg)],
    "shadow": [(("theta",), "sieve", skew.shadow)],
    "restrict": [(("theta", "sieve"), "theta", skew.restrict)],
    "embed": [(("sieve",), "theta", skew.embed_omega)],
    "class": [(("supernatural",), "class", sn.class_of)],
    "pi": [(("supernatural",), "class", sn.class_of)],
    "lift": [(("nat",), "supernatural", sn.s_from_nat)],
    "mul": [(("supernatural", "supernatural"), "supernatural", sn.s_mul)],
    "i": [(("nat",), "class", sn.i_point)],
    "j": [(("nat",), "class", sn.j_point)],
    "witness": [(("constructible",), "class", _witness)],
    "preimage-i": [(("primeset",), "nat", top.preimage_i)],
    "preimage-j": [(("sieve",), "nat", top.preimage_j)],
    "stalk-i": [
        (("class",), "ring", sheaves.stalk_i),
        (("supernatural",), "ring", lambda s: sheaves.stalk_i(sn.class_of(s))),
    ],
    "stalk-j": [
        (("class",), "ring", sheaves.stalk_j),
        (("supernatural",), "ring", lambda s: sheaves.stalk_j(sn.class_of(s))),
    ],
    "sections-i": [(("primeset",), "ring", sheaves.sections_i)],
    "sections-j": [(("sieve",), "ring", sheaves.sections_j)],
    "hyperdistance": [(("lattice", "lattice"), "nat", _hyperdistance)],
    "divisors": [(("supernatural", "nat"), "truncation", bigcell.divisor_truncation)],
    "neighbors": [(("nat", "nat"), "natlist", lambda M, b: tuple(bigcell.bigcell_neighbors(M, b)))],
    "leq?": [
        (("sieve", "sieve"), "bool", lambda a, b: om.leq(a, b)),
        (("theta", "theta"), "bool", skew.t_leq),
        (("constructible", "constructible"), "bool", top.c_leq),
        (("supernatural", "supernatural"), "bool", sn.s_divides),
        (("ring", "ring"), "bool", lambda a, b: a <= b),
        (("nat", "nat"), "bool", lambda a, b: b % a == 0 if a else b == 0),
    ],
    "member?": [],  # filled from "in" below
    "equiv?": [
        (("theta", "theta"), "bool", skew.t_equiv),
        (("supernatural", "supernatural"), "bool", sn.equivalent),
    ],
    "commutes?": [(("theta", "theta"), "bool", skew.commutes)],
    "empty?": [(("constructible",), "bool", top.c_is_empty)],
    "eq?": [((s, s), "bool", _eq(s)) for s in SORTS],
    "in-gp?": [(("sieve", "primeset"), "bool", grothendieck.in_GP)],
    "in-xl?": [(("supernatural", "sieve"), "bool", top.in_Xl)],
    "in-xs?": [(("class", "sieve"), "bool", top.in_Xs)],
    "in-xa?": [(("class", "primeset"), "bool", top.in_Xa)],
    "point?": [(("truncation",), "bool", bigcell.is_point_truncation)],
}
OPS["member?"] = OPS["in"]

_SYMBOL = {"meet": "/\\", "join": "\\/", "implies": "->", "not": "!", "act": ".", "in": "in", "lattice": "(_, _)"}


# -- sort checking and evaluation -------------------------------------------


@dataclass
class Environment:
    bindings: dict[str, tuple[str, Any]] = field(default_factory=dict)


def _resolve(node: Op, sorts: tuple[str, ...]):
    table = OPS.get(node.name)
    if table is None:
        raise SortError(f"unknown function {node.name!r}", node.offset)
    for arg_sorts, result, fn in table:
        if arg_sorts == sorts:
            return result, fn
    label = _SYMBOL.get(node.name, node.name)
    accepted = "; ".join(", ".join(a) for a, _, _ in table)
    got = ", ".join(sorts) if sorts else "no arguments"
    raise SortError(f"{label} does not apply to ({got}); accepts ({accepted})", node.offset)


def infer(node: Node, env: Environment | None = None) -> str:
    """The sort of ``node``, computed bottom-up without evaluating anything."""
    env = env or Environment()
    if isinstance(node, Lit):
        return node.sort
    if isinstance(node, Var):
        if node.name not in env.bindings:
            raise SortError(f"unbound name {node.name!r}", node.offset)
        return env.bindings[node.name][0]
    sorts = tuple(infer(a, env) for a in node.args)
    return _resolve(node, sorts)[0]


def evaluate(node: Node, env: Environment | None = None) -> tuple[str, Any]:
    env = env or Environment()
    if isinstance(node, Lit):
        return node.sort, node.value
    if isinstance(node, Var):
        if node.name not in env.bindings:
            raise SortError(f"unbound name {node.name!r}", node.offset)
        return env.bindings[node.name]
    args = [evaluate(a, env) for a in node.args]
    result, fn = _resolve(node, tuple(s for s, _ in args))
    try:
        return result, fn(*(v for _, v in args))
    except ArithSiteError as exc:
        raise EvalError(exc, node.offset) from exc


# -- rendering --------------------------------------------------------------


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _sieve_key(S: Sieve):
    return (len(S.generators), S.generators)


def render(sort: str, value: Any) -> str:
    if sort == "primeset":
        return "{" + ",".join(map(str, value)) + "}"
    if sort == "rational":
        return _frac(Fraction(value))
    if sort == "bool":
        return "true" if value else "false"
    if sort == "sieveset":
        return "{" + ", ".join(str(S) for S in sorted(value, key=_sieve_key)) + "}"
    if sort == "natlist":
        return "[" + ", ".join(map(str, value)) + "]"
    return str(value)


def _exp(e) -> Any:
    return "inf" if e == sn.INF else e


def to_json_value(sort: str, value: Any) -> Any:
    if sort == "sieve":
        return list(value.generators)
    if sort == "supernatural":
        return {"default": _exp(value.default), "exceptions": {str(p): _exp(e) for p, e in value.exceptions}}
    if sort == "class":
        return {"inf_support": {"mode": value.inf_support.mode.name.lower(), "primes": list(value.inf_support.primes)}}
    if sort == "theta":
        return {"domain": list(value.domain.generators), "support": str(value.support)}
    if sort == "constructible":
        return str(value)
    if sort in ("primeset", "natlist"):
        return list(value)
    if sort == "rational":
        return [value.numerator, value.denominator]
    if sort == "ring":
        return {"invertible": {"mode": value.invertible.mode.name.lower(), "primes": list(value.invertible.primes)}}
    if sort == "lattice":
        return {"M": _frac(value.M), "gh": _frac(value.gh)}
    if sort == "sieveset":
        return [list(S.generators) for S in sorted(value, key=_sieve_key)]
    if sort == "truncation":
        return {"bound": value.bound, "members": list(value.members)}
    return value


def record(sort: str, value: Any) -> dict:
    return {"sort": sort, "value": to_json_value(sort, value), "canonical-text": render(sort, value)}


def run(text: str, env: Environment | None = None) -> tuple[str, Any]:
    """Parse, sort-check and evaluate a single expression."""
    env = env or Environment()
    node = parse_expr(text)
    infer(node, env)
    return evaluate(node, env)


def execute(text: str, env: Environment) -> tuple[str | None, Any]:
    """Run a REPL line; a ``let`` binds and returns the bound value."""
    stmt = parse(text)
    if isinstance(stmt, Let):
        infer(stmt.expr, env)
        sort, value = evaluate(stmt.expr, env)
        env.bindings[stmt.name] = (sort, value)
        return sort, value
    infer(stmt, env)
    return evaluate(stmt, env)


def values_equal(sort: str, a: Any, b: Any) -> bool:
    return _eq(sort)(a, b)

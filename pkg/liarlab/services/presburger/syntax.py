"""Additive arithmetic syntax: terms, formulas, parser, canonical printer, enumerator.

Bound variables are de Bruijn indices (``Var(0)`` is the innermost binder);
the single free variable is ``X``. Sums are kept right-nested, so a numeral
``1+1+1`` is ``Sum(ONE, Sum(ONE, ONE))`` and ``plus`` re-associates anything
it is given. Deep numerals are walked iteratively through ``summands``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import count as _count
from typing import Iterator, Union

from liarlab.errors import FormulaSyntaxError, FreeVariableError


# --- Terms ---

@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class FreeX:
    pass


@dataclass(frozen=True)
class Sum:
    left: "PTerm"
    right: "PTerm"


PTerm = Union[Zero, One, Var, FreeX, Sum]

ZERO = Zero()
ONE = One()
X = FreeX()


# --- Formulas ---

@dataclass(frozen=True)
class Eq:
    left: PTerm
    right: PTerm


@dataclass(frozen=True)
class Not:
    body: "PFormula"


@dataclass(frozen=True)
class And:
    left: "PFormula"
    right: "PFormula"


@dataclass(frozen=True)
class Or:
    left: "PFormula"
    right: "PFormula"


@dataclass(frozen=True)
class Implies:
    left: "PFormula"
    right: "PFormula"


@dataclass(frozen=True)
class Exists:
    body: "PFormula"


@dataclass(frozen=True)
class Forall:
    body: "PFormula"


PFormula = Union[Eq, Not, And, Or, Implies, Exists, Forall]
FORMULA_TYPES = (Eq, Not, And, Or, Implies, Exists, Forall)
_BINARY = {And: "&", Or: "|", Implies: "->"}


def summands(t: PTerm) -> list:
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Sum):
            stack.append(node.right)
            stack.append(node.left)
        else:
            out.append(node)
    return out


def _build_sum(parts: list) -> PTerm:
    out = parts[-1]
    for part in reversed(parts[:-1]):
        out = Sum(part, out)
    return out


def plus(a: PTerm, b: PTerm) -> PTerm:
    return _build_sum(summands(a) + summands(b))


def numeral(n: int) -> PTerm:
    if n < 0:
        raise ValueError("numerals denote naturals")
    if n == 0:
        return ZERO
    return _build_sum([ONE] * n)


def neq(a: PTerm, b: PTerm) -> PFormula:
    return Not(Eq(a, b))


# --- Structure ---

def term_size(t: PTerm) -> int:
    k = len(summands(t))
    return 2 * k - 1


def size(f: PFormula) -> int:
    """Node count."""
    if isinstance(f, Eq):
        return 1 + term_size(f.left) + term_size(f.right)
    if isinstance(f, (Not, Exists, Forall)):
        return 1 + size(f.body)
    return 1 + size(f.left) + size(f.right)


def _term_has_x(t: PTerm) -> bool:
    return any(isinstance(p, FreeX) for p in summands(t))


def has_free_x(f: PFormula) -> bool:
    if isinstance(f, Eq):
        return _term_has_x(f.left) or _term_has_x(f.right)
    if isinstance(f, (Not, Exists, Forall)):
        return has_free_x(f.body)
    return has_free_x(f.left) or has_free_x(f.right)


def _map_terms(f: PFormula, fn, depth: int = 0) -> PFormula:
    """Rebuild ``f`` with ``fn(term, depth)`` applied to every term."""
    if isinstance(f, Eq):
        return Eq(fn(f.left, depth), fn(f.right, depth))
    if isinstance(f, Not):
        return Not(_map_terms(f.body, fn, depth))
    if isinstance(f, (Exists, Forall)):
        return type(f)(_map_terms(f.body, fn, depth + 1))
    return type(f)(_map_terms(f.left, fn, depth), _map_terms(f.right, fn, depth))


def _replace_x(t: PTerm, parts_for_x: list) -> PTerm:
    parts = summands(t)
    if not any(isinstance(p, FreeX) for p in parts):
        return t
    out = []
    for p in parts:
        out.extend(parts_for_x if isinstance(p, FreeX) else [p])
    return _build_sum(out)


def substitute(f: PFormula, n: int) -> PFormula:
    """``f[n]``: the numeral for ``n`` in place of ``x``."""
    if not has_free_x(f):
        return f
    parts = summands(numeral(n))
    return _map_terms(f, lambda t, _depth: _replace_x(t, parts))


def generalize(f: PFormula) -> PFormula:
    """Bind ``x`` universally: ``A x. f``."""

    def rebind(t: PTerm, depth: int) -> PTerm:
        parts = summands(t)
        if not any(isinstance(p, FreeX) for p in parts):
            return t
        return _build_sum([Var(depth) if isinstance(p, FreeX) else p for p in parts])

    return Forall(_map_terms(f, rebind))


def _shift(t: PTerm, by: int) -> PTerm:
    parts = summands(t)
    return _build_sum([Var(p.index + by) if isinstance(p, Var) else p for p in parts])


# --- Canonical printer ---

_BINDER_NAMES = ("y", "z", "u", "v", "w")


def binder_name(depth: int) -> str:
    return _BINDER_NAMES[depth] if depth < len(_BINDER_NAMES) else f"y{depth}"


def render_term(t: PTerm, depth: int = 0) -> str:
    out = []
    for p in summands(t):
        if isinstance(p, Zero):
            out.append("0")
        elif isinstance(p, One):
            out.append("1")
        elif isinstance(p, FreeX):
            out.append("x")
        else:
            out.append(binder_name(depth - 1 - p.index))
    return "+".join(out)


def serialize(f: PFormula, depth: int = 0) -> str:
    if isinstance(f, Eq):
        return f"{render_term(f.left, depth)} = {render_term(f.right, depth)}"
    if isinstance(f, Not):
        return "~" + _operand(f.body, depth)
    if isinstance(f, Exists):
        return f"E {binder_name(depth)}. {serialize(f.body, depth + 1)}"
    if isinstance(f, Forall):
        return f"A {binder_name(depth)}. {serialize(f.body, depth + 1)}"
    op = _BINARY[type(f)]
    return f"{_operand(f.left, depth)} {op} {_operand(f.right, depth)}"


def _operand(f: PFormula, depth: int) -> str:
    text = serialize(f, depth)
    return text if isinstance(f, Not) else f"({text})"


# --- Parser ---

_TOKEN = re.compile(r"\s*(?:(->|!=)|([A-Za-z_][A-Za-z0-9_]*)|(\d+)|(\S))")

# numerals are unary sums; a literal past this many units is rejected by the parser
MAX_NUMERAL = 100_000

GRAMMAR = (
    "F ::= 'E' ident '.' F | 'A' ident '.' F | F '->' F | F '|' F | F '&' F | '~' F "
    "| '(' F ')' | T '=' T | T '!=' T | T '<' T ; T ::= T '+' T | ident | digits"
)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            kind = "op" if m.group(1) or m.group(4) else "ident" if m.group(2) else "num"
            self.tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
            pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.i = 0
        self.scope: list[str] = []

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, got, pos = self.take()
        if got != value or kind == "end":
            raise FormulaSyntaxError(f"expected {value!r}, found {got or 'end of input'!r}", pos, self.text)

    def parse(self) -> PFormula:
        f = self.formula()
        kind, got, pos = self.peek()
        if kind != "end":
            raise FormulaSyntaxError(f"unexpected {got!r}", pos, self.text)
        return f

    def formula(self) -> PFormula:
        left = self.disjunction()
        if self.peek()[1] == "->":
            self.take()
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> PFormula:
        f = self.conjunction()
        while self.peek()[1] == "|":
            self.take()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> PFormula:
        f = self.unary()
        while self.peek()[1] == "&":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> PFormula:
        kind, value, pos = self.peek()
        if value == "~":
            self.take()
            return Not(self.unary())
        if kind == "ident" and value in ("E", "A"):
            self.take()
            vkind, var, vpos = self.take()
            if vkind != "ident" or var in ("E", "A"):
                raise FormulaSyntaxError("expected a variable after quantifier", vpos, self.text)
            self.expect(".")
            self.scope.append(var)
            try:
                body = self.formula()
            finally:
                self.scope.pop()
            return Exists(body) if value == "E" else Forall(body)
        if value == "(":
            self.take()
            f = self.formula()
            self.expect(")")
            return f
        return self.atom()

    def atom(self) -> PFormula:
        left = self.term()
        kind, op, pos = self.take()
        if op not in ("=", "!=", "<") or kind == "end":
            raise FormulaSyntaxError(f"expected '=', '!=' or '<', found {op or 'end of input'!r}", pos, self.text)
        right = self.term()
        if op == "=":
            return Eq(left, right)
        if op == "!=":
            return neq(left, right)
        # t < u  is  E w. t + w + 1 = u
        return Exists(Eq(plus(_shift(left, 1), Sum(Var(0), ONE)), _shift(right, 1)))

    def term(self) -> PTerm:
        parts = [self.primary()]
        while self.peek()[1] == "+":
            self.take()
            parts.append(self.primary())
        return _build_sum([p for part in parts for p in summands(part)])

    def primary(self) -> PTerm:
        kind, value, pos = self.take()
        if kind == "num":
            if int(value) > MAX_NUMERAL:
                raise FormulaSyntaxError(f"numeral {value} exceeds {MAX_NUMERAL}", pos, self.text)
            return numeral(int(value))
        if kind == "ident" and value not in ("E", "A"):
            for depth, bound in enumerate(reversed(self.scope)):
                if bound == value:
                    return Var(depth)
            if value == "x":
                return X
            raise FreeVariableError(value, pos)
        raise FormulaSyntaxError(f"expected a term, found {value or 'end of input'!r}", pos, self.text)


def parse(text: str) -> PFormula:
    return _Parser(text).parse()


# --- Enumeration ---

def _atoms(depth: int) -> tuple:
    return (ZERO, ONE, X) + tuple(Var(i) for i in range(depth))


@lru_cache(maxsize=None)
def _terms(n: int, depth: int) -> tuple:
    if n == 1:
        return _atoms(depth)
    if n < 3 or n % 2 == 0:
        return ()
    return tuple(Sum(a, t) for a in _atoms(depth) for t in _terms(n - 2, depth))


@lru_cache(maxsize=None)
def _formulas(n: int, depth: int) -> tuple:
    out: list = []
    for k in range(1, n - 1):
        for left in _terms(k, depth):
            for right in _terms(n - 1 - k, depth):
                out.append(Eq(left, right))
    if n >= 4:
        out.extend(Not(f) for f in _formulas(n - 1, depth))
        inner = _formulas(n - 1, depth + 1)
        out.extend(Exists(f) for f in inner)
        out.extend(Forall(f) for f in inner)
    for k in range(3, n - 3):
        lefts = _formulas(k, depth)
        rights = _formulas(n - 1 - k, depth)
        for cls in (And, Or, Implies):
            out.extend(cls(a, b) for a in lefts for b in rights)
    return tuple(out)


@lru_cache(maxsize=32)
def formulas_of_size(n: int) -> tuple:
    """Closed-context formulas with ``n`` nodes, as ``(text, formula)`` in byte order."""
    ranked = [(serialize(f), f) for f in _formulas(n, 0)]
    ranked.sort(key=lambda pair: pair[0].encode())
    return tuple(ranked)


def iter_formulas() -> Iterator[PFormula]:
    """Every formula with at most ``x`` free: by node count, then serialization bytes."""
    for n in _count(3):
        for _text, f in formulas_of_size(n):
            yield f


def enumerate_formulas(count: int) -> list:
    out = []
    for f in iter_formulas():
        if len(out) >= count:
            break
        out.append(f)
    return out


def enumerate_up_to_size(cap: int) -> Iterator[PFormula]:
    for n in range(3, cap + 1):
        for _text, f in formulas_of_size(n):
            yield f

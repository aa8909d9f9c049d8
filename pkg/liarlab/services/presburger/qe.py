"""Decision procedure for additive arithmetic over the naturals.

Quantifiers are eliminated innermost first with Cooper's method over the
integers; every bound variable is relativized to ``v >= 0`` on the way in.
Quantifier-free results are kept in negation normal form over three atom
shapes: ``lin < 0``, ``d | lin`` and ``~(d | lin)``. Ground atoms fold to
constants as soon as they are built.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import count
from math import gcd, lcm
from typing import Callable, Iterator, Optional, Union

from liarlab.errors import NotASentence
from liarlab.services.presburger.syntax import (
    And,
    Eq,
    Exists,
    Forall,
    FreeX,
    Implies,
    Not,
    One,
    Or,
    PFormula,
    PTerm,
    Var,
    Zero,
    summands,
)
from liarlab.utils.budget import StepBudget

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Lin:
    """``sum(coef * var) + const``; coefficients are sorted and non-zero."""

    coeffs: tuple = ()
    const: int = 0

    @staticmethod
    def of(mapping: dict, const: int = 0) -> "Lin":
        return Lin(tuple(sorted((v, c) for v, c in mapping.items() if c)), const)

    @staticmethod
    def constant(c: int) -> "Lin":
        return Lin((), c)

    @staticmethod
    def var(v: int) -> "Lin":
        return Lin(((v, 1),), 0)

    @property
    def ground(self) -> bool:
        return not self.coeffs

    def coef(self, v: int) -> int:
        for var, c in self.coeffs:
            if var == v:
                return c
        return 0

    def without(self, v: int) -> "Lin":
        return Lin(tuple(p for p in self.coeffs if p[0] != v), self.const)

    def with_coef(self, v: int, c: int) -> "Lin":
        mapping = dict(self.coeffs)
        mapping[v] = c
        return Lin.of(mapping, self.const)

    def __add__(self, other: "Lin") -> "Lin":
        mapping = dict(self.coeffs)
        for v, c in other.coeffs:
            mapping[v] = mapping.get(v, 0) + c
        return Lin.of(mapping, self.const + other.const)

    def scale(self, k: int) -> "Lin":
        return Lin(tuple((v, c * k) for v, c in self.coeffs), self.const * k) if k else Lin()

    def shift(self, c: int) -> "Lin":
        return Lin(self.coeffs, self.const + c)

    def substitute(self, v: int, term: "Lin") -> "Lin":
        c = self.coef(v)
        return self.without(v) + term.scale(c) if c else self


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Lt:
    lin: Lin


@dataclass(frozen=True)
class Dvd:
    d: int
    lin: Lin
    negated: bool = False


@dataclass(frozen=True)
class Conj:
    items: tuple


@dataclass(frozen=True)
class Disj:
    items: tuple


QF = Union[Const, Lt, Dvd, Conj, Disj]
TRUE = Const(True)
FALSE = Const(False)


# --- Smart constructors ---

def mk_lt(lin: Lin) -> QF:
    if lin.ground:
        return Const(lin.const < 0)
    g = 0
    for _v, c in lin.coeffs:
        g = gcd(g, c)
    if g > 1:
        # g*u + c < 0  iff  u <= floor((-1 - c) / g)
        bound = (-1 - lin.const) // g
        lin = Lin(tuple((v, c // g) for v, c in lin.coeffs), -bound - 1)
    return Lt(lin)


def mk_dvd(d: int, lin: Lin, negated: bool = False) -> QF:
    d = abs(d)
    if d == 1:
        return Const(not negated)

    def sym(c: int) -> int:
        r = c % d
        return r - d if r > d // 2 else r

    lin = Lin.of({v: sym(c) for v, c in lin.coeffs}, lin.const % d)
    if lin.ground:
        return Const((lin.const == 0) != negated)
    return Dvd(d, lin, negated)


def conj(*items: QF) -> QF:
    flat: dict = {}
    for item in items:
        parts = item.items if isinstance(item, Conj) else (item,)
        for p in parts:
            if p == FALSE:
                return FALSE
            if p != TRUE:
                flat[p] = None
    if not flat:
        return TRUE
    if len(flat) == 1:
        return next(iter(flat))
    return Conj(tuple(flat))


def disj(*items: QF) -> QF:
    flat: dict = {}
    for item in items:
        parts = item.items if isinstance(item, Disj) else (item,)
        for p in parts:
            if p == TRUE:
                return TRUE
            if p != FALSE:
                flat[p] = None
    if not flat:
        return FALSE
    if len(flat) == 1:
        return next(iter(flat))
    return Disj(tuple(flat))


def negate(f: QF) -> QF:
    if isinstance(f, Const):
        return Const(not f.value)
    if isinstance(f, Lt):
        # ~(t < 0)  iff  -t - 1 < 0
        return mk_lt(f.lin.scale(-1).shift(-1))
    if isinstance(f, Dvd):
        return Dvd(f.d, f.lin, not f.negated)
    if isinstance(f, Conj):
        return disj(*(negate(g) for g in f.items))
    return conj(*(negate(g) for g in f.items))


def _atoms(f: QF) -> Iterator[Union[Lt, Dvd]]:
    if isinstance(f, (Lt, Dvd)):
        yield f
    elif isinstance(f, (Conj, Disj)):
        for g in f.items:
            yield from _atoms(g)


def _map_atoms(f: QF, fn: Callable[[Union[Lt, Dvd]], QF]) -> QF:
    if isinstance(f, (Lt, Dvd)):
        return fn(f)
    if isinstance(f, Conj):
        return conj(*(_map_atoms(g, fn) for g in f.items))
    if isinstance(f, Disj):
        return disj(*(_map_atoms(g, fn) for g in f.items))
    return f


def _substitute(f: QF, v: int, term: Lin) -> QF:
    def atom(a: Union[Lt, Dvd]) -> QF:
        if not a.lin.coef(v):
            return a
        lin = a.lin.substitute(v, term)
        if isinstance(a, Lt):
            return mk_lt(lin)
        return mk_dvd(a.d, lin, a.negated)

    return _map_atoms(f, atom)


def _sign(c: int) -> int:
    return 1 if c > 0 else -1


class Eliminator:
    def __init__(self, node_cap: Optional[int] = None):
        self.budget = StepBudget(node_cap, "quantifier elimination")
        self._fresh = count()

    # translation ------------------------------------------------------

    def _lin(self, t: PTerm, env: tuple) -> Lin:
        mapping: dict = {}
        const = 0
        for p in summands(t):
            if isinstance(p, One):
                const += 1
            elif isinstance(p, Var):
                v = env[p.index]
                mapping[v] = mapping.get(v, 0) + 1
            elif isinstance(p, FreeX):
                raise NotASentence("x")
            elif not isinstance(p, Zero):
                raise TypeError(f"unexpected term {p!r}")
        return Lin.of(mapping, const)

    def run(self, f: PFormula, env: tuple = ()) -> QF:
        if isinstance(f, Eq):
            d = self._lin(f.left, env) + self._lin(f.right, env).scale(-1)
            return conj(mk_lt(d.shift(-1)), mk_lt(d.scale(-1).shift(-1)))
        if isinstance(f, Not):
            return negate(self.run(f.body, env))
        if isinstance(f, And):
            return conj(self.run(f.left, env), self.run(f.right, env))
        if isinstance(f, Or):
            return disj(self.run(f.left, env), self.run(f.right, env))
        if isinstance(f, Implies):
            return disj(negate(self.run(f.left, env)), self.run(f.right, env))
        v = next(self._fresh)
        body = self.run(f.body, (v,) + env)
        nonneg = mk_lt(Lin.of({v: -1}, -1))
        if isinstance(f, Exists):
            return self.cooper(v, conj(nonneg, body))
        if isinstance(f, Forall):
            return negate(self.cooper(v, conj(nonneg, negate(body))))
        raise TypeError(f"unexpected formula {f!r}")

    # elimination ------------------------------------------------------

    def cooper(self, v: int, phi: QF) -> QF:
        """Quantifier-free equivalent of ``E v. phi`` over the integers."""
        coefs = [a.lin.coef(v) for a in _atoms(phi) if a.lin.coef(v)]
        if not coefs:
            return phi
        scale = lcm(*(abs(c) for c in coefs))

        def unit(a: Union[Lt, Dvd]) -> QF:
            c = a.lin.coef(v)
            if not c:
                return a
            lin = a.lin.scale(scale // abs(c)).with_coef(v, _sign(c))
            if isinstance(a, Lt):
                return Lt(lin)
            return Dvd(a.d * (scale // abs(c)), lin, a.negated)

        phi = _map_atoms(phi, unit)
        if scale > 1:
            phi = conj(phi, Dvd(scale, Lin.var(v)))

        delta = 1
        lowers: dict = {}
        for a in _atoms(phi):
            c = a.lin.coef(v)
            if not c:
                continue
            if isinstance(a, Dvd):
                delta = lcm(delta, a.d)
            elif c == -1:
                # -v + t < 0  means  t < v
                lowers[a.lin.without(v)] = None

        def at_minus_infinity(a: Union[Lt, Dvd]) -> QF:
            if isinstance(a, Lt) and a.lin.coef(v):
                return TRUE if a.lin.coef(v) > 0 else FALSE
            return a

        minf = _map_atoms(phi, at_minus_infinity)
        disjuncts = []
        for j in range(1, delta + 1):
            self.budget.charge()
            d = _substitute(minf, v, Lin.constant(j))
            if d == TRUE:
                return TRUE
            disjuncts.append(d)
        for b in lowers:
            for j in range(1, delta + 1):
                self.budget.charge()
                d = _substitute(phi, v, b.shift(j))
                if d == TRUE:
                    return TRUE
                disjuncts.append(d)
        out = disj(*disjuncts)
        logger.debug("eliminated v%d: delta=%d lower bounds=%d", v, delta, len(lowers))
        return out


def decide(sentence: PFormula, node_cap: Optional[int] = None) -> bool:
    """Truth of ``sentence`` over the naturals."""
    result = Eliminator(node_cap).run(sentence)
    if not isinstance(result, Const):
        raise NotASentence(sentence)
    return result.value

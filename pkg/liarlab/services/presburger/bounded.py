"""Brute-force evaluation with every quantifier ranging over ``0..M``.

Only some verdicts carry over to the naturals: any verdict on a
quantifier-free sentence, ``true`` on a purely existential one, ``false`` on a
purely universal one. ``is_sound_verdict`` tells which.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from liarlab.config import get_settings
from liarlab.errors import BudgetExceeded, NotASentence
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
    has_free_x,
    summands,
)
from liarlab.utils.budget import StepBudget


class Verdict(str, Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


def _value(t: PTerm, env: tuple) -> int:
    total = 0
    for p in summands(t):
        if isinstance(p, One):
            total += 1
        elif isinstance(p, Var):
            total += env[p.index]
        elif isinstance(p, FreeX):
            raise NotASentence("x")
    return total


def _eval(f: PFormula, env: tuple, bound: int, budget: StepBudget) -> bool:
    budget.charge()
    if isinstance(f, Eq):
        return _value(f.left, env) == _value(f.right, env)
    if isinstance(f, Not):
        return not _eval(f.body, env, bound, budget)
    if isinstance(f, And):
        return _eval(f.left, env, bound, budget) and _eval(f.right, env, bound, budget)
    if isinstance(f, Or):
        return _eval(f.left, env, bound, budget) or _eval(f.right, env, bound, budget)
    if isinstance(f, Implies):
        return (not _eval(f.left, env, bound, budget)) or _eval(f.right, env, bound, budget)
    if isinstance(f, Exists):
        return any(_eval(f.body, (k,) + env, bound, budget) for k in range(bound + 1))
    return all(_eval(f.body, (k,) + env, bound, budget) for k in range(bound + 1))


def eval_bounded(sentence: PFormula, bound: int, step_cap: Optional[int] = None) -> Verdict:
    if bound < 0:
        raise ValueError("bound must be >= 0")
    if has_free_x(sentence):
        raise NotASentence(sentence)
    cap = step_cap if step_cap is not None else get_settings().bounded_step_cap
    try:
        value = _eval(sentence, (), bound, StepBudget(cap, "bounded evaluation"))
    except BudgetExceeded:
        return Verdict.UNKNOWN
    return Verdict.TRUE if value else Verdict.FALSE


def quantifier_polarities(f: PFormula, positive: bool = True) -> set:
    """Effective quantifiers of ``f`` once negations are pushed inward: ``{"E", "A"}`` subsets."""
    if isinstance(f, Eq):
        return set()
    if isinstance(f, Not):
        return quantifier_polarities(f.body, not positive)
    if isinstance(f, Implies):
        return quantifier_polarities(f.left, not positive) | quantifier_polarities(f.right, positive)
    if isinstance(f, (And, Or)):
        return quantifier_polarities(f.left, positive) | quantifier_polarities(f.right, positive)
    kind = "E" if isinstance(f, Exists) == positive else "A"
    return {kind} | quantifier_polarities(f.body, positive)


def is_sound_verdict(sentence: PFormula, verdict: Verdict) -> bool:
    if verdict is Verdict.UNKNOWN:
        return False
    polarities = quantifier_polarities(sentence)
    if not polarities:
        return True
    if polarities == {"E"}:
        return verdict is Verdict.TRUE
    if polarities == {"A"}:
        return verdict is Verdict.FALSE
    return False

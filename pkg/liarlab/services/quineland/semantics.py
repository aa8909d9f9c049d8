"""Denotation, the printer, and truth for quineland.

The printer starts from the axiom ``~Pr(<x>)`` and closes under

    R1  σ  ⟹  (σ & σ)
    R2  σ  ⟹  ~~σ
    R3  σ  ⟹  Pr(<σ>)

Every rule grows the sentence and no two conclusions share a shape, so a
printable sentence has exactly one derivation. ``predecessor`` undoes one
step; printability and minimal proof length follow by unfolding.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

from liarlab.errors import NotASentence
from liarlab.services.quineland.syntax import (
    And,
    Diag,
    Not,
    Pr,
    QFormula,
    QTerm,
    Quote,
    VarX,
    X,
    is_formula,
    is_sentence,
    substitute,
)

logger = logging.getLogger(__name__)

AXIOM: QFormula = Not(Pr(Quote(X)))


class Rule(str, Enum):
    AXIOM = "axiom"
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"


def apply_rule(rule: Rule, s: QFormula) -> QFormula:
    if rule is Rule.R1:
        return And(s, s)
    if rule is Rule.R2:
        return Not(Not(s))
    if rule is Rule.R3:
        return Pr(Quote(s))
    raise ValueError(f"{rule.value} takes no premise")


def predecessor(s: QFormula) -> Optional[tuple[Rule, QFormula]]:
    """The only rule and premise that could conclude ``s``, if any."""
    if isinstance(s, And) and s.left == s.right:
        return Rule.R1, s.left
    if isinstance(s, Not) and isinstance(s.body, Not):
        return Rule.R2, s.body.body
    if isinstance(s, Pr) and isinstance(s.arg, Quote) and is_sentence(s.arg.payload):
        return Rule.R3, s.arg.payload
    return None


def _chain(s: QFormula) -> Optional[list[tuple[Rule, QFormula]]]:
    """Backward unfolding from ``s``: ``[(rule, conclusion), ...]`` ending at the axiom, or None."""
    steps = []
    current = s
    while current != AXIOM:
        back = predecessor(current)
        if back is None:
            return None
        rule, premise = back
        steps.append((rule, current))
        current = premise
    steps.append((Rule.AXIOM, AXIOM))
    steps.reverse()
    return steps


@lru_cache(maxsize=65536)
def printable(s: QFormula) -> bool:
    if not is_sentence(s):
        raise NotASentence(s)
    return _chain(s) is not None


def min_proof_length(s: QFormula) -> Optional[int]:
    if not is_sentence(s):
        raise NotASentence(s)
    chain = _chain(s)
    return None if chain is None else len(chain)


@dataclass(frozen=True)
class Derivation:
    steps: tuple
    # (rule, premise index); the axiom has no premise
    justifications: tuple

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def conclusion(self) -> QFormula:
        return self.steps[-1]


def derivation(s: QFormula) -> Optional[Derivation]:
    if not is_sentence(s):
        raise NotASentence(s)
    chain = _chain(s)
    if chain is None:
        return None
    steps = tuple(conclusion for _rule, conclusion in chain)
    justifications = tuple((rule, None if i == 0 else i - 1) for i, (rule, _c) in enumerate(chain))
    return Derivation(steps, justifications)


def check_derivation(d: Derivation) -> bool:
    """Each step is the axiom or follows from an earlier step by its rule."""
    if not d.steps or len(d.steps) != len(d.justifications):
        return False
    for i, (step, (rule, premise)) in enumerate(zip(d.steps, d.justifications)):
        if rule is Rule.AXIOM:
            if step != AXIOM:
                return False
            continue
        if premise is None or not 0 <= premise < i:
            return False
        if apply_rule(rule, d.steps[premise]) != step:
            return False
    return True


def long_theorem(n: int) -> QFormula:
    """A printable sentence whose only derivation has exactly ``n`` steps.

    Alternates R3 and R2 over the axiom.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    s = AXIOM
    for i in range(1, n):
        s = apply_rule(Rule.R3 if i % 2 else Rule.R2, s)
    return s


def printed(count: int) -> list:
    """The first ``count`` printable sentences, breadth-first from the axiom."""
    out: list = []
    queue = deque([AXIOM])
    while queue and len(out) < count:
        s = queue.popleft()
        out.append(s)
        queue.extend(apply_rule(rule, s) for rule in (Rule.R1, Rule.R2, Rule.R3))
    return out


# --- Denotation and truth ---

def denote(t: QTerm) -> Quote:
    """The name a closed term stands for.

    ``diag`` of a name whose payload is a formula f denotes the quote of
    f[name]; any other payload is left as is.
    """
    if isinstance(t, VarX):
        raise NotASentence(t)
    if isinstance(t, Quote):
        return t
    if not isinstance(t, Diag):
        raise TypeError(f"not a term: {t!r}")
    inner = denote(t.arg)
    if is_formula(inner.payload):
        return Quote(substitute(inner.payload, inner))
    return inner


@lru_cache(maxsize=65536)
def truth(s: QFormula) -> bool:
    if not is_sentence(s):
        raise NotASentence(s)
    return _truth(s)


def _truth(s: QFormula) -> bool:
    if isinstance(s, Pr):
        named = denote(s.arg).payload
        return is_sentence(named) and printable(named)
    if isinstance(s, Not):
        return not _truth(s.body)
    return _truth(s.left) and _truth(s.right)


def proof_bounded(s: QFormula, n: int) -> bool:
    """σ ∈ P_n: provable in fewer than ``n`` steps."""
    length = min_proof_length(s)
    return length is not None and length < n

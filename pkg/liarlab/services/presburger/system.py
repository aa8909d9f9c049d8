"""Additive arithmetic as an abstract formal system.

P and T coincide (the theory is complete), both decided by quantifier
elimination. Names are naturals handed out by the even/odd ledger, so
``E y. y+y = x`` T-represents exactly the names of true sentences: truth is
definable here, and the system cannot be self-referential for T or P.
"""

from __future__ import annotations

import logging
from typing import Iterator, Optional

from liarlab.config import get_settings
from liarlab.errors import NotAFormula, NotAName, NotASentence
from liarlab.models import NonSelfRefEvidence, ViolationReport
from liarlab.services.afs import (
    SentenceSet,
    SystemInstance,
    check_representation,
    complement,
    diagonal_name_set,
    image_under_naming,
    sentence_set,
)
from liarlab.services.logic import LogicalSystem
from liarlab.services.presburger import syntax
from liarlab.services.presburger.naming import NamingLedger
from liarlab.services.presburger.qe import decide as qe_decide
from liarlab.services.presburger.syntax import Not, PFormula

logger = logging.getLogger(__name__)

EVEN_REPRESENTER = "E y. y+y = x"
ODD_REPRESENTER = "A y. ~(y+y = x)"


def even_representer() -> PFormula:
    return syntax.parse(EVEN_REPRESENTER)


def odd_representer() -> PFormula:
    return syntax.parse(ODD_REPRESENTER)


class PresburgerSystem(SystemInstance):
    tag = "pres"

    def __init__(self, ledger_cap: Optional[int] = None, qe_node_cap: Optional[int] = None):
        settings = get_settings()
        self.qe_node_cap = qe_node_cap if qe_node_cap is not None else settings.qe_node_cap
        self.ledger = NamingLedger(
            syntax.iter_formulas(),
            self.provable,
            ledger_cap if ledger_cap is not None else settings.ledger_cap,
        )
        self._decisions: dict[str, bool] = {}

    # decision ---------------------------------------------------------

    def decide(self, sentence: PFormula) -> bool:
        if not self.is_sentence(sentence):
            raise NotASentence(sentence)
        key = syntax.serialize(sentence)
        value = self._decisions.get(key)
        if value is None:
            value = qe_decide(sentence, self.qe_node_cap)
            self._decisions[key] = value
        return value

    def provable(self, f: PFormula) -> bool:
        return self.is_sentence(f) and self.decide(f)

    # abstract formal system -------------------------------------------

    def is_formula(self, e) -> bool:
        return isinstance(e, syntax.FORMULA_TYPES)

    def is_sentence(self, e) -> bool:
        return self.is_formula(e) and not syntax.has_free_x(e)

    def is_name(self, n) -> bool:
        return isinstance(n, int) and not isinstance(n, bool) and n >= 0

    def name_of(self, f: PFormula) -> int:
        if not self.is_formula(f):
            raise NotAFormula(f)
        return self.ledger.name_of(f)

    def formula_of(self, n: int, bound: Optional[int] = None) -> PFormula:
        if not self.is_name(n):
            raise NotAName(n)
        return self.ledger.formula_of(n, bound)

    def substitute(self, f: PFormula, n: int) -> PFormula:
        return syntax.substitute(f, n)

    def iter_formulas(self) -> Iterator[PFormula]:
        return syntax.iter_formulas()

    def enumerate_names(self, count: int) -> list:
        return list(range(max(count, 0)))

    def parse(self, text: str) -> PFormula:
        return syntax.parse(text)

    def render(self, e: PFormula) -> str:
        return syntax.serialize(e)


def goedel_name(system: PresburgerSystem, f: PFormula) -> int:
    return system.name_of(f)


def goedel_formula(system: PresburgerSystem, n: int, bound: Optional[int] = None) -> PFormula:
    return system.formula_of(n, bound)


def truth_set(system: PresburgerSystem) -> SentenceSet:
    return sentence_set(system, "T", system.decide)


def provable_set(system: PresburgerSystem) -> SentenceSet:
    return sentence_set(system, "P", system.decide)


def presburger_logic(system: Optional[PresburgerSystem] = None) -> LogicalSystem:
    system = system or PresburgerSystem()
    return LogicalSystem(
        base=system,
        negate=Not,
        P=provable_set(system),
        T=truth_set(system),
    )


def truth_definability_check(
    system: PresburgerSystem,
    sample_size: int,
    even: Optional[PFormula] = None,
    odd: Optional[PFormula] = None,
) -> Optional[ViolationReport]:
    """``even`` T-represents 𝐓 and ``odd`` T-represents ~𝐏 on names ``0..sample_size-1``."""
    if sample_size < 1:
        raise ValueError("sample_size must be >= 1")
    even = even or even_representer()
    odd = odd or odd_representer()
    t = truth_set(system)
    names = system.enumerate_names(sample_size)
    report = check_representation(system, even, image_under_naming(system, t), t, names)
    if report is not None:
        return report
    return check_representation(system, odd, complement(image_under_naming(system, provable_set(system))), t, names)


def non_self_referentiality_evidence(
    system: PresburgerSystem,
    size_cap: int,
    sample_size: int,
) -> NonSelfRefEvidence:
    """Try every formula up to ``size_cap`` nodes as a T-representer of diag(𝐓).

    𝐓 (the assigned evens) is T-represented, so self-referentiality for T
    would make its diagonal T-represented too. A survivor is only a
    candidate that the sample failed to refute.
    """
    if sample_size < 1:
        raise ValueError("sample_size must be >= 1")
    t = truth_set(system)
    names = system.enumerate_names(sample_size)
    target = diagonal_name_set(system, image_under_naming(system, t)).cached()
    candidates = refuted = 0
    survivors: list[str] = []
    for f in syntax.enumerate_up_to_size(size_cap):
        candidates += 1
        if check_representation(system, f, target, t, names) is None:
            text = syntax.serialize(f)
            logger.warning("not refuted on %d names: %s", sample_size, text)
            survivors.append(text)
        else:
            refuted += 1
    logger.info("non-self-referentiality: %d candidates, %d refuted", candidates, refuted)
    return NonSelfRefEvidence(
        size_cap=size_cap,
        sample_size=sample_size,
        candidates=candidates,
        refuted=refuted,
        survivors=survivors,
    )

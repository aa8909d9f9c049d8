"""Quineland as an abstract formal system, and its logical system.

Names are the quotes of formulas, so ``g`` is quotation and needs no ledger.
The system is self-referential with respect to T through ``diag``; it
declares nothing for P.
"""

from __future__ import annotations

import logging
from itertools import islice
from typing import Iterator, Optional

from liarlab.errors import NotAFormula, NotAName, NotASentence
from liarlab.models import GoedelFacts
from liarlab.services.afs import SentenceSet, SystemInstance, diagonal_sentence, sentence_set
from liarlab.services.logic import LogicalSystem
from liarlab.services.quineland import semantics, syntax
from liarlab.services.quineland.syntax import Diag, Not, QFormula, Quote, X

logger = logging.getLogger(__name__)

GOEDEL_PI = "~Pr(diag(x))"


class QuinelandSystem(SystemInstance):
    tag = "quine"

    def is_formula(self, e) -> bool:
        return syntax.is_formula(e)

    def is_sentence(self, e) -> bool:
        return syntax.is_sentence(e)

    def is_name(self, n) -> bool:
        return isinstance(n, Quote) and syntax.is_formula(n.payload)

    def name_of(self, f: QFormula) -> Quote:
        if not self.is_formula(f):
            raise NotAFormula(f)
        return Quote(f)

    def formula_of(self, n: Quote, bound: Optional[int] = None) -> QFormula:
        if not self.is_name(n):
            raise NotAName(n)
        return n.payload

    def substitute(self, f: QFormula, n: Quote) -> QFormula:
        return syntax.substitute(f, n)

    def iter_formulas(self) -> Iterator[QFormula]:
        return syntax.iter_formulas()

    def enumerate_names(self, count: int) -> list:
        return [Quote(f) for f in islice(syntax.iter_formulas(), max(count, 0))]

    def parse(self, text: str) -> QFormula:
        return syntax.parse_formula(text)

    def render(self, e) -> str:
        return syntax.serialize(e)

    def render_name(self, n: Quote) -> str:
        return syntax.serialize(n)


def truth_set(system: QuinelandSystem) -> SentenceSet:
    return sentence_set(system, "T", semantics.truth)


def printable_set(system: QuinelandSystem) -> SentenceSet:
    return sentence_set(system, "P", semantics.printable)


def proof_bounded_set(system: QuinelandSystem, n: int) -> SentenceSet:
    if n < 1:
        raise ValueError("n must be >= 1")
    return sentence_set(system, f"P_{n}", lambda s: semantics.proof_bounded(s, n))


def self_ref_transform_T(phi: QFormula) -> QFormula:
    """φ with every free ``x`` replaced by ``diag(x)``."""
    if not syntax.is_formula(phi):
        raise NotAFormula(phi)
    return syntax.replace_x(phi, lambda: Diag(X))


def quineland_logic(system: Optional[QuinelandSystem] = None) -> LogicalSystem:
    system = system or QuinelandSystem()
    return LogicalSystem(
        base=system,
        negate=Not,
        P=printable_set(system),
        T=truth_set(system),
        self_ref={"T": self_ref_transform_T},
        provable=semantics.printed,
        proof_bounded=lambda n: proof_bounded_set(system, n),
    )


def goedel_sentence(system: Optional[QuinelandSystem] = None) -> tuple[QFormula, QFormula, GoedelFacts]:
    """π = ``~Pr(diag(x))`` and λ = π[⟨π⟩], the sentence saying it is not printable."""
    system = system or QuinelandSystem()
    pi = syntax.parse_formula(GOEDEL_PI)
    lam = diagonal_sentence(system, pi)
    if not system.is_sentence(lam):
        raise NotASentence(lam)
    negation = Not(lam)
    facts = GoedelFacts(
        pi=system.render(pi),
        lambda_=system.render(lam),
        negation=system.render(negation),
        diag_fixed_point=semantics.denote(Diag(Quote(pi))) == Quote(lam),
        truth_lambda=semantics.truth(lam),
        printable_lambda=semantics.printable(lam),
        printable_negation=semantics.printable(negation),
        truth_negation=semantics.truth(negation),
    )
    logger.debug("goedel sentence %s: %s", facts.lambda_, facts.model_dump())
    return pi, lam, facts

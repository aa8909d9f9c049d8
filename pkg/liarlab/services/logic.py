"""Logical systems: a formal system with negation, provability P and truth T.

The four limitation theorems are the generalized liar with different casts
for (A, B); ``LimitationVariant`` carries that table.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Mapping, Optional, Sequence

from liarlab.errors import NoSelfRefCapability, NotAFormula
from liarlab.models import LiarFacts, ViolationReport
from liarlab.services.afs import (
    Expression,
    Name,
    NameSet,
    SentenceSet,
    SystemInstance,
    check_representation,
    complement,
    complement_in_formulas,
    diagonal_sentence,
    enumerate_sentences,
    generalized_liar_witness,
    image_under_naming,
    sentence_set,
    substitute,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LogicalSystem:
    base: SystemInstance
    negate: Callable[[Expression], Expression]
    P: SentenceSet
    T: SentenceSet
    # per-set self-reference transforms, keyed by "T" or "P"
    self_ref: Mapping[str, Callable[[Expression], Expression]] = field(default_factory=dict)
    # optional enumeration of provable sentences (quineland's printer closure)
    provable: Optional[Callable[[int], list]] = None
    # optional P_n constructor (sentences provable in fewer than n steps)
    proof_bounded: Optional[Callable[[int], SentenceSet]] = None

    @property
    def tag(self) -> str:
        return self.base.tag


def refutable_set(ls: LogicalSystem) -> SentenceSet:
    """P' = {σ : σ' ∈ P}"""
    return sentence_set(ls.base, f"{ls.P.label}'", lambda s: ls.P.member(ls.negate(s)))


class LimitationVariant(str, Enum):
    GOEDEL_SYNTACTIC = "goedel_syntactic"
    GOEDEL_SEMANTIC = "goedel_semantic"
    TARSKI = "tarski"
    CHURCH = "church"

    def sets(self, ls: LogicalSystem) -> tuple[SentenceSet, SentenceSet]:
        return _VARIANT_TABLE[self](ls)


_VARIANT_TABLE: dict[LimitationVariant, Callable[[LogicalSystem], tuple[SentenceSet, SentenceSet]]] = {
    LimitationVariant.GOEDEL_SYNTACTIC: lambda ls: (complement_in_formulas(ls.P), refutable_set(ls)),
    LimitationVariant.GOEDEL_SEMANTIC: lambda ls: (ls.P, ls.T),
    LimitationVariant.TARSKI: lambda ls: (ls.T, ls.T),
    LimitationVariant.CHURCH: lambda ls: (ls.P, ls.P),
}


def negation_axiom_check(ls: LogicalSystem, formula_count: int, name_count: int) -> Optional[ViolationReport]:
    """Axioms (a) φ[n] ∈ T iff φ'[n] ∉ T and (b) φ[n] ∈ P iff φ''[n] ∈ P over a grid."""
    if formula_count < 1 or name_count < 1:
        raise ValueError("counts must be >= 1")
    base = ls.base
    names = base.enumerate_names(name_count)
    for phi in base.enumerate_formulas(formula_count):
        neg = ls.negate(phi)
        negneg = ls.negate(neg)
        # a sentence is its own instance at every name
        grid = names[:1] if base.is_sentence(phi) else names
        for n in grid:
            s = substitute(base, phi, n)
            in_t = ls.T.member(s)
            neg_out_t = not ls.T.member(substitute(base, neg, n))
            if in_t != neg_out_t:
                return ViolationReport(
                    witness_name=base.render_name(n),
                    lhs=in_t,
                    rhs=neg_out_t,
                    formula=base.render(phi),
                    narrative="axiom (a) fails: φ[n] ∈ T differs from φ'[n] ∉ T",
                )
            in_p = ls.P.member(s)
            negneg_in_p = ls.P.member(substitute(base, negneg, n))
            if in_p != negneg_in_p:
                return ViolationReport(
                    witness_name=base.render_name(n),
                    lhs=in_p,
                    rhs=negneg_in_p,
                    formula=base.render(phi),
                    narrative="axiom (b) fails: φ[n] ∈ P differs from φ''[n] ∈ P",
                )
    return None


def consistency_check(ls: LogicalSystem, count: int) -> Optional[Expression]:
    """First sentence σ with σ ∈ P and σ' ∈ P."""
    for s in enumerate_sentences(ls.base, count):
        if ls.P.member(s) and ls.P.member(ls.negate(s)):
            return s
    return None


def completeness_check(ls: LogicalSystem, count: int) -> Optional[Expression]:
    """First sentence σ with σ ∉ P and σ' ∉ P."""
    for s in enumerate_sentences(ls.base, count):
        if not ls.P.member(s) and not ls.P.member(ls.negate(s)):
            return s
    return None


def incompleteness_witness(ls: LogicalSystem, count: int) -> Optional[Expression]:
    """The completeness witness, turned so that the returned sentence is true."""
    s = completeness_check(ls, count)
    if s is None:
        return None
    return s if ls.T.member(s) else ls.negate(s)


def refutation_duality_check(ls: LogicalSystem, count: int) -> Optional[Expression]:
    """First sentence where ``σ ∉ P`` and ``σ ∈ P'`` disagree.

    The system is consistent and complete exactly when S ∼ P = P', so a
    witness here is also a consistency or completeness witness.
    """
    refutable = refutable_set(ls)
    for s in enumerate_sentences(ls.base, count):
        if ls.P.member(s) == refutable.member(s):
            return s
    return None


def negation_representation_check(
    ls: LogicalSystem,
    phi: Expression,
    x: NameSet,
    sample: Sequence[Name],
    by: str = "T",
) -> Optional[ViolationReport]:
    """Negating a representer.

    If ``phi`` T-represents X then ``phi'`` T-represents ~X; if ``phi``
    P-represents X then ``phi'`` P'-represents X. The premise is checked
    first, so a report whose formula is ``phi`` itself means the premise
    already fails on ``sample``.
    """
    if by not in ("T", "P"):
        raise ValueError(f"by must be 'T' or 'P', not {by!r}")
    base = ls.base
    a = ls.T if by == "T" else ls.P
    premise = check_representation(base, phi, x, a, sample)
    if premise is not None:
        return premise
    neg = ls.negate(phi)
    if by == "T":
        return check_representation(base, neg, complement(x), ls.T, sample)
    return check_representation(base, neg, x, refutable_set(ls), sample)


def soundness_check(ls: LogicalSystem, count: int) -> Optional[Expression]:
    """First provable sentence that is not true."""
    candidates: Iterable[Expression]
    if ls.provable is not None:
        candidates = ls.provable(count)
    else:
        candidates = (s for s in enumerate_sentences(ls.base, count) if ls.P.member(s))
    for s in candidates:
        if not ls.T.member(s):
            return s
    return None


def limitation_witness(
    ls: LogicalSystem,
    variant: LimitationVariant,
    pi: Expression,
) -> tuple[Expression, LiarFacts]:
    if not ls.base.is_formula(pi):
        raise NotAFormula(pi)
    a, b = variant.sets(ls)
    lam, facts = generalized_liar_witness(ls.base, a, b, pi)
    logger.debug(
        "%s on %s: represents=%s separates=%s",
        variant.value, ls.tag, facts.represents_at_name, facts.separates,
    )
    return lam, facts


def proof_length_witness(ls: LogicalSystem, n: int, pi: Expression) -> tuple[Expression, LiarFacts]:
    """The generalized liar cast with A = P_n and B = P."""
    if ls.proof_bounded is None:
        raise NoSelfRefCapability(ls.tag, "P_n")
    if n < 1:
        raise ValueError("n must be >= 1")
    return generalized_liar_witness(ls.base, ls.proof_bounded(n), ls.P, pi)


def _transform(ls: LogicalSystem, set_label: str) -> Callable[[Expression], Expression]:
    transform = ls.self_ref.get(set_label)
    if transform is None:
        raise NoSelfRefCapability(ls.tag, set_label)
    return transform


def tarski_counterexample(ls: LogicalSystem, phi: Expression) -> ViolationReport:
    """A name where ``phi`` fails to T-represent 𝐓.

    π is the self-reference transform of φ', λ = π[g(π)], and the witness is
    g(λ): there φ[g(λ)] ∈ T and λ ∈ T always disagree.
    """
    transform = _transform(ls, "T")
    base = ls.base
    if not base.is_formula(phi):
        raise NotAFormula(phi)
    pi = transform(ls.negate(phi))
    lam = diagonal_sentence(base, pi)
    n = base.name_of(lam)
    lhs = ls.T.member(substitute(base, phi, n))
    rhs = image_under_naming(base, ls.T).member(n)
    return ViolationReport(
        witness_name=base.render_name(n),
        lhs=lhs,
        rhs=rhs,
        lambda_=base.render(lam),
        formula=base.render(phi),
        narrative=f"φ[g(λ)] ∈ T is {lhs} while g(λ) ∈ 𝐓 is {rhs}",
    )


def church_counterexample(ls: LogicalSystem, phi: Expression) -> ViolationReport:
    """A name where ``phi`` fails to P-represent ~𝐏.

    Needs a self-reference transform declared for P.
    """
    transform = _transform(ls, "P")
    base = ls.base
    if not base.is_formula(phi):
        raise NotAFormula(phi)
    pi = transform(phi)
    lam = diagonal_sentence(base, pi)
    n = base.name_of(lam)
    lhs = ls.P.member(substitute(base, phi, n))
    rhs = not image_under_naming(base, ls.P).member(n)
    return ViolationReport(
        witness_name=base.render_name(n),
        lhs=lhs,
        rhs=rhs,
        lambda_=base.render(lam),
        formula=base.render(phi),
        narrative=f"φ[g(λ)] ∈ P is {lhs} while g(λ) ∈ ~𝐏 is {rhs}",
    )

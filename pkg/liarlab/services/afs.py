"""Abstract formal system kernel.

An instance supplies expressions, the naming bijection ``g`` (``name_of`` /
``formula_of``) and the substitution ``s``. Everything here is
language-agnostic: representability checks run over finite name samples, and
the liar constructions need no search at all.

Sets of sentences and sets of names are decision oracles. A ``SentenceSet``
is total on formulas: proper formulas are simply non-members unless the set
was built over formulas on purpose (``formula_set``), as the generalized
liar needs for ``A ⊆ F``.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from itertools import islice
from typing import Any, Callable, Iterator, Optional, Sequence

from liarlab.errors import NotAFormula, NotAName
from liarlab.models import LiarFacts, ViolationReport

logger = logging.getLogger(__name__)

Expression = Any
Name = Any


class ExpressionKind(str, Enum):
    SENTENCE = "sentence"
    PROPER_FORMULA = "proper-formula"
    OTHER = "other-expression"


class SystemInstance(ABC):
    """The six-tuple ⟨E, S, F, N, g, s⟩ as a bundle of capabilities."""

    tag: str = "abstract"

    @abstractmethod
    def is_formula(self, e: Expression) -> bool: ...

    @abstractmethod
    def is_sentence(self, e: Expression) -> bool: ...

    def is_proper_formula(self, e: Expression) -> bool:
        return self.is_formula(e) and not self.is_sentence(e)

    @abstractmethod
    def is_name(self, n: Name) -> bool: ...

    @abstractmethod
    def name_of(self, f: Expression) -> Name: ...

    @abstractmethod
    def formula_of(self, n: Name, bound: Optional[int] = None) -> Expression: ...

    @abstractmethod
    def substitute(self, f: Expression, n: Name) -> Expression:
        """Raw ``s(f, n)``; callers go through the checked ``substitute`` below."""

    @abstractmethod
    def iter_formulas(self) -> Iterator[Expression]:
        """Every formula, once, in the instance's canonical order."""

    def enumerate_formulas(self, count: int) -> list:
        return list(islice(self.iter_formulas(), max(count, 0)))

    @abstractmethod
    def enumerate_names(self, count: int) -> list: ...

    @abstractmethod
    def parse(self, text: str) -> Expression: ...

    @abstractmethod
    def render(self, e: Expression) -> str: ...

    def render_name(self, n: Name) -> str:
        return str(n)


@dataclass(frozen=True)
class SentenceSet:
    label: str
    member: Callable[[Expression], bool]

    def __contains__(self, e: Expression) -> bool:
        return self.member(e)


@dataclass(frozen=True)
class NameSet:
    label: str
    member: Callable[[Name], bool]
    # when the set is g*C, C itself: n ∈ X iff g⁻¹(n) ∈ preimage
    preimage: Optional[SentenceSet] = field(default=None, compare=False)

    def __contains__(self, n: Name) -> bool:
        return self.member(n)

    def cached(self) -> "NameSet":
        memo: dict = {}

        def member(n: Name) -> bool:
            if n not in memo:
                memo[n] = self.member(n)
            return memo[n]

        return NameSet(self.label, member, self.preimage)


def sentence_set(system: SystemInstance, label: str, pred: Callable[[Expression], bool]) -> SentenceSet:
    """A subset of S; proper formulas are non-members."""
    return SentenceSet(label, lambda e: system.is_sentence(e) and pred(e))


def formula_set(label: str, pred: Callable[[Expression], bool]) -> SentenceSet:
    return SentenceSet(label, pred)


def complement_in_formulas(a: SentenceSet) -> SentenceSet:
    return SentenceSet(f"~{a.label}", lambda e: not a.member(e))


def complement(x: NameSet) -> NameSet:
    pre = complement_in_formulas(x.preimage) if x.preimage is not None else None
    return NameSet(f"~{x.label}", lambda n: not x.member(n), pre)


def all_names(system: SystemInstance) -> NameSet:
    return NameSet("N", system.is_name)


# --- Operations ---

def classify(system: SystemInstance, e: Expression) -> ExpressionKind:
    if system.is_sentence(e):
        return ExpressionKind.SENTENCE
    if system.is_formula(e):
        return ExpressionKind.PROPER_FORMULA
    return ExpressionKind.OTHER


def enumerate_sentences(system: SystemInstance, count: int) -> list:
    sentences = (f for f in system.iter_formulas() if system.is_sentence(f))
    return list(islice(sentences, max(count, 0)))


def substitute(system: SystemInstance, phi: Expression, n: Name) -> Expression:
    if not system.is_formula(phi):
        raise NotAFormula(phi)
    if not system.is_name(n):
        raise NotAName(n)
    if system.is_sentence(phi):
        return phi
    return system.substitute(phi, n)


def image_under_naming(system: SystemInstance, c: SentenceSet, bound: Optional[int] = None) -> NameSet:
    """The boldface set g*C."""
    if bound is not None and bound < 0:
        raise ValueError("bound must be >= 0")
    return NameSet(
        f"g*{c.label}",
        lambda n: c.member(system.formula_of(n, bound)),
        preimage=c,
    )


def diagonal_sentence(system: SystemInstance, pi: Expression) -> Expression:
    """The formal liar built on ``pi``: ``pi[g(pi)]``."""
    if not system.is_formula(pi):
        raise NotAFormula(pi)
    return substitute(system, pi, system.name_of(pi))


def diagonal_name_set(system: SystemInstance, x: NameSet, bound: Optional[int] = None) -> NameSet:
    """{n ∈ N : g(g⁻¹(n)[n]) ∈ X}"""

    def member(n: Name) -> bool:
        closed = substitute(system, system.formula_of(n, bound), n)
        if x.preimage is not None:
            return x.preimage.member(closed)
        return x.member(system.name_of(closed))

    return NameSet(f"diag({x.label})", member)


def check_representation(
    system: SystemInstance,
    phi: Expression,
    x: NameSet,
    a: SentenceSet,
    sample: Sequence[Name],
) -> Optional[ViolationReport]:
    """First name in ``sample`` where ``φ[n] ∈ A iff n ∈ X`` fails.

    ``None`` means only that the sample did not refute the claim.
    """
    if not sample:
        raise ValueError("sample must not be empty")
    if not system.is_formula(phi):
        raise NotAFormula(phi)
    for n in sample:
        if not system.is_name(n):
            raise NotAName(n)
        lhs = a.member(substitute(system, phi, n))
        rhs = x.member(n)
        if lhs != rhs:
            logger.debug("representation of %s by %s fails at %s", x.label, system.render(phi), n)
            return ViolationReport(
                witness_name=system.render_name(n),
                lhs=lhs,
                rhs=rhs,
                formula=system.render(phi),
                narrative=(
                    f"φ[n] ∈ {a.label} is {lhs} but n ∈ {x.label} is {rhs} "
                    f"at n = {system.render_name(n)}"
                ),
            )
    return None


def liar_set(system: SystemInstance, t: SentenceSet) -> NameSet:
    """{n ∈ N : g⁻¹(n)[n] ∉ T}, the set no formula can T-represent."""

    def member(n: Name) -> bool:
        return not t.member(substitute(system, system.formula_of(n), n))

    return NameSet(f"{{n : g⁻¹(n)[n] ∉ {t.label}}}", member)


def liar_violation(system: SystemInstance, pi: Expression, t: SentenceSet) -> ViolationReport:
    """Instantiate the liar set's representability condition at ``n = g(pi)``.

    Both sides are computed independently; they always disagree.
    """
    n = system.name_of(pi)
    lam = diagonal_sentence(system, pi)
    lhs = t.member(substitute(system, pi, n))
    rhs = liar_set(system, t).member(n)
    return ViolationReport(
        witness_name=system.render_name(n),
        lhs=lhs,
        rhs=rhs,
        lambda_=system.render(lam),
        formula=system.render(pi),
        narrative=(
            f"λ ∈ {t.label} is {lhs} while g⁻¹(n)[n] ∉ {t.label} is {rhs}; "
            f"π does not represent the liar set"
        ),
    )


def generalized_liar_witness(
    system: SystemInstance,
    a: SentenceSet,
    b: SentenceSet,
    pi: Expression,
) -> tuple[Expression, LiarFacts]:
    """Build ``λ = π[g(π)]`` and record the facts that separate ``S ∩ A`` from ``B``.

    When ``represents_at_name`` holds, λ ∈ B iff λ ∉ A, so λ lies in exactly
    one of ``S ∩ A`` and ``B``.
    """
    n = system.name_of(pi)
    lam = diagonal_sentence(system, pi)
    in_s = system.is_sentence(lam)
    in_a = a.member(lam)
    in_b = b.member(lam)
    target = diagonal_name_set(system, complement(image_under_naming(system, a)))
    represents = b.member(substitute(system, pi, n)) == target.member(n)
    facts = LiarFacts(
        pi=system.render(pi),
        name=system.render_name(n),
        lambda_=system.render(lam),
        a_label=a.label,
        b_label=b.label,
        lambda_in_s=in_s,
        lambda_in_a=in_a,
        lambda_in_b=in_b,
        represents_at_name=represents,
        separates=in_s and in_a != in_b,
    )
    return lam, facts

from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field


class ViolationReport(BaseModel):
    """A name at which a representability biconditional fails.

    ``lhs`` is the sentence side (``φ[n] ∈ A``), ``rhs`` the name side
    (``n ∈ X``); both are recomputable from the oracles that produced them.
    """

    model_config = ConfigDict(populate_by_name=True)

    witness_name: str
    lhs: bool
    rhs: bool
    lambda_: Optional[str] = Field(default=None, alias="lambda")
    formula: Optional[str] = None
    narrative: str


class LiarFacts(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    pi: str
    name: str
    lambda_: str = Field(alias="lambda")
    a_label: str
    b_label: str
    lambda_in_s: bool
    lambda_in_a: bool
    lambda_in_b: bool
    # π[g(π)] ∈ B iff g(π) lies in the diagonal of ~A
    represents_at_name: bool
    # λ ∈ S and exactly one of λ ∈ A, λ ∈ B
    separates: bool


class GoedelFacts(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    pi: str
    lambda_: str = Field(alias="lambda")
    negation: str
    diag_fixed_point: bool
    truth_lambda: bool
    printable_lambda: bool
    printable_negation: bool
    truth_negation: bool


class NonSelfRefEvidence(BaseModel):
    size_cap: int
    sample_size: int
    candidates: int
    refuted: int
    survivors: List[str] = []


class Fact(BaseModel):
    label: str
    value: Union[bool, int, str, None]
    recipe: str


class Report(BaseModel):
    command: List[str]
    instance: str
    status: Literal["pass", "violation", "witness"]
    facts: List[Fact] = []
    witnesses: List[str] = []
    summary: str = ""

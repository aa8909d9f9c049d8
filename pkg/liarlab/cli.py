# liarlab/cli.py
from __future__ import annotations

import argparse
import logging
import shlex
import sys
from typing import Callable, Optional, Sequence

from liarlab import golden
from liarlab.config import get_settings
from liarlab.errors import (
    BudgetExceeded,
    FormulaSyntaxError,
    FreeVariableError,
    LiarlabError,
    NameUnassigned,
    NotASentence,
)
from liarlab.models import Fact, LiarFacts, Report, ViolationReport
from liarlab.services.afs import diagonal_sentence
from liarlab.services.logic import LimitationVariant, limitation_witness, tarski_counterexample
from liarlab.services.presburger import syntax as pres_syntax
from liarlab.services.presburger.system import (
    PresburgerSystem,
    non_self_referentiality_evidence,
    presburger_logic,
    truth_definability_check,
)
from liarlab.services.quineland import semantics
from liarlab.services.quineland import syntax as quine_syntax
from liarlab.services.quineland.system import QuinelandSystem, goedel_sentence, quineland_logic

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

VARIANTS = {
    "goedel-syn": LimitationVariant.GOEDEL_SYNTACTIC,
    "goedel-sem": LimitationVariant.GOEDEL_SEMANTIC,
    "tarski": LimitationVariant.TARSKI,
    "church": LimitationVariant.CHURCH,
}

GRAMMARS = (
    f"presburger: {pres_syntax.GRAMMAR}\n"
    f"quineland:  {quine_syntax.GRAMMAR}\n"
)


# ------------------------------------------------------------------------------
# Helpers
# ------------------------------------------------------------------------------

def _flag(value: bool) -> str:
    return "true" if value else "false"


def _recipe(*argv: object) -> str:
    return shlex.join(["liarlab", *(str(a) for a in argv)])


def _budget(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("budget must be >= 1")
    return value


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors print the formula grammars along with the argparse message."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n{GRAMMARS}")


def _pres(args) -> PresburgerSystem:
    return PresburgerSystem(ledger_cap=args.budget, qe_node_cap=args.budget)


def _pres_sentence(system: PresburgerSystem, text: str):
    f = system.parse(text)
    if not system.is_sentence(f):
        raise NotASentence(text)
    return f


def _quine_sentence(text: str):
    f = quine_syntax.parse_formula(text)
    if not quine_syntax.is_sentence(f):
        raise NotASentence(text)
    return f


def _violation_facts(report: ViolationReport, recipe: str) -> list[Fact]:
    return [
        Fact(label="witness_name", value=report.witness_name, recipe=recipe),
        Fact(label="lhs", value=report.lhs, recipe=recipe),
        Fact(label="rhs", value=report.rhs, recipe=recipe),
    ]


# ------------------------------------------------------------------------------
# pres
# ------------------------------------------------------------------------------

def cmd_pres_decide(args) -> tuple[Report, int]:
    system = _pres(args)
    f = _pres_sentence(system, args.sentence)
    value = system.decide(f)
    recipe = _recipe("pres", "decide", args.sentence)
    return Report(
        command=args.argv,
        instance="pres",
        status="pass",
        facts=[Fact(label="decide", value=value, recipe=recipe)],
        witnesses=[system.render(f)],
        summary=_flag(value),
    ), EXIT_OK


def cmd_pres_enum(args) -> tuple[Report, int]:
    if args.count < 0:
        raise ValueError("--count must be >= 0")
    texts = [pres_syntax.serialize(f) for f in pres_syntax.enumerate_formulas(args.count)]
    return Report(
        command=args.argv,
        instance="pres",
        status="pass",
        facts=[Fact(label="count", value=len(texts), recipe=_recipe("pres", "enum", "--count", args.count))],
        witnesses=texts,
        summary="\n".join(texts),
    ), EXIT_OK


def cmd_pres_name(args) -> tuple[Report, int]:
    system = _pres(args)
    f = system.parse(args.formula)
    n = system.name_of(f)
    recipe = _recipe("pres", "name", args.formula)
    return Report(
        command=args.argv,
        instance="pres",
        status="pass",
        facts=[
            Fact(label="name", value=n, recipe=recipe),
            Fact(label="even", value=n % 2 == 0, recipe=recipe),
        ],
        witnesses=[system.render(f)],
        summary=str(n),
    ), EXIT_OK


def cmd_pres_unname(args) -> tuple[Report, int]:
    system = _pres(args)
    f = system.formula_of(args.name)
    text = system.render(f)
    return Report(
        command=args.argv,
        instance="pres",
        status="pass",
        facts=[Fact(label="formula", value=text, recipe=_recipe("pres", "unname", args.name))],
        witnesses=[text],
        summary=text,
    ), EXIT_OK


def cmd_pres_truthdef(args) -> tuple[Report, int]:
    system = _pres(args)
    report = truth_definability_check(system, args.samples)
    recipe = _recipe("pres", "truthdef", "--samples", args.samples)
    if report is None:
        return Report(
            command=args.argv,
            instance="pres",
            status="pass",
            facts=[Fact(label="truth_definable", value=True, recipe=recipe)],
            summary=f"even/odd representers agree on names 0..{args.samples - 1}",
        ), EXIT_OK
    return Report(
        command=args.argv,
        instance="pres",
        status="violation",
        facts=_violation_facts(report, recipe),
        witnesses=[report.formula or ""],
        summary=report.narrative,
    ), EXIT_VIOLATION


def cmd_pres_noselfref(args) -> tuple[Report, int]:
    system = _pres(args)
    evidence = non_self_referentiality_evidence(system, args.cap, args.samples)
    recipe = _recipe("pres", "noselfref", "--cap", args.cap, "--samples", args.samples)
    clean = not evidence.survivors
    return Report(
        command=args.argv,
        instance="pres",
        status="pass" if clean else "violation",
        facts=[
            Fact(label="candidates", value=evidence.candidates, recipe=recipe),
            Fact(label="refuted", value=evidence.refuted, recipe=recipe),
            Fact(label="all_refuted", value=clean, recipe=recipe),
        ],
        witnesses=evidence.survivors,
        summary=f"{evidence.refuted}/{evidence.candidates} candidates refuted",
    ), EXIT_OK if clean else EXIT_VIOLATION


def cmd_pres_golden(args) -> tuple[Report, int]:
    out = args.out or get_settings().golden_dir
    paths = golden.write_golden(out, args.count, _pres(args))
    return Report(
        command=args.argv,
        instance="pres",
        status="pass",
        facts=[Fact(label="rows", value=args.count, recipe=_recipe("pres", "golden", "--out", out, "--count", args.count))],
        witnesses=[str(p) for p in paths],
        summary=f"wrote {len(paths)} golden files to {out}",
    ), EXIT_OK


# ------------------------------------------------------------------------------
# quine
# ------------------------------------------------------------------------------

def cmd_quine_truth(args) -> tuple[Report, int]:
    s = _quine_sentence(args.sentence)
    value = semantics.truth(s)
    return Report(
        command=args.argv,
        instance="quine",
        status="pass",
        facts=[Fact(label="truth", value=value, recipe=_recipe("quine", "truth", args.sentence))],
        witnesses=[quine_syntax.serialize(s)],
        summary=_flag(value),
    ), EXIT_OK


def cmd_quine_printable(args) -> tuple[Report, int]:
    s = _quine_sentence(args.sentence)
    d = semantics.derivation(s)
    recipe = _recipe("quine", "printable", args.sentence)
    facts = [Fact(label="printable", value=d is not None, recipe=recipe)]
    witnesses: list[str] = []
    if d is not None:
        facts.append(Fact(label="derivation_length", value=len(d), recipe=_recipe("quine", "minproof", args.sentence)))
        witnesses = [quine_syntax.serialize(step) for step in d.steps]
    return Report(
        command=args.argv,
        instance="quine",
        status="pass",
        facts=facts,
        witnesses=witnesses,
        summary=_flag(d is not None),
    ), EXIT_OK


def cmd_quine_diag(args) -> tuple[Report, int]:
    system = QuinelandSystem()
    pi = system.parse(args.formula)
    lam = diagonal_sentence(system, pi)
    text = system.render(lam)
    return Report(
        command=args.argv,
        instance="quine",
        status="pass",
        facts=[Fact(label="lambda_is_sentence", value=system.is_sentence(lam), recipe=_recipe("quine", "diag", args.formula))],
        witnesses=[text],
        summary=text,
    ), EXIT_OK


def cmd_quine_goedel(args) -> tuple[Report, int]:
    _pi, _lam, facts = goedel_sentence()
    recipe = _recipe("quine", "goedel")
    expected = {
        "diag_fixed_point": True,
        "truth_lambda": True,
        "printable_lambda": False,
        "printable_negation": False,
        "truth_negation": False,
    }
    values = facts.model_dump()
    ok = all(values[k] == v for k, v in expected.items())
    return Report(
        command=args.argv,
        instance="quine",
        status="witness",
        facts=[Fact(label=k, value=values[k], recipe=recipe) for k in expected],
        witnesses=[facts.pi, facts.lambda_, facts.negation],
        summary=f"{facts.lambda_} is true and not printable; neither is its negation",
    ), EXIT_OK if ok else EXIT_VIOLATION


def cmd_quine_tarski(args) -> tuple[Report, int]:
    ls = quineland_logic()
    phi = ls.base.parse(args.phi)
    report = tarski_counterexample(ls, phi)
    recipe = _recipe("quine", "tarski", "--phi", args.phi)
    return Report(
        command=args.argv,
        instance="quine",
        status="violation",
        facts=_violation_facts(report, recipe),
        witnesses=[report.lambda_ or "", report.witness_name],
        summary=report.narrative,
    ), EXIT_OK if report.lhs != report.rhs else EXIT_VIOLATION


def cmd_quine_minproof(args) -> tuple[Report, int]:
    s = _quine_sentence(args.sentence)
    length = semantics.min_proof_length(s)
    return Report(
        command=args.argv,
        instance="quine",
        status="pass",
        facts=[Fact(label="min_proof_length", value=length, recipe=_recipe("quine", "minproof", args.sentence))],
        witnesses=[quine_syntax.serialize(s)],
        summary="unprintable" if length is None else str(length),
    ), EXIT_OK


def cmd_quine_longtheorem(args) -> tuple[Report, int]:
    s = semantics.long_theorem(args.n)
    text = quine_syntax.serialize(s)
    length = semantics.min_proof_length(s)
    facts = [
        Fact(label="printable", value=semantics.printable(s), recipe=_recipe("quine", "printable", text)),
        Fact(label="min_proof_length", value=length, recipe=_recipe("quine", "minproof", text)),
    ]
    ok = length is not None and length >= args.n
    return Report(
        command=args.argv,
        instance="quine",
        status="witness",
        facts=facts,
        witnesses=[text],
        summary=f"{text} needs {length} steps",
    ), EXIT_OK if ok else EXIT_VIOLATION


# ------------------------------------------------------------------------------
# liar
# ------------------------------------------------------------------------------

def cmd_liar(args) -> tuple[Report, int]:
    ls = presburger_logic(_pres(args)) if args.system == "pres" else quineland_logic()
    pi = ls.base.parse(args.pi)
    _lam, facts = limitation_witness(ls, VARIANTS[args.variant], pi)
    recipe = _recipe("liar", "--system", args.system, "--variant", args.variant, "--pi", args.pi)
    values = facts.model_dump()
    labels = [k for k in LiarFacts.model_fields if isinstance(values[k], bool)]
    if facts.represents_at_name:
        status = "witness"
        summary = f"λ separates {facts.a_label} from {facts.b_label}" if facts.separates else "λ does not separate"
    else:
        status = "violation"
        summary = f"π does not represent the diagonal of ~{facts.a_label} at n = {facts.name}"
    code = EXIT_VIOLATION if facts.represents_at_name and not facts.separates else EXIT_OK
    return Report(
        command=args.argv,
        instance=args.system,
        status=status,
        facts=[Fact(label=k, value=values[k], recipe=recipe) for k in labels],
        witnesses=[facts.lambda_, facts.name],
        summary=summary,
    ), code


# ------------------------------------------------------------------------------
# Parser
# ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print the report as JSON")
    common.add_argument("--budget", type=_budget, default=argparse.SUPPRESS,
                        help="cap on ledger growth and elimination steps for this run")

    parser = _ArgumentParser(prog="liarlab", description="Limitation theorems on executable formal systems.")
    parser.add_argument("--json", action="store_true", help="print the report as JSON")
    parser.add_argument("--budget", type=_budget, default=None,
                        help="cap on ledger growth and elimination steps for this run")
    top = parser.add_subparsers(dest="group", required=True, parser_class=_ArgumentParser)

    def leaf(sub, name: str, handler: Callable, help: str):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(handler=handler)
        return p

    pres = top.add_parser("pres", help="additive arithmetic").add_subparsers(dest="command", required=True)
    leaf(pres, "decide", cmd_pres_decide, "truth of a sentence").add_argument("sentence")
    leaf(pres, "enum", cmd_pres_enum, "first formulas in canonical order").add_argument("--count", type=int, default=20)
    leaf(pres, "name", cmd_pres_name, "name of a formula").add_argument("formula")
    leaf(pres, "unname", cmd_pres_unname, "formula with a given name").add_argument("name", type=int)
    leaf(pres, "truthdef", cmd_pres_truthdef, "even/odd truth definitions").add_argument("--samples", type=int, default=200)
    p = leaf(pres, "noselfref", cmd_pres_noselfref, "refute representers of the diagonal of the evens")
    p.add_argument("--cap", type=int, default=7)
    p.add_argument("--samples", type=int, default=60)
    p = leaf(pres, "golden", cmd_pres_golden, "write the enumeration and naming golden files")
    p.add_argument("--out", default=None)
    p.add_argument("--count", type=int, default=1000)

    quine = top.add_parser("quine", help="the quotation language").add_subparsers(dest="command", required=True)
    leaf(quine, "truth", cmd_quine_truth, "truth of a sentence").add_argument("sentence")
    leaf(quine, "printable", cmd_quine_printable, "printability and derivation").add_argument("sentence")
    leaf(quine, "diag", cmd_quine_diag, "the diagonal sentence of a formula").add_argument("formula")
    leaf(quine, "goedel", cmd_quine_goedel, "the sentence that says it is not printable")
    leaf(quine, "tarski", cmd_quine_tarski, "where a formula fails to define truth").add_argument("--phi", required=True)
    leaf(quine, "minproof", cmd_quine_minproof, "shortest derivation length").add_argument("sentence")
    leaf(quine, "longtheorem", cmd_quine_longtheorem, "a theorem needing N steps").add_argument("--n", type=int, required=True)

    p = leaf(top, "liar", cmd_liar, "generalized liar for a limitation theorem")
    p.add_argument("--system", choices=("pres", "quine"), required=True)
    p.add_argument("--variant", choices=tuple(VARIANTS), required=True)
    p.add_argument("--pi", required=True)
    return parser


# ------------------------------------------------------------------------------
# Entry points
# ------------------------------------------------------------------------------

def render_text(report: Report) -> str:
    lines = [report.summary] if report.summary else []
    for fact in report.facts:
        value = _flag(fact.value) if isinstance(fact.value, bool) else fact.value
        lines.append(f"  {fact.label}: {value}")
    return "\n".join(lines)


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    settings = get_settings()
    logging.basicConfig(
        level=settings.log_level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    args.argv = argv

    try:
        report, code = args.handler(args)
    except (FormulaSyntaxError, FreeVariableError) as exc:
        print(f"liarlab: {exc}\n{GRAMMARS}", file=sys.stderr, end="")
        return EXIT_USAGE
    except (BudgetExceeded, NameUnassigned) as exc:
        print(f"liarlab: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (LiarlabError, ValueError) as exc:
        print(f"liarlab: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.json:
        print(report.model_dump_json(by_alias=True, indent=2))
    else:
        print(render_text(report))
    logger.debug("exit %d for %s", code, argv)
    return code


def main() -> None:
    sys.exit(run())

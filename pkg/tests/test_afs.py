import pytest

from liarlab.errors import NotAFormula, NotAName
from liarlab.services.afs import (
    ExpressionKind,
    NameSet,
    SentenceSet,
    all_names,
    check_representation,
    classify,
    complement,
    complement_in_formulas,
    diagonal_name_set,
    diagonal_sentence,
    enumerate_sentences,
    formula_set,
    generalized_liar_witness,
    image_under_naming,
    liar_set,
    liar_violation,
    substitute,
)
from liarlab.services.presburger import syntax as pres_syntax
from liarlab.services.presburger.system import truth_set as pres_truth
from liarlab.services.quineland import syntax
from liarlab.services.quineland.semantics import AXIOM
from liarlab.services.quineland.syntax import Diag, Quote, X
from liarlab.services.quineland.system import printable_set, truth_set


def q(text):
    return syntax.parse_formula(text)


class TestClassify:
    def test_quineland(self, quine):
        assert classify(quine, AXIOM) is ExpressionKind.SENTENCE
        assert classify(quine, q("Pr(x)")) is ExpressionKind.PROPER_FORMULA
        assert classify(quine, Diag(X)) is ExpressionKind.OTHER

    def test_presburger(self, pres):
        assert classify(pres, pres_syntax.parse("0 = 0")) is ExpressionKind.SENTENCE
        assert classify(pres, pres_syntax.parse("x = 0")) is ExpressionKind.PROPER_FORMULA
        assert classify(pres, 7) is ExpressionKind.OTHER

    def test_enumerate_sentences(self, pres, quine):
        assert [pres_syntax.serialize(s) for s in enumerate_sentences(pres, 4)] == ["0 = 0", "0 = 1", "1 = 0", "1 = 1"]
        assert enumerate_sentences(quine, 1) == [q("Pr(<x>)")]


class TestSubstitute:
    def test_closes_proper_formulas(self, quine, pres):
        assert substitute(quine, q("Pr(x)"), Quote(q("Pr(x)"))) == q("Pr(<Pr(x)>)")
        assert pres_syntax.serialize(substitute(pres, pres_syntax.parse("x = x"), 1)) == "1 = 1"

    def test_sentences_are_fixed(self, quine):
        s = q("Pr(<x>)")
        assert substitute(quine, s, Quote(AXIOM)) == s

    def test_errors(self, quine, pres):
        with pytest.raises(NotAFormula):
            substitute(quine, Diag(X), Quote(AXIOM))
        with pytest.raises(NotAName):
            substitute(quine, q("Pr(x)"), Quote(X))
        with pytest.raises(NotAName):
            substitute(pres, pres_syntax.parse("x = 0"), -3)


class TestNameSets:
    def test_image_under_naming(self, quine):
        image = image_under_naming(quine, printable_set(quine))
        assert Quote(AXIOM) in image
        assert Quote(q("Pr(x)")) not in image
        assert all(n in all_names(quine) for n in quine.enumerate_names(20))

    def test_image_rejects_negative_bound(self, quine):
        with pytest.raises(ValueError):
            image_under_naming(quine, printable_set(quine), bound=-1)

    def test_complement_keeps_the_preimage(self, quine):
        image = image_under_naming(quine, printable_set(quine))
        flipped = complement(image)
        assert flipped.preimage is not None
        assert Quote(AXIOM) not in flipped
        assert Quote(q("Pr(x)")) in flipped
        assert complement(NameSet("X", lambda n: True)).preimage is None

    def test_complement_in_formulas(self, quine):
        not_printable = complement_in_formulas(printable_set(quine))
        assert q("Pr(x)") in not_printable
        assert AXIOM not in not_printable

    def test_diagonal_name_set_without_preimage(self, quine):
        image = image_under_naming(quine, printable_set(quine))
        plain = NameSet("g*P", image.member)
        with_preimage = diagonal_name_set(quine, image)
        without = diagonal_name_set(quine, plain)
        for n in quine.enumerate_names(40):
            assert (n in with_preimage) == (n in without)

    def test_diagonal_name_set_of_all_names(self, quine):
        full = diagonal_name_set(quine, all_names(quine))
        assert all(n in full for n in quine.enumerate_names(20))

    def test_presburger_image_at_name_zero(self, pres):
        assert 0 in image_under_naming(pres, pres_truth(pres))
        assert 1 not in image_under_naming(pres, pres_truth(pres))


class TestRepresentation:
    def test_empty_sample(self, quine):
        with pytest.raises(ValueError):
            check_representation(quine, q("Pr(x)"), all_names(quine), truth_set(quine), [])

    def test_reports_first_failure(self, quine):
        names = quine.enumerate_names(10)
        report = check_representation(quine, q("Pr(x)"), all_names(quine), truth_set(quine), names)
        assert report is not None
        assert report.witness_name == "<Pr(x)>"
        assert report.lhs is False and report.rhs is True

    def test_rejects_non_formula(self, quine):
        with pytest.raises(NotAFormula):
            check_representation(quine, Diag(X), all_names(quine), truth_set(quine), [Quote(AXIOM)])


class TestLiar:
    def test_diagonal_sentence(self, quine, pres):
        assert diagonal_sentence(quine, q("~Pr(diag(x))")) == q("~Pr(diag(<~Pr(diag(x))>))")
        assert diagonal_sentence(quine, AXIOM) == AXIOM
        assert pres_syntax.serialize(diagonal_sentence(pres, pres_syntax.parse("x = x"))) == (
            "1+1+1+1+1+1+1+1+1+1+1+1+1 = 1+1+1+1+1+1+1+1+1+1+1+1+1"
        )

    def test_liar_set(self, quine):
        liars = liar_set(quine, truth_set(quine))
        # Pr(x)[<Pr(x)>] = Pr(<Pr(x)>) is false
        assert Quote(q("Pr(x)")) in liars
        assert Quote(AXIOM) not in liars

    def test_degenerate_generalized_liar(self, quine):
        everything = formula_set("F", quine.is_formula)
        nothing = SentenceSet("∅", lambda e: False)
        lam, facts = generalized_liar_witness(quine, everything, nothing, q("Pr(x)"))
        assert lam == q("Pr(<Pr(x)>)")
        assert facts.lambda_in_s and facts.lambda_in_a and not facts.lambda_in_b
        assert facts.represents_at_name
        assert facts.separates


@pytest.mark.parametrize("instance", ["pres", "quine"])
class TestInvariants:
    def test_substitution_closes_and_fixes(self, request, instance):
        system = request.getfixturevalue(instance)
        names = system.enumerate_names(12)
        for f in system.enumerate_formulas(200):
            for n in names:
                closed = substitute(system, f, n)
                assert system.is_sentence(closed)
                if system.is_sentence(f):
                    assert closed == f

    def test_naming_is_a_bijection(self, request, instance):
        system = request.getfixturevalue(instance)
        formulas = system.enumerate_formulas(1000)
        names = [system.name_of(f) for f in formulas]
        assert len(set(names)) == len(names)
        assert all(system.is_name(n) for n in names)
        assert all(system.formula_of(n) == f for n, f in zip(names, formulas))

    def test_reports_are_deterministic(self, request, instance):
        system = request.getfixturevalue(instance)
        t = pres_truth(system) if instance == "pres" else truth_set(system)
        for pi in system.enumerate_formulas(20):
            first = liar_violation(system, pi, t)
            second = liar_violation(system, pi, t)
            assert first == second
            assert first.model_dump_json(by_alias=True) == second.model_dump_json(by_alias=True)

import pytest
from hypothesis import given, settings, strategies as st

from liarlab.errors import FormulaSyntaxError, NotAName, NotASentence
from liarlab.services.afs import (
    check_representation,
    diagonal_name_set,
    diagonal_sentence,
    image_under_naming,
    liar_violation,
)
from liarlab.services.quineland import semantics, syntax
from liarlab.services.quineland.semantics import AXIOM, Derivation, Rule
from liarlab.services.quineland.syntax import And, Diag, Not, Pr, Quote, X
from liarlab.services.quineland.system import (
    goedel_sentence,
    printable_set,
    proof_bounded_set,
    self_ref_transform_T,
    truth_set,
)

SENTENCES = [f for f in syntax.enumerate_up_to_size(7) if syntax.is_sentence(f)]


def q(text):
    return syntax.parse_formula(text)


class TestSyntax:
    @pytest.mark.parametrize(
        "text, expr",
        [
            ("~Pr(<x>)", Not(Pr(Quote(X)))),
            ("Pr(diag(x))", Pr(Diag(X))),
            ("(Pr(x) & ~Pr(x))", And(Pr(X), Not(Pr(X)))),
            ("Pr(<<x>>)", Pr(Quote(Quote(X)))),
            (" Pr ( < Pr(x) > ) ", Pr(Quote(Pr(X)))),
        ],
    )
    def test_parse(self, text, expr):
        assert syntax.parse(text) == expr
        assert syntax.parse(syntax.serialize(expr)) == expr

    @pytest.mark.parametrize("text", ["Pr(x", "Pr(y)", "(Pr(x) Pr(x))", "~", "Pr(x))", "<x"])
    def test_parse_errors(self, text):
        with pytest.raises(FormulaSyntaxError):
            syntax.parse(text)

    def test_parse_formula_rejects_terms(self):
        with pytest.raises(FormulaSyntaxError):
            syntax.parse_formula("diag(x)")

    @pytest.mark.parametrize("n, expected", [(2, 1), (3, 3), (4, 8), (5, 22), (6, 62)])
    def test_formula_counts_by_size(self, n, expected):
        assert len(syntax.formulas_of_size(n)) == expected

    def test_enumeration_order(self):
        texts = [syntax.serialize(f) for f in syntax.enumerate_up_to_size(3)]
        assert texts == ["Pr(x)", "Pr(<x>)", "Pr(diag(x))", "~Pr(x)"]

    def test_enumerated_formulas_round_trip(self):
        for f in syntax.enumerate_up_to_size(6):
            assert syntax.parse(syntax.serialize(f)) == f

    def test_quoted_x_is_not_free(self):
        assert syntax.is_sentence(q("Pr(<x>)"))
        assert not syntax.is_sentence(q("Pr(diag(x))"))
        assert not syntax.is_sentence(Quote(AXIOM))

    def test_substitute(self):
        assert syntax.substitute(q("Pr(x)"), Quote(q("Pr(x)"))) == q("Pr(<Pr(x)>)")
        sentence = q("Pr(<x>)")
        assert syntax.substitute(sentence, Quote(q("Pr(x)"))) is sentence


class TestDenotation:
    def test_diag_of_goedel_pi_names_the_goedel_sentence(self):
        pi = q("~Pr(diag(x))")
        assert semantics.denote(Diag(Quote(pi))) == Quote(q("~Pr(diag(<~Pr(diag(x))>))"))

    def test_diag_of_a_sentence_is_its_name(self):
        assert semantics.denote(Diag(Quote(AXIOM))) == Quote(AXIOM)

    def test_quote_is_self_denoting(self):
        assert semantics.denote(Quote(X)) == Quote(X)

    def test_diag_of_a_non_formula_falls_back_to_identity(self):
        assert semantics.denote(Diag(Quote(X))) == Quote(X)

    def test_open_terms_have_no_denotation(self):
        with pytest.raises(NotASentence):
            semantics.denote(Diag(X))


class TestPrinter:
    def test_axiom(self):
        assert semantics.printable(AXIOM)
        assert semantics.min_proof_length(AXIOM) == 1

    def test_quotation_of_the_axiom(self):
        s = q("Pr(<~Pr(<x>)>)")
        assert semantics.printable(s)
        assert len(semantics.derivation(s)) == 2

    def test_diag_is_not_unfolded_by_the_printer(self):
        assert not semantics.printable(q("Pr(diag(<~Pr(diag(x))>))"))

    def test_double_negation_chain(self):
        assert semantics.min_proof_length(q("~~~~~Pr(<x>)")) == 3

    def test_duplication(self):
        s = And(AXIOM, AXIOM)
        assert semantics.predecessor(s) == (Rule.R1, AXIOM)
        assert semantics.min_proof_length(s) == 2
        assert not semantics.printable(And(AXIOM, Not(Not(AXIOM))))

    def test_unprintable_has_no_derivation(self):
        s = q("Pr(<x>)")
        assert not semantics.printable(s)
        assert semantics.derivation(s) is None
        assert semantics.min_proof_length(s) is None

    def test_rejects_proper_formulas(self):
        with pytest.raises(NotASentence):
            semantics.printable(q("Pr(x)"))

    def test_printed_starts_breadth_first(self):
        first = semantics.printed(4)
        assert first == [AXIOM, And(AXIOM, AXIOM), Not(Not(AXIOM)), Pr(Quote(AXIOM))]

    def test_printed_sentences_are_printable_and_true(self):
        for s in semantics.printed(10_000):
            assert semantics.printable(s)
            assert semantics.truth(s)

    def test_derivations_check(self):
        for s in semantics.printed(200):
            d = semantics.derivation(s)
            assert semantics.check_derivation(d)
            assert d.conclusion == s
            assert len(d) == semantics.min_proof_length(s)

    def test_check_derivation_rejects_a_forged_step(self):
        forged = Derivation(steps=(AXIOM, Pr(Quote(X))), justifications=((Rule.AXIOM, None), (Rule.R3, 0)))
        assert not semantics.check_derivation(forged)
        out_of_order = Derivation(steps=(AXIOM, Not(Not(AXIOM))), justifications=((Rule.AXIOM, None), (Rule.R2, 1)))
        assert not semantics.check_derivation(out_of_order)


class TestTruth:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("~Pr(<x>)", True),
            ("Pr(<~Pr(<x>)>)", True),
            ("Pr(<Pr(x)>)", False),
            ("Pr(<<x>>)", False),
            ("(~Pr(<x>) & Pr(<~Pr(<x>)>))", True),
            ("(~Pr(<x>) & Pr(<x>))", False),
        ],
    )
    def test_truth_examples(self, text, expected):
        assert semantics.truth(q(text)) is expected

    def test_rejects_proper_formulas(self):
        with pytest.raises(NotASentence):
            semantics.truth(q("Pr(x)"))

    @settings(deadline=None, max_examples=200)
    @given(st.sampled_from(SENTENCES))
    def test_negation_axioms(self, sentence):
        assert semantics.truth(Not(sentence)) is (not semantics.truth(sentence))
        assert semantics.printable(Not(Not(sentence))) is semantics.printable(sentence)


class TestGoedel:
    def test_facts(self):
        pi, lam, facts = goedel_sentence()
        assert syntax.serialize(pi) == "~Pr(diag(x))"
        assert syntax.serialize(lam) == "~Pr(diag(<~Pr(diag(x))>))"
        assert facts.diag_fixed_point
        assert facts.truth_lambda
        assert not facts.printable_lambda
        assert not facts.printable_negation
        assert not facts.truth_negation

    def test_lambda_is_the_diagonal_sentence(self, quine):
        pi, lam, _facts = goedel_sentence(quine)
        assert diagonal_sentence(quine, pi) == lam
        assert diagonal_sentence(quine, AXIOM) == AXIOM

    def test_pr_x_represents_printability(self, quine):
        names = quine.enumerate_names(200)
        p = printable_set(quine)
        assert check_representation(quine, q("Pr(x)"), image_under_naming(quine, p), truth_set(quine), names) is None


class TestSelfReference:
    def test_transform(self):
        assert self_ref_transform_T(q("Pr(x)")) == q("Pr(diag(x))")
        assert self_ref_transform_T(q("~Pr(x)")) == q("~Pr(diag(x))")
        assert self_ref_transform_T(q("Pr(<x>)")) == q("Pr(<x>)")

    def test_transform_represents_the_diagonal_set(self, quine):
        names = quine.enumerate_names(100)
        x = image_under_naming(quine, printable_set(quine))
        phi = self_ref_transform_T(q("Pr(x)"))
        assert check_representation(quine, phi, diagonal_name_set(quine, x), truth_set(quine), names) is None

    def test_diagonal_name_set_of_a_sentence_name(self, quine):
        d = diagonal_name_set(quine, image_under_naming(quine, printable_set(quine)))
        assert Quote(AXIOM) in d
        assert Quote(q("Pr(<x>)")) not in d


class TestNaming:
    def test_names_are_quotes_of_formulas(self, quine):
        assert quine.name_of(AXIOM) == Quote(AXIOM)
        assert quine.formula_of(Quote(AXIOM)) == AXIOM
        assert quine.is_name(Quote(q("Pr(x)")))
        assert not quine.is_name(Quote(X))
        with pytest.raises(NotAName):
            quine.formula_of(Quote(X))

    def test_name_samples_follow_the_enumeration(self, quine):
        assert quine.enumerate_names(2) == [Quote(q("Pr(x)")), Quote(q("Pr(<x>)"))]

    def test_liar_violated_for_every_small_formula(self, quine):
        t = truth_set(quine)
        formulas = list(syntax.enumerate_up_to_size(9))
        assert len(formulas) == 2276
        for pi in formulas:
            report = liar_violation(quine, pi, t)
            assert report.lhs != report.rhs, syntax.serialize(pi)

    def test_liar_example_pr_x(self, quine):
        report = liar_violation(quine, q("Pr(x)"), truth_set(quine))
        assert report.lambda_ == "Pr(<Pr(x)>)"
        assert report.lhs is False
        assert report.rhs is True


class TestProofLength:
    @pytest.mark.parametrize("n", range(1, 13))
    def test_long_theorem_escapes_p_n(self, quine, n):
        s = semantics.long_theorem(n)
        assert semantics.printable(s)
        assert semantics.min_proof_length(s) == n
        assert s not in proof_bounded_set(quine, n)
        assert s in proof_bounded_set(quine, n + 1)
        assert semantics.check_derivation(semantics.derivation(s))

    def test_long_theorem_six(self):
        assert syntax.serialize(semantics.long_theorem(6)) == "Pr(<~~Pr(<~~Pr(<~Pr(<x>)>)>)>)"

    def test_p_n_chain_is_increasing(self, quine):
        sentences = semantics.printed(300)
        for n in range(1, 8):
            smaller, larger = proof_bounded_set(quine, n), proof_bounded_set(quine, n + 1)
            assert all(s in larger for s in sentences if s in smaller)

    def test_rejects_bad_n(self, quine):
        with pytest.raises(ValueError):
            semantics.long_theorem(0)
        with pytest.raises(ValueError):
            proof_bounded_set(quine, 0)

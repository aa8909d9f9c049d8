import pytest

from liarlab.errors import FormulaSyntaxError, FreeVariableError
from liarlab.services.presburger import syntax
from liarlab.services.presburger.syntax import ONE, X, Eq, Exists, Not, Sum, Var


@pytest.mark.parametrize(
    "text, canonical",
    [
        ("E y. y+y = 1+1", "E y. y+y = 1+1"),
        ("E  q .  q + q=2", "E y. y+y = 1+1"),
        ("x != 0", "~(x = 0)"),
        ("~~0 = 0", "~~(0 = 0)"),
        ("0 = 0 & 1 = 1 | x = 0", "((0 = 0) & (1 = 1)) | (x = 0)"),
        ("0 = 0 -> 1 = 1 -> x = 0", "(0 = 0) -> ((1 = 1) -> (x = 0))"),
        ("A y. E z. y = z+z", "A y. E z. y = z+z"),
        ("x < 1", "E y. x+y+1 = 1"),
        ("3 = x", "1+1+1 = x"),
    ],
)
def test_parse_serialize_canonical(text, canonical):
    f = syntax.parse(text)
    assert syntax.serialize(f) == canonical
    assert syntax.parse(canonical) == f


def test_parse_builds_de_bruijn_indices():
    f = syntax.parse("E y. y+1 = x")
    assert f == Exists(Eq(Sum(Var(0), ONE), X))


@pytest.mark.parametrize("text", ["E y. y+y =", "0 = ", "(0 = 0", "0 = 0)", "E . 0 = 0", "0 # 0"])
def test_parse_rejects_malformed_input(text):
    with pytest.raises(FormulaSyntaxError):
        syntax.parse(text)


def test_parse_rejects_stray_free_variable():
    with pytest.raises(FreeVariableError) as err:
        syntax.parse("E y. y = z")
    assert err.value.variable == "z"


def test_substitute_replaces_x_with_numeral():
    f = syntax.parse("x = 1+1")
    assert syntax.serialize(syntax.substitute(f, 2)) == "1+1 = 1+1"
    assert syntax.serialize(syntax.substitute(syntax.parse("x = x"), 0)) == "0 = 0"


def test_substitute_leaves_sentences_alone():
    f = syntax.parse("E y. y = 0")
    assert syntax.substitute(f, 7) is f


def test_substitute_keeps_sums_right_nested():
    f = syntax.substitute(syntax.parse("E y. x+y = 1"), 2)
    assert syntax.serialize(f) == "E y. 1+1+y = 1"
    assert syntax.parse(syntax.serialize(f)) == f


def test_generalize_binds_x():
    f = syntax.generalize(syntax.parse("x+0 = x"))
    assert syntax.serialize(f) == "A y. y+0 = y"
    assert not syntax.has_free_x(f)


def test_binder_names_past_the_fifth():
    assert [syntax.binder_name(d) for d in range(7)] == ["y", "z", "u", "v", "w", "y5", "y6"]


def test_size_counts_nodes():
    assert syntax.size(syntax.parse("0 = 0")) == 3
    assert syntax.size(syntax.parse("E y. y+y = 1+1")) == 8
    assert syntax.size(Not(syntax.parse("x = 1"))) == 4


@pytest.mark.parametrize("n, expected", [(3, 9), (4, 41), (5, 227)])
def test_formula_counts_by_size(n, expected):
    assert len(syntax.formulas_of_size(n)) == expected


def test_enumeration_starts_with_the_size_three_equations():
    texts = [syntax.serialize(f) for f in syntax.enumerate_formulas(11)]
    assert texts == [
        "0 = 0", "0 = 1", "0 = x", "1 = 0", "1 = 1", "1 = x",
        "x = 0", "x = 1", "x = x", "A y. 0 = 0", "A y. 0 = 1",
    ]


def test_enumeration_is_ordered_and_unique():
    texts = [syntax.serialize(f) for f in syntax.enumerate_up_to_size(5)]
    assert len(texts) == len(set(texts)) == 9 + 41 + 227
    keys = [(syntax.size(syntax.parse(t)), t.encode()) for t in texts]
    assert keys == sorted(keys)


def test_enumerated_formulas_round_trip():
    for f in syntax.enumerate_up_to_size(5):
        assert syntax.parse(syntax.serialize(f)) == f


def test_deep_numerals_do_not_recurse():
    f = syntax.substitute(syntax.parse("x = 0"), 5000)
    assert syntax.size(f) == 1 + (2 * 5000 - 1) + 1
    assert syntax.serialize(f).count("1") == 5000


def test_numeral_literals_are_capped():
    f = syntax.parse(f"x = {syntax.MAX_NUMERAL}")
    assert f.left == X
    assert len(syntax.summands(f.right)) == syntax.MAX_NUMERAL
    with pytest.raises(FormulaSyntaxError) as err:
        syntax.parse(f"x = {syntax.MAX_NUMERAL + 1}")
    assert err.value.position == 4

import pytest
from hypothesis import given, settings, strategies as st

from paralogic.formula import (
    AnnotatedVar,
    Both,
    Conj,
    Disj,
    Falsum,
    FormulaSyntaxError,
    Impl,
    Language,
    LanguageError,
    Neg,
    Oblig,
    Var,
    depth,
    expand_abbreviation,
    negation_depth,
    parse_formula,
    parse_schema,
    render,
    subformula_closure,
    wellbehaved,
)

p, q, r = Var("p"), Var("q"), Var("r")


def test_parse_right_assoc_implication():
    assert parse_formula("p -> (q -> p)") == Impl(p, Impl(q, p))
    assert parse_formula("p -> q -> p") == Impl(p, Impl(q, p))


def test_parse_precedence():
    assert parse_formula("~p & q | r") == Disj(Conj(Neg(p), q), r)
    assert parse_formula("p | q & r -> r") == Impl(Disj(p, Conj(q, r)), r)


def test_parse_annotated_atoms():
    f = parse_formula("p:t & ~p:t")
    assert f == Conj(AnnotatedVar("p", "t"), Neg(AnnotatedVar("p", "t")))


def test_parse_constants_and_obligation():
    assert parse_formula("O #f -> #f") == Impl(Oblig(Falsum()), Falsum())
    assert parse_formula("O(p) & #b") == Conj(Oblig(p), Both())
    assert parse_formula("O ~p") == Oblig(Neg(p))


def test_unicode_connectives():
    assert parse_formula("¬p ∧ q ⊃ r") == parse_formula("~p & q -> r")


def test_bicond_expands():
    assert parse_formula("p <-> q") == Conj(Impl(p, q), Impl(q, p))


def test_syntax_error_has_position():
    with pytest.raises(FormulaSyntaxError) as e:
        parse_formula("p & (q | )")
    assert e.value.pos == 9
    with pytest.raises(FormulaSyntaxError):
        parse_formula("P & q")


def test_render_minimal_parentheses():
    assert render(parse_formula("(p -> q) -> r")) == "(p -> q) -> r"
    assert render(parse_formula("p -> (q -> r)")) == "p -> q -> r"
    assert render(parse_formula("~(p & q)")) == "~(p & q)"
    assert render(parse_formula("(p & q) & r")) == "p & q & r"
    assert render(parse_formula("p & (q & r)")) == "p & (q & r)"
    assert render(parse_formula("O(p -> q)")) == "O(p -> q)"


atoms = st.sampled_from([p, q, r, Falsum(), Both(), AnnotatedVar("p", "t"), AnnotatedVar("q", "top")])
formulas = st.recursive(
    atoms,
    lambda sub: st.one_of(
        st.builds(Neg, sub), st.builds(Oblig, sub),
        st.builds(Conj, sub, sub), st.builds(Disj, sub, sub), st.builds(Impl, sub, sub),
    ),
    max_leaves=12,
)


@settings(max_examples=300, deadline=None)
@given(formulas)
def test_round_trip(f):
    assert parse_formula(render(f)) == f


@settings(max_examples=100, deadline=None)
@given(formulas)
def test_render_is_whitespace_insensitive(f):
    assert parse_formula(render(f).replace(" ", "")) == f


def test_wellbehaved_degree_one():
    a = Var("a")
    assert expand_abbreviation("wellbehaved-degree", a, n=1) == Neg(Conj(a, Neg(a)))


def test_wellbehaved_degree_two():
    a = Var("a")
    a1 = Neg(Conj(a, Neg(a)))
    assert expand_abbreviation("wellbehaved-degree", a, n=2) == Conj(a1, Neg(Conj(a1, Neg(a1))))


def test_iterated_neg_and_power_base_cases():
    assert expand_abbreviation("iterated-neg", p, n=0) == p
    assert expand_abbreviation("iterated-neg", p, n=3) == Neg(Neg(Neg(p)))
    assert expand_abbreviation("power", p, n=0) == p
    assert expand_abbreviation("true-const") == Neg(Falsum())
    assert expand_abbreviation("bicond", p, q) == Conj(Impl(p, q), Impl(q, p))
    with pytest.raises(ValueError):
        wellbehaved(p, 0)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("base", ["p", "p & ~q", "~~(p -> q)"])
def test_wellbehaved_negation_depth_is_linear(n, base):
    a = parse_formula(base)
    assert negation_depth(wellbehaved(a, n)) <= 2 * n + depth(a)


def test_subformula_closure_examples():
    assert subformula_closure([parse_formula("p & ~p")]) == [p, Neg(p), Conj(p, Neg(p))]
    assert subformula_closure([parse_formula("p -> q"), q]) == [p, q, Impl(p, q)]
    assert subformula_closure([]) == []


def test_language_checks():
    Language("LPF", falsum=True).check(parse_formula("#f -> p"))
    with pytest.raises(LanguageError):
        Language("LP").check(parse_formula("#b -> p"))
    with pytest.raises(LanguageError):
        Language("LP").check(parse_formula("O p"))
    with pytest.raises(LanguageError):
        Language("Ptau", annotated=True).check(parse_formula("p:t & q"))
    with pytest.raises(LanguageError):
        Language("LP").check(parse_schema("A -> p"))

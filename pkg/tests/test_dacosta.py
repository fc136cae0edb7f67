import itertools

import pytest
from hypothesis import given, settings, strategies as st

from paralogic.dacosta import classical_neg_cn, cn_closure, cn_consequence, constraints, solve
from paralogic.formula import LanguageError, Var, parse_formula, wellbehaved
from paralogic.matrix import GuardExceeded

P = parse_formula


def brute_force(num_vars, clauses):
    """Lexicographically least model (True before False), or None."""
    for bits in itertools.product((True, False), repeat=num_vars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in clauses):
            return list(bits)
    return None


cnfs = st.integers(1, 8).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(st.integers(1, n).flatmap(lambda v: st.sampled_from((v, -v))),
                      min_size=1, max_size=3).map(tuple), max_size=25),
))


@settings(max_examples=400, deadline=None)
@given(cnfs)
def test_solver_matches_brute_force(cnf):
    n, clauses = cnf
    assert solve(n, clauses) == brute_force(n, clauses)


def test_solver_empty_clause_unsat():
    assert solve(2, [(1,), ()]) is None
    assert solve(1, [(1,), (-1,)]) is None
    assert solve(0, []) == []


def test_closure_examples():
    e = cn_closure([], P("~(p & ~p)"), 1)
    for f in ["p", "~p", "p & ~p", "~(p & ~p)", "~~(p & ~p)"]:
        assert P(f) in e
    assert wellbehaved(Var("p"), 1) in cn_closure([Var("p")], Var("p"), 1)
    e2 = cn_closure([Var("p")], Var("p"), 2)
    assert wellbehaved(Var("p"), 2) in e2
    assert cn_closure([], P("p | q"), 1) == cn_closure([], P("p | q"), 1)
    with pytest.raises(ValueError):
        cn_closure([], Var("p"), 0)


def test_closure_guard():
    with pytest.raises(GuardExceeded):
        cn_consequence([], P("(p -> q) & (r | ~s) & ~(p & ~q)"), 2, max_closure=20)


def test_non_contradiction_is_candidate():
    v = cn_consequence([], P("~(p & ~p)"), 1)
    assert not v.consequence
    c = v.candidate
    assert c[P("p")] and c[P("~p")] and c[P("p & ~p")] and not c[P("~(p & ~p)")]


def test_wellbehaved_contradiction_explodes():
    assert cn_consequence([wellbehaved(Var("p"), 1), P("p"), P("~p")], Var("q"), 1)


def test_contradiction_alone_does_not_explode():
    v = cn_consequence([P("p"), P("~p")], Var("q"), 1)
    assert not v and v.candidate[Var("q")] is False


def test_classical_negation_explodes():
    assert classical_neg_cn(Var("p"), 1) == P("~p & ~(p & ~p)")
    assert classical_neg_cn(P("p & q"), 1) == P("~(p & q) & ~((p & q) & ~(p & q))")
    assert cn_consequence([P("p"), classical_neg_cn(Var("p"), 1)], Var("q"), 1)


@pytest.mark.parametrize("text", ["p -> p", "p | ~p", "~~p -> p", "p & q -> p", "p -> p | q"])
def test_positive_theorems_hold(text):
    assert cn_consequence([], P(text), 1)


def test_candidate_satisfies_every_constraint():
    for text in ["~(p & ~p)", "~~p", "p -> ~~p", "~(p -> q) -> p & ~q"]:
        v = cn_consequence([], P(text), 1)
        if v:
            continue
        idx = {f: i + 1 for i, f in enumerate(v.closure)}
        model = {idx[f]: val for f, val in v.candidate.items()}
        for clause in constraints(list(v.closure), 1):
            assert any(model[abs(l)] == (l > 0) for l in clause)


def test_language_error():
    with pytest.raises(LanguageError):
        cn_consequence([], P("#f"), 1)

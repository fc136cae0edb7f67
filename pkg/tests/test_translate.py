import pytest

from paralogic.formula import Falsum, LanguageError, Var, parse_formula
from paralogic.matrix import B, F, T, FnTable, build_matrix, evaluate
from paralogic.translate import (
    consistency_formula,
    defined_table,
    interdefinability,
    lp_impl_in_rm3,
    lp_to_rm3,
    lp_via_bl,
    rm3_impl_in_lp,
    rm3_to_lp,
)

P = parse_formula
p, q = Var("p"), Var("q")


def test_definitions():
    assert rm3_impl_in_lp(p, q) == P("(p -> q) & (~q -> ~p)")
    assert lp_impl_in_rm3(p, q) == P("q | (p -> q)")


def test_defined_tables_match_native():
    assert defined_table("LP", rm3_impl_in_lp) == FnTable.from_matrix(build_matrix("RM3"), "imp")
    assert defined_table("RM3", lp_impl_in_rm3) == FnTable.from_matrix(build_matrix("LP"), "imp")
    assert interdefinability() == {"RM3 -> in LP": (9, 9), "LP -> in RM3": (9, 9)}


def test_diagonal_column():
    lp = build_matrix("LP")
    rm3 = build_matrix("RM3")
    for v in (T, F, B):
        assert evaluate(lp, {"p": v}, rm3_impl_in_lp(p, p)) is rm3.impl[v, v]


def test_round_trip_preserves_tables():
    f = P("(p -> q) -> ~p")
    lp, rm3 = build_matrix("LP"), build_matrix("RM3")
    for a in (T, F, B):
        for b in (T, F, B):
            v = {"p": a, "q": b}
            assert evaluate(lp, v, rm3_to_lp(f)) is evaluate(rm3, v, f)
            assert evaluate(rm3, v, lp_to_rm3(f)) is evaluate(lp, v, f)


def test_consistency_formula():
    assert consistency_formula(p) == P("(p -> #f) | (~p -> #f)")
    lpf = build_matrix("LPF")
    f = consistency_formula(p, "LPF")
    assert [evaluate(lpf, {"p": v}, f) for v in (T, F, B)] == [T, T, F]
    assert evaluate(lpf, {}, consistency_formula(Falsum(), "LPF")) in lpf.designated
    with pytest.raises(LanguageError):
        consistency_formula(p, "LP")


@pytest.mark.parametrize("prem, goal, holds", [
    ([], "p | ~p", True),
    (["p", "~p"], "q", False),
    (["p -> q", "p"], "q", True),
])
def test_lp_via_bl_examples(prem, goal, holds):
    s = lp_via_bl([P(x) for x in prem], P(goal))
    assert s.agree and s.lp.holds is holds

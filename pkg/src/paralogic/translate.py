"""Definitions of one logic's connectives inside another, checked semantically."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .formula import Conj, Disj, Falsum, Formula, Impl, Language, LanguageError, Neg, Var, transform, variables_of
from .matrix import DEFAULT_MAX_VARS, THREE, FnTable, Verdict, build_matrix, consequence, evaluate


def rm3_impl_in_lp(a: Formula, b: Formula) -> Formula:
    """RM3's implication in LP->: ``(A -> B) & (~B -> ~A)``."""
    return Conj(Impl(a, b), Impl(Neg(b), Neg(a)))


def lp_impl_in_rm3(a: Formula, b: Formula) -> Formula:
    """LP->'s implication in RM3: ``B | (A -> B)``."""
    return Disj(b, Impl(a, b))


def _rewrite_impl(f: Formula, build) -> Formula:
    def fn(node):
        if isinstance(node, Impl):
            return build(_rewrite_impl(node.left, build), _rewrite_impl(node.right, build))
        return None
    return transform(f, fn)


def rm3_to_lp(f: Formula) -> Formula:
    """Replace every RM3 implication by its LP-> definition."""
    return _rewrite_impl(f, rm3_impl_in_lp)


def lp_to_rm3(f: Formula) -> Formula:
    """Replace every LP-> implication by its RM3 definition."""
    return _rewrite_impl(f, lp_impl_in_rm3)


def consistency_formula(a: Formula, logic: str | Language | None = None) -> Formula:
    """``(A -> #f) | (~A -> #f)``: designated exactly when A is not both true and false."""
    if logic is not None:
        lang = logic if isinstance(logic, Language) else build_matrix(logic).language
        if not lang.falsum:
            raise LanguageError(f"#f is not in the language of {lang.name}")
        lang.check(a)
    return Disj(Impl(a, Falsum()), Impl(Neg(a), Falsum()))


def defined_table(logic: str, build) -> FnTable:
    """Table of the binary connective ``build(p, q)`` under ``logic``."""
    m = build_matrix(logic)
    f = build(Var("p"), Var("q"))
    return FnTable(2, {(x, y): evaluate(m, {"p": x, "q": y}, f) for x in THREE for y in THREE})


def interdefinability() -> dict[str, tuple[int, int]]:
    """Rows on which each defined implication agrees with the native one (out of 9)."""
    rm3 = FnTable.from_matrix(build_matrix("RM3"), "imp")
    lp = FnTable.from_matrix(build_matrix("LP"), "imp")
    in_lp = defined_table("LP", rm3_impl_in_lp)
    in_rm3 = defined_table("RM3", lp_impl_in_rm3)
    agree = lambda g, h: sum(g.mapping[k] is h.mapping[k] for k in g.mapping)
    return {
        "RM3 -> in LP": (agree(in_lp, rm3), 9),
        "LP -> in RM3": (agree(in_rm3, lp), 9),
    }


@dataclass(frozen=True)
class Simulation:
    augmented: tuple[Formula, ...]
    lp: Verdict
    bl: Verdict

    @property
    def agree(self) -> bool:
        return self.lp.holds == self.bl.holds


def lp_via_bl(premises: Iterable[Formula], conclusion: Formula,
              max_vars: int = DEFAULT_MAX_VARS) -> Simulation:
    """Decide the LP-> query directly and in BL-> with ``p | ~p`` for every variable."""
    premises = list(premises)
    names = variables_of(premises + [conclusion])
    augmented = tuple(premises + [Disj(Var(n), Neg(Var(n))) for n in names])
    lp = consequence(build_matrix("LP"), premises, conclusion, max_vars)
    bl = consequence(build_matrix("BL"), augmented, conclusion, max_vars)
    return Simulation(augmented, lp, bl)

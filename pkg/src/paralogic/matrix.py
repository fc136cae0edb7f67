"""Finite-valued truth-functional logics: LP->, its F/B enrichments, K3->, RM3, BL->.

Consequence is decided by enumerating every valuation of the query's
variables.  Valuations are enumerated lexicographically: variables sorted by
name, the first variable most significant, values in the order t < f < b < n.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .formula import (
    Both,
    Conj,
    Disj,
    Falsum,
    Formula,
    Impl,
    Language,
    LanguageError,
    Neg,
    Var,
    variables,
    variables_of,
)

DEFAULT_MAX_VARS = 10


class GuardExceeded(ValueError):
    """An enumeration would exceed its configured size limit."""


class TV(enum.Enum):
    t = "t"
    f = "f"
    b = "b"
    n = "n"

    def __str__(self):
        return self.value

    def __repr__(self):
        return f"TV.{self.value}"


T, F, B, N = TV.t, TV.f, TV.b, TV.n
ORDER = (T, F, B, N)
THREE = (T, F, B)

DESIGNATED = "designated-preservation"
RM3_MIXED = "rm3-mixed"

LOGIC_IDS = ("LP", "LPF", "LPB", "LPFB", "K3", "RM3", "BL", "CL")
_ALIASES = {
    "lp": "LP", "lpf": "LPF", "lpb": "LPB", "lpfb": "LPFB",
    "k3": "K3", "rm3": "RM3", "bl": "BL", "cl": "CL",
}


def canonical_id(logic: str) -> str:
    key = logic.replace("->", "").replace("→", "").replace(",", "").replace("_", "")
    if key in LOGIC_IDS:
        return key
    if key.lower() in _ALIASES:
        return _ALIASES[key.lower()]
    raise ValueError(f"unknown matrix logic {logic!r}")


@dataclass(frozen=True)
class Matrix:
    logic: str
    values: tuple[TV, ...]
    designated: frozenset
    neg: Mapping[TV, TV]
    conj: Mapping[tuple[TV, TV], TV]
    disj: Mapping[tuple[TV, TV], TV]
    impl: Mapping[tuple[TV, TV], TV]
    language: Language
    mode: str = DESIGNATED

    def table(self, connective: str) -> Mapping:
        return {"neg": self.neg, "and": self.conj, "or": self.disj, "imp": self.impl}[connective]


# Three-valued LP-style tables ---------------------------------------------

def _lp_conj(a, b):
    if a is T and b is T:
        return T
    if a is F or b is F:
        return F
    return B


def _lp_disj(a, b):
    if a is T or b is T:
        return T
    if a is F and b is F:
        return F
    return B


def _lp_neg(a):
    return {T: F, F: T}.get(a, B)


def _lp_impl(a, b):
    return T if a is F else b


def _k3_impl(a, b):
    return b if a is T else T


def _rm3_impl(a, b):
    if a is B and b is B:
        return B
    if a is F or b is T:
        return T
    return F


# BL->: truth order f < {n, b} < t, n and b incomparable.
_BL_RANK = {F: 0, N: 1, B: 1, T: 2}


def _bl_meet(a, b):
    if a == b:
        return a
    if _BL_RANK[a] == _BL_RANK[b]:
        return F
    return a if _BL_RANK[a] < _BL_RANK[b] else b


def _bl_join(a, b):
    if a == b:
        return a
    if _BL_RANK[a] == _BL_RANK[b]:
        return T
    return a if _BL_RANK[a] > _BL_RANK[b] else b


def _bl_neg(a):
    return {T: F, F: T}.get(a, a)


def _bl_impl(a, b):
    return b if a in (T, B) else T


def _tabulate(values, fn2):
    return {(a, b): fn2(a, b) for a in values for b in values}


def build_matrix(logic: str) -> Matrix:
    logic = canonical_id(logic)
    if logic == "CL":
        vals = (T, F)
        return Matrix(
            "CL", vals, frozenset({T}),
            {a: _lp_neg(a) for a in vals},
            _tabulate(vals, _lp_conj), _tabulate(vals, _lp_disj), _tabulate(vals, _lp_impl),
            Language("CL"),
        )
    if logic == "BL":
        vals = ORDER
        return Matrix(
            "BL", vals, frozenset({T, B}),
            {a: _bl_neg(a) for a in vals},
            _tabulate(vals, _bl_meet), _tabulate(vals, _bl_join), _tabulate(vals, _bl_impl),
            Language("BL"),
        )
    impl = {"K3": _k3_impl, "RM3": _rm3_impl}.get(logic, _lp_impl)
    designated = frozenset({T}) if logic == "K3" else frozenset({T, B})
    language = Language(logic, falsum=logic in ("LPF", "LPFB"), both=logic in ("LPB", "LPFB"))
    return Matrix(
        logic, THREE, designated,
        {a: _lp_neg(a) for a in THREE},
        _tabulate(THREE, _lp_conj), _tabulate(THREE, _lp_disj), _tabulate(THREE, impl),
        language,
        RM3_MIXED if logic == "RM3" else DESIGNATED,
    )


def evaluate(m: Matrix, v: Mapping[str, TV], f: Formula) -> TV:
    """Compositional evaluation.  ``f`` is assumed to be in ``m``'s language."""
    if isinstance(f, Var):
        return v[f.name]
    if isinstance(f, Neg):
        return m.neg[evaluate(m, v, f.arg)]
    if isinstance(f, Impl):
        return m.impl[evaluate(m, v, f.left), evaluate(m, v, f.right)]
    if isinstance(f, Conj):
        return m.conj[evaluate(m, v, f.left), evaluate(m, v, f.right)]
    if isinstance(f, Disj):
        return m.disj[evaluate(m, v, f.left), evaluate(m, v, f.right)]
    if isinstance(f, Falsum):
        return F
    if isinstance(f, Both):
        return B
    raise LanguageError(f"cannot evaluate {type(f).__name__} in {m.logic}")


def eval_formula(m: Matrix, v: Mapping[str, TV], f: Formula) -> TV:
    """Checked evaluation: language and totality of ``v`` are validated first."""
    m.language.check(f)
    missing = variables(f) - set(v)
    if missing:
        raise ValueError(f"valuation does not assign {sorted(missing)}")
    return evaluate(m, v, f)


def valuations(names: list[str], values: Iterable[TV]) -> Iterable[dict[str, TV]]:
    values = tuple(values)
    for combo in itertools.product(values, repeat=len(names)):
        yield dict(zip(names, combo))


def _guard(names, max_vars):
    if len(names) > max_vars:
        raise GuardExceeded(f"{len(names)} variables exceed the limit of {max_vars}")


def satisfied_at(m: Matrix, premise_values: list[TV], conclusion: TV) -> bool:
    """Whether one valuation respects the consequence clause of ``m``."""
    if m.mode == RM3_MIXED:
        return (
            any(x is F for x in premise_values)
            or conclusion is T
            or (all(x is B for x in premise_values) and conclusion is B)
        )
    return any(x not in m.designated for x in premise_values) or conclusion in m.designated


@dataclass(frozen=True)
class Verdict:
    holds: bool
    countermodel: dict[str, TV] | None = None

    def __bool__(self):
        return self.holds


def consequence(m: Matrix, premises: Iterable[Formula], conclusion: Formula,
                max_vars: int = DEFAULT_MAX_VARS) -> Verdict:
    premises = list(premises)
    m.language.check_all(premises + [conclusion])
    names = variables_of(premises + [conclusion])
    _guard(names, max_vars)
    for v in valuations(names, m.values):
        pv = [evaluate(m, v, p) for p in premises]
        if not satisfied_at(m, pv, evaluate(m, v, conclusion)):
            return Verdict(False, v)
    return Verdict(True)


def is_valid(m: Matrix, f: Formula, max_vars: int = DEFAULT_MAX_VARS) -> bool:
    return consequence(m, [], f, max_vars).holds


def truth_table(m: Matrix, f: Formula, max_vars: int = DEFAULT_MAX_VARS) -> list[tuple[dict[str, TV], TV]]:
    m.language.check(f)
    names = sorted(variables(f))
    _guard(names, max_vars)
    return [(v, evaluate(m, v, f)) for v in valuations(names, m.values)]


def table_tsv(m: Matrix, f: Formula, max_vars: int = DEFAULT_MAX_VARS) -> str:
    rows = truth_table(m, f, max_vars)
    names = sorted(variables(f))
    lines = ["\t".join(names + ["value"])]
    for v, val in rows:
        lines.append("\t".join([str(v[n]) for n in names] + [str(val)]))
    return "\n".join(lines) + "\n"


# Representability ---------------------------------------------------------

@dataclass(frozen=True)
class FnTable:
    """A total function from {t,f,b}^arity to {t,f,b}."""

    arity: int
    mapping: Mapping[tuple[TV, ...], TV]

    def __post_init__(self):
        expected = set(itertools.product(THREE, repeat=self.arity))
        if set(self.mapping) != expected:
            raise ValueError("function table is not total over {t,f,b}^%d" % self.arity)

    def __call__(self, *args: TV) -> TV:
        return self.mapping[tuple(args)]

    @classmethod
    def from_callable(cls, arity: int, fn) -> "FnTable":
        return cls(arity, {x: fn(*x) for x in itertools.product(THREE, repeat=arity)})

    @classmethod
    def from_matrix(cls, m: Matrix, connective: str) -> "FnTable":
        table = m.table(connective)
        if connective == "neg":
            return cls(1, {(a,): table[a] for a in THREE})
        return cls(2, {(a, b): table[a, b] for a in THREE for b in THREE})


def all_unary_tables() -> list[FnTable]:
    """The 27 unary functions on {t,f,b}, in lexicographic order of (g(t), g(f), g(b))."""
    return [
        FnTable(1, {(T,): gt, (F,): gf, (B,): gb})
        for gt, gf, gb in itertools.product(THREE, repeat=3)
    ]


@dataclass(frozen=True)
class Classification:
    tf_closed: bool
    b_free: bool
    representable_in: frozenset


def classify_function(g: FnTable) -> Classification:
    image_tf = {g.mapping[x] for x in itertools.product((T, F), repeat=g.arity)}
    tf_closed = image_tf <= {T, F}
    b_free = g.mapping[(B,) * g.arity] is B
    rep = {"LPFB"}
    if tf_closed:
        rep.add("LPF")
    if b_free:
        rep.add("LPB")
    if tf_closed and b_free:
        rep.add("LP")
    return Classification(tf_closed, b_free, frozenset(rep))


SYNTH_MAX_ARITY = 3


def _arg_vars(arity: int) -> list[Var]:
    return [Var(f"p{i + 1}") for i in range(arity)] if arity > 1 else [Var("p")][:arity]


def _fits(m: Matrix, f: Formula, g: FnTable, args: list[Var]) -> bool:
    for x, want in g.mapping.items():
        v = {a.name: val for a, val in zip(args, x)}
        if evaluate(m, v, f) is not want:
            return False
    return True


def _small_candidates(args: list[Var]) -> Iterable[Formula]:
    atoms: list[Formula] = [*args, Falsum(), Both()]
    yield from atoms
    unary = [Neg(a) for a in atoms]
    yield from unary
    level1 = atoms + unary
    for op in (Impl, Conj, Disj):
        for a in level1:
            for b in level1:
                yield op(a, b)


def indicator(p: Formula, value: TV) -> Formula:
    """Two-valued formula that is t exactly when ``p`` has ``value`` (LP->,F language)."""
    if value is F:
        return Impl(p, Falsum())
    if value is T:
        return Impl(Neg(p), Falsum())
    return Neg(Disj(indicator(p, T), indicator(p, F)))


_CONST = {T: Neg(Falsum()), F: Falsum(), B: Both()}


def synthesize_formula(g: FnTable) -> Formula:
    """A formula of LP->,F,B whose table over p (or p1..pk) equals ``g``.

    Small formulas are tried first; otherwise a disjunctive normal form over
    two-valued indicators is built.  The result is always checked.
    """
    if g.arity > SYNTH_MAX_ARITY:
        raise GuardExceeded(f"arity {g.arity} exceeds {SYNTH_MAX_ARITY}")
    m = build_matrix("LPFB")
    args = _arg_vars(g.arity)
    for cand in _small_candidates(args):
        if _fits(m, cand, g, args):
            return cand
    disjuncts = []
    for x, out in g.mapping.items():
        if out is F:
            continue
        term: Formula = _CONST[out]
        for a, val in zip(args, x):
            term = Conj(indicator(a, val), term)
        disjuncts.append(term)
    if not disjuncts:
        result: Formula = Falsum()
    else:
        result = disjuncts[0]
        for d in disjuncts[1:]:
            result = Disj(result, d)
    if not _fits(m, result, g, args):  # pragma: no cover - construction is exhaustive
        raise AssertionError("synthesized formula does not reproduce the table")
    return result


def argument_variables(arity: int) -> list[str]:
    return [a.name for a in _arg_vars(arity)]

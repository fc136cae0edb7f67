"""Da Costa's C_n: quasi-valuation search over a finite formula closure.

Cn valuations are two-valued but negation is not truth-functional, so a
valuation is not determined by its values on variables.  We search for an
assignment on a finite closure E satisfying every valuation constraint whose
formulas all lie in E.  When none exists the consequence is certified; when
one exists it is only a *candidate* countermodel, because nothing guarantees
it extends to a full valuation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .formula import (
    Conj,
    Disj,
    Formula,
    Impl,
    Language,
    Neg,
    render,
    sort_key,
    subformula_closure,
    subformulas,
    wellbehaved,
)
from .matrix import GuardExceeded

DEFAULT_MAX_CLOSURE = 60
LANGUAGE = Language("Cn")


def cn_closure(premises: Iterable[Formula], conclusion: Formula, n: int,
               max_size: int = DEFAULT_MAX_CLOSURE) -> list[Formula]:
    """Closure set E for a Cn query.

    Subformula closure of the query, plus every subformula of X°n for X in
    it, plus ~X for everything so far, plus ``~A -> Y`` and ``~A -> ~Y`` for
    each Y of the subformula closure (A the conclusion) so the reductio
    constraint can fire on the negated goal.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    premises = list(premises)
    base = subformula_closure(premises + [conclusion])
    closure: set[Formula] = set(base)
    for x in base:
        closure.update(subformulas(wellbehaved(x, n)))
    closure.update([Neg(x) for x in list(closure)])
    refute = Neg(conclusion)
    for y in base:
        closure.add(Impl(refute, y))
        closure.add(Impl(refute, Neg(y)))
    if len(closure) > max_size:
        raise GuardExceeded(f"closure has {len(closure)} formulas, limit is {max_size}")
    return sorted(closure, key=sort_key)


def constraints(closure: list[Formula], n: int) -> list[tuple[int, ...]]:
    """CNF clauses over closure indices (literal ``i+1`` means true, ``-(i+1)`` false)."""
    idx = {f: i + 1 for i, f in enumerate(closure)}
    clauses: list[tuple[int, ...]] = []
    wb = {f: idx.get(wellbehaved(f, n)) for f in closure}
    for f, x in idx.items():
        if isinstance(f, Impl):
            a, b = idx[f.left], idx[f.right]
            clauses += [(-x, -a, b), (x, a), (x, -b)]
        elif isinstance(f, Conj):
            a, b = idx[f.left], idx[f.right]
            clauses += [(-x, a), (-x, b), (x, -a, -b)]
        elif isinstance(f, Disj):
            a, b = idx[f.left], idx[f.right]
            clauses += [(-x, a, b), (x, -a), (x, -b)]
        elif isinstance(f, Neg):
            # v(A) = f  =>  v(~A) = t
            clauses.append((idx[f.arg], x))
            # v(~~A) = t  =>  v(A) = t
            if isinstance(f.arg, Neg):
                clauses.append((-x, idx[f.arg.arg]))
        # well-behavedness propagates through binary connectives
        if isinstance(f, (Impl, Conj, Disj)):
            wa, wb_, wf = wb[f.left], wb[f.right], wb[f]
            if wa and wb_ and wf:
                clauses.append((-wa, -wb_, wf))
    # Y°n, X -> Y, X -> ~Y all true  =>  X false
    for f, xy in idx.items():
        if not isinstance(f, Impl):
            continue
        x, y = f.left, f.right
        xny = idx.get(Impl(x, Neg(y)))
        wy = wb.get(y)
        if xny and wy:
            clauses.append((-wy, -xy, -xny, -idx[x]))
    return clauses


def solve(num_vars: int, clauses: list[tuple[int, ...]]) -> list[bool] | None:
    """First satisfying assignment in lexicographic order (index order, True first).

    Chronological DPLL with unit propagation; since propagated values are
    forced by the decisions so far, the first model found is the
    lexicographically least one.
    """
    occurs: dict[int, list[int]] = {}
    for ci, clause in enumerate(clauses):
        for lit in clause:
            occurs.setdefault(-lit, []).append(ci)
    value: list[int] = [0] * (num_vars + 1)  # 0 unassigned, 1 true, -1 false

    def lit_val(lit):
        v = value[abs(lit)]
        return v if lit > 0 else -v

    def assign(lit, trail):
        value[abs(lit)] = 1 if lit > 0 else -1
        trail.append(abs(lit))

    def propagate(start, trail) -> bool:
        queue = list(start)
        while queue:
            lit = queue.pop()
            for ci in occurs.get(lit, ()):
                unassigned = None
                count = 0
                satisfied = False
                for l2 in clauses[ci]:
                    lv = lit_val(l2)
                    if lv == 1:
                        satisfied = True
                        break
                    if lv == 0:
                        count += 1
                        unassigned = l2
                if satisfied:
                    continue
                if count == 0:
                    return False
                if count == 1:
                    assign(unassigned, trail)
                    queue.append(unassigned)
        return True

    def undo(trail):
        for v in trail:
            value[v] = 0

    root: list[int] = []
    units = []
    for clause in clauses:
        if len(clause) == 1:
            lit = clause[0]
            if lit_val(lit) == -1:
                return None
            if lit_val(lit) == 0:
                assign(lit, root)
                units.append(lit)
    if any(not clause for clause in clauses) or not propagate(units, root):
        return None

    def search(var) -> bool:
        while var <= num_vars and value[var] != 0:
            var += 1
        if var > num_vars:
            return True
        for lit in (var, -var):
            trail: list[int] = []
            assign(lit, trail)
            if propagate([lit], trail) and search(var + 1):
                return True
            undo(trail)
        return False

    if not search(1):
        return None
    return [value[i] == 1 for i in range(1, num_vars + 1)]


@dataclass(frozen=True)
class CnVerdict:
    """``consequence`` is certified; otherwise ``candidate`` is a quasi-valuation."""

    consequence: bool
    candidate: dict[Formula, bool] | None = None
    closure: tuple[Formula, ...] = ()

    def __bool__(self):
        return self.consequence

    def lines(self) -> list[str]:
        if self.candidate is None:
            return []
        return [f"{render(f)} ↦ {'t' if v else 'f'}" for f, v in self.candidate.items()]


def cn_consequence(premises: Iterable[Formula], conclusion: Formula, n: int = 1,
                   max_closure: int = DEFAULT_MAX_CLOSURE) -> CnVerdict:
    premises = list(premises)
    LANGUAGE.check_all(premises + [conclusion])
    closure = cn_closure(premises, conclusion, n, max_closure)
    idx = {f: i + 1 for i, f in enumerate(closure)}
    clauses = constraints(closure, n)
    clauses += [(idx[p],) for p in premises]
    clauses.append((-idx[conclusion],))
    model = solve(len(closure), clauses)
    if model is None:
        return CnVerdict(True, None, tuple(closure))
    return CnVerdict(False, dict(zip(closure, model)), tuple(closure))


def classical_neg_cn(a: Formula, n: int = 1) -> Formula:
    """Classical negation definable in Cn: ``~A & A°n``."""
    return Conj(Neg(a), wellbehaved(a, n))


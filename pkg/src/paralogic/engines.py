"""One entry point over every semantic engine, with uniform verdicts and reports."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from . import annotated, dacosta, deontic, discussive, matrix
from .annotated import Lattice
from .formula import Formula, render

# Verdict statuses and their exit codes
HOLDS = "holds"
COUNTERMODEL = "countermodel"
CANDIDATE = "countermodel-candidate"
BOUNDED = "no-countermodel-up-to-bound"

EXIT_CODES = {HOLDS: 0, COUNTERMODEL: 1, CANDIDATE: 2, BOUNDED: 2}


@dataclass
class CheckResult:
    logic: str
    status: str
    lines: list[str] = field(default_factory=list)
    witness: object = None

    @property
    def holds(self) -> bool:
        """True for certified consequence and for an empty bounded search."""
        return self.status in (HOLDS, BOUNDED)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def report(self) -> str:
        return "\n".join([self.headline()] + self.lines) + "\n"

    def headline(self) -> str:
        return self.status if self.status != BOUNDED else f"{BOUNDED} {self.witness}"


def normalise_logic(text: str) -> tuple[str, int | None]:
    """CLI logic names: lp lpf lpb lpfb k3 rm3 bl cl c<n> d2 ptau dlp."""
    low = text.lower()
    m = re.fullmatch(r"c(\d+)", low)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ValueError("Cn needs n >= 1")
        return "Cn", n
    if low in ("d2", "ptau", "dlp"):
        return {"d2": "D2", "ptau": "Ptau", "dlp": "DLP"}[low], None
    return matrix.canonical_id(text), None


def _assignment(v: dict) -> str:
    return ", ".join(f"{k}={v[k]}" for k in sorted(v))


def check(logic: str, premises: Iterable[Formula], conclusion: Formula, *,
          lattice: Lattice | None = None, bound: int | None = None,
          max_vars: int | None = None, max_closure: int | None = None) -> CheckResult:
    premises = list(premises)
    name, n = normalise_logic(logic)
    if name == "Cn":
        v = dacosta.cn_consequence(premises, conclusion, n, max_closure or dacosta.DEFAULT_MAX_CLOSURE)
        if v.consequence:
            return CheckResult(f"C{n}", HOLDS)
        return CheckResult(f"C{n}", CANDIDATE, v.lines(), v)
    if name == "D2":
        v = discussive.d2_consequence(premises, conclusion, max_vars or discussive.DEFAULT_MAX_VARS)
        if v.holds:
            return CheckResult(name, HOLDS)
        return CheckResult(name, COUNTERMODEL, v.counterstructure.describe().splitlines(), v.counterstructure)
    if name == "Ptau":
        if lattice is None:
            raise ValueError("ptau needs a lattice")
        v = annotated.ptau_consequence(lattice, premises, conclusion, max_vars or annotated.DEFAULT_MAX_VARS)
        if v.holds:
            return CheckResult(name, HOLDS)
        return CheckResult(name, COUNTERMODEL, [_assignment(v.counter)], v.counter)
    if name == "DLP":
        if bound is None:
            raise ValueError("dlp needs a bound on the number of worlds")
        v = deontic.dlp_consequence_bounded(premises, conclusion, bound, max_vars or deontic.DEFAULT_MAX_VARS)
        if v.countermodel is None:
            return CheckResult(name, BOUNDED, [], bound)
        lines = v.countermodel.describe().splitlines()
        lines.append(f"falsified at: w{v.world}")
        lines += ["trace:"] + ["  " + t for t in deontic.evaluation_trace(v.countermodel, conclusion)]
        return CheckResult(name, COUNTERMODEL, lines, v)
    m = matrix.build_matrix(name)
    v = matrix.consequence(m, premises, conclusion, max_vars or matrix.DEFAULT_MAX_VARS)
    if v.holds:
        return CheckResult(name, HOLDS)
    return CheckResult(name, COUNTERMODEL, [_assignment(v.countermodel)], v.countermodel)


def valid(logic: str, f: Formula, **kw) -> bool:
    return check(logic, [], f, **kw).holds


def describe_query(premises: Iterable[Formula], conclusion: Formula) -> str:
    return "{" + ", ".join(render(p) for p in premises) + "} |- " + render(conclusion)

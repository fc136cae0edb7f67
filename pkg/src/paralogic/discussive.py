"""Jaśkowski's D2 over discussive structures.

A discussive structure is a non-empty set of worlds, each carrying a
classical assignment.  Per-world truth depends only on the world's own
assignment and on the *set* of assignments present (the world quantifiers in
the implication and conjunction clauses ignore duplicates), so structures are
enumerated as non-empty sets of distinct assignments without loss.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .formula import Conj, Disj, Formula, Impl, Language, LanguageError, Neg, Var, variables_of
from .matrix import GuardExceeded

DEFAULT_MAX_VARS = 4
LANGUAGE = Language("D2")


@dataclass(frozen=True)
class DiscussiveStructure:
    """Worlds are the indices of ``worlds``; each entry maps variables to bools."""

    worlds: tuple[Mapping[str, bool], ...]

    def __post_init__(self):
        if not self.worlds:
            raise ValueError("a discussive structure needs at least one world")

    def describe(self) -> str:
        lines = []
        for i, w in enumerate(self.worlds):
            vals = ", ".join(f"{k}={'t' if v else 'f'}" for k, v in sorted(w.items()))
            lines.append(f"world w{i + 1}: {vals}")
        return "\n".join(lines)


def _truth(s: DiscussiveStructure, f: Formula) -> list[bool]:
    """Truth value of ``f`` at every world."""
    if isinstance(f, Var):
        return [bool(w[f.name]) for w in s.worlds]
    if isinstance(f, Neg):
        return [not x for x in _truth(s, f.arg)]
    if isinstance(f, Disj):
        return [a or b for a, b in zip(_truth(s, f.left), _truth(s, f.right))]
    if isinstance(f, Conj):
        right_somewhere = any(_truth(s, f.right))
        return [a and right_somewhere for a in _truth(s, f.left)]
    if isinstance(f, Impl):
        left_nowhere = not any(_truth(s, f.left))
        return [left_nowhere or b for b in _truth(s, f.right)]
    raise LanguageError(f"{type(f).__name__} is not in the language of D2")


def d2_eval(s: DiscussiveStructure, w: int, f: Formula) -> bool:
    LANGUAGE.check(f)
    return _truth(s, f)[w]


# Vectorised evaluation over every structure at once -------------------------
#
# Worlds are all 2^k classical assignments; a structure is a boolean mask
# over them.  Arrays have shape (structures, 2^k).

def _assignments(names: Sequence[str]) -> list[dict[str, bool]]:
    return [dict(zip(names, combo)) for combo in itertools.product((True, False), repeat=len(names))]


def _masks(n_worlds: int) -> np.ndarray:
    """Every non-empty subset of worlds, by size then lexicographically."""
    rows = []
    for k in range(1, n_worlds + 1):
        for combo in itertools.combinations(range(n_worlds), k):
            row = np.zeros(n_worlds, dtype=bool)
            row[list(combo)] = True
            rows.append(row)
    return np.array(rows, dtype=bool)


class _Batch:
    def __init__(self, names: Sequence[str]):
        self.names = list(names)
        self.assignments = _assignments(self.names)
        self.mask = _masks(len(self.assignments))
        self.cache: dict[Formula, np.ndarray] = {}

    def truth(self, f: Formula) -> np.ndarray:
        hit = self.cache.get(f)
        if hit is not None:
            return hit
        if isinstance(f, Var):
            row = np.array([a[f.name] for a in self.assignments], dtype=bool)
            out = np.broadcast_to(row, self.mask.shape)
        elif isinstance(f, Neg):
            out = ~self.truth(f.arg)
        elif isinstance(f, Disj):
            out = self.truth(f.left) | self.truth(f.right)
        elif isinstance(f, Conj):
            somewhere = (self.truth(f.right) & self.mask).any(axis=1)
            out = self.truth(f.left) & somewhere[:, None]
        elif isinstance(f, Impl):
            nowhere = ~(self.truth(f.left) & self.mask).any(axis=1)
            out = nowhere[:, None] | self.truth(f.right)
        else:
            raise LanguageError(f"{type(f).__name__} is not in the language of D2")
        self.cache[f] = out
        return out

    def satisfied(self, f: Formula) -> np.ndarray:
        """Per structure: is ``f`` true at some world?"""
        return (self.truth(f) & self.mask).any(axis=1)

    def structure(self, i: int) -> DiscussiveStructure:
        return DiscussiveStructure(tuple(a for a, m in zip(self.assignments, self.mask[i]) if m))


@dataclass(frozen=True)
class D2Verdict:
    holds: bool
    counterstructure: DiscussiveStructure | None = None

    def __bool__(self):
        return self.holds


def _batch(formulas: list[Formula], max_vars: int) -> _Batch:
    LANGUAGE.check_all(formulas)
    names = variables_of(formulas)
    if len(names) > max_vars:
        raise GuardExceeded(f"{len(names)} variables exceed the D2 limit of {max_vars}")
    return _Batch(names)


def d2_consequence(premises: Iterable[Formula], conclusion: Formula,
                   max_vars: int = DEFAULT_MAX_VARS) -> D2Verdict:
    premises = list(premises)
    batch = _batch(premises + [conclusion], max_vars)
    ok = np.ones(len(batch.mask), dtype=bool)
    for p in premises:
        ok &= batch.satisfied(p)
    bad = ok & ~batch.satisfied(conclusion)
    hits = np.flatnonzero(bad)
    if hits.size:
        return D2Verdict(False, batch.structure(int(hits[0])))
    return D2Verdict(True)


"""DLP->,F: LP->,F plus an obligation operator over serial three-valued Kripke structures.

Validity is only semi-decided: ``dlp_consequence_bounded`` enumerates every
structure up to a number of worlds and reports either a countermodel or that
none exists up to that bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .formula import (
    Conj,
    Disj,
    Falsum,
    Formula,
    Impl,
    Language,
    LanguageError,
    Neg,
    Oblig,
    Var,
    render,
    subformula_closure,
    variables_of,
)
from .matrix import THREE, TV, GuardExceeded, build_matrix

LANGUAGE = Language("DLP", falsum=True, oblig=True)
DEFAULT_MAX_WORLDS = 2
DEFAULT_MAX_VARS = 3
MAX_CELLS = 5_000_000

_LPF = build_matrix("LPF")
_CODE = {v: i for i, v in enumerate(THREE)}  # t=0, f=1, b=2
_T, _F, _B = 0, 1, 2


def _np_table(table) -> np.ndarray:
    out = np.zeros((3, 3), dtype=np.int8)
    for (a, b), v in table.items():
        out[_CODE[a], _CODE[b]] = _CODE[v]
    return out


_NEG = np.array([_CODE[_LPF.neg[v]] for v in THREE], dtype=np.int8)
_AND = _np_table(_LPF.conj)
_OR = _np_table(_LPF.disj)
_IMP = _np_table(_LPF.impl)


@dataclass(frozen=True)
class KripkeStructure3:
    """Worlds are ``0..size-1``; ``relation`` holds pairs (w, w')."""

    size: int
    relation: frozenset
    assignment: tuple[Mapping[str, TV], ...]

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("a Kripke structure needs at least one world")
        for w in range(self.size):
            if not any((w, v) in self.relation for v in range(self.size)):
                raise ValueError(f"accessibility is not serial: world {w} has no successor")

    def successors(self, w: int) -> list[int]:
        return [v for v in range(self.size) if (w, v) in self.relation]

    def describe(self) -> str:
        lines = ["worlds: " + ", ".join(f"w{i}" for i in range(self.size))]
        lines.append("relation: " + ", ".join(f"w{a}->w{b}" for a, b in sorted(self.relation)))
        for i, a in enumerate(self.assignment):
            vals = ", ".join(f"{k}={v}" for k, v in sorted(a.items()))
            lines.append(f"w{i}: {vals}")
        return "\n".join(lines)


def dlp_eval(k: KripkeStructure3, w: int, f: Formula) -> TV:
    if isinstance(f, Var):
        return k.assignment[w][f.name]
    if isinstance(f, Falsum):
        return TV.f
    if isinstance(f, Neg):
        return _LPF.neg[dlp_eval(k, w, f.arg)]
    if isinstance(f, Impl):
        return _LPF.impl[dlp_eval(k, w, f.left), dlp_eval(k, w, f.right)]
    if isinstance(f, Conj):
        return _LPF.conj[dlp_eval(k, w, f.left), dlp_eval(k, w, f.right)]
    if isinstance(f, Disj):
        return _LPF.disj[dlp_eval(k, w, f.left), dlp_eval(k, w, f.right)]
    if isinstance(f, Oblig):
        vals = [dlp_eval(k, v, f.arg) for v in k.successors(w)]
        if all(v is TV.t for v in vals):
            return TV.t
        if any(v is TV.f for v in vals):
            return TV.f
        return TV.b
    raise LanguageError(f"{type(f).__name__} is not in the language of DLP")


# Vectorised enumeration ------------------------------------------------------

@lru_cache(maxsize=None)
def serial_relations(size: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Serial relations on ``size`` worlds in increasing bitmask order.

    Bit ``i*size + j`` of the mask stands for the pair (i, j).
    """
    masks, mats = [], []
    for mask in range(1 << (size * size)):
        mat = np.array([[(mask >> (i * size + j)) & 1 for j in range(size)] for i in range(size)], dtype=bool)
        if mat.any(axis=1).all():
            masks.append(mask)
            mats.append(mat)
    return np.array(mats, dtype=bool), tuple(masks)


class _Batch:
    """All structures with a fixed number of worlds; arrays are (structures, worlds)."""

    def __init__(self, size: int, names: list[str]):
        self.size = size
        self.names = names
        rels, self.masks = serial_relations(size)
        cells = size * len(names)
        self.n_assign = 3 ** cells
        n = len(rels) * self.n_assign
        if n * size > MAX_CELLS:
            raise GuardExceeded(f"{n} structures of size {size} exceed the enumeration limit")
        # assignment index a -> codes for (world, variable), world-major, t<f<b
        codes = np.array(list(itertools.product(range(3), repeat=cells)), dtype=np.int8)
        codes = codes.reshape(self.n_assign, size, max(len(names), 0)) if names else np.zeros((1, size, 0), np.int8)
        self.codes = codes
        self.rel = np.repeat(rels, self.n_assign, axis=0)
        self.count = n
        self.cache: dict[Formula, np.ndarray] = {}

    def value(self, f: Formula) -> np.ndarray:
        hit = self.cache.get(f)
        if hit is not None:
            return hit
        if isinstance(f, Var):
            col = self.codes[:, :, self.names.index(f.name)]
            out = np.tile(col, (self.count // self.n_assign, 1))
        elif isinstance(f, Falsum):
            out = np.full((self.count, self.size), _F, dtype=np.int8)
        elif isinstance(f, Neg):
            out = _NEG[self.value(f.arg)]
        elif isinstance(f, Impl):
            out = _IMP[self.value(f.left), self.value(f.right)]
        elif isinstance(f, Conj):
            out = _AND[self.value(f.left), self.value(f.right)]
        elif isinstance(f, Disj):
            out = _OR[self.value(f.left), self.value(f.right)]
        elif isinstance(f, Oblig):
            inner = self.value(f.arg)[:, None, :]  # (S, 1, succ)
            all_t = np.all(~self.rel | (inner == _T), axis=2)
            some_f = np.any(self.rel & (inner == _F), axis=2)
            out = np.where(all_t, _T, np.where(some_f, _F, _B)).astype(np.int8)
        else:
            raise LanguageError(f"{type(f).__name__} is not in the language of DLP")
        self.cache[f] = out
        return out

    def structure(self, s: int) -> KripkeStructure3:
        r_idx, a_idx = divmod(s, self.n_assign)
        mask = self.masks[r_idx]
        rel = frozenset(
            (i, j) for i in range(self.size) for j in range(self.size) if (mask >> (i * self.size + j)) & 1
        )
        assignment = tuple(
            {n: THREE[int(self.codes[a_idx, w, vi])] for vi, n in enumerate(self.names)}
            for w in range(self.size)
        )
        return KripkeStructure3(self.size, rel, assignment)


@dataclass(frozen=True)
class DlpVerdict:
    """``countermodel`` is definite; otherwise nothing was found up to ``bound`` worlds."""

    countermodel: KripkeStructure3 | None
    world: int | None
    bound: int

    @property
    def holds_up_to_bound(self) -> bool:
        return self.countermodel is None

    def label(self) -> str:
        if self.countermodel is None:
            return f"no-countermodel-up-to-bound {self.bound}"
        return "countermodel"


def _check_inputs(formulas, max_vars):
    LANGUAGE.check_all(formulas)
    names = variables_of(formulas)
    if len(names) > max_vars:
        raise GuardExceeded(f"{len(names)} variables exceed the DLP limit of {max_vars}")
    return names


def dlp_consequence_bounded(premises: Iterable[Formula], conclusion: Formula,
                            max_worlds: int = DEFAULT_MAX_WORLDS,
                            max_vars: int = DEFAULT_MAX_VARS) -> DlpVerdict:
    """Search for (K, w) with no premise false at w and the conclusion false at w."""
    if max_worlds < 1:
        raise ValueError("max_worlds must be >= 1")
    premises = list(premises)
    names = _check_inputs(premises + [conclusion], max_vars)
    for size in range(1, max_worlds + 1):
        batch = _Batch(size, names)
        bad = batch.value(conclusion) == _F
        for p in premises:
            bad &= batch.value(p) != _F
        hits = np.argwhere(bad)
        if len(hits):
            s, w = (int(x) for x in hits[0])
            k = batch.structure(s)
            assert dlp_eval(k, w, conclusion) is TV.f
            assert all(dlp_eval(k, w, p) is not TV.f for p in premises)
            return DlpVerdict(k, w, max_worlds)
    return DlpVerdict(None, None, max_worlds)


def valid_everywhere(formulas: Iterable[Formula], max_worlds: int = DEFAULT_MAX_WORLDS,
                     max_vars: int = DEFAULT_MAX_VARS) -> list[bool]:
    """Bounded validity of each formula, reusing the enumeration per world count."""
    formulas = list(formulas)
    names = _check_inputs(formulas, max_vars)
    ok = [True] * len(formulas)
    for size in range(1, max_worlds + 1):
        batch = _Batch(size, names)
        for i, f in enumerate(formulas):
            if ok[i] and (batch.value(f) == _F).any():
                ok[i] = False
    return ok


def evaluation_trace(k: KripkeStructure3, f: Formula) -> list[str]:
    lines = []
    for g in subformula_closure([f]):
        vals = " ".join(f"w{w}={dlp_eval(k, w, g)}" for w in range(k.size))
        lines.append(f"{render(g)}: {vals}")
    return lines


def deontic_inconsistency_formula(a: Formula) -> Formula:
    """``O~((A -> #f) | (~A -> #f))``."""
    return Oblig(Neg(Disj(Impl(a, Falsum()), Impl(Neg(a), Falsum()))))

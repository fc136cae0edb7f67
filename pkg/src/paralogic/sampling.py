"""Seeded random formulas and schema instances for the property suites."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .formula import (
    COMPLEX,
    AnnMeta,
    AnnotatedVar,
    Both,
    Conj,
    Disj,
    Falsum,
    Formula,
    Impl,
    Meta,
    Neg,
    Oblig,
    Var,
    children,
    is_complex,
)
from .schema import Schema, SchemaFamily, substitute

VARS = ("p", "q", "r")


@dataclass(frozen=True)
class Vocabulary:
    """What random formulas may contain."""

    names: Sequence[str] = VARS
    falsum: bool = False
    both: bool = False
    oblig: bool = False
    annotations: Sequence[str] = ()  # non-empty: atoms are annotated with these

    def atoms(self) -> list[Formula]:
        if self.annotations:
            out: list[Formula] = [AnnotatedVar(n, a) for n in self.names for a in self.annotations]
        else:
            out = [Var(n) for n in self.names]
        if self.falsum:
            out.append(Falsum())
        if self.both:
            out.append(Both())
        return out


def random_formula(rng: random.Random, vocab: Vocabulary, max_depth: int) -> Formula:
    """Formula of depth at most ``max_depth``; leaves become likelier as depth runs out."""
    atoms = vocab.atoms()
    unary = [Neg] + ([Oblig] if vocab.oblig else [])

    def grow(d: int) -> Formula:
        if d == 0 or rng.random() < 0.25:
            return rng.choice(atoms)
        if rng.random() < 0.3:
            return rng.choice(unary)(grow(d - 1))
        op = rng.choice((Conj, Disj, Impl))
        return op(grow(d - 1), grow(d - 1))

    return grow(max_depth)


def random_complex(rng: random.Random, vocab: Vocabulary, max_depth: int) -> Formula:
    """Random formula that is not of the shape ``~^k p:l``."""
    max_depth = max(max_depth, 1)
    while True:
        f = random_formula(rng, vocab, max_depth)
        if is_complex(f):
            return f


def _metas(pattern: Formula) -> tuple[dict[str, str], set[str], set[str]]:
    """Formula metas with sorts, annotated-atom variable metas, annotation metas."""
    formula_metas: dict[str, str] = {}
    var_metas: set[str] = set()
    ann_metas: set[str] = set()

    def walk(node):
        if isinstance(node, Meta):
            formula_metas.setdefault(node.name, node.sort)
        elif isinstance(node, AnnMeta):
            var_metas.add(node.var)
            ann_metas.add(node.ann)
        for c in children(node):
            walk(c)

    walk(pattern)
    return formula_metas, var_metas, ann_metas


def instantiate(s: Schema | SchemaFamily, rng: random.Random, vocab: Vocabulary, max_depth: int,
                lattice=None, tries: int = 10_000) -> Formula:
    """A random instance of ``s`` whose bindings respect sorts and side conditions."""
    if isinstance(s, SchemaFamily):
        s = s.build(rng.choice(s.indices))
    formula_metas, var_metas, ann_metas = _metas(s.pattern)
    b: dict = {}
    for name in sorted(formula_metas):
        sort = formula_metas[name]
        b[name] = (random_complex if sort == COMPLEX else random_formula)(rng, vocab, max_depth)
    for name in sorted(var_metas):
        b[name] = rng.choice(list(vocab.names))
    if ann_metas:
        if lattice is None:
            raise ValueError("annotated schemas need a lattice")
        for _ in range(tries):
            for name in sorted(ann_metas):
                b[name] = rng.choice(lattice.elements)
            if all(c.holds(b, lattice) for c in s.conditions):
                break
        else:
            raise RuntimeError(f"could not satisfy the side conditions of {s.id}")
    return substitute(s.pattern, b)

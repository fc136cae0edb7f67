"""Annotated logics P-tau over finite lattices of belief values.

An interpretation maps each propositional variable to a lattice element;
``p:l`` is true iff ``l <= I(p)``.  Negation in front of an annotated atom
rewrites the annotation through the lattice negation map; negation of a
complex formula is classical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .formula import (
    AnnotatedVar,
    Conj,
    Disj,
    Formula,
    Impl,
    Language,
    LanguageError,
    Neg,
    strip_negations,
    subformulas,
    transform,
    variables_of,
)
from .matrix import GuardExceeded

LANGUAGE = Language("Ptau", annotated=True)
DEFAULT_MAX_VARS = 8


class LatticeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Lattice:
    """A finite lattice with a negation map.

    ``elements`` keeps declaration order (used for enumeration).  ``aliases``
    maps alternative spellings (``T`` for ``top`` in FOUR) to element names.
    """

    name: str
    elements: tuple[str, ...]
    order: frozenset  # pairs (a, b) with a <= b, reflexive and transitive
    negmap: Mapping[str, str]
    aliases: Mapping[str, str] = field(default_factory=dict)
    _join: Mapping = field(default_factory=dict, compare=False, repr=False)
    _meet: Mapping = field(default_factory=dict, compare=False, repr=False)
    bottom: str = ""
    top: str = ""

    def resolve(self, name: str) -> str:
        name = self.aliases.get(name, name)
        if name not in self.elements:
            raise LatticeError(f"{name!r} is not an element of lattice {self.name}")
        return name

    def leq(self, a: str, b: str) -> bool:
        return (self.resolve(a), self.resolve(b)) in self.order

    def join(self, a: str, b: str) -> str:
        return self._join[self.resolve(a), self.resolve(b)]

    def meet(self, a: str, b: str) -> str:
        return self._meet[self.resolve(a), self.resolve(b)]

    def join_all(self, names: Iterable[str]) -> str:
        out = self.bottom
        for n in names:
            out = self.join(out, n)
        return out

    def neg(self, a: str) -> str:
        return self.negmap[self.resolve(a)]

    def canonical(self, f: Formula) -> Formula:
        """Replace annotation aliases by element names."""
        def fn(node):
            if isinstance(node, AnnotatedVar):
                return AnnotatedVar(node.name, self.resolve(node.annotation))
            return None
        return transform(f, fn)

    def check(self, f: Formula) -> None:
        for g in subformulas(f):
            if isinstance(g, AnnotatedVar):
                self.resolve(g.annotation)


def make_lattice(name: str, elements: Iterable[str], leq_pairs: Iterable[tuple[str, str]],
                 negmap: Mapping[str, str], aliases: Mapping[str, str] | None = None) -> Lattice:
    """Validate generators of an order and build the lattice."""
    elems = tuple(dict.fromkeys(elements))
    if not elems:
        raise LatticeError("a lattice needs at least one element")
    known = set(elems)
    order = {(a, a) for a in elems}
    for a, b in leq_pairs:
        for x in (a, b):
            if x not in known:
                raise LatticeError(f"unknown element {x!r} in order")
        order.add((a, b))
    # reflexive-transitive closure
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(order), repeat=2):
            if b == c and (a, d) not in order:
                order.add((a, d))
                changed = True
    for a, b in order:
        if a != b and (b, a) in order:
            raise LatticeError(f"order is cyclic: {a} <= {b} <= {a}")

    def bound(a, b, upper):
        if upper:
            cands = [c for c in elems if (a, c) in order and (b, c) in order]
            best = [c for c in cands if all((c, d) in order for d in cands)]
        else:
            cands = [c for c in elems if (c, a) in order and (c, b) in order]
            best = [c for c in cands if all((d, c) in order for d in cands)]
        if len(best) != 1:
            raise LatticeError(f"{a} and {b} have no {'join' if upper else 'meet'}")
        return best[0]

    joins = {(a, b): bound(a, b, True) for a in elems for b in elems}
    meets = {(a, b): bound(a, b, False) for a in elems for b in elems}
    missing = [a for a in elems if a not in negmap]
    if missing:
        raise LatticeError(f"negation map is not total: missing {missing}")
    for a, b in negmap.items():
        if a not in known or b not in known:
            raise LatticeError(f"negation map mentions unknown element in {a} -> {b}")
    bottom = [a for a in elems if all((a, b) in order for b in elems)][0]
    top = [a for a in elems if all((b, a) in order for b in elems)][0]
    return Lattice(name, elems, frozenset(order), dict(negmap), dict(aliases or {}),
                   joins, meets, bottom, top)


FOUR = make_lattice(
    "FOUR",
    ["bot", "t", "f", "top"],
    [("bot", "t"), ("bot", "f"), ("t", "top"), ("f", "top")],
    {"bot": "bot", "t": "f", "f": "t", "top": "top"},
    aliases={"T": "top", "⊤": "top", "⊥": "bot"},
)


def parse_lattice(text: str, name: str = "lattice") -> Lattice:
    """Lattice file format: ``elem <a>``, ``leq <a> <b>``, ``neg <a> <b>``; ``%`` comments."""
    elements, leq, neg = [], [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == "elem" and len(args) == 1:
            elements.append(args[0])
        elif kind == "leq" and len(args) == 2:
            leq.append((args[0], args[1]))
        elif kind == "neg" and len(args) == 2:
            if args[0] in neg:
                raise LatticeError(f"line {lineno}: negation of {args[0]} given twice")
            neg[args[0]] = args[1]
        else:
            raise LatticeError(f"line {lineno}: cannot parse {raw!r}")
    return make_lattice(name, elements, leq, neg)


def load_lattice(spec: str) -> Lattice:
    """``FOUR`` or a path to a lattice file."""
    if spec == "FOUR":
        return FOUR
    path = Path(spec)
    return parse_lattice(path.read_text(), name=path.stem)


# Semantics ------------------------------------------------------------------

def rewrite_negations(f: Formula, lattice: Lattice) -> AnnotatedVar:
    """``~^k p:l`` to ``p:(~^k l)``, one annotation step per negation."""
    k, core = strip_negations(f)
    assert isinstance(core, AnnotatedVar)
    ann = lattice.resolve(core.annotation)
    for _ in range(k):
        ann = lattice.neg(ann)
    return AnnotatedVar(core.name, ann)


def ptau_eval(lattice: Lattice, interp: Mapping[str, str], f: Formula) -> bool:
    if isinstance(f, AnnotatedVar):
        return lattice.leq(f.annotation, interp[f.name])
    if isinstance(f, Neg):
        _, core = strip_negations(f)
        if isinstance(core, AnnotatedVar):
            return ptau_eval(lattice, interp, rewrite_negations(f, lattice))
        return not ptau_eval(lattice, interp, f.arg)
    if isinstance(f, Conj):
        return ptau_eval(lattice, interp, f.left) and ptau_eval(lattice, interp, f.right)
    if isinstance(f, Disj):
        return ptau_eval(lattice, interp, f.left) or ptau_eval(lattice, interp, f.right)
    if isinstance(f, Impl):
        return (not ptau_eval(lattice, interp, f.left)) or ptau_eval(lattice, interp, f.right)
    raise LanguageError(f"{type(f).__name__} is not in the language of Ptau")


@dataclass(frozen=True)
class PtauVerdict:
    holds: bool
    counter: dict[str, str] | None = None

    def __bool__(self):
        return self.holds


def ptau_consequence(lattice: Lattice, premises: Iterable[Formula], conclusion: Formula,
                     max_vars: int = DEFAULT_MAX_VARS) -> PtauVerdict:
    premises = list(premises)
    for f in premises + [conclusion]:
        LANGUAGE.check(f)
        lattice.check(f)
    names = variables_of(premises + [conclusion])
    if len(names) > max_vars:
        raise GuardExceeded(f"{len(names)} variables exceed the Ptau limit of {max_vars}")
    for combo in itertools.product(lattice.elements, repeat=len(names)):
        interp = dict(zip(names, combo))
        if all(ptau_eval(lattice, interp, p) for p in premises) and not ptau_eval(lattice, interp, conclusion):
            return PtauVerdict(False, interp)
    return PtauVerdict(True)


def classical_neg_ptau(a: Formula) -> Formula:
    """``A -> ((A -> A) & ~(A -> A))``: classical negation inside P-tau."""
    return Impl(a, Conj(Impl(a, a), Neg(Impl(a, a))))

"""Axiom schemas and first-order structural matching against formulas."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Protocol

from .formula import (
    BINARY,
    COMPLEX,
    UNARY,
    AnnMeta,
    AnnotatedVar,
    Formula,
    Meta,
    children,
    is_complex,
    parse_schema,
    render,
    transform,
)


class AnnotationOrder(Protocol):
    """What side conditions need from a lattice."""

    bottom: str

    def resolve(self, name: str) -> str: ...
    def leq(self, a: str, b: str) -> bool: ...
    def neg(self, a: str) -> str: ...
    def join_all(self, names: Iterable[str]) -> str: ...


# Side conditions over annotation metavariables ---------------------------

@dataclass(frozen=True)
class Geq:
    big: str
    small: str

    def holds(self, b: dict, lat: AnnotationOrder) -> bool:
        return lat.leq(b[self.small], b[self.big])

    def __str__(self):
        return f"{self.big} >= {self.small}"


@dataclass(frozen=True)
class IsBottom:
    ann: str

    def holds(self, b: dict, lat: AnnotationOrder) -> bool:
        return lat.resolve(b[self.ann]) == lat.resolve(lat.bottom)

    def __str__(self):
        return f"{self.ann} = bottom"


@dataclass(frozen=True)
class NegOf:
    result: str
    arg: str

    def holds(self, b: dict, lat: AnnotationOrder) -> bool:
        return lat.resolve(b[self.result]) == lat.neg(b[self.arg])

    def __str__(self):
        return f"{self.result} = ~{self.arg}"


@dataclass(frozen=True)
class JoinOf:
    result: str
    parts: tuple[str, ...]

    def holds(self, b: dict, lat: AnnotationOrder) -> bool:
        return lat.resolve(b[self.result]) == lat.join_all(b[p] for p in self.parts)

    def __str__(self):
        return f"{self.result} = join({', '.join(self.parts)})"


@dataclass(frozen=True)
class Schema:
    id: str
    pattern: Formula
    conditions: tuple = ()

    def text(self) -> str:
        out = render(self.pattern)
        if self.conditions:
            out += "  if " + ", ".join(str(c) for c in self.conditions)
        return out

    def candidates(self, f: Formula) -> Iterable["Schema"]:
        yield self


@dataclass(frozen=True)
class SchemaFamily:
    """A schema indexed by a natural number (``~^(n+1) P_l <-> ...``, n-ary joins).

    ``guess`` inspects a formula and proposes the index worth trying;
    ``build`` produces the concrete schema for an index.
    """

    id: str
    build: Callable[[int], Schema]
    guess: Callable[[Formula], Iterable[int]]
    description: str = ""
    indices: tuple[int, ...] = (1, 2, 3)  # indices used when sampling instances

    def text(self) -> str:
        return self.description

    def candidates(self, f: Formula) -> Iterable[Schema]:
        for n in self.guess(f):
            yield self.build(n)


@dataclass
class Match:
    """Outcome of :func:`match_schema`.

    ``reason`` is ``None`` on success, ``"structure"`` for a shape mismatch and
    ``"side-condition"`` when the shape matched but an annotation condition failed.
    """

    bindings: dict | None
    reason: str | None = None
    failed: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.reason is None


def _match(p: Formula, f: Formula, b: dict) -> bool:
    if isinstance(p, Meta):
        if p.sort == COMPLEX and not is_complex(f):
            return False
        if p.name in b:
            return b[p.name] == f
        b[p.name] = f
        return True
    if isinstance(p, AnnMeta):
        if not isinstance(f, AnnotatedVar):
            return False
        for key, val in ((p.var, f.name), (p.ann, f.annotation)):
            if key in b and b[key] != val:
                return False
            b[key] = val
        return True
    if type(p) is not type(f):
        return False
    if isinstance(p, (UNARY, BINARY)):
        return all(_match(pc, fc, b) for pc, fc in zip(children(p), children(f)))
    return p == f


def match_schema(s: Schema | SchemaFamily, f: Formula, lattice: AnnotationOrder | None = None) -> Match:
    saw_shape = False
    failed = []
    for concrete in s.candidates(f):
        b: dict = {}
        if not _match(concrete.pattern, f, b):
            continue
        saw_shape = True
        bad = [c for c in concrete.conditions if lattice is None or not c.holds(b, lattice)]
        if not bad:
            return Match(b)
        failed.extend(bad)
    if saw_shape:
        return Match(None, "side-condition", failed)
    return Match(None, "structure")


def substitute(pattern: Formula, bindings: dict) -> Formula:
    def fn(node):
        if isinstance(node, Meta):
            return bindings[node.name]
        if isinstance(node, AnnMeta):
            return AnnotatedVar(bindings[node.var], bindings[node.ann])
        return None

    return transform(pattern, fn)


def metavariables(pattern: Formula) -> list[Meta]:
    seen: dict[str, Meta] = {}

    def walk(node):
        if isinstance(node, Meta):
            seen.setdefault(node.name, node)
        for c in children(node):
            walk(c)

    walk(pattern)
    return list(seen.values())


def schema(id: str, text: str, complex_metas: Iterable[str] = ()) -> Schema:
    return Schema(id, parse_schema(text, complex_metas))


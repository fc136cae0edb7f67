"""Formula syntax shared by every logic in the package.

Formulas are immutable, hashable trees.  The ASCII grammar is::

    iff   := imp ('<->' imp)*          # sugar, expands to (A -> B) & (B -> A)
    imp   := disj ('->' imp)?          # right associative
    disj  := conj ('|' conj)*          # left associative
    conj  := unary ('&' unary)*        # left associative
    unary := '~' unary | 'O' unary | atom
    atom  := var | var ':' elem | '#f' | '#b' | '(' iff ')'

Schemas reuse the same node types; their leaves may additionally be
:class:`Meta` (a formula metavariable) or :class:`AnnMeta` (an annotated
atom whose variable and annotation are both metavariables).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Union


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
        self.text = text


class LanguageError(ValueError):
    """A formula uses a connective or atom outside the target language."""


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class AnnotatedVar:
    name: str
    annotation: str


@dataclass(frozen=True)
class Falsum:
    pass


@dataclass(frozen=True)
class Both:
    pass


def _cached_hash(self) -> int:
    # Formulas are hashed constantly (closures, caches, bindings); the
    # generated dataclass hash would re-walk the whole tree every time.
    h = self.__dict__.get("_hash")
    if h is None:
        h = hash((type(self).__name__, *(getattr(self, n) for n in self.__dataclass_fields__)))
        object.__setattr__(self, "_hash", h)
    return h


@dataclass(frozen=True)
class Neg:
    arg: "Formula"
    __hash__ = _cached_hash


@dataclass(frozen=True)
class Oblig:
    arg: "Formula"
    __hash__ = _cached_hash


@dataclass(frozen=True)
class Conj:
    left: "Formula"
    right: "Formula"
    __hash__ = _cached_hash


@dataclass(frozen=True)
class Disj:
    left: "Formula"
    right: "Formula"
    __hash__ = _cached_hash


@dataclass(frozen=True)
class Impl:
    left: "Formula"
    right: "Formula"
    __hash__ = _cached_hash


ANY = "any"
COMPLEX = "complex"


@dataclass(frozen=True)
class Meta:
    """Formula metavariable; ``sort`` is ``"any"`` or ``"complex"``."""

    name: str
    sort: str = ANY


@dataclass(frozen=True)
class AnnMeta:
    """Annotated atom ``P_l`` with metavariables for both P and l."""

    var: str
    ann: str


Formula = Union[Var, AnnotatedVar, Falsum, Both, Neg, Oblig, Conj, Disj, Impl, Meta, AnnMeta]

FALSUM = Falsum()
BOTH = Both()

UNARY = (Neg, Oblig)
BINARY = (Conj, Disj, Impl)
ATOMS = (Var, AnnotatedVar, Falsum, Both, Meta, AnnMeta)


def children(f: Formula) -> tuple:
    if isinstance(f, UNARY):
        return (f.arg,)
    if isinstance(f, BINARY):
        return (f.left, f.right)
    return ()


@lru_cache(maxsize=1 << 16)
def size(f: Formula) -> int:
    return 1 + sum(size(c) for c in children(f))


def depth(f: Formula) -> int:
    cs = children(f)
    return 0 if not cs else 1 + max(depth(c) for c in cs)


def negation_depth(f: Formula) -> int:
    """Maximum number of ``~`` on any root-to-leaf path."""
    own = 1 if isinstance(f, Neg) else 0
    cs = children(f)
    return own + (max(negation_depth(c) for c in cs) if cs else 0)


def variables(f: Formula) -> set[str]:
    if isinstance(f, (Var, AnnotatedVar)):
        return {f.name}
    out: set[str] = set()
    for c in children(f):
        out |= variables(c)
    return out


def variables_of(fs: Iterable[Formula]) -> list[str]:
    out: set[str] = set()
    for f in fs:
        out |= variables(f)
    return sorted(out)


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    for c in children(f):
        yield from subformulas(c)


def transform(f: Formula, fn: Callable[[Formula], Formula | None]) -> Formula:
    """Rebuild ``f`` bottom-up; ``fn`` may replace a node by returning non-None."""
    replaced = fn(f)
    if replaced is not None:
        return replaced
    if isinstance(f, UNARY):
        return type(f)(transform(f.arg, fn))
    if isinstance(f, BINARY):
        return type(f)(transform(f.left, fn), transform(f.right, fn))
    return f


# --------------------------------------------------------------------------
# Rendering

_PREC = {Impl: 1, Disj: 2, Conj: 3}
_SYM = {Impl: "->", Disj: "|", Conj: "&"}


def _prec(f: Formula) -> int:
    return _PREC.get(type(f), 4)


@lru_cache(maxsize=1 << 16)
def render(f: Formula) -> str:
    """Render with the minimum number of parentheses."""
    if isinstance(f, Var):
        return f.name
    if isinstance(f, AnnotatedVar):
        return f"{f.name}:{f.annotation}"
    if isinstance(f, Falsum):
        return "#f"
    if isinstance(f, Both):
        return "#b"
    if isinstance(f, Meta):
        return f.name
    if isinstance(f, AnnMeta):
        return f"{f.var}:{f.ann}"
    if isinstance(f, Neg):
        inner = render(f.arg)
        return "~" + (inner if _prec(f.arg) == 4 else f"({inner})")
    if isinstance(f, Oblig):
        return f"O({render(f.arg)})"
    p = _PREC[type(f)]
    left, right = render(f.left), render(f.right)
    if isinstance(f, Impl):
        # right associative
        if _prec(f.left) <= p:
            left = f"({left})"
        if _prec(f.right) < p:
            right = f"({right})"
    else:
        if _prec(f.left) < p:
            left = f"({left})"
        if _prec(f.right) <= p:
            right = f"({right})"
    return f"{left} {_SYM[type(f)]} {right}"


# --------------------------------------------------------------------------
# Parsing

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<op><->|->|[~&|():]|[¬∧∨⊃≡↔→])
      | (?P<const>\#[fb])
      | (?P<ident>[A-Za-z_][A-Za-z0-9_']*|[⊤⊥])
      | (?P<num>[0-9][A-Za-z0-9_]*)
    )""",
    re.VERBOSE,
)
_UNICODE = {"¬": "~", "∧": "&", "∨": "|", "⊃": "->", "→": "->", "≡": "<->", "↔": "<->"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise FormulaSyntaxError(f"unexpected character {text[start]!r}", start, text)
        kind = m.lastgroup
        value = m.group(kind)
        start = m.start(kind)
        if kind == "op":
            value = _UNICODE.get(value, value)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, schema: bool, complex_metas: frozenset[str]):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.schema = schema
        self.complex_metas = complex_metas

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, v, pos = self.take()
        if v != value:
            raise FormulaSyntaxError(f"expected {value!r}, found {v or 'end of input'!r}", pos, self.text)

    def error(self, message: str):
        raise FormulaSyntaxError(message, self.peek()[2], self.text)

    def parse(self) -> Formula:
        f = self.iff()
        kind, v, pos = self.peek()
        if kind != "end":
            raise FormulaSyntaxError(f"unexpected {v!r}", pos, self.text)
        return f

    def iff(self) -> Formula:
        f = self.imp()
        while self.peek()[1] == "<->":
            self.take()
            g = self.imp()
            f = bicond(f, g)
        return f

    def imp(self) -> Formula:
        f = self.disj()
        if self.peek()[1] == "->":
            self.take()
            return Impl(f, self.imp())
        return f

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek()[1] == "|":
            self.take()
            f = Disj(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek()[1] == "&":
            self.take()
            f = Conj(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, v, _ = self.peek()
        if v == "~":
            self.take()
            return Neg(self.unary())
        if kind == "ident" and v == "O":
            self.take()
            return Oblig(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        kind, v, pos = self.take()
        if v == "(":
            f = self.iff()
            self.expect(")")
            return f
        if kind == "const":
            return FALSUM if v == "#f" else BOTH
        if kind == "ident":
            is_meta = self.schema and v[0].isupper()
            if self.peek()[1] == ":":
                self.take()
                akind, ann, apos = self.take()
                if akind not in ("ident", "num"):
                    raise FormulaSyntaxError("expected annotation name", apos, self.text)
                return AnnMeta(v, ann) if is_meta else AnnotatedVar(v, ann)
            if is_meta:
                return Meta(v, COMPLEX if v in self.complex_metas else ANY)
            if not (v[0].islower() or v[0] == "_"):
                raise FormulaSyntaxError(f"variables must start lowercase, got {v!r}", pos, self.text)
            return Var(v)
        raise FormulaSyntaxError(f"unexpected {v or 'end of input'!r}", pos, self.text)


def parse_formula(text: str) -> Formula:
    """Parse a formula.  ``<->`` is expanded on the fly."""
    return _Parser(text, schema=False, complex_metas=frozenset()).parse()


def parse_schema(text: str, complex_metas: Iterable[str] = ()) -> Formula:
    """Parse a schema: uppercase identifiers (other than ``O``) are metavariables."""
    return _Parser(text, schema=True, complex_metas=frozenset(complex_metas)).parse()


# --------------------------------------------------------------------------
# Abbreviations

def bicond(a: Formula, b: Formula) -> Formula:
    return Conj(Impl(a, b), Impl(b, a))


def power(a: Formula, n: int) -> Formula:
    """``A^0 = A``, ``A^(k+1) = ~(A^k & ~A^k)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for _ in range(n):
        a = Neg(Conj(a, Neg(a)))
    return a


def wellbehaved(a: Formula, n: int) -> Formula:
    """Degree-``n`` well-behavedness ``A°n``: ``A°1 = A^1``, ``A°(k+1) = A°k & A^(k+1)``."""
    if n < 1:
        raise ValueError("well-behavedness degree must be >= 1")
    f = power(a, 1)
    for k in range(2, n + 1):
        f = Conj(f, power(a, k))
    return f


def iterated_neg(a: Formula, n: int) -> Formula:
    if n < 0:
        raise ValueError("n must be >= 0")
    for _ in range(n):
        a = Neg(a)
    return a


def true_const() -> Formula:
    return Neg(FALSUM)


def expand_abbreviation(kind: str, *args: Formula, n: int | None = None) -> Formula:
    """Expand one of ``bicond``, ``wellbehaved-degree``, ``iterated-neg``,
    ``power`` or ``true-const``."""
    if kind == "bicond":
        return bicond(*args)
    if kind == "true-const":
        return true_const()
    (a,) = args
    if kind == "wellbehaved-degree":
        return wellbehaved(a, 1 if n is None else n)
    if kind == "iterated-neg":
        return iterated_neg(a, 0 if n is None else n)
    if kind == "power":
        return power(a, 0 if n is None else n)
    raise ValueError(f"unknown abbreviation {kind!r}")


def strip_negations(f: Formula) -> tuple[int, Formula]:
    k = 0
    while isinstance(f, Neg):
        f, k = f.arg, k + 1
    return k, f


def is_complex(f: Formula) -> bool:
    """True unless ``f`` has the shape ``~...~ p:l``."""
    _, core = strip_negations(f)
    return not isinstance(core, (AnnotatedVar, AnnMeta))


# --------------------------------------------------------------------------
# Closure

def sort_key(f: Formula) -> tuple[int, str]:
    return (size(f), render(f))


def subformula_closure(fs: Iterable[Formula]) -> list[Formula]:
    """Least subformula-closed set containing ``fs``, ordered by size then text."""
    seen: set[Formula] = set()
    for f in fs:
        for g in subformulas(f):
            seen.add(g)
    return sorted(seen, key=sort_key)


# --------------------------------------------------------------------------
# Languages

@dataclass(frozen=True)
class Language:
    name: str
    falsum: bool = False
    both: bool = False
    oblig: bool = False
    annotated: bool = False

    def check(self, f: Formula) -> None:
        for g in subformulas(f):
            bad = None
            if isinstance(g, Falsum) and not self.falsum:
                bad = "#f"
            elif isinstance(g, Both) and not self.both:
                bad = "#b"
            elif isinstance(g, Oblig) and not self.oblig:
                bad = "O"
            elif isinstance(g, AnnotatedVar) and not self.annotated:
                bad = f"annotated atom {render(g)}"
            elif isinstance(g, Var) and self.annotated:
                bad = f"unannotated variable {g.name}"
            elif isinstance(g, (Meta, AnnMeta)):
                bad = f"metavariable {render(g)}"
            if bad:
                raise LanguageError(f"{bad} is not in the language of {self.name}")

    def check_all(self, fs: Iterable[Formula]) -> None:
        for f in fs:
            self.check(f)

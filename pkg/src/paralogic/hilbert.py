"""Hilbert-style proof scripts and their verification.

A proof file looks like::

    logic LP
    % comments start with a percent sign
    1  p -> ((p -> p) -> p)                              ; ax A1
    2  (p -> ((p -> p) -> p)) -> ((p -> (p -> p)) -> (p -> p)) ; ax
    3  (p -> (p -> p)) -> (p -> p)                        ; mp 1 2
    ...

Headers: ``logic <id> [n=<k>]``, optionally ``lattice <FOUR|path>`` (P-tau),
any number of ``extend <schema-id> <schema>`` lines adding schemas to the
table, and ``gamma <formula>`` lines giving the default hypothesis set.  Justifications: ``hyp``, ``ax``, ``ax <id>``, ``mp i j`` (line j
must be ``line i -> this line``), ``adj i j`` (RM3), ``nec i`` (DLP, line i
free of hypotheses).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .annotated import FOUR, Lattice, load_lattice
from .formula import (
    AnnMeta,
    Conj,
    Formula,
    FormulaSyntaxError,
    Impl,
    Language,
    LanguageError,
    Meta,
    Oblig,
    bicond,
    iterated_neg,
    parse_formula,
    parse_schema,
    render,
    strip_negations,
    transform,
    wellbehaved,
)
from .schema import IsBottom, Geq, JoinOf, NegOf, Schema, SchemaFamily, match_schema

MP, ADJ, NEC = "mp", "adj", "nec"

# Diagnoses
NO_SCHEMA_MATCH = "no-schema-match"
SIDE_CONDITION = "side-condition-failed"
UNKNOWN_SCHEMA = "unknown-schema"
BAD_ARITY = "bad-rule-arity"
BAD_REFERENCE = "bad-reference"
MP_MISMATCH = "mp-mismatch"
ADJ_MISMATCH = "adj-mismatch"
NEC_MISMATCH = "nec-mismatch"
NEC_ON_HYP = "nec-on-hypothesis"
HYP_NOT_IN_GAMMA = "hyp-not-in-Γ"
RULE_NOT_AVAILABLE = "rule-not-available"
LANGUAGE_ERROR = "language-error"


class ProofSyntaxError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


# Schema tables -------------------------------------------------------------

def _replace_metas(pattern: Formula, table: dict[str, Formula]) -> Formula:
    def fn(node):
        if isinstance(node, Meta) and node.name in table:
            return table[node.name]
        return None
    return transform(pattern, fn)


def _schemas(prefix: str, texts: Iterable[str], complex_metas=()) -> list[Schema]:
    return [Schema(f"{prefix}{i}", parse_schema(t, complex_metas)) for i, t in enumerate(texts, 1)]


POSITIVE_CLASSICAL = [
    "A -> (B -> A)",
    "(A -> (B -> C)) -> ((A -> B) -> (A -> C))",
    "((A -> B) -> A) -> A",
    "A & B -> A",
    "A & B -> B",
    "A -> (B -> A & B)",
    "A -> A | B",
    "B -> A | B",
    "(A -> C) -> ((B -> C) -> (A | B -> C))",
]

LP_NEGATION = [
    "~~A <-> A",
    "~(A -> B) <-> A & ~B",
    "~(A & B) <-> ~A | ~B",
    "~(A | B) <-> ~A & ~B",
    "A | ~A",
]

RM3_AXIOMS = [
    "A -> A",
    "(A -> B) -> ((B -> C) -> (A -> C))",
    "A -> ((A -> B) -> B)",
    "(A -> (A -> B)) -> (A -> B)",
    "A & B -> A",
    "A & B -> B",
    "(A -> B) & (A -> C) -> (A -> B & C)",
    "A -> A | B",
    "B -> A | B",
    "(A -> C) & (B -> C) -> (A | B -> C)",
    "A & (B | C) -> A & B | A & C",
    "~~A -> A",
    "(A -> ~B) -> (B -> ~A)",
    "A -> (A -> A)",
    "A | (A -> B)",
]

CN_POSITIVE = [
    "A -> (B -> A)",
    "(A -> B) -> ((A -> (B -> C)) -> (A -> C))",
    "A & B -> A",
    "A & B -> B",
    "A -> (B -> A & B)",
    "A -> A | B",
    "B -> A | B",
    "(A -> C) -> ((B -> C) -> (A | B -> C))",
]

# WA / WB stand for the degree-n well-behavedness of A / B and are expanded
# when the table is built.
CN_NEGATION = [
    "A | ~A",
    "~~A -> A",
    "WB -> ((A -> B) -> ((A -> ~B) -> ~A))",
    "WA & WB -> W(A -> B)",
    "WA & WB -> W(A & B)",
    "WA & WB -> W(A | B)",
]

D2_AXIOMS = [
    "A -> (B -> A)",
    "(A -> (B -> C)) -> ((A -> B) -> (A -> C))",
    "A & B -> A",
    "A & B -> B",
    "(A -> B) -> ((A -> C) -> (A -> B & C))",
    "A -> A | B",
    "B -> A | B",
    "(A -> C) -> ((B -> C) -> (A | B -> C))",
    "A | (A -> B)",
    "~(~A & ~~A & ~(A | ~A))",
    "~(~A & ~B & ~(A | B)) -> ~(~A & ~B & ~C & ~(A | B | C))",
    "~(~A & ~B & ~C & ~(A | B | C)) -> ~(~A & ~C & ~B & ~(A | C | B))",
    "~(~A & ~B & ~C & ~(A | B | C)) -> (A | B | ~C -> A | B)",
    "~(~A & ~B) -> A | B",
    "A | (B | ~B) -> ~(~A & ~(B | ~B))",
]

PTAU_NEGATION = [
    "(F -> G) -> ((F -> ~G) -> ~F)",
    "F -> (~F -> A)",
    "F | ~F",
]

ENRICH_F = ["#f -> A"]
ENRICH_B = ["A -> #b", "A -> ~#b"]
DEONTIC = ["O(A -> B) -> (O A -> O B)", "O #f -> #f"]


def _cn_schemas(n: int) -> list[Schema]:
    out = _schemas("C", CN_POSITIVE)
    w = {"WA": wellbehaved(Meta("A"), n), "WB": wellbehaved(Meta("B"), n)}
    for i, text in enumerate(CN_NEGATION, len(CN_POSITIVE) + 1):
        m = re.fullmatch(r"(.*)W\((.*)\)", text)
        if m:
            head, inner = m.groups()
            pattern = parse_schema(f"{head}X")
            w["X"] = wellbehaved(parse_schema(inner), n)
        else:
            pattern = parse_schema(text)
        out.append(Schema(f"C{i}", _replace_metas(pattern, w)))
    return out


def _neg_rewrite_family(idx: str) -> SchemaFamily:
    """``~^(k+1) P_l <-> ~^k P_m`` with ``m = ~l``, one schema per k >= 0."""
    def build(k: int) -> Schema:
        pattern = bicond(iterated_neg(AnnMeta("P", "l"), k + 1), iterated_neg(AnnMeta("P", "m"), k))
        return Schema(idx, pattern, (NegOf("m", "l"),))

    def guess(f: Formula):
        if isinstance(f, Conj) and isinstance(f.left, Impl):
            k, _ = strip_negations(f.left.left)
            if k >= 1:
                yield k - 1

    return SchemaFamily(idx, build, guess, "~^(n+1) P:l <-> ~^n P:m  if m = ~l", (0, 1, 2))


def _join_family(idx: str) -> SchemaFamily:
    """``P_l1 & ... & P_lk -> P_l`` with ``l`` the join of the ``li``, k >= 1."""
    def build(k: int) -> Schema:
        parts = [f"l{i}" for i in range(1, k + 1)]
        ante: Formula = AnnMeta("P", parts[0])
        for name in parts[1:]:
            ante = Conj(ante, AnnMeta("P", name))
        return Schema(idx, Impl(ante, AnnMeta("P", "l")), (JoinOf("l", tuple(parts)),))

    def guess(f: Formula):
        if isinstance(f, Impl):
            k, g = 1, f.left
            while isinstance(g, Conj):
                k, g = k + 1, g.left
            yield k

    return SchemaFamily(idx, build, guess, "P:l1 & ... & P:ln -> P:l  if l = join(l1..ln)")


def _ptau_schemas() -> list:
    out: list = _schemas("P", POSITIVE_CLASSICAL)
    base = len(out)
    for i, text in enumerate(PTAU_NEGATION, base + 1):
        out.append(Schema(f"P{i}", parse_schema(text, complex_metas=("F", "G"))))
    k = base + len(PTAU_NEGATION)
    out.append(Schema(f"P{k + 1}", parse_schema("P:l"), (IsBottom("l"),)))
    out.append(_neg_rewrite_family(f"P{k + 2}"))
    out.append(Schema(f"P{k + 3}", parse_schema("P:l -> P:m"), (Geq("l", "m"),)))
    out.append(_join_family(f"P{k + 4}"))
    return out


@dataclass
class SchemaTable:
    logic: str
    schemas: list
    rules: frozenset
    language: Language
    n: int | None = None
    lattice: Lattice | None = None
    semantics: str = ""  # engine used for cross-checking: a matrix id, "Cn", "D2", "Ptau", "DLP"

    def get(self, schema_id: str):
        for s in self.schemas:
            if s.id == schema_id:
                return s
        return None

    def extend(self, schema_id: str, text: str) -> None:
        if self.get(schema_id) is not None:
            raise ValueError(f"schema id {schema_id!r} already in the table")
        complex_metas = ("F", "G") if self.logic == "Ptau" else ()
        self.schemas.append(Schema(schema_id, parse_schema(text, complex_metas)))


HILBERT_LOGICS = ("LP", "LPF", "LPB", "LPFB", "RM3", "Cn", "D2", "Ptau", "DLP")


def parse_logic_id(text: str, n: int | None = None) -> tuple[str, int | None]:
    """Normalise ``lp``, ``RM3``, ``c2``, ``Cn`` (+ n), ``ptau``, ``dlp``... to (id, n)."""
    key = text.strip().replace("→", "").replace("->", "").replace(",", "")
    low = key.lower()
    m = re.fullmatch(r"c(\d+)", low)
    if m:
        return "Cn", int(m.group(1))
    if low == "cn":
        return "Cn", n if n is not None else 1
    names = {"lp": "LP", "lpf": "LPF", "lpb": "LPB", "lpfb": "LPFB", "rm3": "RM3",
             "d2": "D2", "ptau": "Ptau", "pτ": "Ptau", "dlp": "DLP", "dlpf": "DLP"}
    if low in names:
        return names[low], None
    raise ValueError(f"unknown proof system {text!r}")


def schema_table(logic: str, n: int | None = None, lattice: Lattice | None = None) -> SchemaTable:
    logic, parsed_n = parse_logic_id(logic, n)
    if logic == "Cn":
        n = parsed_n
        if n is None or n < 1:
            raise ValueError("Cn needs a degree n >= 1")
        return SchemaTable("Cn", _cn_schemas(n), frozenset({MP}), Language(f"C{n}"), n, semantics="Cn")
    if n is not None:
        raise ValueError(f"the degree n applies only to Cn, not {logic}")
    lp = _schemas("A", POSITIVE_CLASSICAL + LP_NEGATION)
    if logic in ("LP", "LPF", "LPB", "LPFB"):
        schemas = list(lp)
        if logic in ("LPF", "LPFB"):
            schemas += _schemas("F", ENRICH_F)
        if logic in ("LPB", "LPFB"):
            schemas += _schemas("B", ENRICH_B)
        lang = Language(logic, falsum="F" in logic[2:], both="B" in logic[2:])
        return SchemaTable(logic, schemas, frozenset({MP}), lang, semantics=logic)
    if logic == "RM3":
        return SchemaTable("RM3", _schemas("R", RM3_AXIOMS), frozenset({MP, ADJ}),
                           Language("RM3"), semantics="RM3")
    if logic == "D2":
        return SchemaTable("D2", _schemas("D", D2_AXIOMS), frozenset({MP}), Language("D2"), semantics="D2")
    if logic == "Ptau":
        return SchemaTable("Ptau", _ptau_schemas(), frozenset({MP}), Language("Ptau", annotated=True),
                           lattice=lattice or FOUR, semantics="Ptau")
    if logic == "DLP":
        schemas = lp + _schemas("F", ENRICH_F) + _schemas("O", DEONTIC)
        return SchemaTable("DLP", schemas, frozenset({MP, NEC}),
                           Language("DLP", falsum=True, oblig=True), semantics="DLP")
    raise ValueError(f"unknown proof system {logic!r}")  # pragma: no cover


# Proof scripts -------------------------------------------------------------

@dataclass(frozen=True)
class Justification:
    rule: str  # "hyp", "ax", "mp", "adj", "nec"
    args: tuple = ()
    schema_id: str | None = None

    def __str__(self):
        if self.rule == "ax":
            return "ax" + (f" {self.schema_id}" if self.schema_id else "")
        return " ".join([self.rule, *map(str, self.args)])


@dataclass(frozen=True)
class ProofLine:
    index: int
    formula: Formula
    just: Justification
    source_line: int = 0


@dataclass
class ProofScript:
    logic: str
    lines: list[ProofLine]
    n: int | None = None
    lattice_spec: str | None = None
    extensions: list[tuple[str, str]] = field(default_factory=list)
    gamma: list[Formula] = field(default_factory=list)

    def table(self, lattice: Lattice | None = None) -> SchemaTable:
        if lattice is None and self.lattice_spec:
            lattice = load_lattice(self.lattice_spec)
        t = schema_table(self.logic, self.n, lattice)
        for sid, text in self.extensions:
            t.extend(sid, text)
        return t

    def render(self) -> str:
        head = f"logic {self.logic}" + (f" n={self.n}" if self.n is not None else "")
        out = [head]
        if self.lattice_spec:
            out.append(f"lattice {self.lattice_spec}")
        out += [f"extend {sid} {text}" for sid, text in self.extensions]
        out += [f"gamma {render(g)}" for g in self.gamma]
        out += [f"{ln.index} {render(ln.formula)} ; {ln.just}" for ln in self.lines]
        return "\n".join(out) + "\n"


def _parse_just(text: str, lineno: int) -> Justification:
    parts = text.split()
    if not parts:
        raise ProofSyntaxError("missing justification", lineno)
    rule, args = parts[0].lower(), parts[1:]
    if rule == "ax":
        if len(args) > 1:
            raise ProofSyntaxError("ax takes at most one schema id", lineno)
        return Justification("ax", (), args[0] if args else None)
    if rule not in ("hyp", MP, ADJ, NEC):
        raise ProofSyntaxError(f"unknown justification {parts[0]!r}", lineno)
    try:
        nums = tuple(int(a) for a in args)
    except ValueError:
        raise ProofSyntaxError(f"line references must be integers in {text!r}", lineno) from None
    return Justification(rule, nums)


def parse_proof(text: str) -> ProofScript:
    logic = n = lattice_spec = None
    extensions: list[tuple[str, str]] = []
    gamma: list[Formula] = []
    lines: list[ProofLine] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        word = line.split(None, 1)[0]
        if word == "logic":
            parts = line.split()[1:]
            if not parts:
                raise ProofSyntaxError("logic header needs an id", lineno)
            opts = dict(p.split("=", 1) for p in parts[1:] if "=" in p)
            try:
                logic, n = parse_logic_id(parts[0], int(opts["n"]) if "n" in opts else None)
            except ValueError as e:
                raise ProofSyntaxError(str(e), lineno) from None
            continue
        if word == "lattice":
            lattice_spec = line.split(None, 1)[1].strip()
            continue
        if word == "extend":
            parts = line.split(None, 2)
            if len(parts) != 3:
                raise ProofSyntaxError("extend needs an id and a schema", lineno)
            extensions.append((parts[1], parts[2]))
            continue
        if word == "gamma":
            try:
                gamma.append(parse_formula(line.split(None, 1)[1]))
            except (FormulaSyntaxError, IndexError) as e:
                raise ProofSyntaxError(f"bad gamma formula: {e}", lineno) from None
            continue
        if logic is None:
            raise ProofSyntaxError("proof lines must follow a 'logic' header", lineno)
        m = re.fullmatch(r"(\d+)\s+(.*?)\s*;\s*(.*)", line)
        if not m:
            raise ProofSyntaxError(f"cannot parse proof line {raw.strip()!r}", lineno)
        idx = int(m.group(1))
        if idx != len(lines) + 1:
            raise ProofSyntaxError(f"expected line number {len(lines) + 1}, found {idx}", lineno)
        try:
            f = parse_formula(m.group(2))
        except FormulaSyntaxError as e:
            raise ProofSyntaxError(str(e), lineno) from None
        lines.append(ProofLine(idx, f, _parse_just(m.group(3), lineno), lineno))
    if logic is None:
        raise ProofSyntaxError("missing 'logic' header")
    return ProofScript(logic, lines, n, lattice_spec, extensions, gamma)


def load_proof(path: str | Path) -> ProofScript:
    return parse_proof(Path(path).read_text())


# Verification --------------------------------------------------------------

@dataclass(frozen=True)
class LineCheck:
    index: int
    ok: bool
    note: str  # schema id, rule summary or diagnosis detail
    hyps: frozenset = frozenset()


@dataclass
class ProofVerdict:
    accepted: bool
    checks: list[LineCheck]
    line: int | None = None
    diagnosis: str | None = None
    detail: str = ""

    def __bool__(self):
        return self.accepted

    def summary(self) -> str:
        if self.accepted:
            n = len(self.checks)
            return f"accepted ({n} line{'' if n == 1 else 's'})"
        return f"rejected at line {self.line}: {self.diagnosis}" + (f" ({self.detail})" if self.detail else "")

    def report(self) -> str:
        out = []
        for c in self.checks:
            out.append(f"{c.index}\t{'ok' if c.ok else 'FAIL'}\t{c.note}")
        out.append(self.summary())
        return "\n".join(out) + "\n"


class _Reject(Exception):
    def __init__(self, diagnosis: str, detail: str = ""):
        self.diagnosis = diagnosis
        self.detail = detail


def _match_axiom(table: SchemaTable, f: Formula, schema_id: str | None) -> str:
    if schema_id is not None:
        s = table.get(schema_id)
        if s is None:
            raise _Reject(UNKNOWN_SCHEMA, f"no schema {schema_id!r} in the {table.logic} table")
        candidates = [s]
    else:
        candidates = table.schemas
    side_failures = []
    for s in candidates:
        m = match_schema(s, f, table.lattice)
        if m:
            return s.id
        if m.reason == "side-condition":
            side_failures.append(f"{s.id}: {', '.join(map(str, m.failed))}")
    if side_failures:
        raise _Reject(SIDE_CONDITION, "; ".join(side_failures))
    target = f"schema {schema_id}" if schema_id else "any schema"
    raise _Reject(NO_SCHEMA_MATCH, f"{render(f)} is not an instance of {target}")


def verify_proof(script: ProofScript, gamma: Iterable[Formula] | None = None, table: SchemaTable | None = None,
                 lattice: Lattice | None = None) -> ProofVerdict:
    """Check every line of ``script``; the first failing line is reported.

    ``gamma`` defaults to the script's own ``gamma`` header lines.
    """
    if gamma is None:
        gamma = script.gamma
    table = table or script.table(lattice)
    lat = table.lattice
    canon = lat.canonical if lat is not None else (lambda f: f)
    gamma_set = {canon(g) for g in gamma}
    proved: dict[int, Formula] = {}
    hyps: dict[int, frozenset] = {}
    checks: list[LineCheck] = []

    def ref(i: int) -> Formula:
        if i not in proved or i >= current:
            raise _Reject(BAD_REFERENCE, f"line {i} is not an earlier line")
        return proved[i]

    for ln in script.lines:
        current = ln.index
        j = ln.just
        try:
            try:
                table.language.check(ln.formula)
                if lat is not None:
                    lat.check(ln.formula)
            except (LanguageError, ValueError) as e:
                raise _Reject(LANGUAGE_ERROR, str(e)) from None
            f = canon(ln.formula)
            if j.rule == "hyp":
                if j.args:
                    raise _Reject(BAD_ARITY, "hyp takes no arguments")
                if f not in gamma_set:
                    raise _Reject(HYP_NOT_IN_GAMMA, render(f))
                note, hs = "hyp", frozenset({ln.index})
            elif j.rule == "ax":
                note, hs = f"ax {_match_axiom(table, f, j.schema_id)}", frozenset()
            else:
                if j.rule not in table.rules:
                    raise _Reject(RULE_NOT_AVAILABLE, f"{j.rule} is not a rule of {table.logic}")
                want = 1 if j.rule == NEC else 2
                if len(j.args) != want:
                    raise _Reject(BAD_ARITY, f"{j.rule} takes {want} line reference(s)")
                prem = [ref(i) for i in j.args]
                if j.rule == MP:
                    if prem[1] != Impl(prem[0], f):
                        raise _Reject(MP_MISMATCH, f"line {j.args[1]} is not line {j.args[0]} -> line {ln.index}")
                elif j.rule == ADJ:
                    if f != Conj(prem[0], prem[1]):
                        raise _Reject(ADJ_MISMATCH, f"not the conjunction of lines {j.args[0]} and {j.args[1]}")
                else:
                    if hyps[j.args[0]]:
                        raise _Reject(NEC_ON_HYP, f"line {j.args[0]} depends on hypotheses")
                    if f != Oblig(prem[0]):
                        raise _Reject(NEC_MISMATCH, f"not O applied to line {j.args[0]}")
                hs = frozenset().union(*(hyps[i] for i in j.args))
                note = str(j)
        except _Reject as r:
            checks.append(LineCheck(ln.index, False, r.diagnosis))
            return ProofVerdict(False, checks, ln.index, r.diagnosis, r.detail)
        proved[ln.index] = f
        hyps[ln.index] = hs
        checks.append(LineCheck(ln.index, True, note, hs))
    return ProofVerdict(True, checks)


def conclusion_hypotheses(verdict: ProofVerdict) -> frozenset:
    """Hypothesis lines the last line depends on."""
    return verdict.checks[-1].hyps if verdict.checks else frozenset()

"""Seeded property suites over the engines, translations and proof corpus.

Every suite takes a seed; reports embed it, and a suite run twice with the
same seed produces the same report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable

from . import engines, hilbert, matrix
from .annotated import FOUR, classical_neg_ptau, ptau_eval, rewrite_negations
from .dacosta import cn_consequence
from .deontic import dlp_consequence_bounded, valid_everywhere
from .discussive import DiscussiveStructure, d2_consequence, d2_eval
from .formula import (
    AnnotatedVar,
    Formula,
    Impl,
    Neg,
    Oblig,
    Var,
    negation_depth,
    parse_formula,
    render,
    variables_of,
)
from .matrix import THREE, all_unary_tables, build_matrix, classify_function, consequence, evaluate
from .sampling import VARS, Vocabulary, instantiate, random_formula
from .translate import interdefinability, lp_impl_in_rm3, lp_to_rm3, lp_via_bl, rm3_impl_in_lp

CN_SAMPLE_CLOSURE = 2000


@dataclass
class Row:
    label: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total


@dataclass
class SuiteResult:
    name: str
    seed: int
    rows: list[Row] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def add(self, label: str, passed: int, total: int) -> None:
        self.rows.append(Row(label, passed, total))

    def report(self, max_failures: int = 5) -> str:
        head = f"{self.name} (seed {self.seed}): " + ", ".join(f"{r.label}: {r.passed}/{r.total}" for r in self.rows)
        lines = [head] + [f"  {n}" for n in self.notes]
        lines += [f"  failed: {f}" for f in self.failures[:max_failures]]
        if len(self.failures) > max_failures:
            lines.append(f"  ... {len(self.failures) - max_failures} more failures")
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines) + "\n"


def _rng(suite: str, part: str, seed: int) -> random.Random:
    # string seeds are hashed deterministically, so parts stay independent
    return random.Random(f"{suite}:{part}:{seed}")


def _query(rng: random.Random, vocab: Vocabulary, max_premises: int = 2) -> tuple[list[Formula], Formula]:
    gamma = [random_formula(rng, vocab, 2) for _ in range(rng.randint(0, max_premises))]
    return gamma, random_formula(rng, vocab, 3)


def _q(gamma, a) -> str:
    return engines.describe_query(gamma, a)


# Matrix logics -----------------------------------------------------------

def deduction_theorem(seed: int = 0, samples: int = 200) -> SuiteResult:
    """Gamma, A |- B iff Gamma |- A -> B."""
    out = SuiteResult("deduction-theorem", seed)
    for logic in ("LP", "RM3"):
        m = build_matrix(logic)
        rng = _rng(out.name, logic, seed)
        good = 0
        for _ in range(samples):
            gamma, b = _query(rng, Vocabulary())
            a = random_formula(rng, Vocabulary(), 3)
            left = consequence(m, gamma + [a], b).holds
            right = consequence(m, gamma, Impl(a, b)).holds
            if left == right:
                good += 1
            else:
                out.failures.append(f"{logic}: {_q(gamma + [a], b)} is {left}, implication form is {right}")
        out.add(logic, good, samples)
    return out


def bl_simulation(seed: int = 0, samples: int = 200) -> SuiteResult:
    out = SuiteResult("bl-simulation", seed)
    rng = _rng(out.name, "LP", seed)
    good = 0
    for _ in range(samples):
        gamma, a = _query(rng, Vocabulary())
        sim = lp_via_bl(gamma, a)
        if sim.agree:
            good += 1
        else:
            out.failures.append(f"{_q(gamma, a)}: LP {sim.lp.holds}, BL {sim.bl.holds}")
    out.add("LP via BL", good, samples)
    return out


def containment(seed: int = 0, samples: int = 200) -> SuiteResult:
    out = SuiteResult("containment", seed)
    rng = _rng(out.name, "LP", seed)
    lp, cl = build_matrix("LP"), build_matrix("CL")
    good = 0
    for _ in range(samples):
        gamma, a = _query(rng, Vocabulary())
        if not consequence(lp, gamma, a).holds or consequence(cl, gamma, a).holds:
            good += 1
        else:
            out.failures.append(f"{_q(gamma, a)} holds in LP but not classically")
    out.add("LP in CL", good, samples)
    return out


_VOCAB = {
    "LP": Vocabulary(), "LPF": Vocabulary(falsum=True), "LPB": Vocabulary(both=True),
    "LPFB": Vocabulary(falsum=True, both=True), "K3": Vocabulary(), "RM3": Vocabulary(),
    "BL": Vocabulary(), "CL": Vocabulary(),
}


def modus_ponens(seed: int = 0, samples: int = 100) -> SuiteResult:
    """{A, A -> B} |- B in every matrix logic; D2 preserves it across Gamma."""
    out = SuiteResult("modus-ponens", seed)
    for logic, vocab in _VOCAB.items():
        m = build_matrix(logic)
        rng = _rng(out.name, logic, seed)
        good = 0
        for _ in range(samples):
            a, b = random_formula(rng, vocab, 3), random_formula(rng, vocab, 3)
            if consequence(m, [a, Impl(a, b)], b).holds:
                good += 1
            else:
                out.failures.append(f"{logic}: {_q([a, Impl(a, b)], b)}")
        out.add(logic, good, samples)
    rng = _rng(out.name, "D2", seed)
    good = 0
    for _ in range(samples):
        gamma, a = _query(rng, Vocabulary(names=("p", "q")), 1)
        b = random_formula(rng, Vocabulary(names=("p", "q")), 2)
        if not (d2_consequence(gamma, a) and d2_consequence(gamma, Impl(a, b))) or d2_consequence(gamma, b):
            good += 1
        else:
            out.failures.append(f"D2: {_q(gamma, a)} and {render(Impl(a, b))} but not {render(b)}")
    out.add("D2", good, samples)
    return out


def lp_k3_contrast(seed: int = 0) -> SuiteResult:
    out = SuiteResult("lp-k3-contrast", seed)
    lem, efq = parse_formula("p | ~p"), parse_formula("~p -> (p -> q)")
    lp, k3 = build_matrix("LP"), build_matrix("K3")
    for label, got in [
        ("p | ~p valid in LP", matrix.is_valid(lp, lem)),
        ("p | ~p invalid in K3", not matrix.is_valid(k3, lem)),
        ("~p -> (p -> q) valid in K3", matrix.is_valid(k3, efq)),
        ("~p -> (p -> q) invalid in LP", not matrix.is_valid(lp, efq)),
    ]:
        out.add(label, int(got), 1)
    return out


def interdefinability_suite(seed: int = 0) -> SuiteResult:
    out = SuiteResult("interdefinability", seed)
    for label, (good, total) in interdefinability().items():
        out.add(label, good, total)
    # RM3's implication defined in LP, then LP's implication inside that defined in RM3
    rm3 = build_matrix("RM3")
    back = lp_to_rm3(rm3_impl_in_lp(Var("p"), Var("q")))
    good = sum(evaluate(rm3, {"p": x, "q": y}, back) is rm3.impl[x, y] for x in THREE for y in THREE)
    out.add("round trip", good, 9)
    nested = lp_impl_in_rm3(Var("p"), lp_impl_in_rm3(Var("q"), Var("r")))
    lp = build_matrix("LP")
    good = sum(
        evaluate(rm3, v, nested) is evaluate(lp, v, parse_formula("p -> (q -> r)"))
        for v in matrix.valuations(["p", "q", "r"], THREE)
    )
    out.add("nested", good, 27)
    return out


def representability(seed: int = 0) -> SuiteResult:
    out = SuiteResult("representability", seed)
    lpfb = build_matrix("LPFB")
    tables = all_unary_tables()
    synth = 0
    counts = {"tf_closed": 0, "b_free": 0, "both": 0}
    consistent = 0
    for g in tables:
        f = matrix.synthesize_formula(g)
        arg = matrix.argument_variables(1)[0]
        if all(evaluate(lpfb, {arg: x}, f) is g(x) for x in THREE):
            synth += 1
        c = classify_function(g)
        counts["tf_closed"] += c.tf_closed
        counts["b_free"] += c.b_free
        counts["both"] += c.tf_closed and c.b_free
        expected = {"LPFB"} | ({"LPF"} if c.tf_closed else set()) | ({"LPB"} if c.b_free else set())
        if c.tf_closed and c.b_free:
            expected.add("LP")
        consistent += set(c.representable_in) == expected
    out.add("synthesized", synth, len(tables))
    out.add("classes consistent", consistent, len(tables))
    chain = counts["both"] <= counts["tf_closed"] <= len(tables) and counts["both"] <= counts["b_free"]
    out.add("inclusions", int(chain), 1)
    out.notes.append(
        f"tf_closed & b_free: {counts['both']}, tf_closed: {counts['tf_closed']}, "
        f"b_free: {counts['b_free']}, all: {len(tables)}"
    )
    return out


# Schema soundness --------------------------------------------------------

@dataclass(frozen=True)
class _SoundnessCase:
    table: str
    engine: str
    vocab: Vocabulary
    depth: int
    kwargs: dict = field(default_factory=dict)


SOUNDNESS_CASES = [
    _SoundnessCase("LP", "lp", Vocabulary(), 4),
    _SoundnessCase("LPFB", "lpfb", Vocabulary(falsum=True, both=True), 4),
    _SoundnessCase("RM3", "rm3", Vocabulary(), 4),
    _SoundnessCase("C1", "c1", Vocabulary(), 2, {"max_closure": CN_SAMPLE_CLOSURE}),
    _SoundnessCase("D2", "d2", Vocabulary(), 4),
    _SoundnessCase("Ptau", "ptau", Vocabulary(annotations=FOUR.elements), 4, {"lattice": FOUR}),
    _SoundnessCase("DLP", "dlp", Vocabulary(names=("p", "q"), falsum=True, oblig=True), 4, {"bound": 2}),
]


def schema_soundness(seed: int = 0, per_schema: int = 100, only: tuple[str, ...] = ()) -> SuiteResult:
    """Random instances of every axiom schema are valid under the matching engine."""
    out = SuiteResult("schema-soundness", seed)
    for case in SOUNDNESS_CASES:
        if only and case.table not in only:
            continue
        table = hilbert.schema_table(case.table)
        rng = _rng(out.name, case.table, seed)
        good = total = 0
        for s in table.schemas:
            for _ in range(per_schema):
                f = instantiate(s, rng, case.vocab, case.depth, table.lattice)
                total += 1
                r = engines.check(case.engine, [], f, **case.kwargs)
                if r.holds:
                    good += 1
                else:
                    out.failures.append(f"{case.table} {s.id}: {render(f)} ({r.status})")
        label = case.table + (" (bound 2)" if case.table == "DLP" else "")
        out.add(label, good, total)
    return out


# World-based logics -------------------------------------------------------

def deontic(seed: int = 0, samples: int = 50, bound: int = 2) -> SuiteResult:
    """Necessitation and the deduction theorem, both up to ``bound`` worlds."""
    out = SuiteResult("deontic", seed)
    vocab = Vocabulary(names=("p", "q"), falsum=True, oblig=True)
    rng = _rng(out.name, "nec", seed)
    formulas = [random_formula(rng, vocab, 3) for _ in range(samples)]
    valid = valid_everywhere(formulas, bound, 2)
    boxed = valid_everywhere([Oblig(f) for f, ok in zip(formulas, valid) if ok], bound, 2)
    out.add("necessitation", sum(boxed), len(boxed))
    out.notes.append(f"{len(boxed)} of {samples} sampled formulas valid up to bound {bound}")
    rng = _rng(out.name, "dt", seed)
    good = 0
    for _ in range(samples):
        a, b = random_formula(rng, vocab, 2), random_formula(rng, vocab, 2)
        left = dlp_consequence_bounded([a], b, bound, 2).holds_up_to_bound
        right = dlp_consequence_bounded([], Impl(a, b), bound, 2).holds_up_to_bound
        good += left == right
        if left != right:
            out.failures.append(f"deduction theorem: {render(a)} / {render(b)}")
    out.add("deduction theorem", good, samples)
    return out


def d2_collapse(seed: int = 0, samples: int = 100) -> SuiteResult:
    """One-world discussive structures behave classically."""
    out = SuiteResult("d2-collapse", seed)
    rng = _rng(out.name, "D2", seed)
    cl = build_matrix("CL")
    good = 0
    for _ in range(samples):
        gamma, a = _query(rng, Vocabulary())
        names = variables_of(gamma + [a])
        d2_holds = True
        for v in matrix.valuations(names, (matrix.T, matrix.F)):
            s = DiscussiveStructure(({k: x is matrix.T for k, x in v.items()},))
            if all(d2_eval(s, 0, g) for g in gamma) and not d2_eval(s, 0, a):
                d2_holds = False
                break
        if d2_holds == consequence(cl, gamma, a).holds:
            good += 1
        else:
            out.failures.append(_q(gamma, a))
    out.add("one world = classical", good, samples)
    return out


def ptau_properties(seed: int = 0, samples: int = 100) -> SuiteResult:
    out = SuiteResult("ptau", seed)
    lat = FOUR
    mono = total = 0
    for lo in lat.elements:
        for hi in lat.elements:
            if not lat.leq(lo, hi):
                continue
            for i in lat.elements:
                total += 1
                mono += (not ptau_eval(lat, {"p": i}, AnnotatedVar("p", hi))) or ptau_eval(lat, {"p": i}, AnnotatedVar("p", lo))
    out.add("monotonicity", mono, total)
    rng = _rng(out.name, "neg", seed)
    vocab = Vocabulary(annotations=lat.elements)
    flip = steps = 0
    for _ in range(samples):
        f = random_formula(rng, vocab, 3)
        interp = {n: rng.choice(lat.elements) for n in VARS}
        flip += ptau_eval(lat, interp, classical_neg_ptau(f)) != ptau_eval(lat, interp, f)
        k = rng.randint(0, 4)
        atom = AnnotatedVar(rng.choice(VARS), rng.choice(lat.elements))
        g: Formula = atom
        for _ in range(k):
            g = Neg(g)
        expected = atom.annotation
        for _ in range(negation_depth(g)):
            expected = lat.neg(expected)
        steps += rewrite_negations(g, lat).annotation == expected
    out.add("classical negation flips", flip, samples)
    out.add("negation rewriting", steps, samples)
    return out


# Proof corpus -------------------------------------------------------------

def default_corpus() -> Path:
    here = Path(__file__).resolve().parents[2] / "proofs"
    return here if here.is_dir() else Path("proofs")


def corpus_files(corpus: Path | str | None = None) -> list[Path]:
    return sorted(Path(corpus or default_corpus()).glob("*.prf"))


def theorem_engine(table: hilbert.SchemaTable, extended: bool) -> tuple[str, dict]:
    if extended:
        return "cl", {}
    if table.logic == "Cn":
        return f"c{table.n}", {"max_closure": CN_SAMPLE_CLOSURE}
    if table.logic == "Ptau":
        return "ptau", {"lattice": table.lattice}
    if table.logic == "DLP":
        return "dlp", {"bound": 2}
    return table.logic.lower(), {}


@dataclass(frozen=True)
class Mutation:
    script: hilbert.ProofScript
    line: int
    diagnosis: str
    kind: str


def mutate(script: hilbert.ProofScript, rng: random.Random) -> Mutation:
    """Damage one line so that verification must fail there with a known diagnosis."""
    table = script.table()
    lines = script.lines
    options: list[tuple[str, int]] = []
    for ln in lines:
        options.append(("fresh", ln.index))
        if ln.just.rule in (hilbert.MP, hilbert.ADJ, hilbert.NEC):
            options.append(("forward", ln.index))
        if ln.just.rule == hilbert.MP:
            options.append(("renumber", ln.index))
            options.append(("rule", ln.index))
    kind, k = rng.choice(options)
    ln = lines[k - 1]
    j = ln.just
    if kind == "fresh":
        fresh = Neg(AnnotatedVar("zz", "t")) if table.logic == "Ptau" else Var("zz")
        new = replace(ln, formula=fresh)
        diag = {
            "hyp": hilbert.HYP_NOT_IN_GAMMA, "ax": hilbert.NO_SCHEMA_MATCH, hilbert.MP: hilbert.MP_MISMATCH,
            hilbert.ADJ: hilbert.ADJ_MISMATCH, hilbert.NEC: hilbert.NEC_MISMATCH,
        }[j.rule]
    elif kind == "forward":
        new = replace(ln, just=replace(j, args=(k,) + j.args[1:]))
        diag = hilbert.BAD_REFERENCE
    elif kind == "renumber":
        i, target = j.args
        wrong = [x for x in range(1, k) if x != target and lines[x - 1].formula != Impl(lines[i - 1].formula, ln.formula)]
        if not wrong:
            return mutate(script, rng)
        new = replace(ln, just=replace(j, args=(i, rng.choice(wrong))))
        diag = hilbert.MP_MISMATCH
    else:
        other = hilbert.NEC if hilbert.ADJ in table.rules else hilbert.ADJ
        if other in table.rules:
            return mutate(script, rng)
        new = replace(ln, just=replace(j, rule=other))
        diag = hilbert.RULE_NOT_AVAILABLE
    changed = list(lines)
    changed[k - 1] = new
    return Mutation(replace(script, lines=changed), k, diag, kind)


def proof_corpus(seed: int = 0, corpus: Path | str | None = None, mutations: int = 20) -> SuiteResult:
    out = SuiteResult("proof-corpus", seed)
    files = corpus_files(corpus)
    scripts = {f.name: hilbert.load_proof(f) for f in files}
    accepted = theorems = sound = 0
    systems = set()
    for name, script in scripts.items():
        table = script.table()
        verdict = hilbert.verify_proof(script, table=table)
        if not verdict:
            out.failures.append(f"{name}: {verdict.summary()}")
            continue
        accepted += 1
        systems.add("CL" if script.extensions else table.logic)
        engine, kw = theorem_engine(table, bool(script.extensions))
        for ln, chk in zip(script.lines, verdict.checks):
            if chk.hyps:
                continue
            theorems += 1
            if engines.check(engine, [], ln.formula, **kw).holds:
                sound += 1
            else:
                out.failures.append(f"{name} line {ln.index}: {render(ln.formula)} not valid in {engine}")
    out.add("accepted", accepted, len(scripts))
    out.add("theorem lines valid", sound, theorems)
    rng = _rng(out.name, "mutations", seed)
    names = sorted(scripts)
    caught = 0
    for _ in range(mutations):
        name = rng.choice(names)
        m = mutate(scripts[name], rng)
        v = hilbert.verify_proof(m.script)
        if not v and v.line == m.line and v.diagnosis == m.diagnosis:
            caught += 1
        else:
            out.failures.append(f"{name} {m.kind} at line {m.line}: expected {m.diagnosis}, got {v.summary()}")
    out.add("mutations rejected", caught, mutations)
    out.notes.append("systems: " + ", ".join(sorted(systems)))
    return out


def paraconsistency(seed: int = 0) -> SuiteResult:
    """{p, ~p} does not entail q, except classically."""
    out = SuiteResult("paraconsistency", seed)
    p, np_, q = parse_formula("p"), parse_formula("~p"), parse_formula("q")
    for logic in ("lp", "rm3", "d2"):
        out.add(logic.upper(), int(engines.check(logic, [p, np_], q).status == engines.COUNTERMODEL), 1)
    ann = [parse_formula("p:t"), parse_formula("~p:t")]
    r = engines.check("ptau", ann, parse_formula("q:t"), lattice=FOUR)
    out.add("Ptau", int(r.status == engines.COUNTERMODEL), 1)
    out.add("C1", int(not cn_consequence([p, np_], q, 1).consequence), 1)
    out.add("CL explodes", int(engines.check("cl", [p, np_], q).holds), 1)
    return out


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "deduction-theorem": deduction_theorem,
    "bl-simulation": bl_simulation,
    "schema-soundness": schema_soundness,
    "interdefinability": interdefinability_suite,
    "representability": representability,
    "lp-k3-contrast": lp_k3_contrast,
    "containment": containment,
    "modus-ponens": modus_ponens,
    "proof-corpus": proof_corpus,
    "deontic": deontic,
    "d2-collapse": d2_collapse,
    "ptau": ptau_properties,
    "paraconsistency": paraconsistency,
}


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(seed)

"""Acceptance criteria 1-10, one PASS/FAIL line each (also repeated in the terminal summary)."""

import time
from pathlib import Path

from conftest import ACCEPTANCE_LINES
from paralogic import engines, hilbert, matrix, props
from paralogic.annotated import FOUR, classical_neg_ptau, ptau_consequence
from paralogic.dacosta import classical_neg_cn, cn_consequence
from paralogic.deontic import deontic_inconsistency_formula, dlp_consequence_bounded, valid_everywhere
from paralogic.formula import Impl, Var, parse_formula
from paralogic.matrix import B, F, build_matrix
from paralogic.translate import interdefinability

P = parse_formula
PROOFS = Path(__file__).resolve().parent.parent / "proofs"


def record(n, title, ok, detail=""):
    line = f"criterion {n:>2} {title}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_01_paraconsistency_quintet():
    p, np_, q = P("p"), P("~p"), P("q")
    results = {}
    for logic in ("lp", "rm3", "d2"):
        r, dt = timed(lambda: engines.check(logic, [p, np_], q))
        results[logic] = (r.status == engines.COUNTERMODEL and r.witness is not None, dt)
    r, dt = timed(lambda: ptau_consequence(FOUR, [P("p:t"), P("~p:t")], P("q:t")))
    results["ptau"] = (not r and r.counter == {"p": "top", "q": "bot"}, dt)
    r, dt = timed(lambda: engines.check("c1", [p, np_], q))
    results["c1"] = (r.status == engines.CANDIDATE, dt)
    r, dt = timed(lambda: engines.check("cl", [p, np_], q))
    results["classical"] = (r.status == engines.HOLDS, dt)
    ok = all(good and dt < 1.0 for good, dt in results.values())
    slowest = max(dt for _, dt in results.values())
    record(1, "paraconsistency quintet", ok, f"{sum(g for g, _ in results.values())}/6 verdicts, slowest {slowest:.3f}s")


def test_criterion_02_schema_soundness():
    r = props.schema_soundness(seed=0, per_schema=100)
    rows = ", ".join(f"{row.label} {row.passed}/{row.total}" for row in r.rows)
    record(2, "schema soundness", r.ok and not r.failures, rows)


def test_criterion_03_deduction_theorem():
    r = props.deduction_theorem(seed=0, samples=200)
    counts = {row.label: (row.passed, row.total) for row in r.rows}
    record(3, "deduction theorem", counts == {"LP": (200, 200), "RM3": (200, 200)},
           ", ".join(f"{k}: {a}/{b}" for k, (a, b) in counts.items()))


def test_criterion_04_interdefinability():
    got = interdefinability()
    record(4, "interdefinability", got == {"RM3 -> in LP": (9, 9), "LP -> in RM3": (9, 9)},
           ", ".join(f"{k}: {a}/{b}" for k, (a, b) in got.items()))


def test_criterion_05_bl_simulation():
    r = props.bl_simulation(seed=0, samples=200)
    row = r.rows[0]
    record(5, "BL simulation of LP", row.passed == row.total == 200, f"{row.passed}/{row.total}")


def test_criterion_06_lp_k3_contrast():
    lp, k3 = build_matrix("LP"), build_matrix("K3")
    lem, efq = P("p | ~p"), P("~p -> (p -> q)")
    checks = [matrix.is_valid(lp, lem), not matrix.is_valid(k3, lem),
              matrix.is_valid(k3, efq), not matrix.is_valid(lp, efq)]
    record(6, "LP/K3 contrast", all(checks), f"{sum(checks)}/4")


def test_criterion_07_representability():
    tables = matrix.all_unary_tables()
    lpfb = build_matrix("LPFB")
    reproduced = 0
    classes = []
    for g in tables:
        f = matrix.synthesize_formula(g)
        if all(matrix.evaluate(lpfb, {"p": x[0]}, f) is v for x, v in g.mapping.items()):
            reproduced += 1
        classes.append(matrix.classify_function(g))
    both = sum(c.tf_closed and c.b_free for c in classes)
    tf = sum(c.tf_closed for c in classes)
    consistent = all(
        ("LP" in c.representable_in) == (c.tf_closed and c.b_free)
        and ("LPF" in c.representable_in) == c.tf_closed
        and "LPFB" in c.representable_in
        for c in classes
    ) and both <= tf <= len(tables)
    record(7, "representability", reproduced == 27 and consistent,
           f"{reproduced}/27 synthesized, LP {both} <= LPF {tf} <= LPFB {len(tables)}")


def test_criterion_08_classical_recovery():
    p, q = Var("p"), Var("q")
    cn = cn_consequence([p, classical_neg_cn(p, 1)], q, 1).consequence
    pt = ptau_consequence(FOUR, [P("p:t"), classical_neg_ptau(P("p:t"))], P("q:t")).holds
    proof = hilbert.load_proof(PROOFS / "cl_explosion.prf")
    extended = bool(proof.extensions)
    accepted = bool(hilbert.verify_proof(proof))
    record(8, "classical recovery", cn and pt and accepted and extended,
           f"Cn {cn}, Ptau {pt}, explosion proof accepted {accepted}")


def test_criterion_09_deontic():
    v = dlp_consequence_bounded([P("O p"), P("O ~p")], P("O q"))
    k = v.countermodel
    one_world = k is not None and k.size == 1 and k.assignment[0] == {"p": B, "q": F}
    claim = Impl(P("O p"), Impl(P("O ~p"), deontic_inconsistency_formula(Var("p"))))
    bounded = valid_everywhere([claim], max_worlds=2, max_vars=2) == [True]
    record(9, "deontic claims", one_world and bounded,
           f"1-world countermodel {one_world}, no-countermodel-up-to-bound 2 {bounded}")


def test_criterion_10_proof_corpus():
    r = props.proof_corpus(seed=0, corpus=PROOFS, mutations=20)
    rows = {row.label: (row.passed, row.total) for row in r.rows}
    systems = set()
    for path in PROOFS.glob("*.prf"):
        script = hilbert.load_proof(path)
        if hilbert.verify_proof(script):
            systems.add(script.table().logic)
    six = {"LP", "RM3", "Cn", "D2", "Ptau", "DLP"} <= systems
    acc, total = rows["accepted"]
    caught, n = rows["mutations rejected"]
    ok = r.ok and acc >= 10 and six and (caught, n) == (20, 20)
    record(10, "proof corpus", ok, f"accepted {acc}/{total}, systems {len(systems & {'LP', 'RM3', 'Cn', 'D2', 'Ptau', 'DLP'})}/6, mutations {caught}/{n}")

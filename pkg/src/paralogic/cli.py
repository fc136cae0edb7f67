"""Command-line front end.

Exit codes: 0 consequence holds / proof accepted / suite passed,
1 countermodel / proof rejected / suite failed, 2 inconclusive (Cn
countermodel-candidate, DLP bounded search), 3 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import engines, hilbert, matrix, props
from .annotated import LatticeError, load_lattice
from .formula import FormulaSyntaxError, LanguageError, parse_formula, render

EXIT_ERROR = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _formulas_from_file(path: Path) -> list:
    out = []
    for raw in path.read_text().splitlines():
        line = raw.split("%", 1)[0].strip()
        if line:
            out.append(parse_formula(line))
    return out


def read_gamma(arg: str | None, hyps: list[str] | None = None) -> list:
    """Gamma from a file (one formula per line) or comma-separated inline text, plus ``--hyp``."""
    out = []
    if arg:
        path = Path(arg)
        if path.is_file():
            out += _formulas_from_file(path)
        else:
            out += [parse_formula(part) for part in arg.split(",") if part.strip()]
    out += [parse_formula(h) for h in hyps or []]
    return out


def cmd_check(args) -> int:
    if len(args.query) > 2:
        raise ValueError("check takes at most two positionals: [GAMMA] FORMULA")
    gamma_arg = args.query[0] if len(args.query) == 2 else None
    gamma = read_gamma(gamma_arg, args.hyp)
    goal = parse_formula(args.query[-1])
    name, _ = engines.normalise_logic(args.logic)
    lattice = None
    if name == "Ptau":
        if not args.lattice:
            raise ValueError("--lattice is required for ptau")
        lattice = load_lattice(args.lattice)
    if name == "DLP" and args.bound is None:
        raise ValueError("--bound is required for dlp")
    r = engines.check(args.logic, gamma, goal, lattice=lattice, bound=args.bound,
                      max_vars=args.max_vars, max_closure=args.max_closure)
    sys.stdout.write(r.report())
    return r.exit_code


def cmd_table(args) -> int:
    m = matrix.build_matrix(args.logic)
    f = parse_formula(args.formula)
    sys.stdout.write(matrix.table_tsv(m, f, args.max_vars or matrix.DEFAULT_MAX_VARS))
    return 0


def cmd_verify(args) -> int:
    script = hilbert.load_proof(args.proof)
    lattice = load_lattice(args.lattice) if args.lattice else None
    gamma = read_gamma(args.gamma, args.hyp) if (args.gamma or args.hyp) else None
    verdict = hilbert.verify_proof(script, gamma, lattice=lattice)
    sys.stdout.write(verdict.report() if args.lines else verdict.summary() + "\n")
    return 0 if verdict else 1


_VALUES = {str(v): v for v in matrix.THREE}


def read_fn_table(path: Path) -> matrix.FnTable:
    """Rows ``<arg1> ... <argk> <value>`` over t, f, b; ``%`` starts a comment."""
    mapping = {}
    arity = None
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        cells = line.split()
        try:
            vals = [_VALUES[c] for c in cells]
        except KeyError as e:
            raise ValueError(f"{path}:{lineno}: unknown truth value {e.args[0]!r}") from None
        if arity is None:
            arity = len(vals) - 1
        if len(vals) - 1 != arity or arity < 0:
            raise ValueError(f"{path}:{lineno}: expected {arity} arguments and a value")
        key = tuple(vals[:-1])
        if key in mapping:
            raise ValueError(f"{path}:{lineno}: row given twice")
        mapping[key] = vals[-1]
    if arity is None:
        raise ValueError(f"{path}: empty function table")
    return matrix.FnTable(arity, mapping)


def cmd_classify(args) -> int:
    g = read_fn_table(Path(args.table))
    c = matrix.classify_function(g)
    yes = lambda b: "yes" if b else "no"
    order = [x for x in ("LP", "LPF", "LPB", "LPFB") if x in c.representable_in]
    f = matrix.synthesize_formula(g)
    print(f"arity: {g.arity}")
    print(f"tf_closed: {yes(c.tf_closed)}")
    print(f"b_free: {yes(c.b_free)}")
    print(f"representable in: {', '.join(order)}")
    print(f"formula (LPFB): {render(f)}")
    return 0


def cmd_props(args) -> int:
    names = list(props.SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        if name == "proof-corpus" and args.corpus:
            r = props.proof_corpus(args.seed, args.corpus)
        else:
            r = props.run_suite(name, args.seed)
        sys.stdout.write(r.report())
        ok &= r.ok
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="paralogic", description="Paraconsistent logics: consequence, tables, proofs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="decide Gamma |- A")
    c.add_argument("--logic", required=True, help="lp lpf lpb lpfb k3 rm3 bl cl c<n> d2 ptau dlp")
    c.add_argument("--hyp", action="append", default=[], help="premise (repeatable)")
    c.add_argument("--lattice", help="FOUR or a lattice file (ptau)")
    c.add_argument("--bound", type=int, help="maximum number of worlds (dlp)")
    c.add_argument("--max-vars", type=int, help="variable guard")
    c.add_argument("--max-closure", type=int, help="closure size guard (Cn)")
    c.add_argument("query", nargs="+", metavar="[GAMMA] FORMULA",
                   help="GAMMA is a file or comma-separated formulas")
    c.set_defaults(fn=cmd_check)

    t = sub.add_parser("table", help="truth table as TSV")
    t.add_argument("--logic", required=True)
    t.add_argument("--max-vars", type=int)
    t.add_argument("formula")
    t.set_defaults(fn=cmd_table)

    v = sub.add_parser("verify", help="check a proof script")
    v.add_argument("proof")
    v.add_argument("gamma", nargs="?", help="file or comma-separated formulas (default: the gamma header)")
    v.add_argument("--hyp", action="append", default=[])
    v.add_argument("--lattice")
    v.add_argument("--lines", action="store_true", help="print a per-line report")
    v.set_defaults(fn=cmd_verify)

    k = sub.add_parser("classify", help="representability of a truth function")
    k.add_argument("table")
    k.set_defaults(fn=cmd_classify)

    s = sub.add_parser("props", help="run a property suite")
    s.add_argument("suite", choices=[*props.SUITES, "all"])
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--corpus", help="directory of .prf files")
    s.set_defaults(fn=cmd_props)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (FormulaSyntaxError, LanguageError, LatticeError, hilbert.ProofSyntaxError,
            matrix.GuardExceeded, ValueError, OSError) as e:
        print(f"paralogic: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

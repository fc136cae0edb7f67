from pathlib import Path

import pytest

from paralogic.cli import main

ROOT = Path(__file__).resolve().parent.parent


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lp_explosion_countermodel(capsys):
    code, out, _ = run(capsys, "check", "--logic", "lp", "--hyp", "p", "--hyp", "~p", "q")
    assert code == 1
    assert out == "countermodel\np=b, q=f\n"


def test_d2_two_world_structure(capsys):
    code, out, _ = run(capsys, "check", "--logic", "d2", "--hyp", "p", "--hyp", "~p", "q")
    assert code == 1
    assert out == "countermodel\nworld w1: p=t, q=f\nworld w2: p=f, q=f\n"


def test_c1_candidate(capsys):
    code, out, _ = run(capsys, "check", "--logic", "c1", "", "~(p & ~p)")
    assert code == 2
    assert out.startswith("countermodel-candidate\n")
    assert "~(p & ~p) ↦ f" in out


def test_inline_gamma_and_holds(capsys):
    code, out, _ = run(capsys, "check", "--logic", "rm3", "p, p -> q", "q")
    assert code == 0 and out.startswith("holds")


def test_gamma_file(capsys, tmp_path):
    g = tmp_path / "gamma.txt"
    g.write_text("% premises\np\n~p\n")
    code, out, _ = run(capsys, "check", "--logic", "cl", str(g), "q")
    assert code == 0


def test_ptau_and_dlp(capsys):
    code, out, _ = run(capsys, "check", "--logic", "ptau", "--lattice", "FOUR",
                       "--hyp", "p:t", "--hyp", "~p:t", "q:t")
    assert code == 1 and "p=top, q=bot" in out
    code, out, _ = run(capsys, "check", "--logic", "dlp", "--bound", "2",
                       "--hyp", "O(p -> q)", "--hyp", "O p", "O q")
    assert code == 2 and out.startswith("no-countermodel-up-to-bound 2")


@pytest.mark.parametrize("argv", [
    ["check", "--logic", "zz", "p"],
    ["check", "--logic", "lp", "p &"],
    ["check", "--logic", "lp", "#f"],
    ["check", "--logic", "ptau", "p:t"],
    ["check", "--logic", "dlp", "O p"],
    ["verify", "/nonexistent.prf"],
])
def test_errors_exit_3(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3 and "error" in err


def test_usage_error_exit_3(capsys):
    with pytest.raises(SystemExit) as e:
        main(["check"])
    assert e.value.code == 3


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--logic", "rm3", "p -> p")
    assert code == 0 and out == "p\tvalue\nt\tt\nf\tt\nb\tb\n"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", str(ROOT / "proofs" / "lp_identity.prf"))
    assert code == 0 and out == "accepted (5 lines)\n"
    code, out, _ = run(capsys, "verify", "--lines", str(ROOT / "proofs" / "lp_identity.prf"))
    assert out.splitlines()[0] == "1\tok\tax A1"


def test_verify_rejects(capsys, tmp_path):
    f = tmp_path / "bad.prf"
    f.write_text("logic DLP\n1 p ; hyp\n2 O p ; nec 1\n")
    code, out, _ = run(capsys, "verify", str(f), "p")
    assert code == 1 and out == "rejected at line 2: nec-on-hypothesis (line 1 depends on hypotheses)\n"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", str(ROOT / "tables" / "const_b.tbl"))
    assert code == 0
    assert out == ("arity: 1\ntf_closed: no\nb_free: yes\n"
                   "representable in: LPB, LPFB\nformula (LPFB): #b\n")
    code, out, _ = run(capsys, "classify", str(ROOT / "tables" / "rm3_impl.tbl"))
    assert "representable in: LP, LPF, LPB, LPFB" in out


def test_props_deduction_theorem(capsys):
    code, out, _ = run(capsys, "props", "deduction-theorem")
    assert code == 0
    assert out.splitlines()[0] == "deduction-theorem (seed 0): LP: 200/200, RM3: 200/200"

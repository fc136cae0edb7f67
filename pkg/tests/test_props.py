import random

import pytest

from paralogic import props


FAST = ["interdefinability", "representability", "lp-k3-contrast", "containment",
        "modus-ponens", "deontic", "d2-collapse", "ptau", "paraconsistency"]


@pytest.mark.parametrize("name", FAST)
def test_suite_passes(name):
    r = props.run_suite(name, 0)
    assert r.ok, r.report()


def test_reports_are_deterministic():
    assert props.run_suite("containment", 3).report() == props.run_suite("containment", 3).report()


def test_schema_sampling_is_seeded():
    a = props.schema_soundness(seed=1, per_schema=5, only=("LP",))
    b = props.schema_soundness(seed=1, per_schema=5, only=("LP",))
    assert a.report() == b.report() and a.ok


def test_unknown_suite():
    with pytest.raises(ValueError):
        props.run_suite("nope")


def test_mutations_are_diagnosed():
    scripts = [props.hilbert.load_proof(f) for f in props.corpus_files()]
    rng = random.Random(11)
    for _ in range(40):
        m = props.mutate(rng.choice(scripts), rng)
        v = props.hilbert.verify_proof(m.script)
        assert (v.line, v.diagnosis) == (m.line, m.diagnosis), m.kind

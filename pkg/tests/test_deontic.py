import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from paralogic.deontic import (
    KripkeStructure3,
    deontic_inconsistency_formula,
    dlp_consequence_bounded,
    dlp_eval,
    valid_everywhere,
)
from paralogic.formula import Falsum, Impl, LanguageError, Var, parse_formula, variables_of
from paralogic.matrix import B, F, T, THREE
from paralogic.sampling import Vocabulary, random_formula

P = parse_formula


def one_world(**vals):
    return KripkeStructure3(1, frozenset({(0, 0)}), (vals,))


def test_obligation_clause():
    assert dlp_eval(one_world(p=B), 0, P("O p")) is B
    assert dlp_eval(one_world(p=T), 0, P("O p")) is T
    k = KripkeStructure3(2, frozenset({(0, 0), (0, 1), (1, 1)}), ({"p": T}, {"p": T}))
    assert dlp_eval(k, 0, P("O p")) is T
    k = KripkeStructure3(2, frozenset({(0, 0), (0, 1), (1, 1)}), ({"p": T}, {"p": F}))
    assert dlp_eval(k, 0, P("O p")) is F


def test_obligatory_falsum_is_false():
    for v in THREE:
        assert dlp_eval(one_world(p=v), 0, P("O #f")) is F


def test_seriality_enforced():
    with pytest.raises(ValueError):
        KripkeStructure3(2, frozenset({(0, 1)}), ({}, {}))


def test_deontic_paraconsistency():
    v = dlp_consequence_bounded([P("O p"), P("O ~p")], P("O q"))
    k = v.countermodel
    assert k is not None and k.size == 1 and k.relation == {(0, 0)}
    assert k.assignment[0] == {"p": B, "q": F}
    assert v.label() == "countermodel"


def test_k_axiom_bounded():
    v = dlp_consequence_bounded([P("O(p -> q)"), P("O p")], P("O q"), max_worlds=2)
    assert v.holds_up_to_bound and v.label() == "no-countermodel-up-to-bound 2"


def test_inconsistency_formula():
    p = Var("p")
    assert deontic_inconsistency_formula(p) == P("O ~((p -> #f) | (~p -> #f))")
    deontic_inconsistency_formula(Falsum())
    claim = Impl(P("O p"), Impl(P("O ~p"), deontic_inconsistency_formula(p)))
    assert valid_everywhere([claim], max_worlds=2, max_vars=2) == [True]


def test_both_constant_rejected():
    with pytest.raises(LanguageError):
        dlp_consequence_bounded([], P("#b"))


def structures(size, names):
    pairs = [(a, b) for a in range(size) for b in range(size)]
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        rel = frozenset(x for x, bit in zip(pairs, bits) if bit)
        if not all(any((w, v) in rel for v in range(size)) for w in range(size)):
            continue
        for vals in itertools.product(THREE, repeat=size * len(names)):
            asg = tuple(dict(zip(names, vals[i * len(names):(i + 1) * len(names)])) for i in range(size))
            yield KripkeStructure3(size, rel, asg)


def oracle(premises, conclusion, bound):
    names = variables_of(premises + [conclusion])
    for size in range(1, bound + 1):
        for k in structures(size, names):
            for w in range(size):
                if dlp_eval(k, w, conclusion) is F and all(dlp_eval(k, w, p) is not F for p in premises):
                    return False
    return True


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(0, 1))
def test_batch_engine_matches_explicit_enumeration(seed, n_premises):
    rng = random.Random(seed)
    vocab = Vocabulary(names=("p",), falsum=True, oblig=True)
    premises = [random_formula(rng, vocab, 3) for _ in range(n_premises)]
    conclusion = random_formula(rng, vocab, 3)
    got = dlp_consequence_bounded(premises, conclusion, max_worlds=2, max_vars=1)
    assert got.holds_up_to_bound == oracle(premises, conclusion, 2)

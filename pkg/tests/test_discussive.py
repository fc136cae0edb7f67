import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from paralogic.discussive import DiscussiveStructure, d2_consequence, d2_eval
from paralogic.formula import LanguageError, Var, parse_formula, variables_of
from paralogic.sampling import Vocabulary, random_formula

P = parse_formula
S = DiscussiveStructure(({"p": True, "q": False}, {"p": False, "q": True}))


def test_conjunction_is_existential_on_the_right():
    assert d2_eval(S, 0, P("p & q"))
    assert not d2_eval(S, 1, P("p & q"))


def test_negation_pointwise():
    assert d2_eval(S, 1, P("~p"))
    assert not d2_eval(S, 0, P("~p"))


def test_implication_quantifies_antecedent():
    assert not d2_eval(S, 0, P("p -> q"))
    assert d2_eval(S, 1, P("p -> q"))


def test_singleton_is_classical():
    for p, q in itertools.product((True, False), repeat=2):
        s = DiscussiveStructure(({"p": p, "q": q},))
        assert d2_eval(s, 0, P("p & q")) == (p and q)
        assert d2_eval(s, 0, P("p -> q")) == ((not p) or q)


def test_explosion_fails_with_two_worlds():
    v = d2_consequence([P("p"), P("~p")], Var("q"))
    assert not v
    assert v.counterstructure.worlds == ({"p": True, "q": False}, {"p": False, "q": False})


def test_examples_hold():
    assert d2_consequence([], P("p | (p -> q)"))
    assert d2_consequence([P("p"), P("q")], P("p & q"))


def test_errors():
    with pytest.raises(LanguageError):
        d2_consequence([], P("#f"))
    with pytest.raises(ValueError):
        DiscussiveStructure(())


def oracle(premises, conclusion):
    """Explicit structures: multisets of up to 4 classical worlds."""
    names = variables_of(premises + [conclusion])
    worlds = [dict(zip(names, bits)) for bits in itertools.product((True, False), repeat=len(names))]
    for size in range(1, len(worlds) + 1):
        for ws in itertools.combinations_with_replacement(worlds, size):
            s = DiscussiveStructure(ws)
            sat = lambda f: any(d2_eval(s, w, f) for w in range(size))
            if all(sat(p) for p in premises) and not sat(conclusion):
                return False
    return True


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(0, 2))
def test_engine_matches_explicit_enumeration(seed, n_premises):
    rng = random.Random(seed)
    vocab = Vocabulary(names=("p", "q"))
    premises = [random_formula(rng, vocab, 3) for _ in range(n_premises)]
    conclusion = random_formula(rng, vocab, 3)
    assert bool(d2_consequence(premises, conclusion)) == oracle(premises, conclusion)

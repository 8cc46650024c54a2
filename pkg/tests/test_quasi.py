from __future__ import annotations

import json
import random

import pytest

from helpers import example_nfa, random_nfa
from oracles import nfa_accepts_bruteforce
from tqft1d.automaton import AlphabetError, accepts, words_up_to
from tqft1d.quasi import (
    OpenSetLattice,
    QuasiAutomaton,
    RetractBudgetExceeded,
    chain_lattice,
    discrete_lattice,
    evaluate_word,
    from_nfa,
    retract_check,
    sierpinski_lattice,
    validate,
)
from tqft1d.tqft import floating_values, from_automaton

E = frozenset()


def _sierpinski_qa(initial=("x",)):
    lat = sierpinski_lattice()
    X = lat.ground
    delta = {"a": {u: (X if u else E) for u in lat.opens}}
    term = {u: u == X for u in lat.opens}
    return QuasiAutomaton(lat, ("a",), delta, frozenset(initial), term)


def test_lattice_validation():
    assert discrete_lattice([1, 2]).is_valid
    bad = OpenSetLattice([1, 2], [[1], [1, 2]])
    assert "missing empty set" in bad.violations()
    assert not OpenSetLattice([1, 2, 3], [[], [1], [2], [1, 2, 3]]).is_valid
    assert len(chain_lattice()) == 3 and chain_lattice().is_valid


def test_validate_examples():
    lat = discrete_lattice([1, 2])
    ident = QuasiAutomaton(lat, ("a",), {"a": {u: u for u in lat.opens}}, frozenset([1]),
                           {u: 2 in u for u in lat.opens})
    assert validate(ident) == {"valid": True, "violations": []}
    assert validate(_sierpinski_qa())["valid"]


def test_validate_reports_violations():
    lat = discrete_lattice([1, 2])
    swap_bad = {E: E, frozenset([1]): frozenset([1]), frozenset([2]): frozenset([1]),
                frozenset([1, 2]): frozenset([2])}
    qa = QuasiAutomaton(lat, ("a",), {"a": swap_bad}, frozenset([1]), {u: bool(u) for u in lat.opens})
    report = validate(qa)
    assert not report["valid"]
    assert any("preserve the union" in v for v in report["violations"])
    lat2 = sierpinski_lattice()
    qa2 = QuasiAutomaton(lat2, ("a",), {"a": {u: frozenset(["y"]) for u in lat2.opens}},
                         frozenset(["y"]), {E: True, frozenset(["x"]): True, lat2.ground: True})
    v = validate(qa2)["violations"]
    assert any("is not open" in s for s in v)
    assert "terminal(∅) must be 0" in v


def test_sierpinski_evaluation():
    qa = _sierpinski_qa()
    assert [evaluate_word(qa, w) for w in ("", "a", "aa")] == [False, True, True]
    dead = _sierpinski_qa(())
    assert not any(evaluate_word(dead, w) for w in words_up_to("a", 6))
    with pytest.raises(AlphabetError):
        evaluate_word(qa, "b")


def test_discrete_embedding_matches_automaton():
    rng = random.Random(3)
    for nfa in [example_nfa()] + [random_nfa(rng, 4) for _ in range(25)]:
        qa = from_nfa(nfa)
        assert validate(qa)["valid"]
        table = floating_values(from_automaton(nfa), 6)
        for w in words_up_to(nfa.alphabet, 6):
            got = evaluate_word(qa, w)
            assert got == accepts(nfa, w) == table[w]
            assert got == nfa_accepts_bruteforce(nfa.edges(), nfa.initial, nfa.accepting, w)


def test_word_evaluation_respects_concatenation():
    qa = from_nfa(example_nfa())
    for u in words_up_to("ab", 3):
        for v in words_up_to("ab", 3):
            state = qa.initial
            for a in u:
                state = qa.step(state, a)
            for a in v:
                state = qa.step(state, a)
            assert evaluate_word(qa, u + v) == qa.terminal[state]


def test_json_round_trip():
    qa = _sierpinski_qa()
    again = QuasiAutomaton.from_json(json.dumps(qa.to_json()))
    assert again == qa
    with pytest.raises(ValueError):
        QuasiAutomaton.from_json({"ground": []})


def test_retracts():
    free = retract_check(discrete_lattice([0, 1]), 2)
    assert free is not None and free.verify(discrete_lattice([0, 1]))
    assert retract_check(sierpinski_lattice(), 1) is None
    for lat in (sierpinski_lattice(), chain_lattice()):
        r = retract_check(lat, 2)
        assert r is not None and r.verify(lat)
        assert all(r.p(r.iota[u]) == u for u in lat.opens)
    assert retract_check(discrete_lattice([0, 1, 2]), 2) is None


def test_retract_errors():
    with pytest.raises(RetractBudgetExceeded):
        retract_check(discrete_lattice(range(4)), 4, budget=5)
    with pytest.raises(ValueError):
        retract_check(OpenSetLattice([1], [[1]]), 1)
    with pytest.raises(ValueError):
        retract_check(sierpinski_lattice(), -1)

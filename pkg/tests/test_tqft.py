from __future__ import annotations

import math
import random

import pytest

from helpers import example_nfa, mixed_morphism, random_data, random_nfa, random_stack, stack_compose
from oracles import count_accepting_paths, shortest_accepting_path
from tqft1d import cobordism as C
from tqft1d.automaton import Nfa, accepts, words_up_to
from tqft1d.semimodule import DimensionError, Matrix, coev_map, ev_map, identity, swap_map
from tqft1d.semiring import BOOLEAN, INTEGER
from tqft1d.tqft import (
    TqftData,
    check_correspondence,
    circle_values,
    evaluate,
    evaluate_closed,
    floating_values,
    from_automaton,
    from_generic,
    word_operator,
)

DATA = from_automaton(example_nfa())


def test_example_data():
    assert DATA.rank == 3
    assert DATA.maps["a"].to_rows() == [[1, 0, 1], [0, 0, 0], [0, 1, 0]]
    assert DATA.maps["b"].to_rows() == [[0, 0, 0], [1, 1, 1], [0, 1, 0]]


def test_trivial_automata():
    one = from_automaton(Nfa.build(["p"], ["a", "b"], [("p", "a", "p"), ("p", "b", "p")], ["p"], ["p"]))
    assert all(m.to_rows() == [[True]] for m in (*one.maps.values(), one.v0, one.vstar))
    dead = from_automaton(Nfa.build(["p", "r"], ["a"], [], ["p"], []))
    assert dead.vstar.to_rows() == [[False, False]]


def test_basic_evaluations():
    assert evaluate(DATA, C.identity("+")) == identity(3, BOOLEAN)
    assert evaluate(DATA, C.dot("ab", "+")) == DATA.maps["b"] @ DATA.maps["a"]
    assert evaluate(DATA, C.cup("+-")) == coev_map(3, BOOLEAN)
    assert evaluate(DATA, C.cap("-+")) == ev_map(3, BOOLEAN)
    assert evaluate(DATA, C.swap("+", "-")) == swap_map(3, BOOLEAN)
    assert evaluate(DATA, C.half_interval("+", "top", "b")) == DATA.maps["b"] @ DATA.v0
    assert evaluate(DATA, C.half_interval("+", "bottom")) == DATA.vstar
    assert evaluate(DATA, C.half_interval("-", "top")) == DATA.vstar.T
    assert evaluate(DATA, C.half_interval("-", "bottom")) == DATA.v0.T


def test_closed_values():
    assert evaluate_closed(DATA, "floating-interval", "ba") is True
    assert evaluate_closed(DATA, "floating", "ab") is False
    assert evaluate_closed(DATA, "circle", "a") is True
    assert evaluate_closed(DATA, "circle", "") is True
    ints = from_generic("integer", 3, {a: m.to_rows() for a, m in DATA.maps.items()},
                        [1, 0, 0], [0, 0, 1])
    assert evaluate_closed(ints, "circle", "") == 3
    with pytest.raises(ValueError):
        evaluate_closed(DATA, "arc", "a")


def test_mixed_morphism_evaluates_to_scaled_matrix():
    m = mixed_morphism()
    out = evaluate(DATA, m)
    assert out.shape == (27, 81)
    scalar = evaluate_closed(DATA, "circle", "baa") and evaluate_closed(DATA, "floating", "ba")
    assert scalar is True
    stripped = _open_part(m)
    assert out == evaluate(DATA, stripped)


def _open_part(m):
    return C.Morphism(m.source, m.target, tuple(c for c in m.components if not c.is_closed))


def test_zigzag_functor():
    z = C.compose(C.tensor(C.cap("+-"), C.identity("+")), C.tensor(C.identity("+"), C.cup("-+")))
    assert evaluate(DATA, z) == identity(3, BOOLEAN)


@pytest.mark.parametrize("semiring", ["boolean", "integer"])
def test_functoriality_and_monoidality(semiring):
    rng = random.Random(semiring)
    for _ in range(120):
        data = random_data(rng, semiring, rng.randint(1, 3))
        gens = random_stack(rng, rng.randint(2, 6), max_width=3)
        cut = rng.randint(1, len(gens) - 1)
        f, g = stack_compose(gens[:cut]), stack_compose(gens[cut:])
        assert evaluate(data, C.compose(g, f)) == evaluate(data, g) @ evaluate(data, f)
        h = stack_compose(random_stack(rng, 2, max_width=2))
        assert evaluate(data, C.tensor(f, h)) == evaluate(data, f).tensor(evaluate(data, h))


def test_duality():
    rng = random.Random(5)
    for _ in range(80):
        data = random_data(rng, "integer", rng.randint(1, 3))
        w = "".join(rng.choice("ab") for _ in range(rng.randint(0, 4)))
        assert evaluate(data, C.dot(w, "-")) == evaluate(data, C.dot(w, "+")).T
        left = C.compose(C.tensor(C.dot(w, "+"), C.identity("-")), C.cup("+-"))
        right = C.compose(C.tensor(C.identity("+"), C.dot(w, "-")), C.cup("+-"))
        assert evaluate(data, left) == evaluate(data, right)
        lc = C.compose(C.cap("-+"), C.tensor(C.dot(w, "-"), C.identity("+")))
        rc = C.compose(C.cap("-+"), C.tensor(C.identity("-"), C.dot(w, "+")))
        assert evaluate(data, lc) == evaluate(data, rc)


def test_circle_cyclicity():
    rng = random.Random(6)
    for _ in range(50):
        data = random_data(rng, "integer", rng.randint(1, 3))
        for w in words_up_to("ab", 4):
            vals = {evaluate_closed(data, "circle", w[k:] + w[:k]) for k in range(max(1, len(w)))}
            assert len(vals) == 1


def test_integer_and_tropical_oracles():
    rng = random.Random(7)
    for _ in range(20):
        nfa = random_nfa(rng, 4, letters="ab")
        idx = {q: i for i, q in enumerate(nfa.states)}
        n = len(nfa.states)
        maps = {a: [[0] * n for _ in range(n)] for a in "ab"}
        for s, a, p in nfa.edges():
            maps[a][idx[p]][idx[s]] = 1
        counting = from_generic("integer", n, maps, [int(q in nfa.initial) for q in nfa.states],
                                [int(q in nfa.accepting) for q in nfa.states])
        vals = floating_values(counting, 5)
        for w, v in vals.items():
            assert v == count_accepting_paths(nfa.edges(), nfa.initial, nfa.accepting, w)

        weights = {(s, a, p): rng.randint(0, 9) for s, a, p in nfa.edges()}
        tmaps = {a: [[math.inf] * n for _ in range(n)] for a in "ab"}
        for (s, a, p), wt in weights.items():
            tmaps[a][idx[p]][idx[s]] = wt
        init = {q: rng.randint(0, 3) for q in nfa.initial}
        fin = {q: rng.randint(0, 3) for q in nfa.accepting}
        trop = from_generic("tropical", n, tmaps, [init.get(q, math.inf) for q in nfa.states],
                            [fin.get(q, math.inf) for q in nfa.states])
        wedges = [(s, a, p, wt) for (s, a, p), wt in weights.items()]
        for w, v in floating_values(trop, 5).items():
            assert v == shortest_accepting_path(wedges, init, fin, w)


def test_correspondence_reports():
    rep = check_correspondence(example_nfa(), 10)
    assert rep == {"status": "ok", "words_checked": 2047, "counterexample": None}
    bad = TqftData(BOOLEAN, 3, DATA.maps, DATA.v0, Matrix.from_rows([[1, 0, 0]], BOOLEAN))
    rep = check_correspondence(example_nfa(), 4, bad)
    assert rep["status"] == "mismatch"
    assert rep["counterexample"] == {"word": "", "tqft": True, "accepts": False}
    assert rep["words_checked"] == 1
    with pytest.raises(ValueError):
        check_correspondence(example_nfa(), -1)


def test_correspondence_threads(monkeypatch):
    monkeypatch.setenv("TQFT_THREADS", "4")
    rng = random.Random(8)
    for _ in range(10):
        nfa = random_nfa(rng, 5)
        assert check_correspondence(nfa, 6)["status"] == "ok"


def test_value_tables_match_direct_evaluation():
    fl = floating_values(DATA, 5)
    ci = circle_values(DATA, 5)
    for w in words_up_to("ab", 5):
        assert fl[w] == accepts(example_nfa(), w)
        assert ci[w] == word_operator(DATA, w).trace()
        assert evaluate(DATA, C.circle(w)).item() == ci[w]


def test_generic_round_trip_and_errors():
    again = TqftData.from_json(DATA.to_json())
    assert again == DATA
    assert from_generic(BOOLEAN, 3, DATA.maps, DATA.v0, DATA.vstar) == DATA
    with pytest.raises(DimensionError):
        from_generic("integer", 2, {"a": [[1, 0], [0, 1]]}, [1, 0, 0], [1, 0])
    with pytest.raises(DimensionError):
        from_generic("integer", 2, {"a": [[1]]}, [1, 0], [1, 0])
    with pytest.raises(ValueError):
        TqftData(INTEGER, 3, DATA.maps, DATA.v0, DATA.vstar)
    with pytest.raises(KeyError):
        evaluate(DATA, C.dot("z"))

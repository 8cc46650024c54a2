"""Shared fixtures: the three-state example automaton, random automata, a knot corpus
and random cobordism generator stacks."""

from __future__ import annotations

import random

from tqft1d import cobordism as C
from tqft1d.automaton import Nfa
from tqft1d.skein.diagram import LinkDiagram, braid_closure, disjoint_union, parse_pd, unknot

# --- automata ------------------------------------------------------------

EXAMPLE_EDGES = [
    ("q1", "a", "q1"), ("q1", "b", "q2"),
    ("q2", "b", "q2"), ("q2", "a", "q3"), ("q2", "b", "q3"),
    ("q3", "a", "q1"), ("q3", "b", "q2"),
]


def example_nfa() -> Nfa:
    """Three states, accepts words whose second-to-last letter is b."""
    return Nfa.build(["q1", "q2", "q3"], ["a", "b"], EXAMPLE_EDGES, ["q1"], ["q3"])


def random_nfa(rng: random.Random, max_states: int = 5, letters: str | None = None, density: float | None = None) -> Nfa:
    n = rng.randint(1, max_states)
    alphabet = letters or rng.choice(["ab", "abc"])
    states = [f"s{i}" for i in range(n)]
    p = rng.uniform(0.1, 0.6) if density is None else density
    edges = [(q, a, r) for q in states for a in alphabet for r in states if rng.random() < p]
    initial = [q for q in states if rng.random() < 0.4]
    accepting = [q for q in states if rng.random() < 0.4]
    return Nfa.build(states, list(alphabet), edges, initial, accepting)


def nfa_corpus(count: int = 200, seed: int = 20261014) -> list[Nfa]:
    rng = random.Random(seed)
    return [example_nfa()] + [random_nfa(rng) for _ in range(count)]


# --- links ---------------------------------------------------------------

BRAIDS = {
    "trefoil_right": [1, 1, 1],
    "trefoil_left": [-1, -1, -1],
    "figure_eight": [1, -2, 1, -2],
    "cinquefoil": [1] * 5,
    "three_twist": [1, 1, 1, 2, -1, 2],
    "six_two": [1, 1, 1, -2, 1, -2],
    "six_three": [1, 1, -2, 1, -2, -2],
    "seven_one": [1] * 7,
    "torus_3_4": [1, 2] * 4,
    "torus_3_5": [1, 2] * 5,
    "ten_nonalt": [1, -2] * 5,
    "hopf_positive": [1, 1],
    "hopf_negative": [-1, -1],
    "solomon": [1] * 4,
    "borromean": [1, -2] * 3,
    "whitehead_like": [1, -2, -2, 3, -2, 3],
}

PD_CODES = {
    "atlas_3_1": "X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]",
    "atlas_4_1": "X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]",
    "atlas_hopf": "X[4,1,3,2], X[2,3,1,4]",
    "kinked_unknot": "X[1,1,2,2]",
    "unknot": "O[]",
}


def link_corpus() -> dict[str, LinkDiagram]:
    out = {name: braid_closure(w) for name, w in BRAIDS.items()}
    out.update({name: parse_pd(text) for name, text in PD_CODES.items()})
    out["trefoil_plus_unknot"] = disjoint_union(out["trefoil_right"], unknot())
    return out


def knot_corpus() -> dict[str, LinkDiagram]:
    return {k: d for k, d in link_corpus().items() if d.components() == 1}


# --- cobordisms ----------------------------------------------------------

def random_signs(rng: random.Random, k: int) -> str:
    return "".join(rng.choice("+-") for _ in range(k))


def random_local(rng: random.Random, source: str, letters: str, max_width: int = 4) -> C.Morphism:
    """One generator, padded with identities, whose source is ``source``."""
    k = len(source)
    choices = ["floating", "circle"]
    if k < max_width - 1:
        choices += ["cup"]
    if k < max_width:
        choices += ["half_top"]
    if k >= 1:
        choices += ["half_bottom", "dot", "dot", "dot"]
    if k >= 2:
        choices += ["swap", "swap"]
        if any(source[i] != source[i + 1] for i in range(k - 1)):
            choices += ["cap", "cap"]
    kind = rng.choice(choices)
    word = "".join(rng.choice(letters) for _ in range(rng.randint(0, 2)))
    if kind == "floating":
        return C.tensor(C.identity(source), C.floating(word))
    if kind == "circle":
        return C.tensor(C.identity(source), C.circle(word))
    if kind == "cup":
        i = rng.randint(0, k)
        local = C.cup(rng.choice(["+-", "-+"]), word)
        return C.tensor_all([C.identity(source[:i]), local, C.identity(source[i:])])
    if kind == "half_top":
        i = rng.randint(0, k)
        local = C.half_interval(rng.choice("+-"), "top", word)
        return C.tensor_all([C.identity(source[:i]), local, C.identity(source[i:])])
    i = rng.randrange(k) if k else 0
    if kind == "dot":
        local = C.dot(word, source[i])
        return C.tensor_all([C.identity(source[:i]), local, C.identity(source[i + 1:])])
    if kind == "half_bottom":
        local = C.half_interval(source[i], "bottom", word)
        return C.tensor_all([C.identity(source[:i]), local, C.identity(source[i + 1:])])
    i = rng.randrange(k - 1)
    if kind == "swap":
        local = C.swap(source[i], source[i + 1])
    else:
        while source[i] == source[i + 1]:
            i = rng.randrange(k - 1)
        local = C.cap(source[i:i + 2], word)
    return C.tensor_all([C.identity(source[:i]), local, C.identity(source[i + 2:])])


def random_stack(rng: random.Random, depth: int, letters: str = "ab", source: str | None = None, max_width: int = 4):
    """List of generators ``[g1, g2, ...]`` with ``g1`` applied first."""
    s = random_signs(rng, rng.randint(0, 2)) if source is None else source
    out = []
    for _ in range(depth):
        g = random_local(rng, s, letters, max_width)
        out.append(g)
        s = "".join(g.target)
    return out


def mixed_morphism() -> C.Morphism:
    """(+--+) -> (+--) with a through strand, a cap, a descending strand,
    an outgoing half-interval, one floating interval and one circle."""
    return C.Morphism.from_json({
        "source": "+--+",
        "target": "+--",
        "components": [
            {"kind": "arc", "from": "b0", "to": "t0", "dots": ["a"]},
            {"kind": "arc", "from": "b3", "to": "b2", "dots": []},
            {"kind": "arc", "from": "t1", "to": "b1", "dots": ["b"]},
            {"kind": "half_out", "from": "t2", "dots": ["a", "b"]},
            {"kind": "floating", "dots": ["b", "a"]},
            {"kind": "circle", "dots": ["b", "a", "a"]},
        ],
    })


def stack_compose(gens) -> C.Morphism:
    m = gens[0]
    for g in gens[1:]:
        m = C.compose(g, m)
    return m


# --- TQFT data -------------------------------------------------------------

def random_data(rng: random.Random, semiring: str, rank: int, letters: str = "ab"):
    """Random TQFT data over the Boolean or integer semiring."""
    from tqft1d.tqft import from_generic

    def entry():
        if semiring == "boolean":
            return rng.random() < 0.5
        return rng.randint(-2, 3)

    maps = {a: [[entry() for _ in range(rank)] for _ in range(rank)] for a in letters}
    return from_generic(semiring, rank, maps, [entry() for _ in range(rank)], [entry() for _ in range(rank)])

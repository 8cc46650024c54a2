"""Quasi-automata: automaton data valued in lattices of open sets.

The state space is a finite family of subsets of a ground set, closed under
union and intersection and containing ``∅`` and the whole ground set.  Union
plays the role of addition, so each letter acts by a union-preserving map and
the terminal map is additive into the Boolean semiring.

When every subset is open (the discrete topology) this is exactly an NFA
acting on sets of states; other topologies give the non-free retracts of
free Boolean modules, which :func:`retract_check` certifies by search.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Mapping, Sequence

from .automaton import Nfa, AlphabetError

__all__ = [
    "OpenSetLattice",
    "QuasiAutomaton",
    "Retract",
    "RetractBudgetExceeded",
    "validate",
    "evaluate_word",
    "from_nfa",
    "retract_check",
    "discrete_lattice",
    "sierpinski_lattice",
    "chain_lattice",
]

Open = frozenset


def _key(u: frozenset):
    return (len(u), sorted(map(repr, u)))


@dataclass(frozen=True)
class OpenSetLattice:
    ground: frozenset
    opens: tuple[frozenset, ...]

    def __init__(self, ground: Iterable[Hashable], opens: Iterable[Iterable[Hashable]]):
        object.__setattr__(self, "ground", frozenset(ground))
        fam = {frozenset(u) for u in opens}
        object.__setattr__(self, "opens", tuple(sorted(fam, key=_key)))

    def __contains__(self, u) -> bool:
        return frozenset(u) in self.opens

    def __len__(self) -> int:
        return len(self.opens)

    def violations(self) -> list[str]:
        out = []
        present = set(self.opens)
        if frozenset() not in present:
            out.append("missing empty set")
        if self.ground not in present:
            out.append("missing ground set")
        for u in self.opens:
            if not u <= self.ground:
                out.append(f"open {sorted(u, key=repr)} is not a subset of the ground set")
        for u, v in itertools.combinations(self.opens, 2):
            if u | v not in present:
                out.append(f"not closed under union: {sorted(u, key=repr)} ∪ {sorted(v, key=repr)}")
            if u & v not in present:
                out.append(f"not closed under intersection: {sorted(u, key=repr)} ∩ {sorted(v, key=repr)}")
        return out

    @property
    def is_valid(self) -> bool:
        return not self.violations()


def discrete_lattice(ground: Iterable[Hashable]) -> OpenSetLattice:
    g = list(ground)
    subsets = itertools.chain.from_iterable(itertools.combinations(g, r) for r in range(len(g) + 1))
    return OpenSetLattice(g, subsets)


def sierpinski_lattice() -> OpenSetLattice:
    return OpenSetLattice(["x", "y"], [[], ["x"], ["x", "y"]])


def chain_lattice(sizes: Sequence[int] = (0, 1, 3)) -> OpenSetLattice:
    """Nested opens ``{0..s-1}`` for each ``s`` in ``sizes``; the last size is the ground set."""
    return OpenSetLattice(range(max(sizes)), [range(s) for s in sizes])


@dataclass(frozen=True)
class QuasiAutomaton:
    lattice: OpenSetLattice
    alphabet: tuple[str, ...]
    delta: Mapping[str, Mapping[frozenset, frozenset]]
    initial: frozenset
    terminal: Mapping[frozenset, bool]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(
            self, "delta",
            {a: {frozenset(u): frozenset(v) for u, v in tbl.items()} for a, tbl in self.delta.items()},
        )
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "terminal", {frozenset(u): bool(b) for u, b in self.terminal.items()})

    def step(self, u: frozenset, a: str) -> frozenset:
        if a not in self.alphabet:
            raise AlphabetError(f"letter {a!r} not in alphabet {self.alphabet}")
        try:
            return self.delta[a][u]
        except KeyError:
            raise ValueError(f"delta_{a} undefined on {sorted(u, key=repr)}") from None

    # JSON
    def to_json(self) -> dict:
        def enc(u):
            return sorted(u, key=repr)

        opens = self.lattice.opens
        return {
            "ground": enc(self.lattice.ground),
            "opens": [enc(u) for u in opens],
            "alphabet": list(self.alphabet),
            "delta": {a: [[enc(u), enc(self.delta[a][u])] for u in opens if u in self.delta[a]]
                      for a in self.alphabet},
            "initial": enc(self.initial),
            "terminal": [[enc(u), int(self.terminal[u])] for u in opens if u in self.terminal],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "QuasiAutomaton":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            lat = OpenSetLattice(data["ground"], data["opens"])
            delta = {a: {frozenset(u): frozenset(v) for u, v in rows} for a, rows in data["delta"].items()}
            term = {frozenset(u): bool(b) for u, b in data["terminal"]}
            return cls(lat, tuple(data["alphabet"]), delta, frozenset(data["initial"]), term)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed quasi-automaton JSON: {exc!r}") from None


def validate(qa: QuasiAutomaton) -> dict:
    """Exhaustively check every structural condition; report, never raise."""
    lat = qa.lattice
    v = list(lat.violations())
    opens = set(lat.opens)
    name = lambda u: sorted(u, key=repr)  # noqa: E731
    if qa.initial not in opens:
        v.append(f"initial element {name(qa.initial)} is not open")
    for a in qa.alphabet:
        tbl = qa.delta.get(a)
        if tbl is None:
            v.append(f"no transition map for letter {a!r}")
            continue
        missing = [u for u in lat.opens if u not in tbl]
        if missing:
            v.append(f"delta_{a} undefined on {[name(u) for u in missing]}")
            continue
        for u in lat.opens:
            if tbl[u] not in opens:
                v.append(f"delta_{a}({name(u)}) = {name(tbl[u])} is not open")
        if tbl.get(frozenset()) not in (None, frozenset()):
            v.append(f"delta_{a} does not send ∅ to ∅")
        for u, w in itertools.combinations(lat.opens, 2):
            if u | w in tbl and tbl[u | w] != tbl[u] | tbl[w]:
                v.append(f"delta_{a} does not preserve the union {name(u)} ∪ {name(w)}")
    missing = [u for u in lat.opens if u not in qa.terminal]
    if missing:
        v.append(f"terminal map undefined on {[name(u) for u in missing]}")
    else:
        if qa.terminal.get(frozenset(), False):
            v.append("terminal(∅) must be 0")
        for u, w in itertools.combinations(lat.opens, 2):
            if u | w in qa.terminal and qa.terminal[u | w] != (qa.terminal[u] or qa.terminal[w]):
                v.append(f"terminal map is not additive on {name(u)} ∪ {name(w)}")
    return {"valid": not v, "violations": v}


def evaluate_word(qa: QuasiAutomaton, word: Sequence[str]) -> bool:
    u = qa.initial
    for a in word:
        u = qa.step(u, a)
    return qa.terminal[u]


def from_nfa(nfa: Nfa) -> QuasiAutomaton:
    """The free case: discrete topology on the states."""
    lat = discrete_lattice(nfa.states)
    delta = {a: {u: nfa.step(u, a) for u in lat.opens} for a in nfa.alphabet}
    term = {u: bool(u & nfa.accepting) for u in lat.opens}
    return QuasiAutomaton(lat, nfa.alphabet, delta, nfa.initial, term)


# --- retracts of free modules --------------------------------------------

class RetractBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Retract:
    """Join-preserving ``iota: L -> B^n`` and ``p: B^n -> L`` with ``p ∘ iota = id``.

    Elements of ``B^n`` are frozensets of coordinates ``0..n-1``.
    """

    n: int
    iota: Mapping[frozenset, frozenset] = field(hash=False)
    p_basis: tuple[frozenset, ...]

    def p(self, s: Iterable[int]) -> frozenset:
        out: frozenset = frozenset()
        for i in s:
            out = out | self.p_basis[i]
        return out

    def verify(self, lattice: OpenSetLattice) -> bool:
        opens = lattice.opens
        if any(self.p([i]) not in lattice for i in range(self.n)):
            return False
        if self.iota.get(frozenset()) != frozenset():
            return False
        for u, v in itertools.combinations(opens, 2):
            if self.iota[u | v] != self.iota[u] | self.iota[v]:
                return False
        return all(self.p(self.iota[u]) == u for u in opens)


def retract_check(lattice: OpenSetLattice, n: int, budget: int = 200_000) -> Retract | None:
    """Search for a retraction of ``B^n`` onto ``lattice``.

    ``p`` is fixed by the images of the ``n`` basis vectors, and every choice
    is join-preserving because the lattice is union-closed.  For each ``p``
    the section ``iota`` is built by backtracking over opens in size order,
    choosing preimages under ``p`` that keep ``iota`` join-preserving.
    Returns ``None`` when no retraction exists; raises
    :class:`RetractBudgetExceeded` if more than ``budget`` search nodes are
    visited.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if not lattice.is_valid:
        raise ValueError(f"not a lattice of opens: {lattice.violations()[0]}")
    opens = lattice.opens
    if len(opens) > 2 ** n:
        return None
    cube = [frozenset(s) for r in range(n + 1) for s in itertools.combinations(range(n), r)]
    nodes = 0

    def tick():
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise RetractBudgetExceeded(f"retract search exceeded {budget} nodes (n={n}, |L|={len(opens)})")

    for basis in itertools.product(opens, repeat=n):
        tick()
        if frozenset().union(*basis) != lattice.ground:
            continue  # p must be onto
        def p(s):
            return frozenset().union(*(basis[i] for i in s))
        pre: dict[frozenset, list[frozenset]] = {u: [] for u in opens}
        for s in cube:
            pre[p(s)].append(s)
        if any(not pre[u] for u in opens):
            continue
        iota: dict[frozenset, frozenset] = {}

        def extend(k: int) -> bool:
            if k == len(opens):
                return True
            u = opens[k]
            for s in pre[u]:
                tick()
                ok = True
                for w, t in iota.items():
                    uw = u | w
                    want = s if uw == u else iota.get(uw)
                    if want is not None and want != s | t:
                        ok = False
                        break
                if ok:
                    for w1, w2 in itertools.combinations(iota, 2):
                        if w1 | w2 == u and iota[w1] | iota[w2] != s:
                            ok = False
                            break
                if ok and not u and s:
                    ok = False
                if ok:
                    iota[u] = s
                    if extend(k + 1):
                        return True
                    del iota[u]
            return False

        if extend(0):
            r = Retract(n, dict(iota), tuple(basis))
            assert r.verify(lattice)
            return r
    return None

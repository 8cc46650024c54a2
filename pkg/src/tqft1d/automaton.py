"""Nondeterministic finite automata and their Boolean matrices.

Transition matrices use the column-as-image convention: column ``j`` of
``transition_matrix(nfa, a)`` is the indicator of ``delta(a, q_j)``.  A word
``a1 ... an`` then acts by ``delta_an ∘ ... ∘ delta_a1`` on the initial
vector, i.e. automata act on the right.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .semimodule import Matrix
from .semiring import BOOLEAN

__all__ = [
    "Nfa",
    "AlphabetError",
    "accepts",
    "transition_matrix",
    "initial_vector",
    "accepting_covector",
    "word_matrix",
    "has_cycle_labeled",
    "nfa_from_json",
    "nfa_to_json",
    "nfa_to_dot",
    "words_up_to",
]


class AlphabetError(ValueError):
    """A letter outside the automaton's alphabet."""


@dataclass(frozen=True)
class Nfa:
    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    delta: Mapping[tuple[str, str], frozenset[str]]
    initial: frozenset[str]
    accepting: frozenset[str]

    def __post_init__(self):
        if len(set(self.states)) != len(self.states):
            raise ValueError("duplicate state names")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("duplicate letters")
        known = set(self.states)
        if not self.initial <= known or not self.accepting <= known:
            raise ValueError("initial and accepting states must be states")
        full = {}
        for a in self.alphabet:
            for q in self.states:
                targets = frozenset(self.delta.get((a, q), ()))
                if not targets <= known:
                    raise ValueError(f"delta({a}, {q}) leaves the state set: {sorted(targets - known)}")
                full[(a, q)] = targets
        extra = set(self.delta) - set(full)
        if extra:
            raise ValueError(f"transitions on unknown letters or states: {sorted(extra)}")
        object.__setattr__(self, "delta", full)

    @classmethod
    def build(
        cls,
        states: Sequence[str],
        alphabet: Sequence[str],
        transitions: Iterable[tuple[str, str, str]],
        initial: Iterable[str],
        accepting: Iterable[str],
    ) -> "Nfa":
        """Build from ``(source, letter, target)`` triples."""
        delta: dict[tuple[str, str], set[str]] = {}
        for src, a, dst in transitions:
            delta.setdefault((a, src), set()).add(dst)
        return cls(
            tuple(states), tuple(alphabet),
            {k: frozenset(v) for k, v in delta.items()},
            frozenset(initial), frozenset(accepting),
        )

    def step(self, current: Iterable[str], a: str) -> frozenset[str]:
        if a not in self.alphabet:
            raise AlphabetError(f"letter {a!r} not in alphabet {self.alphabet}")
        out: set[str] = set()
        for q in current:
            out |= self.delta[(a, q)]
        return frozenset(out)

    def edges(self) -> list[tuple[str, str, str]]:
        return [(q, a, p) for a in self.alphabet for q in self.states for p in sorted(self.delta[(a, q)])]

    def index(self, q: str) -> int:
        return self.states.index(q)


def _letters(w: str | Sequence[str]) -> tuple[str, ...]:
    return tuple(w)


def accepts(nfa: Nfa, word: str | Sequence[str]) -> bool:
    current = nfa.initial
    for a in _letters(word):
        current = nfa.step(current, a)
    return bool(current & nfa.accepting)


def transition_matrix(nfa: Nfa, a: str) -> Matrix:
    if a not in nfa.alphabet:
        raise AlphabetError(f"letter {a!r} not in alphabet {nfa.alphabet}")
    rows = [[p in nfa.delta[(a, q)] for q in nfa.states] for p in nfa.states]
    return Matrix.from_rows(rows, BOOLEAN)


def initial_vector(nfa: Nfa) -> Matrix:
    return Matrix.from_rows([[q in nfa.initial] for q in nfa.states], BOOLEAN)


def accepting_covector(nfa: Nfa) -> Matrix:
    return Matrix.from_rows([[q in nfa.accepting for q in nfa.states]], BOOLEAN)


def word_matrix(nfa: Nfa, word: str | Sequence[str]) -> Matrix:
    from .semimodule import identity

    out = identity(len(nfa.states), BOOLEAN)
    for a in _letters(word):
        out = transition_matrix(nfa, a) @ out
    return out


def has_cycle_labeled(nfa: Nfa, word: str | Sequence[str]) -> bool:
    """True iff some state has a closed path reading ``word``."""
    letters = _letters(word)
    if not letters:
        raise ValueError("has_cycle_labeled needs a nonempty word")
    for q in nfa.states:
        current = frozenset([q])
        for a in letters:
            current = nfa.step(current, a)
        if q in current:
            return True
    return False


def words_up_to(alphabet: Sequence[str], max_len: int):
    """All words of length 0..max_len in shortlex order, as strings."""
    import itertools

    for n in range(max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield "".join(t)


# --- serialization -------------------------------------------------------

def nfa_to_json(nfa: Nfa) -> dict:
    return {
        "states": list(nfa.states),
        "alphabet": list(nfa.alphabet),
        "delta": {
            a: {q: [p for p in nfa.states if p in nfa.delta[(a, q)]] for q in nfa.states}
            for a in nfa.alphabet
        },
        "initial": [q for q in nfa.states if q in nfa.initial],
        "accepting": [q for q in nfa.states if q in nfa.accepting],
    }


def nfa_from_json(data: dict | str) -> Nfa:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        delta = {
            (a, q): frozenset(targets)
            for a, row in data.get("delta", {}).items()
            for q, targets in row.items()
        }
        return Nfa(
            tuple(data["states"]), tuple(data["alphabet"]), delta,
            frozenset(data.get("initial", ())), frozenset(data.get("accepting", ())),
        )
    except KeyError as exc:
        raise ValueError(f"automaton JSON is missing {exc}") from None


def nfa_to_dot(nfa: Nfa, name: str = "nfa") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for q in nfa.states:
        shape = "doublecircle" if q in nfa.accepting else "circle"
        lines.append(f'  "{q}" [shape={shape}];')
    for i, q in enumerate(s for s in nfa.states if s in nfa.initial):
        lines.append(f'  "__start{i}" [shape=point];')
        lines.append(f'  "__start{i}" -> "{q}";')
    grouped: dict[tuple[str, str], list[str]] = {}
    for src, a, dst in nfa.edges():
        grouped.setdefault((src, dst), []).append(a)
    for (src, dst), letters in grouped.items():
        lines.append(f'  "{src}" -> "{dst}" [label="{",".join(letters)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

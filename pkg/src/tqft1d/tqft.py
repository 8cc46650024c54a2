"""Evaluation of decorated 1-cobordisms from automaton-style data.

The data ``(n, {m_a}, v0, vstar)`` assigns the rank-``n`` free module to each
boundary point.  Automata act on the right: the word ``a1 ... an``, read
along a component's orientation, becomes the operator
``M_w = m_an ∘ ... ∘ m_a1``.

A morphism is evaluated one component at a time.  For boundary indices
``i`` (at the component's tail) and ``j`` (at its head) the contributions are::

    arc        M_w[j, i]
    half_in    (M_w v0)[j]
    half_out   (vstar M_w)[i]
    floating   vstar M_w v0
    circle     trace(M_w)

and a matrix entry is the product of these over all components.  This one
rule covers cups, caps, dots on strands of either orientation, half-intervals
at ``+`` and ``-`` points and transpositions.
"""

from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Mapping, Sequence

from .automaton import (
    Nfa,
    accepting_covector,
    accepts,
    initial_vector,
    transition_matrix,
    words_up_to,
)
from .cobordism import ARC, CIRCLE, FLOATING, HALF_IN, HALF_OUT, Morphism
from .semimodule import DimensionError, Matrix, identity
from .semiring import BOOLEAN, SemiringSpec, get_semiring

__all__ = [
    "TqftData",
    "from_automaton",
    "from_generic",
    "word_operator",
    "evaluate",
    "evaluate_closed",
    "check_correspondence",
    "floating_values",
    "circle_values",
]


@dataclass(frozen=True)
class TqftData:
    semiring: SemiringSpec
    rank: int
    maps: Mapping[str, Matrix]
    v0: Matrix
    vstar: Matrix

    def __post_init__(self):
        n = self.rank
        if n < 1:
            raise DimensionError("rank must be positive")
        for a, m in self.maps.items():
            if m.shape != (n, n):
                raise DimensionError(f"m_{a} has shape {m.shape}, expected {(n, n)}")
        if self.v0.shape != (n, 1):
            raise DimensionError(f"v0 has shape {self.v0.shape}, expected {(n, 1)}")
        if self.vstar.shape != (1, n):
            raise DimensionError(f"vstar has shape {self.vstar.shape}, expected {(1, n)}")
        for m in (*self.maps.values(), self.v0, self.vstar):
            if m.semiring != self.semiring:
                raise ValueError(f"map over {m.semiring.name} in {self.semiring.name} data")
        object.__setattr__(self, "maps", dict(self.maps))

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(self.maps)

    def to_json(self) -> dict:
        return {
            "semiring": self.semiring.name,
            "rank": self.rank,
            "maps": {a: m.to_json() for a, m in self.maps.items()},
            "v0": self.v0.to_json(),
            "vstar": self.vstar.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "TqftData":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            R = get_semiring(data["semiring"])

            def mat(d):
                if isinstance(d, list):
                    return Matrix.from_rows(
                        [[R.from_text(x) if isinstance(x, str) else x for x in row] for row in d], R
                    )
                return Matrix.from_json(d, R)

            return cls(
                R, int(data["rank"]),
                {a: mat(m) for a, m in data["maps"].items()},
                mat(data["v0"]), mat(data["vstar"]),
            )
        except KeyError as exc:
            raise ValueError(f"TQFT JSON is missing {exc}") from None


def from_automaton(nfa: Nfa) -> TqftData:
    return TqftData(
        BOOLEAN, len(nfa.states),
        {a: transition_matrix(nfa, a) for a in nfa.alphabet},
        initial_vector(nfa), accepting_covector(nfa),
    )


def from_generic(
    semiring: SemiringSpec | str,
    rank: int,
    maps: Mapping[str, Matrix | Sequence[Sequence[Any]]],
    v0: Matrix | Sequence[Any],
    vstar: Matrix | Sequence[Any],
) -> TqftData:
    """Build data over any registered semiring.

    Maps may be given as row lists; ``v0`` and ``vstar`` may be flat lists.
    """
    R = get_semiring(semiring) if isinstance(semiring, str) else semiring

    def as_matrix(x, column: bool | None):
        if isinstance(x, Matrix):
            return x
        rows = list(x)
        if column is True:
            rows = [[e] for e in rows]
        elif column is False:
            rows = [rows]
        return Matrix.from_rows(rows, R)

    def vec(x, column):
        if isinstance(x, Matrix):
            return x
        flat = list(x)
        if flat and isinstance(flat[0], (list, tuple)):
            return as_matrix(flat, None)
        return as_matrix(flat, column)

    return TqftData(
        R, rank, {a: as_matrix(m, None) for a, m in maps.items()}, vec(v0, True), vec(vstar, False)
    )


def word_operator(data: TqftData, word: Sequence[str]) -> Matrix:
    """``m_an ∘ ... ∘ m_a1`` for ``word = a1 ... an``."""
    out = identity(data.rank, data.semiring)
    for a in word:
        try:
            m = data.maps[a]
        except KeyError:
            raise KeyError(f"letter {a!r} has no operator (alphabet {sorted(data.maps)})") from None
        out = m @ out
    return out


def evaluate_closed(data: TqftData, kind: str, word: Sequence[str]) -> Any:
    M = word_operator(data, word)
    if kind in (CIRCLE, "circle"):
        return M.trace()
    if kind in (FLOATING, "floating", "floating-interval"):
        return (data.vstar @ M @ data.v0).item()
    raise ValueError(f"closed components are 'circle' or 'floating', not {kind!r}")


def _factor(data: TqftData, kind: str, word) -> Callable[[int | None, int | None], Any]:
    """Contribution of one component as a function of (tail index, head index)."""
    M = word_operator(data, word)
    if kind == ARC:
        return lambda i, j: M[j, i]
    if kind == HALF_IN:
        col = M @ data.v0
        return lambda i, j: col[j, 0]
    if kind == HALF_OUT:
        row = data.vstar @ M
        return lambda i, j: row[0, i]
    raise ValueError(kind)


def evaluate(data: TqftData, m: Morphism) -> Matrix:
    """Matrix of shape ``n^|target| x n^|source|`` assigned to ``m``."""
    R, n = data.semiring, data.rank
    scalar = R.one
    opens = []
    for c in m.components:
        if c.is_closed:
            scalar = R.mul(scalar, evaluate_closed(data, c.kind, c.word))
        else:
            opens.append((c, _factor(data, c.kind, c.word)))
    nb, nt = len(m.source), len(m.target)
    rows, cols = n ** nt, n ** nb
    entries = [R.zero] * (rows * cols)
    if scalar == R.zero:
        return Matrix(rows, cols, tuple(entries), R)
    # slot -> position in the joint index tuple (bottom slots first)
    pos = {("b", i): i for i in range(nb)} | {("t", j): nb + j for j in range(nt)}
    plan = [(f, pos.get(c.tail), pos.get(c.head)) for c, f in opens]
    weights_b = [n ** (nb - 1 - i) for i in range(nb)]
    weights_t = [n ** (nt - 1 - j) for j in range(nt)]
    for idx in itertools.product(range(n), repeat=nb + nt):
        val = scalar
        for f, pt, ph in plan:
            val = R.mul(val, f(None if pt is None else idx[pt], None if ph is None else idx[ph]))
            if val == R.zero:
                break
        if val == R.zero:
            continue
        col = sum(d * w for d, w in zip(idx[:nb], weights_b))
        row = sum(d * w for d, w in zip(idx[nb:], weights_t))
        entries[row * cols + col] = val
    return Matrix(rows, cols, tuple(entries), R)


def floating_values(data: TqftData, max_len: int, alphabet: Sequence[str] | None = None) -> dict[str, Any]:
    """Floating-interval value of every word up to ``max_len``, in shortlex order.

    Each word's column ``M_w v0`` is obtained from its prefix's with one
    matrix-vector product.
    """
    letters = data.alphabet if alphabet is None else tuple(alphabet)
    cols: dict[str, Matrix] = {}
    out: dict[str, Any] = {}
    for w in words_up_to(letters, max_len):
        cols[w] = data.v0 if not w else data.maps[w[-1]] @ cols[w[:-1]]
        out[w] = (data.vstar @ cols[w]).item()
    return out


def circle_values(data: TqftData, max_len: int, alphabet: Sequence[str] | None = None) -> dict[str, Any]:
    """Circle value ``trace(M_w)`` of every word up to ``max_len``."""
    letters = data.alphabet if alphabet is None else tuple(alphabet)
    ops: dict[str, Matrix] = {}
    out: dict[str, Any] = {}
    for w in words_up_to(letters, max_len):
        ops[w] = identity(data.rank, data.semiring) if not w else data.maps[w[-1]] @ ops[w[:-1]]
        out[w] = ops[w].trace()
    return out


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("TQFT_THREADS", "1")))
    except ValueError:
        return 1


def check_correspondence(nfa: Nfa, max_len: int, data: TqftData | None = None) -> dict:
    """Compare floating-interval values with NFA acceptance on all words up to ``max_len``.

    ``data`` defaults to ``from_automaton(nfa)``; passing altered data is how
    mismatches are exercised.  Words are checked in shortlex order and the
    first disagreement is reported.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    if data is None:
        data = from_automaton(nfa)
    R = data.semiring
    values = floating_values(data, max_len, nfa.alphabet)
    words = list(values)

    def one(w: str) -> tuple[bool, bool]:
        return bool(values[w] != R.zero), accepts(nfa, w)

    nthreads = _threads()
    if nthreads > 1:
        with ThreadPoolExecutor(nthreads) as pool:
            results = list(pool.map(one, words))
    else:
        results = [one(w) for w in words]
    for k, (w, (got, want)) in enumerate(zip(words, results)):
        if got != want:
            return {
                "status": "mismatch",
                "words_checked": k + 1,
                "counterexample": {"word": w, "tqft": got, "accepts": want},
            }
    return {"status": "ok", "words_checked": len(words), "counterexample": None}

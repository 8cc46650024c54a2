"""HOMFLYPT polynomial by skein recursion over descending diagrams.

Conventions: ``a P(L+) - a^-1 P(L-) = z P(L0)`` with the unknot equal to 1
(reduced) or to ``(a - a^-1)/z`` (unreduced, which becomes ``[N]`` after
specializing).  The paper's second variable is called ``z`` here.

Algorithm: pick a base point and an order for the components and walk the
diagram.  The first crossing first met from below is switched (keeping the
base points, so the defect count drops) and smoothed (one crossing fewer).
A diagram with no such crossing is descending, hence an unlink.  R1 and R2
reductions that drop the crossing count are applied at every node and
results are memoized on a relabeling-invariant key.
"""

from __future__ import annotations

import random
from typing import Sequence

from ..poly import LaurentPoly, TwoVarPoly
from .diagram import LinkDiagram
from .moves import simplify

__all__ = ["homfly", "specialize", "SkeinBudgetExceeded", "unlink_value", "jones_from_homfly"]

A = TwoVarPoly.monomial(1, 0)
A_INV = TwoVarPoly.monomial(-1, 0)
Z = TwoVarPoly.monomial(0, 1)
DELTA = TwoVarPoly({(1, -1): 1, (-1, -1): -1})  # (a - a^-1) / z


class SkeinBudgetExceeded(RuntimeError):
    pass


def unlink_value(k: int) -> TwoVarPoly:
    """Reduced value of the ``k``-component unlink, ``k >= 1``."""
    if k < 1:
        raise ValueError("the reduced invariant needs at least one component")
    return DELTA ** (k - 1)


def _walk(d: LinkDiagram, base: Sequence[int]) -> int | None:
    """Index of the first crossing first met as an under-crossing, or ``None``."""
    nxt = d.successor()
    ends = d.arc_ends()
    seen: set[int] = set()
    for start in base:
        cur = start
        while True:
            ci, p = ends[cur][1]  # the crossing this arc runs into
            if ci not in seen:
                seen.add(ci)
                if p == 0:
                    return ci
            cur = nxt[cur]
            if cur == start:
                break
    return None


def _default_base(d: LinkDiagram) -> list[int]:
    return [comp[0] for comp in d.arc_components()]


def _random_base(d: LinkDiagram, rng: random.Random) -> list[int]:
    comps = d.arc_components()
    rng.shuffle(comps)
    return [rng.choice(c) for c in comps]


class _Evaluator:
    def __init__(self, rng: random.Random | None, max_nodes: int | None, memo: dict | None):
        self.rng = rng
        self.max_nodes = max_nodes
        self.nodes = 0
        self.memo = {} if memo is None else memo

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise SkeinBudgetExceeded(f"skein recursion exceeded {self.max_nodes} nodes")

    def value(self, d: LinkDiagram, base: list[int] | None = None) -> TwoVarPoly:
        self.tick()
        if base is None:
            # fresh node: reduce first, then choose base points
            d = simplify(d)
            if not d.crossings:
                return unlink_value(d.loops)
            key = d.canonical_key()
            hit = self.memo.get(key)
            if hit is not None:
                return hit
            base = _random_base(d, self.rng) if self.rng else _default_base(d)
            out = self._expand(d, base)
            self.memo[key] = out
            return out
        return self._expand(d, base)

    def _expand(self, d: LinkDiagram, base: list[int]) -> TwoVarPoly:
        ci = _walk(d, base)
        if ci is None:
            return unlink_value(d.components())
        switched = d.switch(ci)
        smoothed = d.smooth(ci)
        # the switched diagram keeps every label, so the base points carry over
        if self.rng is not None:
            p_sw = self.value(switched, base)
        else:
            p_sw = self.value(switched)
        p_sm = self.value(smoothed)
        if d.crossings[ci].sign > 0:
            return A_INV * A_INV * p_sw + A_INV * Z * p_sm
        return A * A * p_sw - A * Z * p_sm


def homfly(
    d: LinkDiagram,
    normalization: str = "reduced",
    seed: int | None = None,
    max_nodes: int | None = 2_000_000,
    memo: dict | None = None,
) -> TwoVarPoly:
    """HOMFLYPT polynomial of ``d``.

    ``seed`` switches to random base points and component orders (used to
    test that the answer does not depend on them).  ``max_nodes`` caps the
    number of recursion nodes; ``None`` removes the cap.  Passing the same
    ``memo`` dict to several calls shares work between them (cached nodes do
    not count against the budget).
    """
    if normalization not in ("reduced", "unreduced"):
        raise ValueError(f"normalization must be 'reduced' or 'unreduced', not {normalization!r}")
    if d.components() == 0:
        if normalization == "reduced":
            raise ValueError("the reduced invariant is undefined on the empty link")
        return TwoVarPoly.const(1)
    rng = None if seed is None else random.Random(seed)
    ev = _Evaluator(rng, max_nodes, memo)
    p = ev.value(d)
    return p * DELTA if normalization == "unreduced" else p


def specialize(p: TwoVarPoly, n: int, normalization: str = "reduced") -> LaurentPoly:
    """Substitute ``a = q^n`` and ``z = q - q^-1``.

    ``p`` must be in the given normalization.  For unreduced input the
    leftover ``z^-1`` is divided out exactly, which needs ``n >= 1``.
    """
    if normalization not in ("reduced", "unreduced"):
        raise ValueError(f"normalization must be 'reduced' or 'unreduced', not {normalization!r}")
    if normalization == "unreduced" and n < 1:
        raise ValueError("the unreduced invariant needs N >= 1: the unknot value [0] is 0")
    return p.specialize(n)


def jones_from_homfly(p: TwoVarPoly) -> LaurentPoly:
    """The reduced ``P_2`` in the variable ``q``; Jones ``V(t)`` is this at ``t = q^-2``."""
    return p.specialize(2)

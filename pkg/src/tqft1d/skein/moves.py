"""Reidemeister moves on PD diagrams.

Moves are located through the face structure of the diagram (see
:meth:`LinkDiagram.faces`): a monogon is a kink, a bigon whose one edge is
over at both ends is an R2 pair, and a triangle whose strands have a
consistent top-to-bottom order admits R3.
"""

from __future__ import annotations

import random
from typing import Callable

from .diagram import Crossing, DiagramError, LinkDiagram, make_crossing

__all__ = [
    "kinks",
    "r2_pairs",
    "r3_triangles",
    "r1_remove",
    "r2_remove",
    "r1_add",
    "r2_add",
    "r3",
    "simplify",
    "random_move",
    "random_moves",
]


def _fresh(d: LinkDiagram, k: int) -> list[int]:
    top = max(d.labels, default=0)
    return list(range(top + 1, top + 1 + k))


def _set(cs: list[list[int]], signs: list[int]) -> tuple[Crossing, ...]:
    return tuple(Crossing(tuple(c), s) for c, s in zip(cs, signs))


# --- finding moves ---------------------------------------------------------

def kinks(d: LinkDiagram) -> list[int]:
    return sorted({face[0][0] for face in d.faces() if len(face) == 1})


def r2_pairs(d: LinkDiagram) -> list[tuple[int, int]]:
    out = []
    for face in d.faces():
        if len(face) != 2:
            continue
        (c1, p1), (c2, p2) = face
        if c1 == c2:
            continue
        # the edge leaving (c1, p1) ends at (c2, p2 - 1)
        if p1 % 2 == (p2 - 1) % 2:
            out.append((c1, c2))
    return out


def _triangle_edges(d: LinkDiagram, face):
    """``(label, (X, p), (Y, q))`` for each edge of a triangular face."""
    edges = []
    for k, (x, p) in enumerate(face):
        y, q1 = face[(k + 1) % 3]
        edges.append((d.crossings[x].labels[p], (x, p), (y, (q1 - 1) % 4)))
    return edges


def r3_triangles(d: LinkDiagram) -> list[list[tuple[int, int]]]:
    out = []
    for face in d.faces():
        if len(face) != 3 or len({c for c, _ in face}) != 3:
            continue
        status = [(p % 2, q % 2) for _, (_, p), (_, q) in _triangle_edges(d, face)]
        if (1, 1) in status and (0, 0) in status:
            out.append(face)
    return out


# --- applying moves --------------------------------------------------------

def r1_remove(d: LinkDiagram, i: int) -> LinkDiagram:
    if i not in kinks(d):
        raise DiagramError(f"crossing {i} is not a kink")
    return d.remove_crossing(i)


def r2_remove(d: LinkDiagram, c1: int, c2: int) -> LinkDiagram:
    if (c1, c2) not in r2_pairs(d) and (c2, c1) not in r2_pairs(d):
        raise DiagramError(f"crossings {c1}, {c2} do not form an R2 bigon")
    first, second = max(c1, c2), min(c1, c2)
    return d.remove_crossing(first).remove_crossing(second)


def r1_add(d: LinkDiagram, label: int | None = None, left: bool = True, under_first: bool = True) -> LinkDiagram:
    """Insert a kink on arc ``label`` (or on a crossingless loop if ``label`` is None)."""
    if label is None:
        if d.loops < 1:
            raise DiagramError("no crossingless loop to kink")
        e, n1 = 1, 2
        shift = max(d.labels, default=0)
        e, n1 = e + shift, n1 + shift
        ccw = [e, n1, n1, e]
        c = make_crossing(ccw, 0 if under_first else 1, 1 if under_first else 0)
        return LinkDiagram(d.crossings + (c,), d.loops - 1)
    ends = d.arc_ends()
    if label not in ends:
        raise DiagramError(f"no arc labelled {label}")
    (hx, hp) = ends[label][1]
    n1, n2 = _fresh(d, 2)
    cs = [list(c.labels) for c in d.crossings]
    signs = [c.sign for c in d.crossings]
    cs[hx][hp] = n2
    if left:
        ccw = [label, n1, n1, n2]
        e_pos, n1_in = 0, 1
    else:
        ccw = [label, n2, n1, n1]
        e_pos, n1_in = 0, 3
    u, o = (e_pos, n1_in) if under_first else (n1_in, e_pos)
    new = make_crossing(ccw, u, o)
    return LinkDiagram(_set(cs, signs) + (new,), d.loops)


def r2_add(d: LinkDiagram, dart1: tuple[int, int], dart2: tuple[int, int], first_over: bool = True) -> LinkDiagram:
    """Push the arc leaving ``dart1`` across the arc leaving ``dart2``.

    Both darts must lie on the same face; ``first_over`` selects which arc
    ends up on top at both new crossings.
    """
    face = next((f for f in d.faces() if dart1 in f), None)
    if face is None or dart2 not in face:
        raise DiagramError("darts must lie on a common face")
    (x1, p1), (x2, p2) = dart1, dart2
    e1, e2 = d.crossings[x1].labels[p1], d.crossings[x2].labels[p2]
    if e1 == e2:
        raise DiagramError("R2 needs two different arcs")
    ends = d.arc_ends()
    cs = [list(c.labels) for c in d.crossings]
    signs = [c.sign for c in d.crossings]
    n = _fresh(d, 4)

    def split(e, dart, fresh):
        # parts in traversal order; the head end of e is relabelled
        agree = ends[e][0] == dart
        hx, hp = ends[e][1]
        if agree:
            parts = (e, fresh[0], fresh[1])
        else:
            parts = (fresh[1], fresh[0], e)
        cs[hx][hp] = fresh[1]
        return parts, agree

    (a0, a1, a2), agree1 = split(e1, dart1, n[:2])
    (b0, b1, b2), agree2 = split(e2, dart2, n[2:])
    # local picture, counterclockwise from east: e1 dips across e2 twice
    X1 = [b1, a0, b2, a1]
    X2 = [b0, a2, b1, a1]
    e1_in1, e1_in2 = (1, 3) if agree1 else (3, 1)
    e2_in = 0 if agree2 else 2
    if first_over:
        c1 = make_crossing(X1, e2_in, e1_in1)
        c2 = make_crossing(X2, e2_in, e1_in2)
    else:
        c1 = make_crossing(X1, e1_in1, e2_in)
        c2 = make_crossing(X2, e1_in2, e2_in)
    return LinkDiagram(_set(cs, signs) + (c1, c2), d.loops)


def r3(d: LinkDiagram, face: list[tuple[int, int]]) -> LinkDiagram:
    """Slide the bottom strand of a non-alternating triangle across the opposite crossing."""
    if face not in r3_triangles(d):
        raise DiagramError("face does not admit an R3 move")
    cs = [list(c.labels) for c in d.crossings]
    signs = [c.sign for c in d.crossings]
    old = [c.labels for c in d.crossings]
    for m, (x, p), (y, q) in _triangle_edges(d, face):
        o_x, o_y = old[x][(p + 2) % 4], old[y][(q + 2) % 4]
        cs[x][(p + 2) % 4] = m
        cs[x][p] = o_y
        cs[y][(q + 2) % 4] = m
        cs[y][q] = o_x
    return LinkDiagram(_set(cs, signs), d.loops)


def simplify(d: LinkDiagram) -> LinkDiagram:
    """Remove kinks and R2 bigons until none remain; crossing count only drops."""
    while d.crossings:
        k = kinks(d)
        if k:
            d = d.remove_crossing(k[0])
            continue
        pairs = r2_pairs(d)
        if pairs:
            c1, c2 = pairs[0]
            d = d.remove_crossing(max(c1, c2)).remove_crossing(min(c1, c2))
            continue
        break
    return d


# --- random moves ----------------------------------------------------------

def random_move(d: LinkDiagram, rng: random.Random, max_crossings: int | None = None) -> tuple[str, LinkDiagram]:
    """Apply one randomly chosen applicable move; returns ``(name, diagram)``."""
    options: list[tuple[str, Callable[[], LinkDiagram]]] = []
    room = max_crossings is None or len(d) + 2 <= max_crossings
    if d.crossings:
        lab = rng.choice(d.labels)
        options.append(("R1+", lambda: r1_add(d, lab, rng.random() < 0.5, rng.random() < 0.5)))
    elif d.loops:
        options.append(("R1+", lambda: r1_add(d, None, True, rng.random() < 0.5)))
    if d.crossings and room:
        faces = [f for f in d.faces() if len({d.crossings[x].labels[p] for x, p in f}) >= 2]
        if faces:
            def add2():
                f = rng.choice(faces)
                while True:
                    a, b = rng.sample(f, 2)
                    if d.crossings[a[0]].labels[a[1]] != d.crossings[b[0]].labels[b[1]]:
                        break
                return r2_add(d, a, b, rng.random() < 0.5)
            options.append(("R2+", add2))
    k = kinks(d)
    if k:
        options.append(("R1-", lambda: d.remove_crossing(rng.choice(k))))
    pairs = r2_pairs(d)
    if pairs:
        def rem2():
            c1, c2 = rng.choice(pairs)
            return d.remove_crossing(max(c1, c2)).remove_crossing(min(c1, c2))
        options.append(("R2-", rem2))
    tri = r3_triangles(d)
    if tri:
        options.append(("R3", lambda: r3(d, rng.choice(tri))))
        options.append(("R3", lambda: r3(d, rng.choice(tri))))  # favour R3 when available
    if not options:
        return ("none", d)
    name, make = rng.choice(options)
    return name, make()


def random_moves(d: LinkDiagram, rng: random.Random, steps: int, max_crossings: int | None = None):
    """Apply ``steps`` random moves; returns the final diagram and the move names."""
    names = []
    for _ in range(steps):
        name, d = random_move(d, rng, max_crossings)
        names.append(name)
    return d, names

"""Oriented link diagrams in planar-diagram (PD) notation.

Each crossing lists its four arc labels counterclockwise, starting at the
incoming under-strand, so the under-strand runs from position 0 to
position 2.  The over-strand runs from position 3 to position 1 at a
positive crossing and from 1 to 3 at a negative one.  Sign follows the
right-hand rule.

Text input accepts ``X[i,j,k,l]`` entries separated by commas, spaces or
newlines.  Two extra tokens are understood:

``O[]``
    a crossingless unknotted component
``P[x,y]``
    orientation hint: at the crossing where arcs ``x`` and ``y`` are the two
    ends of the same strand, ``x`` is incoming

Signs are inferred by propagating the in/out constraint on each arc.  A
group of crossings that no constraint fixes (a component that is over at
every crossing it meets) is oriented so that labels increase along the
over-strand of its first crossing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Crossing",
    "LinkDiagram",
    "PDParseError",
    "DiagramError",
    "parse_pd",
    "braid_closure",
    "make_crossing",
    "disjoint_union",
    "unknot",
    "unlink",
]


class PDParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        where = "" if position is None else f" at offset {position}"
        super().__init__(message + where)
        self.position = position


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    labels: tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def in_positions(self) -> tuple[int, int]:
        return (0, 3) if self.sign > 0 else (0, 1)

    @property
    def out_positions(self) -> tuple[int, int]:
        return (2, 1) if self.sign > 0 else (2, 3)

    def through(self, p: int) -> int:
        """Position where the strand entering at ``p`` leaves."""
        return (p + 2) % 4

    def is_over(self, p: int) -> bool:
        return p % 2 == 1

    def __str__(self) -> str:
        return "X[" + ",".join(map(str, self.labels)) + "]"


def make_crossing(ccw: Sequence[int], under_in: int, over_in: int) -> Crossing:
    """Crossing from labels in counterclockwise order with chosen entering slots.

    ``under_in`` and ``over_in`` index into ``ccw`` and must have different
    parity.
    """
    if (under_in - over_in) % 2 == 0:
        raise DiagramError("under and over strands must alternate around a crossing")
    labels = tuple(ccw[(under_in + k) % 4] for k in range(4))
    sign = 1 if (over_in - under_in) % 4 == 3 else -1
    return Crossing(labels, sign)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.loops < 0:
            raise DiagramError("loop count must be nonnegative")
        ends: dict[int, list[tuple[int, int]]] = {}
        for ci, c in enumerate(self.crossings):
            for p, lab in enumerate(c.labels):
                ends.setdefault(lab, []).append((ci, p))
        for lab, occ in ends.items():
            if len(occ) != 2:
                raise DiagramError(f"arc {lab} appears {len(occ)} times; every arc needs exactly 2 ends")
            kinds = sorted("in" if p in self.crossings[ci].in_positions else "out" for ci, p in occ)
            if kinds != ["in", "out"]:
                raise DiagramError(f"arc {lab} is oriented inconsistently ({kinds[0]} at both ends)")

    # --- structure -----------------------------------------------------

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def labels(self) -> list[int]:
        return sorted({lab for c in self.crossings for lab in c.labels})

    def arc_ends(self) -> dict[int, tuple[tuple[int, int], tuple[int, int]]]:
        """``label -> ((crossing, pos) where it starts, (crossing, pos) where it ends)``."""
        tail: dict[int, tuple[int, int]] = {}
        head: dict[int, tuple[int, int]] = {}
        for ci, c in enumerate(self.crossings):
            for p, lab in enumerate(c.labels):
                (head if p in c.in_positions else tail)[lab] = (ci, p)
        return {lab: (tail[lab], head[lab]) for lab in head}

    def successor(self) -> dict[int, int]:
        """Next arc along the orientation."""
        nxt = {}
        for c in self.crossings:
            for p in c.in_positions:
                nxt[c.labels[p]] = c.labels[c.through(p)]
        return nxt

    def arc_components(self) -> list[list[int]]:
        """Arc cycles, each starting at its least label, ordered by that label."""
        nxt = self.successor()
        seen: set[int] = set()
        out = []
        for lab in sorted(nxt):
            if lab in seen:
                continue
            cyc = []
            cur = lab
            while cur not in seen:
                seen.add(cur)
                cyc.append(cur)
                cur = nxt[cur]
            out.append(cyc)
        return out

    def components(self) -> int:
        return len(self.arc_components()) + self.loops

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def is_knot(self) -> bool:
        return self.components() == 1

    # --- local operations ---------------------------------------------

    def _check_index(self, i: int):
        if not 0 <= i < len(self.crossings):
            raise IndexError(f"crossing index {i} out of range for {len(self.crossings)} crossings")

    def switch(self, i: int) -> "LinkDiagram":
        """Exchange over and under at crossing ``i``."""
        self._check_index(i)
        a, b, c, d = self.crossings[i].labels
        new = Crossing((d, a, b, c), -1) if self.crossings[i].sign > 0 else Crossing((b, c, d, a), 1)
        cs = list(self.crossings)
        cs[i] = new
        return LinkDiagram(tuple(cs), self.loops)

    def with_sign(self, i: int, sign: int) -> "LinkDiagram":
        self._check_index(i)
        return self if self.crossings[i].sign == sign else self.switch(i)

    def _splice(self, i: int, pairs: Iterable[tuple[int, int]]) -> "LinkDiagram":
        """Delete crossing ``i`` and join each ``(in position, out position)`` pair."""
        c = self.crossings[i]
        rest = [x for k, x in enumerate(self.crossings) if k != i]
        loops = self.loops
        rename: dict[int, int] = {}

        def find(x):
            while x in rename:
                x = rename[x]
            return x

        for pin, pout in pairs:
            lin, lout = find(c.labels[pin]), find(c.labels[pout])
            if lin == lout:
                loops += 1
            else:
                rename[lout] = lin
        rest = [Crossing(tuple(find(x) for x in r.labels), r.sign) for r in rest]
        return LinkDiagram(tuple(rest), loops)

    def smooth(self, i: int) -> "LinkDiagram":
        """Oriented resolution at crossing ``i``."""
        self._check_index(i)
        pairs = ((0, 1), (3, 2)) if self.crossings[i].sign > 0 else ((0, 3), (1, 2))
        return self._splice(i, pairs)

    def remove_crossing(self, i: int) -> "LinkDiagram":
        """Delete crossing ``i``, joining each strand straight through.

        Only meaningful as part of a Reidemeister move.
        """
        self._check_index(i)
        c = self.crossings[i]
        return self._splice(i, [(p, c.through(p)) for p in c.in_positions])

    def mirror(self) -> "LinkDiagram":
        return LinkDiagram(tuple(self.switch(i).crossings[i] for i in range(len(self.crossings))), self.loops)

    def relabeled(self, mapping: dict[int, int]) -> "LinkDiagram":
        return LinkDiagram(
            tuple(Crossing(tuple(mapping[x] for x in c.labels), c.sign) for c in self.crossings),
            self.loops,
        )

    def normalized(self) -> "LinkDiagram":
        """Relabel arcs ``1..2n`` consecutively along each component."""
        mapping = {}
        k = 1
        for comp in self.arc_components():
            for lab in comp:
                mapping[lab] = k
                k += 1
        return self.relabeled(mapping)

    # --- canonical form ------------------------------------------------

    def canonical_key(self) -> tuple:
        """Label-independent key: equal keys mean identical diagrams up to relabeling."""
        if not self.crossings:
            return ((), self.loops)
        nxt = self.successor()
        ends = self.arc_ends()
        occ: dict[int, list[tuple[int, int]]] = {}
        for ci, c in enumerate(self.crossings):
            for p, lab in enumerate(c.labels):
                occ.setdefault(lab, []).append((ci, p))
        best = None
        for start in nxt:
            new: dict[int, int] = {}
            cur = start
            while True:
                while cur not in new:
                    new[cur] = len(new)
                    cur = nxt[cur]
                if len(new) == len(nxt):
                    break
                # next component: unvisited arc nearest the labelled part
                cand = None
                for lab, v in new.items():
                    for end_kind, (ci, p) in enumerate(ends[lab]):
                        labs = self.crossings[ci].labels
                        for q in range(4):
                            if labs[q] not in new:
                                k = (v, end_kind, (q - p) % 4)
                                if cand is None or k < cand[0]:
                                    cand = (k, labs[q])
                if cand is None:  # split diagram
                    cur = min(lab for lab in nxt if lab not in new)
                else:
                    cur = cand[1]
            enc = tuple(sorted((tuple(new[x] for x in c.labels), c.sign) for c in self.crossings))
            if best is None or enc < best:
                best = enc
        return (best, self.loops)

    # --- planarity -----------------------------------------------------

    def faces(self) -> list[list[tuple[int, int]]]:
        """Faces as cycles of darts ``(crossing, position)``.

        A dart leaves its crossing along the arc at that position; after
        arriving at ``(Y, q)`` the walk continues with ``(Y, q + 1)``.
        """
        other: dict[tuple[int, int], tuple[int, int]] = {}
        occ: dict[int, list[tuple[int, int]]] = {}
        for ci, c in enumerate(self.crossings):
            for p, lab in enumerate(c.labels):
                occ.setdefault(lab, []).append((ci, p))
        for a, b in occ.values():
            other[a] = b
            other[b] = a
        seen = set()
        out = []
        for ci in range(len(self.crossings)):
            for p in range(4):
                if (ci, p) in seen:
                    continue
                face = []
                d = (ci, p)
                while d not in seen:
                    seen.add(d)
                    face.append(d)
                    y, q = other[d]
                    d = (y, (q + 1) % 4)
                out.append(face)
        return out

    def connected_pieces(self) -> list[set[int]]:
        """Crossing sets of the diagram's connected pieces."""
        parent = list(range(len(self.crossings)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (ta, _), (hb, _) in self.arc_ends().values():
            parent[find(ta)] = find(hb)
        groups: dict[int, set[int]] = {}
        for ci in range(len(self.crossings)):
            groups.setdefault(find(ci), set()).add(ci)
        return list(groups.values())

    def is_planar(self) -> bool:
        """Euler check ``V - E + F = 2`` on every connected piece."""
        faces = self.faces()
        for piece in self.connected_pieces():
            f = sum(1 for face in faces if face[0][0] in piece)
            if len(piece) - 2 * len(piece) + f != 2:
                return False
        return True

    # --- text ------------------------------------------------------------

    def to_pd(self) -> str:
        parts = [str(c) for c in self.crossings] + ["O[]"] * self.loops
        return ", ".join(parts)

    def __str__(self) -> str:
        return self.to_pd() or "(empty)"


def unknot() -> LinkDiagram:
    return LinkDiagram((), 1)


def unlink(k: int) -> LinkDiagram:
    return LinkDiagram((), k)


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    shift = max(d1.labels, default=0)
    moved = tuple(Crossing(tuple(x + shift for x in c.labels), c.sign) for c in d2.crossings)
    return LinkDiagram(d1.crossings + moved, d1.loops + d2.loops)


# --- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\b([A-Za-z]+)\[([-\d,\s]*)\]")


def _orient(raw: list[tuple[int, int, int, int]], hints: list[tuple[int, int]]) -> list[int]:
    """Infer crossing signs from arc in/out consistency."""
    n = len(raw)
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, labs in enumerate(raw):
        for p, lab in enumerate(labs):
            occ.setdefault(lab, []).append((ci, p))
    for lab, o in occ.items():
        if len(o) != 2:
            raise PDParseError(f"arc {lab} appears {len(o)} times; every arc needs exactly 2 ends")

    # is position p an "in" position, given sign s?  p=0 in, p=2 out,
    # p=3 in iff s=+1, p=1 in iff s=-1.
    def fixed(p):
        return {0: True, 2: False}.get(p)

    sign: list[int | None] = [None] * n
    # constraints between crossings: sign[x] * sign[y] == rel
    edges: dict[int, list[tuple[int, int]]] = {i: [] for i in range(n)}
    forced: dict[int, int] = {}

    def force(ci, s, why):
        if forced.get(ci, s) != s:
            raise PDParseError(f"inconsistent orientation at crossing {ci + 1} ({why})")
        forced[ci] = s

    def sign_for_in(p, is_in):
        # sign making position p (1 or 3) an in (or out) position
        if p == 3:
            return 1 if is_in else -1
        return -1 if is_in else 1

    for lab, ((c1, p1), (c2, p2)) in occ.items():
        f1, f2 = fixed(p1), fixed(p2)
        if f1 is not None and f2 is not None:
            if f1 == f2:
                raise PDParseError(f"arc {lab} is an under-strand {'entering' if f1 else 'leaving'} at both ends")
        elif f1 is not None:
            force(c2, sign_for_in(p2, not f1), f"arc {lab}")
        elif f2 is not None:
            force(c1, sign_for_in(p1, not f2), f"arc {lab}")
        else:
            # both ends on over-strands: exactly one is incoming
            # in1 = (sign1 == sign_for_in(p1, True)); need in1 != in2
            a = sign_for_in(p1, True)
            b = sign_for_in(p2, True)
            rel = -a * b  # sign1 * sign2 == rel
            if c1 == c2:
                if rel != 1:
                    raise PDParseError(f"arc {lab} cannot be oriented at crossing {c1 + 1}")
            else:
                edges[c1].append((c2, rel))
                edges[c2].append((c1, rel))

    for x, y in hints:
        if x not in occ or y not in occ:
            raise PDParseError(f"hint P[{x},{y}] names an unknown arc")
        hit = None
        for ci, labs in enumerate(raw):
            for p in range(4):
                if labs[p] == x and labs[(p + 2) % 4] == y:
                    hit = (ci, p)
        if hit is None:
            raise PDParseError(f"hint P[{x},{y}]: arcs are not opposite at any crossing")
        ci, p = hit
        if fixed(p) is not None:
            if not fixed(p):
                raise PDParseError(f"hint P[{x},{y}] contradicts the under-strand direction")
        else:
            force(ci, sign_for_in(p, True), f"hint P[{x},{y}]")

    order = sorted(range(n), key=lambda ci: (ci not in forced, ci))
    for root in order:
        if sign[root] is not None:
            continue
        if root in forced:
            s0 = forced[root]
        else:
            _, j, _, l = raw[root]
            over_in = min(j, l) if abs(j - l) == 1 else max(j, l)
            s0 = 1 if over_in == l else -1
        sign[root] = s0
        stack = [root]
        while stack:
            x = stack.pop()
            for y, rel in edges[x]:
                want = sign[x] * rel
                if sign[y] is None:
                    if y in forced and forced[y] != want:
                        raise PDParseError(f"inconsistent orientation at crossing {y + 1}")
                    sign[y] = want
                    stack.append(y)
                elif sign[y] != want:
                    raise PDParseError(f"inconsistent orientation at crossing {y + 1}")
    return sign  # type: ignore[return-value]


def parse_pd(text: str) -> LinkDiagram:
    raw: list[tuple[int, int, int, int]] = []
    hints: list[tuple[int, int]] = []
    loops = 0
    pos = 0
    for m in _TOKEN.finditer(text):
        gap = text[pos:m.start()]
        junk = re.search(r"[^\s,;]", gap)
        if junk:
            raise PDParseError(f"unexpected {gap[junk.start()]!r}", pos + junk.start())
        pos = m.end()
        name, body = m.group(1), m.group(2).strip()
        try:
            nums = [int(x) for x in body.split(",")] if body else []
        except ValueError:
            raise PDParseError(f"bad integer list in {m.group(0)!r}", m.start()) from None
        if name == "X":
            if len(nums) != 4:
                raise PDParseError(f"crossing {m.group(0)!r} needs 4 labels, got {len(nums)}", m.start())
            raw.append(tuple(nums))  # type: ignore[arg-type]
        elif name == "O":
            if nums:
                raise PDParseError("O[] takes no arguments", m.start())
            loops += 1
        elif name == "P":
            if len(nums) != 2:
                raise PDParseError("orientation hint P[x,y] needs 2 labels", m.start())
            hints.append((nums[0], nums[1]))
        else:
            raise PDParseError(f"unknown token {name!r}", m.start())
    tail = text[pos:]
    junk = re.search(r"[^\s,;]", tail)
    if junk:
        raise PDParseError(f"unexpected {tail[junk.start()]!r}", pos + junk.start())
    signs = _orient(raw, hints)
    try:
        d = LinkDiagram(tuple(Crossing(labs, s) for labs, s in zip(raw, signs)), loops)
    except DiagramError as exc:
        raise PDParseError(str(exc)) from None
    if not d.is_planar():
        raise PDParseError("PD code is not planar")
    return d


def braid_closure(word: Sequence[int], strands: int | None = None) -> LinkDiagram:
    """Closure of a braid word; ``i`` is the positive generator ``σ_i``, ``-i`` its inverse.

    Strands run upward; ``σ_i`` carries strand ``i`` over strand ``i+1``
    (a positive crossing).
    """
    if strands is None:
        strands = max((abs(g) for g in word), default=0) + 1
    if any(g == 0 or abs(g) >= strands for g in word):
        raise DiagramError(f"braid generators must satisfy 1 <= |g| < {strands}")
    current = list(range(1, strands + 1))  # label at the bottom of each strand position
    bottom = list(current)
    nextlab = strands + 1
    raw = []
    for g in word:
        i = abs(g) - 1
        L, R = current[i], current[i + 1]
        L2, R2 = nextlab, nextlab + 1
        nextlab += 2
        if g > 0:
            raw.append(((R, R2, L2, L), 1))
        else:
            raw.append(((L, R, R2, L2), -1))
        current[i], current[i + 1] = L2, R2
    # identify top labels with bottom labels
    ident = {top: bot for top, bot in zip(current, bottom)}
    loops = sum(1 for top, bot in ident.items() if top == bot)
    def f(x):
        return ident.get(x, x)
    cs = tuple(Crossing(tuple(f(x) for x in labs), s) for labs, s in raw)
    return LinkDiagram(cs, loops).normalized() if cs else LinkDiagram((), loops)

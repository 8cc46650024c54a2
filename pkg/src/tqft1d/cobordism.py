"""Decorated oriented 1-cobordisms with defects and inner endpoints.

Objects are sign sequences such as ``"+--+"``.  A morphism lists its
connected components; each component is an oriented path (or loop) whose
dots are recorded as a word read from tail to head.

Boundary slots are ``("b", i)`` for the i-th source point and ``("t", j)`` for
the j-th target point.  Strands run upward through ``+`` points and downward
through ``-`` points, so a component may start (tail) only at a bottom ``+``
or top ``-`` slot and may end (head) only at a bottom ``-`` or top ``+`` slot.
An endpoint that is not a slot is an inner endpoint.

Component kinds::

    arc        tail and head are slots
    half_in    inner tail, head at a slot (carries the initial vector)
    half_out   tail at a slot, inner head (carries the accepting covector)
    floating   both endpoints inner
    circle     closed loop; word stored as its least rotation

Morphisms are abstract matchings, not planar pictures, and compare equal
when they have the same multiset of components.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Slot",
    "Component",
    "Morphism",
    "CobordismError",
    "signs",
    "least_rotation",
    "identity",
    "dot",
    "cup",
    "cap",
    "swap",
    "half_interval",
    "floating",
    "circle",
    "empty",
    "generator",
    "compose",
    "tensor",
    "closed_components",
]

Slot = tuple[str, int]

ARC, HALF_IN, HALF_OUT, FLOATING, CIRCLE = "arc", "half_in", "half_out", "floating", "circle"
KINDS = (ARC, HALF_IN, HALF_OUT, FLOATING, CIRCLE)


class CobordismError(ValueError):
    pass


def signs(s: str | Sequence[str]) -> tuple[str, ...]:
    out = tuple(s)
    bad = [x for x in out if x not in "+-"]
    if bad:
        raise CobordismError(f"signs must be '+' or '-', got {bad}")
    return out


def least_rotation(word: Sequence[str]) -> tuple[str, ...]:
    w = tuple(word)
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


def _kind(tail: Slot | None, head: Slot | None) -> str:
    if tail is not None and head is not None:
        return ARC
    if tail is None and head is not None:
        return HALF_IN
    if tail is not None:
        return HALF_OUT
    return FLOATING


@dataclass(frozen=True, order=True)
class Component:
    kind: str
    tail: Slot | None
    head: Slot | None
    word: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise CobordismError(f"unknown component kind {self.kind!r}")
        object.__setattr__(self, "word", tuple(self.word))
        if self.kind == CIRCLE:
            if self.tail is not None or self.head is not None:
                raise CobordismError("circles have no endpoints")
            object.__setattr__(self, "word", least_rotation(self.word))
        elif _kind(self.tail, self.head) != self.kind:
            raise CobordismError(
                f"endpoints tail={self.tail} head={self.head} do not fit kind {self.kind!r}"
            )

    def sort_key(self):
        def sk(s):
            return ("", -1) if s is None else s
        return (self.kind, sk(self.tail), sk(self.head), self.word)

    @property
    def slots(self) -> tuple[Slot, ...]:
        return tuple(s for s in (self.tail, self.head) if s is not None)

    @property
    def is_closed(self) -> bool:
        return self.kind in (FLOATING, CIRCLE)


@dataclass(frozen=True)
class Morphism:
    source: tuple[str, ...]
    target: tuple[str, ...]
    components: tuple[Component, ...]

    def __post_init__(self):
        object.__setattr__(self, "source", signs(self.source))
        object.__setattr__(self, "target", signs(self.target))
        comps = tuple(sorted(self.components, key=Component.sort_key))
        object.__setattr__(self, "components", comps)
        used: dict[Slot, int] = {}
        for c in comps:
            for role, s in (("tail", c.tail), ("head", c.head)):
                if s is None:
                    continue
                side, i = s
                seq = self.source if side == "b" else self.target if side == "t" else None
                if seq is None or not 0 <= i < len(seq):
                    raise CobordismError(f"slot {s} does not exist")
                starts = (side == "b" and seq[i] == "+") or (side == "t" and seq[i] == "-")
                if starts != (role == "tail"):
                    raise CobordismError(
                        f"orientation mismatch: {role} at slot {_slot_name(s)} with sign {seq[i]}"
                    )
                used[s] = used.get(s, 0) + 1
        expected = {("b", i) for i in range(len(self.source))} | {("t", j) for j in range(len(self.target))}
        if set(used) != expected or any(v != 1 for v in used.values()):
            missing = sorted(expected - set(used))
            doubled = sorted(s for s, v in used.items() if v > 1)
            raise CobordismError(f"slots must be used exactly once (missing {missing}, doubled {doubled})")

    def dot_multiset(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for c in self.components:
            for a in c.word:
                out[a] = out.get(a, 0) + 1
        return out

    def letters(self) -> set[str]:
        return set(self.dot_multiset())

    def count(self, kind: str) -> int:
        return sum(c.kind == kind for c in self.components)

    # JSON
    def to_json(self) -> dict:
        comps = []
        for c in self.components:
            d: dict = {"kind": c.kind}
            if c.tail is not None:
                d["from"] = _slot_name(c.tail)
            if c.head is not None:
                d["to"] = _slot_name(c.head)
            d["dots"] = list(c.word)
            comps.append(d)
        return {"source": "".join(self.source), "target": "".join(self.target), "components": comps}

    @classmethod
    def from_json(cls, data: dict | str) -> "Morphism":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            comps = []
            for d in data["components"]:
                tail = _parse_slot(d["from"]) if d.get("from") is not None else None
                head = _parse_slot(d["to"]) if d.get("to") is not None else None
                kind = d.get("kind") or _kind(tail, head)
                comps.append(Component(kind, tail, head, tuple(d.get("dots", ()))))
            return cls(signs(data.get("source", "")), signs(data.get("target", "")), tuple(comps))
        except (KeyError, TypeError) as exc:
            raise CobordismError(f"malformed morphism JSON: {exc!r}") from None


def _slot_name(s: Slot) -> str:
    return f"{s[0]}{s[1]}"


def _parse_slot(text: str) -> Slot:
    if not isinstance(text, str) or len(text) < 2 or text[0] not in "bt" or not text[1:].isdigit():
        raise CobordismError(f"bad slot name {text!r}; expected e.g. 'b0' or 't2'")
    return (text[0], int(text[1:]))


# --- generators ------------------------------------------------------------

def _strand(side_sign: str, bottom: Slot, top: Slot, word=()) -> Component:
    if side_sign == "+":
        return Component(ARC, bottom, top, tuple(word))
    return Component(ARC, top, bottom, tuple(word))


def empty() -> Morphism:
    return Morphism((), (), ())


def identity(seq: str | Sequence[str]) -> Morphism:
    s = signs(seq)
    return Morphism(s, s, tuple(_strand(x, ("b", i), ("t", i)) for i, x in enumerate(s)))


def dot(word: str | Sequence[str], sign: str = "+") -> Morphism:
    """A single strand carrying ``word`` read along its orientation."""
    s = signs(sign)
    if len(s) != 1:
        raise CobordismError("dot() takes a single sign")
    return Morphism(s, s, (_strand(s[0], ("b", 0), ("t", 0), tuple(word)),))


def _pair(seq) -> tuple[str, str]:
    s = signs(seq)
    if len(s) != 2 or s[0] == s[1]:
        raise CobordismError(f"cup/cap need opposite signs, got {''.join(s)!r}")
    return s


def cup(seq: str = "+-", word: Sequence[str] = ()) -> Morphism:
    """``∅ -> (s1 s2)``."""
    s = _pair(seq)
    tail, head = (("t", 1), ("t", 0)) if s[0] == "+" else (("t", 0), ("t", 1))
    return Morphism((), s, (Component(ARC, tail, head, tuple(word)),))


def cap(seq: str = "-+", word: Sequence[str] = ()) -> Morphism:
    """``(s1 s2) -> ∅``."""
    s = _pair(seq)
    tail, head = (("b", 0), ("b", 1)) if s[0] == "+" else (("b", 1), ("b", 0))
    return Morphism(s, (), (Component(ARC, tail, head, tuple(word)),))


def swap(s1: str = "+", s2: str = "+") -> Morphism:
    """Transposition ``(s1 s2) -> (s2 s1)``."""
    signs(s1 + s2)
    return Morphism(
        (s1, s2), (s2, s1),
        (_strand(s1, ("b", 0), ("t", 1)), _strand(s2, ("b", 1), ("t", 0))),
    )


def half_interval(sign: str = "+", end: str = "top", word: Sequence[str] = ()) -> Morphism:
    """One half-interval whose outer endpoint is a ``sign`` point at the ``end`` boundary."""
    s = signs(sign)
    if len(s) != 1 or end not in ("top", "bottom"):
        raise CobordismError("half_interval needs one sign and end in {'top', 'bottom'}")
    slot: Slot = ("t", 0) if end == "top" else ("b", 0)
    starts = (end == "bottom") == (s[0] == "+")
    comp = Component(HALF_OUT, slot, None, tuple(word)) if starts else Component(HALF_IN, None, slot, tuple(word))
    return Morphism(() if end == "top" else s, s if end == "top" else (), (comp,))


def floating(word: Sequence[str] = ()) -> Morphism:
    return Morphism((), (), (Component(FLOATING, None, None, tuple(word)),))


def circle(word: Sequence[str] = ()) -> Morphism:
    return Morphism((), (), (Component(CIRCLE, None, None, tuple(word)),))


_GENERATORS = {
    "identity": identity,
    "dot": dot,
    "cup": cup,
    "cap": cap,
    "swap": swap,
    "half_interval": half_interval,
    "floating": floating,
    "circle": circle,
}


def generator(kind: str, *args, **kwargs) -> Morphism:
    try:
        make = _GENERATORS[kind]
    except KeyError:
        raise CobordismError(f"unknown generator {kind!r}; choose from {sorted(_GENERATORS)}") from None
    return make(*args, **kwargs)


# --- composition -------------------------------------------------------------

def compose(top: Morphism, bottom: Morphism) -> Morphism:
    """``top ∘ bottom``: glue the target of ``bottom`` to the source of ``top``."""
    if bottom.target != top.source:
        raise CobordismError(
            f"boundary mismatch: {''.join(bottom.target)!r} vs {''.join(top.source)!r}"
        )
    # pieces: (owner, component); owner 0 = bottom, 1 = top
    pieces = [(0, c) for c in bottom.components] + [(1, c) for c in top.components]
    done: list[Component] = []
    after: dict[int, int] = {}    # piece index -> piece glued at its head
    has_pred: set[int] = set()
    tail_at: dict[tuple[int, Slot], int] = {}
    for k, (owner, c) in enumerate(pieces):
        if c.tail is not None:
            tail_at[(owner, c.tail)] = k
    for k, (owner, c) in enumerate(pieces):
        if c.head is None:
            continue
        side, i = c.head
        if owner == 0 and side == "t":
            nxt = tail_at[(1, ("b", i))]
        elif owner == 1 and side == "b":
            nxt = tail_at[(0, ("t", i))]
        else:
            continue
        after[k] = nxt
        has_pred.add(nxt)

    def outer(owner: int, s: Slot | None) -> Slot | None:
        if s is None:
            return None
        if owner == 0 and s[0] == "b":
            return s
        if owner == 1 and s[0] == "t":
            return s
        return None

    visited: set[int] = set()
    for k in range(len(pieces)):
        if k in has_pred or k in visited:
            continue
        word: list[str] = []
        cur = k
        first_owner, first = pieces[k]
        while True:
            visited.add(cur)
            owner, c = pieces[cur]
            word.extend(c.word)
            if cur not in after:
                break
            cur = after[cur]
        if first.kind == CIRCLE:
            done.append(first)
            continue
        tail = outer(first_owner, first.tail)
        head = outer(owner, c.head)
        done.append(Component(_kind(tail, head), tail, head, tuple(word)))
    for k in range(len(pieces)):
        if k in visited:
            continue
        # remaining pieces lie on cycles through the middle boundary
        word = []
        cur = k
        while cur not in visited:
            visited.add(cur)
            word.extend(pieces[cur][1].word)
            cur = after[cur]
        done.append(Component(CIRCLE, None, None, tuple(word)))
    return Morphism(bottom.source, top.target, tuple(done))


def _shift(s: Slot | None, db: int, dt: int) -> Slot | None:
    if s is None:
        return None
    return (s[0], s[1] + (db if s[0] == "b" else dt))


def tensor(left: Morphism, right: Morphism) -> Morphism:
    db, dt = len(left.source), len(left.target)
    moved = tuple(
        Component(c.kind, _shift(c.tail, db, dt), _shift(c.head, db, dt), c.word)
        for c in right.components
    )
    return Morphism(left.source + right.source, left.target + right.target, left.components + moved)


def compose_all(*ms: Morphism) -> Morphism:
    """``compose_all(f, g, h) = f ∘ g ∘ h``."""
    out = ms[-1]
    for m in reversed(ms[:-1]):
        out = compose(m, out)
    return out


def tensor_all(ms: Iterable[Morphism]) -> Morphism:
    out = empty()
    for m in ms:
        out = tensor(out, m)
    return out


def closed_components(m: Morphism) -> list[tuple[str, tuple[str, ...]]]:
    return [(c.kind, c.word) for c in m.components if c.is_closed]

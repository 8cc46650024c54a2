"""Regular expressions: parser, printer and compilation to an epsilon-free NFA.

Syntax: single-character letters ``[A-Za-z0-9]``, ``+`` for union, juxtaposition
for concatenation, postfix ``*`` for Kleene star, parentheses, ``ε`` (or
``#``) for the empty word and ``∅`` (or ``!``) for the empty language.
Precedence is star > concatenation > union.  Whitespace is ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union as _U

from .automaton import Nfa

__all__ = [
    "Regex",
    "Empty",
    "Epsilon",
    "Letter",
    "Concat",
    "Union",
    "Star",
    "RegexSyntaxError",
    "parse_regex",
    "to_text",
    "letters_of",
    "compile_regex",
]


class RegexSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Letter:
    symbol: str


@dataclass(frozen=True)
class Concat:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Union:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Star:
    inner: "Regex"


Regex = _U[Empty, Epsilon, Letter, Concat, Union, Star]

_EPS = {"ε", "#"}
_EMPTY = {"∅", "!"}


class _Parser:
    def __init__(self, text: str):
        self.tokens = [(i, ch) for i, ch in enumerate(text) if not ch.isspace()]
        self.end = len(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k][1] if self.k < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.k][0] if self.k < len(self.tokens) else self.end

    def parse(self) -> Regex:
        if not self.tokens:
            raise RegexSyntaxError("empty expression", 0)
        node = self.union()
        if self.k != len(self.tokens):
            raise RegexSyntaxError(f"unexpected {self.peek()!r}", self.pos())
        return node

    def union(self) -> Regex:
        node = self.concat()
        while self.peek() == "+":
            self.k += 1
            node = Union(node, self.concat())
        return node

    def concat(self) -> Regex:
        node = self.star()
        while self.peek() is not None and self.peek() not in "+)":
            node = Concat(node, self.star())
        return node

    def star(self) -> Regex:
        node = self.atom()
        while self.peek() == "*":
            self.k += 1
            node = Star(node)
        return node

    def atom(self) -> Regex:
        ch = self.peek()
        if ch is None:
            raise RegexSyntaxError("unexpected end of expression", self.pos())
        if ch == "(":
            self.k += 1
            node = self.union()
            if self.peek() != ")":
                raise RegexSyntaxError("expected ')'", self.pos())
            self.k += 1
            return node
        self.k += 1
        if ch in _EPS:
            return Epsilon()
        if ch in _EMPTY:
            return Empty()
        if ch.isascii() and ch.isalnum():
            return Letter(ch)
        self.k -= 1
        raise RegexSyntaxError(f"unexpected {ch!r}", self.pos())


def parse_regex(text: str) -> Regex:
    return _Parser(text).parse()


def to_text(r: Regex) -> str:
    """Print with the fewest parentheses that re-parse to the same tree."""

    def go(node: Regex, ctx: int) -> str:
        # ctx: 0 union, 1 concat, 2 star operand
        if isinstance(node, Empty):
            return "∅"
        if isinstance(node, Epsilon):
            return "ε"
        if isinstance(node, Letter):
            return node.symbol
        if isinstance(node, Star):
            return go(node.inner, 2) + "*"
        if isinstance(node, Concat):
            s = go(node.left, 1) + go_right(node.right, 1, Concat)
            return f"({s})" if ctx > 1 else s
        if isinstance(node, Union):
            s = go(node.left, 0) + "+" + go_right(node.right, 0, Union)
            return f"({s})" if ctx > 0 else s
        raise TypeError(node)

    def go_right(node: Regex, ctx: int, kind) -> str:
        # the parser is left-associative, so a same-kind right child needs parentheses
        s = go(node, ctx)
        if isinstance(node, kind):
            return f"({s})"
        return s

    return go(r, 0)


def letters_of(r: Regex) -> set[str]:
    if isinstance(r, Letter):
        return {r.symbol}
    if isinstance(r, (Concat, Union)):
        return letters_of(r.left) | letters_of(r.right)
    if isinstance(r, Star):
        return letters_of(r.inner)
    return set()


class _Thompson:
    def __init__(self):
        self.count = 0
        self.eps: dict[int, set[int]] = {}
        self.moves: dict[int, list[tuple[str, int]]] = {}

    def new(self) -> int:
        s = self.count
        self.count += 1
        self.eps[s] = set()
        self.moves[s] = []
        return s

    def build(self, r: Regex) -> tuple[int, int]:
        s, f = self.new(), self.new()
        if isinstance(r, Empty):
            pass
        elif isinstance(r, Epsilon):
            self.eps[s].add(f)
        elif isinstance(r, Letter):
            self.moves[s].append((r.symbol, f))
        elif isinstance(r, Concat):
            s1, f1 = self.build(r.left)
            s2, f2 = self.build(r.right)
            self.eps[s].add(s1)
            self.eps[f1].add(s2)
            self.eps[f2].add(f)
        elif isinstance(r, Union):
            for part in (r.left, r.right):
                si, fi = self.build(part)
                self.eps[s].add(si)
                self.eps[fi].add(f)
        elif isinstance(r, Star):
            si, fi = self.build(r.inner)
            self.eps[s] |= {si, f}
            self.eps[fi] |= {si, f}
        else:
            raise TypeError(f"not a regex node: {r!r}")
        return s, f

    def closure(self, states) -> frozenset[int]:
        seen = set(states)
        stack = list(states)
        while stack:
            for t in self.eps[stack.pop()]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)


def compile_regex(r: Regex, alphabet: Sequence[str] | None = None) -> Nfa:
    """Thompson construction followed by epsilon elimination.

    Only the start states of letter moves and the final state survive
    elimination; they are renamed ``q0, q1, ...`` in construction order.
    """
    t = _Thompson()
    start, final = t.build(r)
    letters = sorted(letters_of(r)) if alphabet is None else list(alphabet)
    missing = letters_of(r) - set(letters)
    if missing:
        raise ValueError(f"regex uses letters outside the alphabet: {sorted(missing)}")

    kept = sorted({s for s, mv in t.moves.items() if mv} | {final})
    names = {s: f"q{i}" for i, s in enumerate(kept)}
    keep = set(kept)

    def project(states) -> list[str]:
        return [names[s] for s in sorted(states) if s in keep]

    transitions = []
    for s in kept:
        for a, dst in t.moves[s]:
            for p in project(t.closure([dst])):
                transitions.append((names[s], a, p))
    return Nfa.build(
        [names[s] for s in kept], letters, transitions,
        project(t.closure([start])), [names[final]],
    )

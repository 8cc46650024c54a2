"""Commutative semirings and quantum integers.

A semiring is described by a :class:`SemiringSpec`: two binary operations,
their identities, and a pair of text converters used by the JSON formats.
Elements are plain Python values (``bool``, ``int``, ``math.inf``,
:class:`~tqft1d.poly.LaurentPoly`), never wrapped.

Registered instances::

    BOOLEAN   {False, True}, or / and          (1 + 1 = 1)
    TROPICAL  Z ∪ {+inf}, min / +              (zero = +inf, one = 0)
    INTEGER   Z, + / *
    LAURENT   Z[q, q^-1], + / *
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Any, Callable, Iterable

from .poly import LaurentPoly, parse_laurent

__all__ = [
    "SemiringSpec",
    "BOOLEAN",
    "TROPICAL",
    "INTEGER",
    "LAURENT",
    "SEMIRINGS",
    "get_semiring",
    "qint",
    "qfactorial",
    "qbinom",
]


@dataclass(frozen=True)
class SemiringSpec:
    name: str
    add: Callable[[Any, Any], Any] = field(repr=False)
    mul: Callable[[Any, Any], Any] = field(repr=False)
    zero: Any
    one: Any
    to_text: Callable[[Any], str] = field(repr=False, default=str)
    from_text: Callable[[str], Any] = field(repr=False, default=int)
    validate: Callable[[Any], bool] = field(repr=False, default=lambda x: True)

    def sum(self, xs: Iterable[Any]) -> Any:
        return reduce(self.add, xs, self.zero)

    def prod(self, xs: Iterable[Any]) -> Any:
        return reduce(self.mul, xs, self.one)

    def coerce(self, x: Any) -> Any:
        """Normalize a loosely typed value (e.g. ``0``/``1`` for Boolean)."""
        if self is BOOLEAN:
            return bool(x)
        if self is LAURENT and isinstance(x, int):
            return LaurentPoly.const(x)
        return x

    def __eq__(self, other):
        return isinstance(other, SemiringSpec) and other.name == self.name

    def __hash__(self):
        return hash(self.name)


def _bool_text(x: bool) -> str:
    return "1" if x else "0"


def _bool_parse(s: str) -> bool:
    s = str(s).strip()
    if s not in ("0", "1"):
        raise ValueError(f"not a Boolean value: {s!r}")
    return s == "1"


def _trop_add(x, y):
    return x if x <= y else y


def _trop_mul(x, y):
    if x == math.inf or y == math.inf:
        return math.inf
    return x + y


def _trop_text(x) -> str:
    return "inf" if x == math.inf else str(int(x))


def _trop_parse(s: str):
    s = str(s).strip()
    return math.inf if s in ("inf", "+inf", "∞") else int(s)


BOOLEAN = SemiringSpec(
    "boolean",
    add=lambda x, y: x or y,
    mul=lambda x, y: x and y,
    zero=False,
    one=True,
    to_text=_bool_text,
    from_text=_bool_parse,
    validate=lambda x: isinstance(x, bool),
)

TROPICAL = SemiringSpec(
    "tropical",
    add=_trop_add,
    mul=_trop_mul,
    zero=math.inf,
    one=0,
    to_text=_trop_text,
    from_text=_trop_parse,
    validate=lambda x: x == math.inf or isinstance(x, int),
)

INTEGER = SemiringSpec(
    "integer",
    add=lambda x, y: x + y,
    mul=lambda x, y: x * y,
    zero=0,
    one=1,
    to_text=str,
    from_text=int,
    validate=lambda x: isinstance(x, int) and not isinstance(x, bool),
)

LAURENT = SemiringSpec(
    "laurent",
    add=lambda x, y: x + y,
    mul=lambda x, y: x * y,
    zero=LaurentPoly(),
    one=LaurentPoly.const(1),
    to_text=str,
    from_text=parse_laurent,
    validate=lambda x: isinstance(x, LaurentPoly),
)

SEMIRINGS: dict[str, SemiringSpec] = {s.name: s for s in (BOOLEAN, TROPICAL, INTEGER, LAURENT)}


def get_semiring(name: str) -> SemiringSpec:
    try:
        return SEMIRINGS[name]
    except KeyError:
        raise ValueError(f"unknown semiring {name!r}; choose from {sorted(SEMIRINGS)}") from None


def qint(n: int) -> LaurentPoly:
    """Quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n); [0] = 0."""
    if n < 0:
        raise ValueError("qint expects n >= 0")
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


def qfactorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("qfactorial expects n >= 0")
    out = LaurentPoly.const(1)
    for c in range(1, n + 1):
        out = out * qint(c)
    return out


def qbinom(n: int, k: int) -> LaurentPoly:
    """Quantum binomial [n]! / ([k]! [n-k]!).

    Built as the running product [n][n-1]...[n-k+1] divided step by step by
    [1], [2], ..., [k]; each intermediate quotient is itself a q-binomial, so
    every division is exact.
    """
    if k < 0 or k > n:
        raise ValueError(f"qbinom needs 0 <= k <= n, got n={n}, k={k}")
    k = min(k, n - k)
    out = LaurentPoly.const(1)
    for i in range(1, k + 1):
        out = (out * qint(n - k + i)).divmod_exact(qint(i))
    return out

"""Sparse exact Laurent polynomials with integer coefficients.

Two classes are provided: :class:`LaurentPoly` in one variable ``q`` and
:class:`TwoVarPoly` in ``a`` and ``z``.  Both keep a dictionary from
exponent to nonzero ``int`` coefficient, so equal polynomials always have
identical term maps and hash equally.

Text form lists terms with exponents ascending, e.g. ``q^-1 + q`` or
``-a^-4 + 2*a^-2 + a^-2*z^2``; :func:`parse_laurent` and
:func:`parse_two_var` read the same form back.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "TwoVarPoly",
    "ExactDivisionError",
    "parse_laurent",
    "parse_two_var",
]


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def _clean(terms: Iterable[tuple[object, int]]) -> dict:
    out: dict = {}
    for e, c in terms:
        if c:
            out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def _coef_prefix(c: int, first: bool, is_const: bool) -> str:
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    if is_const:
        body = str(mag)
    elif mag == 1:
        body = ""
    else:
        body = f"{mag}*"
    if first:
        return ("-" if c < 0 else "") + body
    return f" {sign} " + body


def _power(var: str, e: int) -> str:
    return var if e == 1 else f"{var}^{e}"


class LaurentPoly:
    """Element of Z[q, q^-1]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = _clean((terms or {}).items())
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max(self._terms)

    def low_degree(self) -> int:
        return min(self._terms)

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    # arithmetic
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(_clean(list(self._terms.items()) + list(other._terms.items())))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly({e * n: c ** (-n)})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / other``; raises :class:`ExactDivisionError` on a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._terms)
        lead_e = other.degree()
        lead_c = other._terms[lead_e]
        floor = self.low_degree() - other.low_degree() if rem else 0
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top - lead_e < floor:
                raise ExactDivisionError(f"{self} is not divisible by {other}")
            c, r = divmod(rem[top], lead_c)
            if r:
                raise ExactDivisionError(f"{self} is not divisible by {other}")
            shift = top - lead_e
            quot[shift] = c
            for e, oc in other._terms.items():
                k = e + shift
                v = rem.get(k, 0) - c * oc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    def __floordiv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.divmod_exact(other)

    def evaluate(self, q):
        """Evaluate at a number; integer ``q`` must be a unit if negative powers occur."""
        total = 0
        for e, c in self._terms.items():
            total += c * (q ** (e % 2) if q in (1, -1) else q ** e)
        return total

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Return ``p(q^k)``."""
        return LaurentPoly({e * k: c for e, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^-1."""
        return self.substitute_power(-1)

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, e in enumerate(sorted(self._terms)):
            c = self._terms[e]
            parts.append(_coef_prefix(c, i == 0, e == 0) + ("" if e == 0 else _power("q", e)))
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


class TwoVarPoly:
    """Element of Z[a^±1, z^±1]; keys are ``(a_exponent, z_exponent)``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = _clean((terms or {}).items())
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "TwoVarPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "TwoVarPoly":
        return cls({(i, j): c})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _coerce(self, other):
        if isinstance(other, TwoVarPoly):
            return other
        if isinstance(other, int):
            return TwoVarPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TwoVarPoly(_clean(list(self._terms.items()) + list(other._terms.items())))

    __radd__ = __add__

    def __neg__(self):
        return TwoVarPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return TwoVarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = TwoVarPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def min_z_exponent(self) -> int:
        return min((j for _, j in self._terms), default=0)

    def specialize(self, n: int) -> LaurentPoly:
        """Substitute ``a = q^n`` and ``z = q - q^-1``, dividing out negative z-powers exactly."""
        shift = max(0, -self.min_z_exponent())
        zq = LaurentPoly({1: 1, -1: -1})
        total = LaurentPoly()
        for (i, j), c in self._terms.items():
            total = total + LaurentPoly.monomial(n * i, c) * zq ** (j + shift)
        if shift:
            total = total.divmod_exact(zq ** shift)
        return total

    def __eq__(self, other):
        if isinstance(other, int):
            other = TwoVarPoly.const(other)
        if not isinstance(other, TwoVarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for n, (i, j) in enumerate(sorted(self._terms)):
            c = self._terms[(i, j)]
            mono = "*".join(p for p in (
                _power("a", i) if i else "",
                _power("z", j) if j else "",
            ) if p)
            parts.append(_coef_prefix(c, n == 0, not mono) + mono)
        return "".join(parts)

    def __repr__(self):
        return f"TwoVarPoly({str(self)!r})"


_TERM_RE = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*((?:[a-z](?:\^-?\d+)?\s*\*?\s*)*)")
_FACTOR_RE = re.compile(r"([a-z])(?:\^(-?\d+))?")


def _parse_terms(text: str, variables: str) -> list[tuple[dict[str, int], int]]:
    src = text.strip()
    if src == "0":
        return []
    pos = 0
    out = []
    first = True
    while pos < len(src):
        m = _TERM_RE.match(src, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at offset {pos}: {src!r}")
        sign, digits, mono = m.group(1), m.group(2), m.group(3).strip()
        if sign is None and not first:
            raise ValueError(f"missing operator at offset {pos}: {src!r}")
        if digits is None and not mono:
            raise ValueError(f"empty term at offset {pos}: {src!r}")
        coef = int(digits) if digits else 1
        if sign == "-":
            coef = -coef
        powers: dict[str, int] = {}
        for fm in _FACTOR_RE.finditer(mono):
            var = fm.group(1)
            if var not in variables:
                raise ValueError(f"unknown variable {var!r} in {src!r}")
            powers[var] = powers.get(var, 0) + int(fm.group(2) or 1)
        out.append((powers, coef))
        pos = m.end()
        first = False
    return out


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the canonical text form, e.g. ``"q^-1 + 2 - q^3"``."""
    return LaurentPoly(_clean((p.get("q", 0), c) for p, c in _parse_terms(text, "q")))


def parse_two_var(text: str) -> TwoVarPoly:
    """Parse e.g. ``"-a^-4 + 2*a^-2 + a^-2*z^2"``."""
    return TwoVarPoly(_clean(
        ((p.get("a", 0), p.get("z", 0)), c) for p, c in _parse_terms(text, "az")
    ))

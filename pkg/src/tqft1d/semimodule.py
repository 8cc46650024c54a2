"""Dense matrices over a commutative semiring.

A :class:`Matrix` is a map ``R^cols -> R^rows`` between free semimodules.
Only the semiring's ``add`` and ``mul`` are used, so every routine works for
Boolean, tropical, integer and Laurent entries alike.

Tensor products follow the left-major convention: in ``V ⊗ W`` the pair
``(i, j)`` has index ``i * dim(W) + j``.  A sequence of ``k`` boundary points,
each of rank ``n``, is therefore indexed by the base-``n`` number whose
leading digit is the leftmost point.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Any, Sequence

from .semiring import SemiringSpec, get_semiring

__all__ = [
    "Matrix",
    "FreeModuleBasis",
    "DimensionError",
    "identity",
    "zeros",
    "ev_map",
    "coev_map",
    "swap_map",
    "permutation_map",
]


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class FreeModuleBasis:
    labels: tuple[str, ...]

    def __post_init__(self):
        if not self.labels:
            raise ValueError("a basis needs at least one label")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"basis labels must be distinct: {self.labels}")

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[Any, ...]
    semiring: SemiringSpec

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DimensionError("matrices need positive dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], semiring: SemiringSpec) -> "Matrix":
        if not rows or not rows[0]:
            raise DimensionError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        flat = tuple(semiring.coerce(x) for r in rows for x in r)
        return cls(len(rows), width, flat, semiring)

    @classmethod
    def scalar(cls, x: Any, semiring: SemiringSpec) -> "Matrix":
        return cls(1, 1, (semiring.coerce(x),), semiring)

    def __getitem__(self, ij: tuple[int, int]) -> Any:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[Any]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def item(self) -> Any:
        if self.shape != (1, 1):
            raise DimensionError(f"item() on a {self.rows}x{self.cols} matrix")
        return self.entries[0]

    def _check_same(self, other: "Matrix"):
        if self.semiring != other.semiring:
            raise ValueError(f"semiring mismatch: {self.semiring.name} vs {other.semiring.name}")

    def compose(self, other: "Matrix") -> "Matrix":
        """``self ∘ other``: apply ``other`` first."""
        self._check_same(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot compose {self.shape} after {other.shape}")
        R = self.semiring
        add, mul, zero = R.add, R.mul, R.zero
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            row = a[i * m:(i + 1) * m]
            for j in range(p):
                acc = zero
                for k in range(m):
                    x = row[k]
                    if x == zero:
                        continue
                    acc = add(acc, mul(x, b[k * p + j]))
                out.append(acc)
        return Matrix(n, p, tuple(out), R)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return self.compose(other)

    def tensor(self, other: "Matrix") -> "Matrix":
        """Kronecker product, left factor major."""
        self._check_same(other)
        mul = self.semiring.mul
        r1, c1, r2, c2 = self.rows, self.cols, other.rows, other.cols
        out = [None] * (r1 * r2 * c1 * c2)
        width = c1 * c2
        for i1 in range(r1):
            for j1 in range(c1):
                x = self.entries[i1 * c1 + j1]
                for i2 in range(r2):
                    base = (i1 * r2 + i2) * width + j1 * c2
                    for j2 in range(c2):
                        out[base + j2] = mul(x, other.entries[i2 * c2 + j2])
        return Matrix(r1 * r2, width, tuple(out), self.semiring)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
            self.semiring,
        )

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def trace(self) -> Any:
        if self.rows != self.cols:
            raise DimensionError(f"trace of a non-square {self.rows}x{self.cols} matrix")
        return self.semiring.sum(self.entries[i * self.cols + i] for i in range(self.rows))

    def scale(self, x: Any) -> "Matrix":
        mul = self.semiring.mul
        return Matrix(self.rows, self.cols, tuple(mul(x, e) for e in self.entries), self.semiring)

    # serialization
    def to_json(self) -> dict:
        to_text = self.semiring.to_text
        return {
            "semiring": self.semiring.name,
            "rows": self.rows,
            "cols": self.cols,
            "entries": [to_text(e) for e in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict | str, semiring: SemiringSpec | None = None) -> "Matrix":
        if isinstance(data, str):
            data = json.loads(data)
        if semiring is None:
            semiring = get_semiring(data.get("semiring", "boolean"))
        entries = tuple(
            semiring.from_text(e) if isinstance(e, str) else semiring.coerce(e)
            for e in data["entries"]
        )
        return cls(int(data["rows"]), int(data["cols"]), entries, semiring)

    def format(self) -> str:
        cells = [[self.semiring.to_text(x) for x in row] for row in self.to_rows()]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)


def identity(n: int, semiring: SemiringSpec) -> Matrix:
    z, o = semiring.zero, semiring.one
    return Matrix(n, n, tuple(o if i == j else z for i in range(n) for j in range(n)), semiring)


def zeros(rows: int, cols: int, semiring: SemiringSpec) -> Matrix:
    return Matrix(rows, cols, (semiring.zero,) * (rows * cols), semiring)


def coev_map(n: int, semiring: SemiringSpec) -> Matrix:
    """``1 -> V ⊗ V*``, the sum of ``q ⊗ q*`` over the basis."""
    z, o = semiring.zero, semiring.one
    return Matrix(n * n, 1, tuple(o if i // n == i % n else z for i in range(n * n)), semiring)


def ev_map(n: int, semiring: SemiringSpec) -> Matrix:
    """``V* ⊗ V -> 1``, pairing ``q* ⊗ q'`` to ``δ(q, q')``."""
    return coev_map(n, semiring).transpose()


def permutation_map(n: int, perm: Sequence[int], semiring: SemiringSpec) -> Matrix:
    """Map ``V^⊗k -> V^⊗k`` sending tensor factor ``i`` to position ``perm[i]``."""
    k = len(perm)
    if sorted(perm) != list(range(k)):
        raise ValueError(f"not a permutation: {perm}")
    size = n ** k
    z, o = semiring.zero, semiring.one
    entries = [z] * (size * size)
    for digits in itertools.product(range(n), repeat=k):
        src = 0
        for d in digits:
            src = src * n + d
        out = [0] * k
        for i, d in enumerate(digits):
            out[perm[i]] = d
        dst = 0
        for d in out:
            dst = dst * n + d
        entries[dst * size + src] = o
    return Matrix(size, size, tuple(entries), semiring)


def swap_map(n: int, semiring: SemiringSpec) -> Matrix:
    """Transposition ``V ⊗ W -> W ⊗ V`` for two rank-``n`` factors."""
    return permutation_map(n, (1, 0), semiring)

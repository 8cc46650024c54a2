from __future__ import annotations

import itertools
import random

import pytest

from tqft1d.poly import LaurentPoly
from tqft1d.semimodule import (
    DimensionError,
    FreeModuleBasis,
    Matrix,
    coev_map,
    ev_map,
    identity,
    permutation_map,
    swap_map,
    zeros,
)
from tqft1d.semiring import BOOLEAN, INTEGER, LAURENT, TROPICAL

DA = Matrix.from_rows([[1, 0, 1], [0, 0, 0], [0, 1, 0]], BOOLEAN)
DB = Matrix.from_rows([[0, 0, 0], [1, 1, 1], [0, 1, 0]], BOOLEAN)


def rand_matrix(rng, r, c, R):
    if R is BOOLEAN:
        vals = [rng.random() < 0.5 for _ in range(r * c)]
    elif R is INTEGER:
        vals = [rng.randint(-3, 3) for _ in range(r * c)]
    else:
        vals = [LaurentPoly({rng.randint(-2, 2): rng.randint(-2, 2)}) for _ in range(r * c)]
    return Matrix(r, c, tuple(vals), R)


def test_compose_examples():
    assert identity(3, BOOLEAN) @ DA == DA
    col_q1 = (DB @ DA).to_rows()
    assert [row[0] for row in col_q1] == [False, True, False]
    x = Matrix.scalar(3, INTEGER) @ Matrix.scalar(4, INTEGER)
    assert x.item() == 12


def test_compose_dimension_mismatch():
    with pytest.raises(DimensionError):
        DA @ Matrix.from_rows([[1, 0]], BOOLEAN)
    with pytest.raises(ValueError):
        DA @ identity(3, INTEGER)


def test_tensor_examples():
    assert identity(2, INTEGER).tensor(identity(3, INTEGER)) == identity(6, INTEGER)
    assert DA.tensor(DA).shape == (9, 9)
    # left-major index convention
    e = Matrix.from_rows([[0], [1]], INTEGER)  # basis vector 1
    f = Matrix.from_rows([[1], [0], [0]], INTEGER)  # basis vector 0
    assert [i for i, x in enumerate(e.tensor(f).entries) if x] == [1 * 3 + 0]


def test_interchange_exhaustive_boolean_2x2():
    mats = [Matrix(2, 2, bits, BOOLEAN) for bits in itertools.product((False, True), repeat=4)]
    rng = random.Random(0)
    for _ in range(2000):
        f, g, f2, g2 = (rng.choice(mats) for _ in range(4))
        assert f.tensor(g) @ f2.tensor(g2) == (f @ f2).tensor(g @ g2)


@pytest.mark.parametrize("R", [BOOLEAN, INTEGER, LAURENT])
def test_algebra_laws_random(R):
    rng = random.Random(R.name)
    for _ in range(300):
        a, b, c = (rng.randint(1, 3) for _ in range(3))
        f, g, h = rand_matrix(rng, a, b, R), rand_matrix(rng, b, c, R), rand_matrix(rng, c, a, R)
        assert (f @ g) @ h == f @ (g @ h)
        f2, g2 = rand_matrix(rng, b, c, R), rand_matrix(rng, a, b, R)
        assert f.tensor(h) @ f2.tensor(g2) == (f @ f2).tensor(h @ g2)
        sq1, sq2 = rand_matrix(rng, a, b, R), rand_matrix(rng, b, a, R)
        assert (sq1 @ sq2).trace() == (sq2 @ sq1).trace()
        assert f.T.T == f


def test_trace_examples():
    assert DA.trace() is True
    assert identity(4, BOOLEAN).trace() is True
    assert identity(4, INTEGER).trace() == 4
    with pytest.raises(DimensionError):
        Matrix.from_rows([[1, 2]], INTEGER).trace()


def test_ev_coev():
    assert coev_map(1, BOOLEAN).to_rows() == [[True]]
    assert ev_map(1, BOOLEAN).to_rows() == [[True]]
    assert (ev_map(3, BOOLEAN) @ coev_map(3, BOOLEAN)).item() is True
    assert (ev_map(3, INTEGER) @ coev_map(3, INTEGER)).item() == 3


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("R", [BOOLEAN, INTEGER, TROPICAL])
def test_zigzag_identities(n, R):
    I = identity(n, R)
    left = ev_map(n, R).tensor(I) @ I.tensor(coev_map(n, R))
    right = I.tensor(ev_map(n, R)) @ coev_map(n, R).tensor(I)
    assert left == I
    assert right == I


def test_permutations():
    n = 2
    s = swap_map(n, INTEGER)
    assert s @ s == identity(4, INTEGER)
    a = Matrix.from_rows([[1, 2], [3, 4]], INTEGER)
    b = Matrix.from_rows([[0, 1], [5, 0]], INTEGER)
    assert s @ a.tensor(b) @ s == b.tensor(a)
    p = permutation_map(2, (1, 2, 0), INTEGER)
    assert p @ p @ p == identity(8, INTEGER)
    with pytest.raises(ValueError):
        permutation_map(2, (0, 0), INTEGER)


def test_json_round_trip():
    for m in (DA, rand_matrix(random.Random(2), 2, 3, LAURENT), zeros(2, 2, TROPICAL)):
        assert Matrix.from_json(m.to_json()) == m
    assert DA.to_json() == {"semiring": "boolean", "rows": 3, "cols": 3,
                            "entries": ["1", "0", "1", "0", "0", "0", "0", "1", "0"]}


def test_basis():
    b = FreeModuleBasis(("q1", "q2", "q3"))
    assert b.dimension == 3 and b.index("q2") == 1
    with pytest.raises(ValueError):
        FreeModuleBasis(("q", "q"))

import numpy as np
import pytest

from app.exceptions import ContainmentError, DimensionMismatchError, WellDefinednessError
from app.linalg import (
    GF2Matrix,
    image_basis,
    in_row_space,
    induced_map,
    kernel_basis,
    rank,
    row_reduce,
    solve,
    subquotient,
)


def naive_rank(dense) -> int:
    a = np.array(dense, dtype=np.uint8) & 1
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i, c]), None)
        if pivot is None:
            continue
        a[[r, pivot]] = a[[pivot, r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
    return r


def random_dense(rng, max_rows=12, max_cols=80):
    rows = int(rng.integers(0, max_rows + 1))
    cols = int(rng.integers(1, max_cols + 1))
    density = rng.uniform(0.05, 0.6)
    return (rng.random((rows, cols)) < density).astype(np.uint8)


def combos(rng, basis: np.ndarray, count: int) -> np.ndarray:
    coeffs = rng.integers(0, 2, size=(count, basis.shape[0]))
    return (coeffs @ basis) % 2


def test_dense_round_trip_keeps_shape():
    m = GF2Matrix.from_dense(np.zeros((0, 5)), 0, 5)
    assert m.shape == (0, 5)
    dense = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.uint8)
    assert np.array_equal(GF2Matrix.from_dense(dense).to_dense(), dense)


def test_from_triplets_accumulates_mod_two():
    m = GF2Matrix.from_triplets(2, 2, [(0, 0), (0, 0), (1, 1)])
    assert m.to_dense().tolist() == [[0, 0], [0, 1]]


def test_addition_shape_mismatch():
    with pytest.raises(DimensionMismatchError):
        GF2Matrix.zeros(2, 3) + GF2Matrix.zeros(3, 2)


def test_rank_nullity_against_oracle():
    rng = np.random.default_rng(20240611)
    for _ in range(1000):
        dense = random_dense(rng)
        m = GF2Matrix.from_dense(dense, *dense.shape)
        r = rank(m)
        assert r == naive_rank(dense)
        assert row_reduce(m).rank == r

        kernel = kernel_basis(m)
        assert kernel.rows == m.cols - r
        assert (m @ kernel.transpose()).is_zero()
        assert naive_rank(kernel.to_dense()) == kernel.rows

        image = image_basis(m)
        assert image.rows == r
        assert in_row_space(m.transpose(), image).all()


def test_matmul_matches_numpy():
    rng = np.random.default_rng(7)
    for _ in range(200):
        r, k, c = (int(x) for x in rng.integers(1, 70, size=3))
        a = rng.integers(0, 2, size=(r, k))
        b = rng.integers(0, 2, size=(k, c))
        product = GF2Matrix.from_dense(a) @ GF2Matrix.from_dense(b)
        assert np.array_equal(product.to_dense(), (a @ b) % 2)


def test_solve_and_row_space():
    rng = np.random.default_rng(11)
    for _ in range(300):
        dense = random_dense(rng, max_rows=10, max_cols=70)
        if dense.shape[0] == 0:
            continue
        m = GF2Matrix.from_dense(dense)
        x = rng.integers(0, 2, size=(3, dense.shape[1]))
        rhs = GF2Matrix.from_dense((x @ dense.T) % 2)
        solutions, consistent = solve(m, rhs)
        assert consistent.all()
        assert (solutions @ m.transpose()) == rhs

        vectors = rng.integers(0, 2, size=(4, dense.shape[1]))
        mask = in_row_space(m, GF2Matrix.from_dense(vectors))
        base = naive_rank(dense)
        for v, inside in zip(vectors, mask):
            assert bool(inside) == (naive_rank(np.vstack([dense, v])) == base)


def test_subquotient_is_basis_independent():
    rng = np.random.default_rng(3)
    for _ in range(300):
        n = int(rng.integers(1, 90))
        z = (rng.random((int(rng.integers(1, 10)), n)) < 0.3).astype(np.uint8)
        b = combos(rng, z, int(rng.integers(0, 6)))
        expected = naive_rank(z) - (naive_rank(b) if b.size else 0)

        first = subquotient(GF2Matrix.from_dense(z, z.shape[0], n), GF2Matrix.from_dense(b, b.shape[0], n))
        z2 = np.vstack([combos(rng, z, 3), z[::-1]])
        b2 = np.vstack([combos(rng, b, 2), b]) if b.size else b
        second = subquotient(GF2Matrix.from_dense(z2, z2.shape[0], n), GF2Matrix.from_dense(b2, b2.shape[0], n))
        assert first.dim == second.dim == expected

        if b.shape[0]:
            assert first.project(GF2Matrix.from_dense(b, b.shape[0], n)).is_zero()
        coords = first.project(GF2Matrix.from_dense(z, z.shape[0], n))
        assert rank(coords) == expected
        assert first.lift(GF2Matrix.identity(first.dim)) == first.representatives


def test_containment_is_checked():
    z = GF2Matrix.from_dense([[1, 0, 0]])
    b = GF2Matrix.from_dense([[0, 1, 0]])
    with pytest.raises(ContainmentError):
        subquotient(z, b)


def test_induced_identity_and_escape():
    whole = subquotient(GF2Matrix.identity(3), GF2Matrix.zeros(0, 3))
    line = subquotient(GF2Matrix.from_dense([[1, 0, 0]]), GF2Matrix.zeros(0, 3))
    assert induced_map(GF2Matrix.identity(3), whole, whole) == GF2Matrix.identity(3)
    with pytest.raises(WellDefinednessError):
        induced_map(GF2Matrix.identity(3), whole, line)
    with pytest.raises(DimensionMismatchError):
        induced_map(GF2Matrix.identity(2), whole, whole)

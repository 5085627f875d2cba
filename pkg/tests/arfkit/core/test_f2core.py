import itertools
import random

import numpy as np
import pytest
import smokesignal
from mock import patch

from arfkit.base import settings
from arfkit.base.exceptions import (DegenerateFormError, DimensionError,
                                    EnumerationCapError, InvalidFormError,
                                    NoSolution)
from arfkit.base.output import LOG_SIGNAL
from arfkit.core import f2core
from arfkit.core.f2core import F2Matrix, F2Vector


def all_vectors(n):
    return [F2Vector.from_int(n, k) for k in range(1 << n)]


def random_matrix(rng, rows, cols):
    bits = [rng.randint(0, 1) for _ in range(rows * cols)]
    return F2Matrix(np.array(bits, dtype=np.uint8).reshape(rows, cols))


def test_vector_arithmetic():
    v = F2Vector((1, 0, 1))
    w = F2Vector((1, 1, 0))
    assert v + w == F2Vector((0, 1, 1))
    assert (v + v).is_zero()
    assert v.dot(w) == 1
    assert v.support() == [0, 2]
    assert F2Vector.from_int(3, 6) == F2Vector((0, 1, 1))


def test_vector_rejects_bad_entries():
    for bits in [(2, ), (0, -1), (True, )]:
        with pytest.raises(InvalidFormError):
            F2Vector(bits)


def test_vector_length_mismatch():
    with pytest.raises(DimensionError):
        F2Vector((1, 0)) + F2Vector((1, ))


def test_matrix_construction():
    m = F2Matrix([[0, 1], [1, 0]])
    assert m.shape == (2, 2)
    assert m.tolist() == [[0, 1], [1, 0]]
    assert m == F2Matrix(np.array([[0, 1], [1, 0]]))
    assert hash(m) == hash(F2Matrix([[0, 1], [1, 0]]))
    assert m != F2Matrix.identity(2)

    empty = F2Matrix([])
    assert empty.shape == (0, 0)
    assert F2Matrix.reduce([[-1, 2], [3, 4]]).tolist() == [[1, 0], [1, 0]]


def test_matrix_is_read_only():
    m = F2Matrix([[1]])
    with pytest.raises(ValueError):
        m.entries[0, 0] = 0


def test_matrix_rejects_bad_entries():
    for rows in [[[0, 2]], [[0, 1], [1]], [[0.5]]]:
        with pytest.raises(InvalidFormError):
            F2Matrix(rows)


def test_matrix_dimension_cap():
    with patch.object(settings, "MAX_DIMENSION", 3):
        with pytest.raises(DimensionError):
            F2Matrix.zeros(4, 4)


def test_matrix_products():
    m = F2Matrix([[1, 1], [0, 1]])
    assert m.dot(F2Vector((1, 1))) == F2Vector((0, 1))
    assert m.matmul(m) == F2Matrix.identity(2)
    assert m.transpose() == F2Matrix([[1, 0], [1, 1]])
    assert F2Matrix([[0, 1], [1, 0]]).bilinear(F2Vector((1, 0)), F2Vector((0, 1))) == 1


def test_matrix_predicates():
    assert F2Matrix([[0, 1], [1, 0]]).is_alternating()
    assert not F2Matrix([[1, 1], [1, 0]]).is_alternating()
    assert F2Matrix([[1, 1], [1, 0]]).is_symmetric()
    assert F2Matrix([[0, 1], [0, 0]]).asymmetric_pair() == (0, 1)
    assert F2Matrix([[0, 1], [1, 0]]).asymmetric_pair() is None
    assert F2Matrix([[0, 0, 1], [0, 0, 1], [0, 0, 0]]).asymmetric_pair() == (0, 2)


def test_block_diag_and_submatrix():
    a = F2Matrix([[1]])
    b = F2Matrix([[0, 1], [1, 0]])
    c = a.block_diag(b)
    assert c.tolist() == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]
    assert c.submatrix([1, 2]) == b
    assert F2Matrix([]).block_diag(a) == a


def test_rank():
    assert f2core.rank(F2Matrix([[0, 1], [1, 0]])) == 2
    assert f2core.rank(F2Matrix.zeros(3, 3)) == 0
    assert f2core.rank(F2Matrix([[1, 1], [1, 1]])) == 1
    assert f2core.rank(F2Matrix([])) == 0


def test_row_reduce_pivots():
    result = f2core.row_reduce(F2Matrix([[0, 1, 1], [0, 1, 0], [0, 0, 1]]))
    assert result.pivots == (1, 2)
    assert result.rank == 2
    assert result.matrix.tolist() == [[0, 1, 0], [0, 0, 1], [0, 0, 0]]


def test_kernel_basis():
    assert f2core.kernel_basis(F2Matrix([[0, 1], [1, 0]])) == []
    assert f2core.kernel_basis(F2Matrix.zeros(1, 1)) == [F2Vector((1, ))]
    assert f2core.kernel_basis(F2Matrix([[1, 1], [1, 1]])) == [F2Vector((1, 1))]


def test_kernel_basis_random():
    rng = random.Random(7)
    for _ in range(200):
        rows, cols = rng.randint(0, 7), rng.randint(0, 7)
        m = random_matrix(rng, rows, cols)
        kernel = f2core.kernel_basis(m)

        assert len(kernel) + f2core.rank(m) == cols
        for v in kernel:
            assert m.dot(v).is_zero()
        if kernel:
            assert f2core.rank(F2Matrix([v.bits for v in kernel])) == len(kernel)


def test_solve():
    assert f2core.solve(F2Matrix.identity(2), F2Vector((1, 0))) == F2Vector((1, 0))
    assert f2core.solve(F2Matrix([[1, 1], [0, 1]]), F2Vector((0, 1))) == F2Vector((1, 1))

    with pytest.raises(NoSolution):
        f2core.solve(F2Matrix.zeros(1, 1), F2Vector((1, )))

    with pytest.raises(DimensionError):
        f2core.solve(F2Matrix.identity(2), F2Vector((1, )))


def test_solve_random_against_enumeration():
    rng = random.Random(11)
    for _ in range(200):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        m = random_matrix(rng, rows, cols)
        b = F2Vector(tuple(rng.randint(0, 1) for _ in range(rows)))
        try:
            x = f2core.solve(m, b)
            assert m.dot(x) == b
        except NoSolution:
            assert all(m.dot(x) != b for x in all_vectors(cols))


def assert_symplectic(gram, pairs):
    vectors = [v for pair in pairs for v in pair]
    assert len(vectors) == gram.rows
    for i, (a_i, b_i) in enumerate(pairs):
        for j, (a_j, b_j) in enumerate(pairs):
            assert gram.bilinear(a_i, a_j) == 0
            assert gram.bilinear(b_i, b_j) == 0
            assert gram.bilinear(a_i, b_j) == (1 if i == j else 0)


def test_symplectic_basis_examples():
    h = F2Matrix([[0, 1], [1, 0]])
    assert f2core.symplectic_basis(h) == [(F2Vector((1, 0)), F2Vector((0, 1)))]
    assert f2core.symplectic_basis(F2Matrix([])) == []

    antidiag = F2Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
    assert_symplectic(antidiag, f2core.symplectic_basis(antidiag))


def test_symplectic_basis_rejects():
    for gram, error in [(F2Matrix.zeros(2, 2), DegenerateFormError),
                        (F2Matrix([[1, 1], [1, 0]]), InvalidFormError),
                        (F2Matrix([[0, 1], [0, 0]]), InvalidFormError)]:
        with pytest.raises(error):
            f2core.symplectic_basis(gram)


def test_symplectic_basis_random():
    rng = random.Random(3)
    found = 0
    while found < 100:
        n = 2 * rng.randint(1, 5)
        upper = [[rng.randint(0, 1) if j > i else 0 for j in range(n)] for i in range(n)]
        gram = F2Matrix([[upper[i][j] | upper[j][i] for j in range(n)] for i in range(n)])
        if f2core.rank(gram) != n:
            continue
        assert_symplectic(gram, f2core.symplectic_basis(gram))
        found += 1


def test_symplectic_basis_large_dimension():
    rng = random.Random(4)
    n = 200
    while True:
        upper = np.triu(np.array([[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]), 1)
        gram = F2Matrix(upper + upper.T)
        if f2core.rank(gram) == n:
            break

    pairs = f2core.symplectic_basis(gram)
    assert len(pairs) == n // 2
    expected = np.kron(np.eye(n // 2, dtype=np.uint8), np.array([[0, 1], [1, 0]], dtype=np.uint8))
    assert gram.change_basis([v for pair in pairs for v in pair]) == F2Matrix(expected)


def test_enumerate_values_matches_expansion():
    gram = F2Matrix([[0, 1, 1], [1, 0, 0], [1, 0, 0]])
    values = (1, 0, 1)
    counts = f2core.enumerate_values(gram, values, 2)

    expected = [0, 0]
    for bits in itertools.product((0, 1), repeat=3):
        q = sum(b * v for b, v in zip(bits, values))
        q += sum(bits[i] * bits[j] * gram[i, j] for i in range(3) for j in range(i + 1, 3))
        expected[q % 2] += 1
    assert counts == expected


def test_enumerate_values_blocks():
    rng = random.Random(5)
    n = 9
    upper = [[rng.randint(0, 1) if j > i else 0 for j in range(n)] for i in range(n)]
    gram = F2Matrix([[upper[i][j] | upper[j][i] for j in range(n)] for i in range(n)])
    values = tuple(rng.randint(0, 1) for _ in range(n))

    whole = f2core.enumerate_values(gram, values, 2)
    with patch.object(settings, "ENUM_BLOCK_BITS", 3):
        assert f2core.enumerate_values(gram, values, 2) == whole
    assert sum(whole) == 1 << n


def test_enumerate_values_cap():
    with patch.object(settings, "ENUM_CAP", 2):
        with pytest.raises(EnumerationCapError) as error_info:
            f2core.enumerate_values(F2Matrix.zeros(3, 3), (0, 0, 0), 2)
        assert error_info.value.dim == 3
        assert error_info.value.cap == 2



def test_enumeration_near_cap_warns():
    received = []

    @smokesignal.on(LOG_SIGNAL)
    def collect(logDict):
        received.append(logDict)

    try:
        with patch.object(settings, "ENUM_CAP", 6), patch.object(settings, "LOG_TO_CONSOLE", False):
            f2core.enumerate_values(F2Matrix.zeros(1, 1), (0, ), 2)
            assert not [d for d in received if d["type"] == "WARN"]
            f2core.enumerate_values(F2Matrix.zeros(2, 2), (0, 0), 2)
    finally:
        smokesignal.disconnect(collect)

    warnings = [d["message"] for d in received if d["type"] == "WARN"]
    assert warnings == ["Enumerating all 2^2 vectors, close to ENUM_CAP 6"]


def test_enumerate_values_empty():
    assert f2core.enumerate_values(F2Matrix([]), (), 4) == [1, 0, 0, 0]

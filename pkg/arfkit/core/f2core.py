"""
Exact linear algebra over the two-element field.

F2Vector and F2Matrix are immutable values.  Matrices keep their entries
in a read-only numpy uint8 array; every product is reduced mod 2.  The
operations in this module (rank, kernel_basis, solve, symplectic_basis)
are pure functions and are the substrate for every form computation in
arfkit.
"""

import attr
import numpy as np

from arfkit.base import settings
from arfkit.base.exceptions import (DegenerateFormError, DimensionError,
                                    EnumerationCapError, InvalidFormError,
                                    NoSolution)
from arfkit.base.output import out


# check_enumeration_cap warns this many dimensions below the cap.
ENUM_WARN_MARGIN = 4


def _to_bits(values):
    bits = []
    for index, value in enumerate(values):
        if isinstance(value, bool) or int(value) != value or value not in (0, 1):
            raise InvalidFormError(
                "Entry {} of an F2 vector must be 0 or 1, got {!r}".format(index, value))
        bits.append(int(value))
    return tuple(bits)


def _to_array(entries):
    if isinstance(entries, F2Matrix):
        return entries.entries

    if isinstance(entries, np.ndarray):
        if entries.ndim != 2 or entries.dtype.kind not in "biu":
            raise InvalidFormError("An F2 matrix needs a two-dimensional integer array")
        if entries.size and not np.isin(entries, (0, 1)).all():
            raise InvalidFormError("Entries of an F2 matrix must be 0 or 1")
        result = entries.astype(np.uint8)
    else:
        rows = [list(row) for row in entries]
        width = len(rows[0]) if rows else 0
        for i, row in enumerate(rows):
            if len(row) != width:
                raise InvalidFormError("Row {} has length {}, expected {}".format(
                    i, len(row), width))
            for j, value in enumerate(row):
                if isinstance(value, bool) or value not in (0, 1):
                    raise InvalidFormError(
                        "Entry ({}, {}) of an F2 matrix must be 0 or 1, got {!r}".format(
                            i, j, value))
        result = np.array(rows, dtype=np.uint8).reshape(len(rows), width)

    if max(result.shape) > settings.MAX_DIMENSION:
        raise DimensionError("Matrix of shape {} exceeds MAX_DIMENSION {}".format(
            result.shape, settings.MAX_DIMENSION))

    result.setflags(write=False)
    return result


@attr.s(frozen=True, slots=True, repr=False)
class F2Vector(object):
    """
    Vector over F2.  Addition is entrywise XOR.
    """
    bits = attr.ib(converter=_to_bits)

    @classmethod
    def zeros(cls, n):
        return cls((0, ) * n)

    @classmethod
    def unit(cls, n, index):
        return cls(tuple(1 if i == index else 0 for i in range(n)))

    @classmethod
    def from_array(cls, array):
        return cls(tuple(int(x) % 2 for x in np.asarray(array).ravel()))

    @classmethod
    def from_int(cls, n, value):
        """
        Vector whose coordinate i is bit i of value.
        """
        return cls(tuple((value >> i) & 1 for i in range(n)))

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, index):
        return self.bits[index]

    def __add__(self, other):
        if len(other) != len(self):
            raise DimensionError("Cannot add F2 vectors of length {} and {}".format(
                len(self), len(other)))
        return F2Vector(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    __sub__ = __add__

    def __repr__(self):
        return "F2Vector({})".format("".join(str(b) for b in self.bits))

    @property
    def array(self):
        return np.array(self.bits, dtype=np.uint8)

    def dot(self, other):
        return sum(a & b for a, b in zip(self.bits, other.bits)) % 2

    def is_zero(self):
        return not any(self.bits)

    def support(self):
        return [i for i, b in enumerate(self.bits) if b]


@attr.s(frozen=True, slots=True, eq=False, repr=False)
class F2Matrix(object):
    """
    Dense matrix over F2, row-major.
    """
    entries = attr.ib(converter=_to_array)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def reduce(cls, matrix):
        """
        Reduce an integer matrix (nested lists or array) mod 2.
        """
        return cls([[int(value) % 2 for value in row] for row in matrix])

    @classmethod
    def from_columns(cls, vectors, rows):
        if len(vectors) == 0:
            return cls.zeros(rows, 0)
        return cls(np.array([v.bits for v in vectors], dtype=np.uint8).T)

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def __eq__(self, other):
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.entries, other.entries)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.shape, self.entries.tobytes()))

    def __repr__(self):
        return "F2Matrix({})".format(self.tolist())

    def __getitem__(self, index):
        return int(self.entries[index])

    def tolist(self):
        return [[int(x) for x in row] for row in self.entries]

    def row(self, i):
        return F2Vector.from_array(self.entries[i])

    def column(self, j):
        return F2Vector.from_array(self.entries[:, j])

    def transpose(self):
        return F2Matrix(self.entries.T.copy())

    def dot(self, vector):
        """
        Matrix-vector product mod 2.
        """
        if len(vector) != self.cols:
            raise DimensionError("Cannot multiply a {}x{} matrix by a vector of length {}".format(
                self.rows, self.cols, len(vector)))
        if self.rows == 0:
            return F2Vector(())
        product = self.entries.astype(np.int64).dot(vector.array.astype(np.int64)) % 2
        return F2Vector.from_array(product)

    def matmul(self, other):
        if self.cols != other.rows:
            raise DimensionError("Cannot multiply shapes {} and {}".format(self.shape, other.shape))
        product = self.entries.astype(np.int64).dot(other.entries.astype(np.int64)) % 2
        return F2Matrix(product.astype(np.uint8).reshape(self.rows, other.cols))

    def bilinear(self, x, y):
        """
        Evaluate x^T M y mod 2.
        """
        return x.dot(self.dot(y))

    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        return self.is_square() and np.array_equal(self.entries, self.entries.T)

    def is_alternating(self):
        return self.is_symmetric() and not self.entries.diagonal().any()

    def asymmetric_pair(self):
        """
        Return the first (i, j) with M[i, j] != M[j, i], or None.
        """
        n = min(self.rows, self.cols)
        square = self.entries[:n, :n]
        found = np.argwhere(np.triu(square != square.T, 1))
        if len(found) == 0:
            return None
        return (int(found[0][0]), int(found[0][1]))

    def diagonal(self):
        return tuple(int(x) for x in self.entries.diagonal())

    def submatrix(self, indices):
        index = np.array(indices, dtype=np.intp)
        return F2Matrix(self.entries[np.ix_(index, index)].copy())

    def block_diag(self, other):
        result = np.zeros((self.rows + other.rows, self.cols + other.cols), dtype=np.uint8)
        result[:self.rows, :self.cols] = self.entries
        result[self.rows:, self.cols:] = other.entries
        return F2Matrix(result)

    def change_basis(self, basis):
        """
        Gram matrix of the form in the given basis: B^T M B with the basis
        vectors as the columns of B.
        """
        b = F2Matrix.from_columns(basis, self.rows)
        return b.transpose().matmul(self).matmul(b)


@attr.s(frozen=True, slots=True)
class RowReduceResult(object):
    matrix = attr.ib()
    pivots = attr.ib(converter=tuple)

    @property
    def rank(self):
        return len(self.pivots)


def row_reduce(m):
    """
    Reduced row echelon form of m over F2.

    Returns the reduced matrix together with its pivot columns.
    """
    mat = m.entries.copy()
    rows, cols = mat.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        candidates = np.nonzero(mat[row:, col])[0]
        if len(candidates) == 0:
            continue
        pivot = row + candidates[0]
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        targets = np.nonzero(mat[:, col])[0]
        targets = targets[targets != row]
        mat[targets, :] ^= mat[row, :]
        pivots.append(col)
        row += 1
    return RowReduceResult(matrix=F2Matrix(mat), pivots=pivots)


def rank(m):
    return row_reduce(m).rank


def kernel_basis(m):
    """
    Basis of the null space of m, one vector per free column.
    """
    reduced = row_reduce(m)
    mat = reduced.matrix.entries
    pivots = set(reduced.pivots)
    basis = []
    for free in range(m.cols):
        if free in pivots:
            continue
        vec = np.zeros(m.cols, dtype=np.uint8)
        vec[free] = 1
        for row, col in enumerate(reduced.pivots):
            if mat[row, free]:
                vec[col] = 1
        basis.append(F2Vector.from_array(vec))
    return basis


def solve(m, b):
    """
    Return some x with m.x = b; free variables are set to zero.

    Raises NoSolution when the system is inconsistent.
    """
    if len(b) != m.rows:
        raise DimensionError("Right-hand side has length {}, matrix has {} rows".format(
            len(b), m.rows))

    augmented = np.zeros((m.rows, m.cols + 1), dtype=np.uint8)
    augmented[:, :m.cols] = m.entries
    augmented[:, m.cols] = b.array
    reduced = row_reduce(F2Matrix(augmented))

    if m.cols in reduced.pivots:
        raise NoSolution("Inconsistent F2 system")

    x = np.zeros(m.cols, dtype=np.uint8)
    for row, col in enumerate(reduced.pivots):
        x[col] = reduced.matrix.entries[row, m.cols]
    return F2Vector.from_array(x)


def symplectic_basis(gram):
    """
    Hyperbolic pairs (a_i, b_i) for a nondegenerate alternating form.

    Greedy reduction: take the lowest-index remaining vector v, pair it
    with the first remaining w such that v.w = 1, then make every other
    remaining vector orthogonal to both and repeat.  The remaining vectors
    are the rows of one array, so each step is a single vectorized update.
    """
    if not gram.is_square():
        raise InvalidFormError("Gram matrix of shape {} is not square".format(gram.shape))
    pair = gram.asymmetric_pair()
    if pair is not None:
        raise InvalidFormError("Gram matrix is not symmetric at entries {} and {}".format(
            pair, pair[::-1]))
    if any(gram.diagonal()):
        raise InvalidFormError("Gram matrix is not alternating (nonzero diagonal)")
    n = gram.rows
    if rank(gram) != n:
        raise DegenerateFormError(
            "Form is degenerate; quotient by the radical before extracting a symplectic basis")

    g = gram.entries.astype(np.int64)
    remaining = np.eye(n, dtype=np.int64)
    pairs = []
    while len(remaining):
        v = remaining[0]
        gv = g.dot(v) % 2
        index = 1 + int(np.flatnonzero(remaining[1:].dot(gv) % 2)[0])
        w = remaining[index]
        gw = g.dot(w) % 2

        # u + (u.w) v + (u.v) w; v.v = 0, so the two corrections commute.
        rest = np.delete(remaining, [0, index], axis=0)
        remaining = (rest + np.outer(rest.dot(gw) % 2, v) + np.outer(rest.dot(gv) % 2, w)) % 2
        pairs.append((F2Vector.from_array(v), F2Vector.from_array(w)))

    out.verbose("Extracted {} hyperbolic pairs".format(len(pairs)))
    return pairs


def check_enumeration_cap(dim):
    if dim > settings.ENUM_CAP:
        raise EnumerationCapError(dim, settings.ENUM_CAP)
    if dim > 0 and dim >= settings.ENUM_CAP - ENUM_WARN_MARGIN:
        out.warn("Enumerating all 2^{} vectors, close to ENUM_CAP {}".format(
            dim, settings.ENUM_CAP))


def enumerate_values(gram, diagonal_values, modulus):
    """
    Count the values of a refinement over all of F2^n.

    The refinement is determined by its values on the basis and the
    expansion f(x + y) = f(x) + f(y) + (modulus / 2)(x.y).  With modulus 2
    this is a quadratic refinement q, with modulus 4 a Z/4 enhancement e.

    Returns a list of length modulus whose entry i is |f^-1(i)|.
    """
    n = gram.rows
    check_enumeration_cap(n)

    cross = modulus // 2
    values = np.array(diagonal_values, dtype=np.int64)
    upper = np.triu(gram.entries.astype(np.int64), 1)
    counts = np.zeros(modulus, dtype=np.int64)

    total = 1 << n
    block = 1 << min(n, settings.ENUM_BLOCK_BITS)
    shifts = np.arange(n, dtype=np.int64)
    for start in range(0, total, block):
        indices = np.arange(start, start + block, dtype=np.int64)
        x = (indices[:, None] >> shifts) & 1
        linear = x.dot(values)
        pairs = (x.dot(upper) * x).sum(axis=1)
        result = (linear + cross * pairs) % modulus
        counts += np.bincount(result, minlength=modulus)

    out.verbose("Enumerated {} vectors mod {}".format(total, modulus))
    return [int(c) for c in counts]

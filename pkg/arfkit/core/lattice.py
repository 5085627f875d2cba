"""
Integer symmetric bilinear forms.

Signatures come from symmetric congruence diagonalization over the
rationals and determinants from fraction-free elimination over the
integers; no floating point is involved anywhere.
"""

import numbers

import attr
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from arfkit.base import settings
from arfkit.base.exceptions import (DegenerateFormError, DimensionError,
                                    InvalidFormError, NotUnimodularError)
from arfkit.base.output import out

from .f2core import F2Matrix, F2Vector, solve


def _is_integer(value):
    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


def _to_rows(q):
    rows = tuple(tuple(row) for row in q)
    n = len(rows)
    if n > settings.MAX_DIMENSION:
        raise DimensionError("Lattice of rank {} exceeds MAX_DIMENSION {}".format(
            n, settings.MAX_DIMENSION))
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InvalidFormError("Row {} of a rank-{} form has length {}".format(i, n, len(row)))
        for j, value in enumerate(row):
            if not _is_integer(value):
                raise InvalidFormError("Entry ({}, {}) must be an integer, got {!r}".format(
                    i, j, value))
    return tuple(tuple(int(v) for v in row) for row in rows)


@attr.s(frozen=True, slots=True)
class IntLattice(object):
    q = attr.ib(converter=_to_rows)

    def __attrs_post_init__(self):
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.q[i][j] != self.q[j][i]:
                    raise InvalidFormError(
                        "Form is not symmetric: entry ({}, {}) = {} but entry ({}, {}) = {}".format(
                            i, j, self.q[i][j], j, i, self.q[j][i]))

    @property
    def dim(self):
        return len(self.q)

    def tolist(self):
        return [list(row) for row in self.q]


@attr.s(frozen=True, slots=True)
class CharVector(object):
    xi = attr.ib(converter=tuple)

    def __len__(self):
        return len(self.xi)


def _domain(l, domain):
    n = l.dim
    return DomainMatrix([[domain(x) for x in row] for row in l.q], (n, n), domain)


def _xi(v):
    return v.xi if isinstance(v, CharVector) else tuple(v)


def diagonalize(l):
    """
    Diagonal entries of a form congruent to l over the rationals.

    Pivots on a nonzero diagonal entry when there is one.  Otherwise some
    q_ij is nonzero and adding row and column j to i puts 2 q_ij on the
    diagonal.
    """
    m = [[QQ(x) for x in row] for row in l.q]
    active = list(range(l.dim))
    pivots = []
    while active:
        pivot = next((i for i in active if m[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in active for j in active if m[i][j] != 0), None)
            if pair is None:
                raise DegenerateFormError("Form is degenerate (determinant 0)")
            i, j = pair
            for k in active:
                m[i][k] += m[j][k]
            for k in active:
                m[k][i] += m[k][j]
            pivot = i

        p = m[pivot][pivot]
        pivots.append(p)
        active.remove(pivot)
        for r in active:
            factor = m[r][pivot] / p
            if factor != 0:
                for c in active:
                    m[r][c] -= factor * m[pivot][c]

    out.verbose("Diagonalized rank-{} form".format(l.dim))
    return pivots


def signature(l):
    pivots = diagonalize(l)
    return sum(1 for p in pivots if p > 0) - sum(1 for p in pivots if p < 0)


def determinant(l):
    if l.dim == 0:
        return 1
    return int(_domain(l, ZZ).det())


def is_unimodular(l):
    return abs(determinant(l)) == 1


def is_even(l):
    return all(l.q[i][i] % 2 == 0 for i in range(l.dim))


def norm(l, v):
    v = _xi(v)
    if len(v) != l.dim:
        raise DimensionError("Vector of length {} for a rank-{} form".format(len(v), l.dim))
    return sum(v[i] * l.q[i][j] * v[j] for i in range(l.dim) for j in range(l.dim))


def is_characteristic(l, v):
    """
    True when v.x = x.x mod 2 for every basis vector x.
    """
    v = _xi(v)
    if len(v) != l.dim:
        raise DimensionError("Vector of length {} for a rank-{} form".format(len(v), l.dim))
    return all((sum(l.q[i][j] * v[j] for j in range(l.dim)) - l.q[i][i]) % 2 == 0
               for i in range(l.dim))


def characteristic_vector(l):
    """
    The characteristic vector with entries in {0, 1}: the solution of
    Q xi = diag(Q) over F2 lifted with zeros.
    """
    if not is_unimodular(l):
        raise NotUnimodularError("Characteristic vectors are only computed for unimodular forms "
                                 "(determinant {})".format(determinant(l)))
    reduced = F2Matrix.reduce(l.q)
    target = F2Vector(tuple(l.q[i][i] % 2 for i in range(l.dim)))
    return CharVector(solve(reduced, target).bits)


def check_van_der_blij(l, xi):
    """
    Check xi.xi = signature mod 8 for a characteristic xi.
    """
    if not is_characteristic(l, xi):
        raise InvalidFormError("{} is not characteristic for this form".format(list(_xi(xi))))
    return (norm(l, xi) - signature(l)) % 8 == 0


E8_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]


def e8():
    """
    Positive definite E8 form: 2 on the diagonal, -1 on the edges of the
    Dynkin diagram.
    """
    q = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in E8_EDGES:
        q[i][j] = q[j][i] = -1
    return IntLattice(q)


def hyperbolic():
    return IntLattice([[0, 1], [1, 0]])


def diagonal(*entries):
    return IntLattice([[entries[i] if i == j else 0 for j in range(len(entries))]
                       for i in range(len(entries))])


def direct_sum(a, b):
    n = a.dim + b.dim
    q = [[0] * n for _ in range(n)]
    for i in range(a.dim):
        for j in range(a.dim):
            q[i][j] = a.q[i][j]
    for i in range(b.dim):
        for j in range(b.dim):
            q[a.dim + i][a.dim + j] = b.q[i][j]
    return IntLattice(q)


def congruent(l, b):
    """
    The form B^T Q B, i.e. l written in the basis given by the columns of b.
    """
    n = l.dim
    if len(b) != n or any(len(row) != n for row in b):
        raise DimensionError("Change of basis must be {0}x{0}".format(n))
    if n == 0:
        return IntLattice([])
    basis = DomainMatrix([[ZZ(x) for x in row] for row in b], (n, n), ZZ)
    product = basis.transpose().matmul(_domain(l, ZZ)).matmul(basis)
    return IntLattice([[int(x) for x in row] for row in product.to_Matrix().tolist()])

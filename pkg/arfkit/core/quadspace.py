"""
Quadratic spaces (V, ., q) over F2.

A space is stored as its Gram matrix together with the values of q on the
basis; q is extended to all of V by q(x + y) = q(x) + q(y) + x.y.  The
form may be degenerate.  A space is proper when q vanishes on the radical,
and the Arf invariant of an improper space is Infinity.
"""

from enum import Enum

import attr
import numpy as np

from arfkit.base import constants
from arfkit.base.exceptions import DimensionError, InvalidFormError
from arfkit.base.output import out

from .f2core import (F2Matrix, F2Vector, enumerate_values, kernel_basis,
                     row_reduce, symplectic_basis)


class ArfValue(Enum):
    ZERO = 0
    ONE = 1
    INFINITY = constants.INFINITY_LABEL

    def __add__(self, other):
        if ArfValue.INFINITY in (self, other):
            return ArfValue.INFINITY
        return ArfValue((self.value + other.value) % 2)

    def __str__(self):
        return constants.INFINITY_SYMBOL if self.is_infinite() else str(self.value)

    @classmethod
    def from_bit(cls, bit):
        return cls(int(bit) % 2)

    @classmethod
    def parse(cls, value):
        """
        Accept 0, 1 or "inf" (the serialized forms).
        """
        if value == constants.INFINITY_LABEL:
            return cls.INFINITY
        if isinstance(value, bool) or value not in (0, 1):
            raise InvalidFormError("Arf value must be 0, 1 or \"{}\", got {!r}".format(
                constants.INFINITY_LABEL, value))
        return cls(value)

    def is_infinite(self):
        return self is ArfValue.INFINITY

    def label(self):
        return self.value if not self.is_infinite() else constants.INFINITY_LABEL


def _check_bits(name):
    def validator(instance, attribute, values):
        for i, value in enumerate(values):
            if isinstance(value, bool) or value not in (0, 1):
                raise InvalidFormError("{}[{}] must be 0 or 1, got {!r}".format(name, i, value))
    return validator


def check_gram(gram, values):
    """
    Shared shape and symmetry checks for Gram matrices of spaces.
    """
    if not gram.is_square():
        raise InvalidFormError("Gram matrix of shape {} is not square".format(gram.shape))
    pair = gram.asymmetric_pair()
    if pair is not None:
        i, j = pair
        raise InvalidFormError(
            "Gram matrix is not symmetric: entry ({}, {}) differs from entry ({}, {})".format(
                i, j, j, i))
    if len(values) != gram.rows:
        raise DimensionError("Gram matrix has dimension {} but {} basis values were given".format(
            gram.rows, len(values)))


@attr.s(frozen=True, slots=True)
class QuadraticSpace(object):
    gram = attr.ib(converter=F2Matrix)
    qvals = attr.ib(converter=tuple, validator=_check_bits("qvals"))

    def __attrs_post_init__(self):
        check_gram(self.gram, self.qvals)
        diagonal = self.gram.diagonal()
        if any(diagonal):
            raise InvalidFormError(
                "Gram matrix of a quadratic space needs a zero diagonal; entry ({0}, {0}) is 1".format(
                    diagonal.index(1)))

    @property
    def dim(self):
        return self.gram.rows


@attr.s(frozen=True, slots=True)
class QuadClass(object):
    """
    Complete isomorphism invariant: dimension, radical dimension and Arf.
    """
    dim = attr.ib()
    rad_dim = attr.ib()
    arf = attr.ib()

    def __attrs_post_init__(self):
        if self.rad_dim > self.dim or (self.dim - self.rad_dim) % 2 != 0:
            raise InvalidFormError("Impossible class: dim {}, radical dimension {}".format(
                self.dim, self.rad_dim))


def hyperbolic(q_a=0, q_b=0):
    return QuadraticSpace([[0, 1], [1, 0]], (q_a, q_b))


def zero_form(q=0):
    """
    One-dimensional space with the zero form, proper iff q = 0.
    """
    return QuadraticSpace([[0]], (q, ))


def empty():
    return QuadraticSpace([], ())


def _as_vector(s, x):
    if not isinstance(x, F2Vector):
        x = F2Vector(x)
    if len(x) != s.dim:
        raise DimensionError("Vector of length {} in a space of dimension {}".format(len(x), s.dim))
    return x


def expand(gram, values, x, cross):
    """
    Extend basis values to x by f(x + y) = f(x) + f(y) + cross * (x.y),
    without reducing.
    """
    bits = x.array.astype(np.int64)
    linear = int(bits.dot(np.array(values, dtype=np.int64))) if len(bits) else 0
    upper = np.triu(gram.entries.astype(np.int64), 1)
    pairs = int(bits.dot(upper).dot(bits)) if len(bits) else 0
    return linear + cross * pairs


def evaluate_q(s, x):
    x = _as_vector(s, x)
    return expand(s.gram, s.qvals, x, 1) % 2


def radical(s):
    return kernel_basis(s.gram)


def is_proper(s):
    # q is linear on the radical, so checking a basis is enough.
    return all(evaluate_q(s, r) == 0 for r in radical(s))


def nondegenerate_part(s):
    """
    The quotient V/R, realized on the pivot columns of the Gram matrix.

    Those basis vectors span a complement of the radical on which the form
    is nondegenerate.
    """
    pivots = row_reduce(s.gram).pivots
    out.verbose("Radical has dimension {}".format(s.dim - len(pivots)))
    return QuadraticSpace(s.gram.submatrix(pivots), tuple(s.qvals[i] for i in pivots))


def arf_symplectic(s):
    if not is_proper(s):
        return ArfValue.INFINITY

    quotient = nondegenerate_part(s)
    total = 0
    for a, b in symplectic_basis(quotient.gram):
        total += evaluate_q(quotient, a) * evaluate_q(quotient, b)
    return ArfValue.from_bit(total)


def arf_counts(s):
    """
    Return (q_0, q_1), the sizes of the preimages of 0 and 1.
    """
    counts = enumerate_values(s.gram, s.qvals, 2)
    return counts[0], counts[1]


def arf_democratic(s):
    """
    The Arf invariant is the value q takes most often, or Infinity on a tie.
    """
    q0, q1 = arf_counts(s)
    if q0 > q1:
        return ArfValue.ZERO
    elif q0 < q1:
        return ArfValue.ONE
    else:
        return ArfValue.INFINITY


def direct_sum(a, b):
    return QuadraticSpace(a.gram.block_diag(b.gram), a.qvals + b.qvals)


def classify(s):
    rad_dim = len(radical(s))
    return QuadClass(dim=s.dim, rad_dim=rad_dim, arf=arf_symplectic(s))


def isomorphic(a, b):
    return classify(a) == classify(b)


def transform(s, basis):
    """
    The same quadratic space written in a new basis (list of F2Vectors).
    """
    if len(basis) != s.dim:
        raise DimensionError("A basis of a {}-dimensional space needs {} vectors".format(
            s.dim, s.dim))
    return QuadraticSpace(s.gram.change_basis(basis), tuple(evaluate_q(s, v) for v in basis))

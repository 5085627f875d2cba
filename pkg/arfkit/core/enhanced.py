"""
Z/4-enhanced spaces (V, ., e) and the Brown invariant.

e is stored on a basis and extended by e(x + y) = e(x) + e(y) + 2(x.y)
mod 4.  The Brown invariant lives in Z/8 and is Infinity for improper
spaces.  It is computed twice, from the compass of value counts and from
the exact Gauss sum, and the two must agree.
"""

import attr

from arfkit.base import constants
from arfkit.base.exceptions import InternalError, InvalidFormError
from arfkit.base.output import out

from .f2core import F2Matrix, enumerate_values, kernel_basis
from .quadspace import _as_vector, check_gram, expand


def _check_residue(instance, attribute, value):
    if value is not None and (isinstance(value, bool) or value not in range(8)):
        raise InvalidFormError("Brown value must be in 0..7 or infinite, got {!r}".format(value))


@attr.s(frozen=True, slots=True, repr=False)
class BrownValue(object):
    """
    Element of Z/8 or Infinity (residue None).  Infinity absorbs sums.
    """
    residue = attr.ib(validator=_check_residue)

    @classmethod
    def of(cls, value):
        return cls(int(value) % 8)

    @classmethod
    def parse(cls, value):
        if value == constants.INFINITY_LABEL:
            return INFINITY
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidFormError("Brown value must be an integer or \"{}\", got {!r}".format(
                constants.INFINITY_LABEL, value))
        return cls.of(value)

    @classmethod
    def from_arf(cls, arf):
        """
        The embedding Arf -> 4 Arf of Z/2 into Z/8.
        """
        if arf.is_infinite():
            return INFINITY
        return cls.of(4 * arf.value)

    def is_infinite(self):
        return self.residue is None

    def __add__(self, other):
        if self.is_infinite() or other.is_infinite():
            return INFINITY
        return BrownValue.of(self.residue + other.residue)

    def __neg__(self):
        if self.is_infinite():
            return INFINITY
        return BrownValue.of(-self.residue)

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        return constants.INFINITY_SYMBOL if self.is_infinite() else str(self.residue)

    def __repr__(self):
        return "BrownValue({})".format(self.label())

    def label(self):
        return constants.INFINITY_LABEL if self.is_infinite() else self.residue


INFINITY = BrownValue(None)


def _check_evals(instance, attribute, values):
    for i, value in enumerate(values):
        if isinstance(value, bool) or value not in range(4):
            raise InvalidFormError("evals[{}] must be in Z/4 (0..3), got {!r}".format(i, value))


@attr.s(frozen=True, slots=True)
class EnhancedSpace(object):
    gram = attr.ib(converter=F2Matrix)
    evals = attr.ib(converter=tuple, validator=_check_evals)

    def __attrs_post_init__(self):
        check_gram(self.gram, self.evals)
        for i, (g, e) in enumerate(zip(self.gram.diagonal(), self.evals)):
            if g != e % 2:
                raise InvalidFormError(
                    "Diagonal entry ({0}, {0}) is {1} but evals[{0}] = {2} has the other parity".format(
                        i, g, e))

    @property
    def dim(self):
        return self.gram.rows


def empty_e():
    return EnhancedSpace([], ())


def mobius(sign=1):
    """
    The space of a Moebius band with one self-intersecting generator:
    e = 1 for the positive band and e = 3 for the negative one.
    """
    if sign not in (1, -1):
        raise InvalidFormError("Moebius sign must be +1 or -1, got {!r}".format(sign))
    return EnhancedSpace([[1]], (1 if sign > 0 else 3, ))


def evaluate_e(s, x):
    x = _as_vector(s, x)
    return expand(s.gram, s.evals, x, 2) % 4


def is_proper_e(s):
    rad = kernel_basis(s.gram)
    if any(evaluate_e(s, r) for r in rad):
        return False
    for i in range(len(rad)):
        for j in range(i + 1, len(rad)):
            if evaluate_e(s, rad[i] + rad[j]):
                return False
    return True


def value_counts(s):
    """
    Return (e_0, e_1, e_2, e_3) over all of V.
    """
    return tuple(enumerate_values(s.gram, s.evals, 4))


def gauss_sum(s):
    """
    The Gauss sum of i^e(x) over V as an exact pair (a, b) = a + b i.
    """
    e0, e1, e2, e3 = value_counts(s)
    return e0 - e2, e1 - e3


def _sign(n):
    return (n > 0) - (n < 0)


# (sign(e_0 - e_2), sign(e_1 - e_3)) -> Brown invariant.
COMPASS = {
    (1, 0): 0,
    (1, 1): 1,
    (0, 1): 2,
    (-1, 1): 3,
    (-1, 0): 4,
    (-1, -1): 5,
    (0, -1): 6,
    (1, -1): 7,
}


def brown_compass(s):
    if not is_proper_e(s):
        return INFINITY

    e0, e1, e2, e3 = value_counts(s)
    key = (_sign(e0 - e2), _sign(e1 - e3))
    if key not in COMPASS:
        return INFINITY
    return BrownValue(COMPASS[key])


def brown_gauss(s):
    """
    Read the Brown invariant off the phase of the Gauss sum.

    For a proper space S = |S| exp(i pi beta / 4), so either a or b
    vanishes or |a| = |b|.
    """
    if not is_proper_e(s):
        return INFINITY

    a, b = gauss_sum(s)
    if a == 0 and b == 0:
        return INFINITY

    if b == 0:
        residue = 0 if a > 0 else 4
    elif a == 0:
        residue = 2 if b > 0 else 6
    elif abs(a) == abs(b):
        if a > 0:
            residue = 1 if b > 0 else 7
        else:
            residue = 3 if b > 0 else 5
    else:
        raise InternalError("Gauss sum {} + {}i of a proper space is not a multiple "
                            "of an eighth root of unity".format(a, b))

    out.verbose("Gauss sum {} + {}i gives Brown invariant {}".format(a, b, residue))
    return BrownValue(residue)


def from_quadratic(s):
    """
    The enhanced space (V, ., 2q).
    """
    return EnhancedSpace(s.gram, tuple(2 * q for q in s.qvals))


def direct_sum_e(a, b):
    return EnhancedSpace(a.gram.block_diag(b.gram), a.evals + b.evals)


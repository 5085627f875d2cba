"""
Knot and link invariants from spanning surface data.

SeifertData holds the Seifert matrix of an oriented spanning surface;
its quadratic space gives Arf(L).  SurfaceData holds the Z/4 framings of
a possibly nonorientable spanning surface and the sum of the framings it
induces on the boundary; its enhanced space gives the Brown invariant of
the link.  SurfaceData is trusted algebraic input: nothing here checks
that the framings come from an actual embedded surface.
"""

import attr
import sympy as sp
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from arfkit.base import settings
from arfkit.base.exceptions import (DimensionError, InconsistentDataError,
                                    InvalidFormError)
from arfkit.base.output import out

from . import enhanced
from .enhanced import BrownValue, EnhancedSpace
from .f2core import F2Matrix, rank
from .lattice import _is_integer
from .quadspace import ArfValue, QuadraticSpace, arf_symplectic, is_proper


def _square_integer_matrix(name):
    def convert(matrix):
        rows = tuple(tuple(row) for row in matrix)
        n = len(rows)
        if n > settings.MAX_DIMENSION:
            raise DimensionError("{} of size {} exceeds MAX_DIMENSION {}".format(
                name, n, settings.MAX_DIMENSION))
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InvalidFormError("{} row {} has length {}, expected {}".format(
                    name, i, len(row), n))
            for j, value in enumerate(row):
                if not _is_integer(value):
                    raise InvalidFormError("{} entry ({}, {}) must be an integer, got {!r}".format(
                        name, i, j, value))
        return tuple(tuple(int(v) for v in row) for row in rows)
    return convert


def _optional_lk(matrix):
    if matrix is None:
        return None
    return _square_integer_matrix("lk")(matrix)


@attr.s(frozen=True, slots=True)
class SeifertData(object):
    v = attr.ib(converter=_square_integer_matrix("Seifert matrix"))
    components = attr.ib(default=1)
    lk = attr.ib(default=None, converter=_optional_lk)

    def __attrs_post_init__(self):
        if not _is_integer(self.components) or self.components < 1:
            raise InvalidFormError("components must be a positive integer, got {!r}".format(
                self.components))

        if self.lk is not None:
            if len(self.lk) != self.components:
                raise InvalidFormError("lk must be {0}x{0} for a {0}-component link".format(
                    self.components))
            for i in range(self.components):
                if self.lk[i][i] != 0:
                    raise InvalidFormError("lk diagonal entry ({0}, {0}) must be 0".format(i))
                for j in range(i + 1, self.components):
                    if self.lk[i][j] != self.lk[j][i]:
                        raise InvalidFormError(
                            "lk is not symmetric: entry ({}, {}) differs from entry ({}, {})".format(
                                i, j, j, i))

        if self.components == 1 and rank(symmetrized(self)) != self.dim:
            raise InvalidFormError("det(V + V^T) is even, so this is not the Seifert matrix of a knot")

    @property
    def dim(self):
        return len(self.v)


def _check_framing_sum(instance, attribute, value):
    if not _is_integer(value) or value % 2 != 0:
        raise InvalidFormError("boundary_framing_sum must be an even integer, got {!r}".format(value))


@attr.s(frozen=True, slots=True)
class SurfaceData(object):
    evals = attr.ib(converter=tuple)
    gram = attr.ib(converter=F2Matrix)
    boundary_framing_sum = attr.ib(default=0, validator=_check_framing_sum)
    components = attr.ib(default=None)

    def __attrs_post_init__(self):
        # Validates the diagonal congruence gram_ii = evals_i mod 2.
        EnhancedSpace(self.gram, self.evals)

    @property
    def phi(self):
        return self.boundary_framing_sum // 2


@attr.s(frozen=True, slots=True)
class LinkInvariants(object):
    arf = attr.ib()
    proper = attr.ib()
    lk_total = attr.ib(default=None)
    beta = attr.ib(default=None)
    alexander = attr.ib(default=None)

    def __attrs_post_init__(self):
        if self.arf.is_infinite() == self.proper:
            raise InconsistentDataError("Arf is infinite exactly when the link is not proper")


def symmetrized(sd):
    return F2Matrix.reduce([[sd.v[i][j] + sd.v[j][i] for j in range(sd.dim)]
                            for i in range(sd.dim)])


def quadratic_space_of(sd):
    """
    q(x) = lk(x, x+) mod 2 with the intersection form V + V^T mod 2.
    """
    return QuadraticSpace(symmetrized(sd), tuple(sd.v[i][i] % 2 for i in range(sd.dim)))


def arf_of_link(sd):
    return arf_symplectic(quadratic_space_of(sd))


def _row_sums_even(lk):
    return all(sum(row) % 2 == 0 for row in lk)


def properness_of(sd):
    """
    Properness read off the quadratic space, cross-checked against the
    parity of every lk(K_i, L - K_i) when lk is supplied.
    """
    proper = is_proper(quadratic_space_of(sd))
    if sd.lk is not None and _row_sums_even(sd.lk) != proper:
        raise InconsistentDataError(
            "lk says the link is {} but the Seifert matrix says it is {}".format(
                "proper" if _row_sums_even(sd.lk) else "not proper",
                "proper" if proper else "not proper"))
    return proper


def lk_total(sd):
    """
    Sum of the linking numbers over all pairs of components.
    """
    if sd.lk is None:
        if sd.components == 1:
            return 0
        raise InvalidFormError("lk is required to total the linking numbers of a {}-component "
                               "link".format(sd.components))
    return sum(sd.lk[i][j] for i in range(sd.components) for j in range(i + 1, sd.components))


def enhanced_space_of(surf):
    return EnhancedSpace(surf.gram, surf.evals)


def beta_of_link(surf):
    """
    beta(L) = beta(S) - phi(S), with phi(S) half the boundary framing sum.
    """
    beta_s = enhanced.brown_gauss(enhanced_space_of(surf))
    if beta_s.is_infinite():
        return enhanced.INFINITY
    return beta_s - BrownValue.of(surf.phi)


def arf_beta_relation_check(sd, surf):
    """
    Check beta(L) = 4 Arf(L) + lk(L) mod 8.
    """
    if surf.components is not None and surf.components != sd.components:
        raise InconsistentDataError("Seifert data has {} components but surface data has {}".format(
            sd.components, surf.components))

    arf = arf_of_link(sd)
    beta = beta_of_link(surf)
    if arf.is_infinite() and beta.is_infinite():
        return True
    if arf.is_infinite() or beta.is_infinite():
        raise InconsistentDataError("Arf is {} but beta is {}; the inputs describe different "
                                    "links".format(arf, beta))

    residual = (beta.residue - 4 * arf.value - lk_total(sd)) % 8
    out.verbose("beta(L) - 4 Arf(L) - lk(L) = {} mod 8".format(residual))
    return residual == 0


T = sp.Symbol("t")


def alexander_polynomial(sd):
    """
    det(V - t V^T) normalized to a nonzero constant term and a positive
    leading coefficient.  Returns the zero polynomial when it vanishes.
    """
    if sd.dim == 0:
        return sp.Poly(1, T, domain="ZZ")

    ring = ZZ[T]
    t = ring.from_sympy(T)
    n = sd.dim
    rows = [[ring(sd.v[i][j]) - t * sd.v[j][i] for j in range(n)] for i in range(n)]
    det = DomainMatrix(rows, (n, n), ring).det()
    coeffs = sp.Poly(ring.to_sympy(det), T, domain="ZZ").all_coeffs()

    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return sp.Poly.from_list(coeffs, T, domain="ZZ")


def murasugi_arf(sd):
    """
    Arf of a knot from its Alexander polynomial: 0 when Delta(-1) = +-1
    mod 8 and 1 when Delta(-1) = +-3 mod 8.
    """
    if sd.components != 1:
        raise InvalidFormError("The Alexander polynomial criterion applies to knots only")

    value = int(alexander_polynomial(sd).eval(-1)) % 8
    if value in (1, 7):
        return ArfValue.ZERO
    elif value in (3, 5):
        return ArfValue.ONE
    else:
        raise InvalidFormError("Delta(-1) is even, so this is not the Seifert matrix of a knot")


def stabilize(sd, xi):
    """
    Add a tube: two new basis curves with V'[i, n] = xi_i and
    V'[n, n + 1] = 1, everything else in the new rows and columns zero.
    """
    n = sd.dim
    if len(xi) != n:
        raise DimensionError("Stabilization vector has length {}, matrix has size {}".format(
            len(xi), n))

    v = [list(row) + [xi[i], 0] for i, row in enumerate(sd.v)]
    v.append([0] * n + [0, 1])
    v.append([0] * (n + 2))
    return SeifertData(v, components=sd.components, lk=sd.lk)


def surface_of_seifert(sd):
    """
    The Seifert surface seen as surface data: e = 2q, and the surface
    framing of each boundary component is minus its linking with the
    rest of the link.
    """
    space = quadratic_space_of(sd)
    return SurfaceData(evals=tuple(2 * q for q in space.qvals),
                       gram=space.gram,
                       boundary_framing_sum=-2 * lk_total(sd),
                       components=sd.components)


def link_invariants(sd, surf=None):
    """
    Bundle the link invariants.  beta is computed from surf when given,
    otherwise from the Seifert surface when the linking numbers are known.
    """
    proper = properness_of(sd)
    arf = arf_of_link(sd)

    total = None
    if sd.lk is not None or sd.components == 1:
        total = lk_total(sd)

    if surf is not None:
        beta = beta_of_link(surf)
    elif total is not None:
        beta = beta_of_link(surface_of_seifert(sd))
    else:
        beta = None

    alexander = alexander_polynomial(sd) if sd.components == 1 else None
    return LinkInvariants(arf=arf, proper=proper, lk_total=total, beta=beta, alexander=alexander)

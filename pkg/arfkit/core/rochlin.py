"""
Rochlin invariants and the Rochlin-type congruences.

The verifiers take bundles of invariants, not manifolds.  Whether the
numbers come from a characteristic surface, a properly embedded surface
or a homology sphere boundary is the caller's obligation; what is checked
here is the exact congruence arithmetic.

A divisibility failure (the data cannot be realized at all) raises
DivisibilityError.  A congruence that fails on realizable data comes back
as a Residual with holds == False.
"""

import attr

from arfkit.base import constants
from arfkit.base.exceptions import (DivisibilityError, InconsistentDataError,
                                    InternalError, InvalidFormError,
                                    NotUnimodularError)
from arfkit.base.output import out

from .enhanced import BrownValue
from .lattice import IntLattice, is_even, is_unimodular, signature
from .quadspace import ArfValue
from .seifert import arf_of_link


def _to_lattice(value):
    return value if isinstance(value, IntLattice) else IntLattice(value)


@attr.s(frozen=True, slots=True)
class EvenPresentation(object):
    """
    Linking matrix of an even framed link whose surgery is a homology
    sphere.
    """
    lam = attr.ib(converter=_to_lattice)

    def __attrs_post_init__(self):
        if not is_even(self.lam):
            raise InvalidFormError("Linking matrix has an odd framing on the diagonal")
        if not is_unimodular(self.lam):
            raise NotUnimodularError("Linking matrix is not unimodular, so the boundary is not "
                                     "a homology sphere")


def _check_bit(name):
    def validator(instance, attribute, value):
        if value not in (0, 1) or isinstance(value, bool):
            raise InvalidFormError("{} must be 0 or 1, got {!r}".format(name, value))
    return validator


@attr.s(frozen=True, slots=True)
class Residual(object):
    value = attr.ib()
    modulus = attr.ib()

    @property
    def holds(self):
        return self.value % self.modulus == 0


@attr.s(frozen=True, slots=True)
class RelativeScenario(object):
    """
    (sigma(X), [F]^2, invariant of F, invariant of its boundary, mu of the
    boundary of X, KS(X)).

    Orientable scenarios carry Arf values, nonorientable ones Brown values.
    """
    sigma_x = attr.ib()
    f_square = attr.ib()
    surface = attr.ib()
    surface_invariant = attr.ib()
    boundary_invariant = attr.ib()
    mu_boundary = attr.ib(default=0, validator=_check_bit("mu_boundary"))
    ks = attr.ib(default=0, validator=_check_bit("ks"))

    def __attrs_post_init__(self):
        if self.surface == constants.ORIENTABLE:
            expected = ArfValue
        elif self.surface == constants.NONORIENTABLE:
            expected = BrownValue
        else:
            raise InvalidFormError("surface must be \"{}\" or \"{}\", got {!r}".format(
                constants.ORIENTABLE, constants.NONORIENTABLE, self.surface))

        for name in ("surface_invariant", "boundary_invariant"):
            value = getattr(self, name)
            if not isinstance(value, expected):
                raise InvalidFormError("{} of an {} scenario must be a {}".format(
                    name, self.surface, expected.__name__))
            if value.is_infinite():
                raise InconsistentDataError("{} is infinite; improper scenarios have no "
                                            "congruence".format(name))

    @property
    def orientable(self):
        return self.surface == constants.ORIENTABLE

    def to_brown(self):
        """
        The same scenario with beta = 4 Arf and F.F = [F]^2.
        """
        if not self.orientable:
            return self
        return attr.evolve(self,
                           surface=constants.NONORIENTABLE,
                           surface_invariant=BrownValue.from_arf(self.surface_invariant),
                           boundary_invariant=BrownValue.from_arf(self.boundary_invariant))


@attr.s(frozen=True, slots=True)
class ClosedScenario(object):
    """
    (sigma(X), square of the characteristic surface, its invariant, KS(X))
    for a closed 4-manifold.  square is xi.xi when the surface is
    orientable and F.F otherwise.
    """
    sigma = attr.ib()
    square = attr.ib()
    surface = attr.ib()
    invariant = attr.ib()
    ks = attr.ib(default=0, validator=_check_bit("ks"))

    def __attrs_post_init__(self):
        expected = {constants.ORIENTABLE: ArfValue, constants.NONORIENTABLE: BrownValue}
        if self.surface not in expected:
            raise InvalidFormError("surface must be \"{}\" or \"{}\", got {!r}".format(
                constants.ORIENTABLE, constants.NONORIENTABLE, self.surface))
        if not isinstance(self.invariant, expected[self.surface]):
            raise InvalidFormError("invariant of an {} scenario must be a {}".format(
                self.surface, expected[self.surface].__name__))
        if self.invariant.is_infinite():
            raise InconsistentDataError("invariant is infinite; improper scenarios have no "
                                        "congruence")

    @property
    def orientable(self):
        return self.surface == constants.ORIENTABLE


def _eighth(sigma, square):
    difference = sigma - square
    if difference % 8 != 0:
        raise DivisibilityError("sigma - square = {} is not divisible by 8; no characteristic "
                                "surface has these numbers".format(difference))
    return difference // 8


def _finite(value, name):
    if value.is_infinite():
        raise InconsistentDataError("{} is infinite".format(name))
    return value


def _bit(value, name):
    if value not in (0, 1) or isinstance(value, bool):
        raise InvalidFormError("{} must be 0 or 1, got {!r}".format(name, value))
    return value


def mu_from_presentation(p):
    """
    mu = sigma / 8 mod 2 for the 2-handlebody of an even presentation.
    """
    sigma = signature(p.lam)
    if sigma % 8 != 0:
        raise InternalError("Even unimodular form has signature {}, not divisible by 8".format(sigma))
    return (sigma // 8) % 2


def mu_from_surgery(k, alpha):
    """
    mu of the alpha-surgery on a knot is alpha * Arf(K) mod 2.
    """
    if k.components != 1:
        raise InvalidFormError("Surgery formula needs a knot, got {} components".format(
            k.components))
    return (alpha % 2) * arf_of_link(k).value % 2


def verify_closed(sigma, xi_square, arf_xi, ks=0):
    """
    Arf(xi) = (sigma - xi.xi) / 8 + KS mod 2.
    """
    _finite(arf_xi, "Arf of the characteristic surface")
    eighth = _eighth(sigma, xi_square)
    value = (arf_xi.value - _bit(ks, "ks") - eighth) % 2
    return Residual(value=value, modulus=constants.ARF_MODULUS)


def verify_closed_brown(sigma, f_dot_f, beta_f, ks=0):
    """
    sigma = F.F + 2 beta(F) + 8 KS mod 16.
    """
    _finite(beta_f, "Brown invariant of the characteristic surface")
    value = (sigma - f_dot_f - 2 * beta_f.residue - 8 * _bit(ks, "ks")) % 16
    return Residual(value=value, modulus=constants.BROWN_MODULUS)


def verify_closed_scenario(c):
    if c.orientable:
        return verify_closed(c.sigma, c.square, c.invariant, c.ks)
    return verify_closed_brown(c.sigma, c.square, c.invariant, c.ks)


def _relative_value(s, mu):
    if s.orientable:
        eighth = _eighth(s.sigma_x, s.f_square)
        return (s.surface_invariant.value + s.boundary_invariant.value
                - eighth - mu - s.ks) % 2
    return (2 * s.surface_invariant.residue + 2 * s.boundary_invariant.residue
            - s.sigma_x + s.f_square - 8 * mu - 8 * s.ks) % 16


def verify_relative(s):
    """
    Orientable: Arf(F) + Arf(dF) = (sigma - [F]^2) / 8 + mu + KS mod 2.
    Nonorientable: 2 beta(F) + 2 beta(dF) = sigma - F.F + 8 mu + 8 KS mod 16.
    """
    modulus = constants.ARF_MODULUS if s.orientable else constants.BROWN_MODULUS
    return Residual(value=_relative_value(s, s.mu_boundary), modulus=modulus)


def solve_mu(s):
    """
    The value of mu(dX) for which the relative congruence holds.
    """
    if s.orientable:
        return _relative_value(s, 0)

    rest = _relative_value(s, 0)
    if rest % 8 != 0:
        raise DivisibilityError("Brown scenario residual {} mod 16 cannot be absorbed by "
                                "8 mu".format(rest))
    return (rest // 8) % 2


def build_surgery_scenario(k, alpha):
    """
    X is B^4 with an alpha-framed 2-handle along K, F is the core of the
    handle capped with a Seifert surface of the mirror image of K pushed
    into B^4, and the boundary of F is a copy of K in the boundary of X.
    """
    if alpha not in (-1, 1):
        raise InvalidFormError("Surgery coefficient must be +1 or -1, got {!r}".format(alpha))
    if k.components != 1:
        raise InvalidFormError("Surgery scenario needs a knot, got {} components".format(
            k.components))

    scenario = RelativeScenario(sigma_x=alpha,
                                f_square=alpha,
                                surface=constants.ORIENTABLE,
                                surface_invariant=ArfValue.ZERO,
                                boundary_invariant=arf_of_link(k))
    scenario = attr.evolve(scenario, mu_boundary=solve_mu(scenario))

    expected = mu_from_surgery(k, alpha)
    if scenario.mu_boundary != expected:
        raise InternalError("Scenario gives mu = {} but the surgery formula gives {}".format(
            scenario.mu_boundary, expected))

    out.verbose("Surgery scenario with alpha {} has mu {}".format(alpha, scenario.mu_boundary))
    return scenario


def verify_collar_brown(beta_link, beta_f, f_dot_f):
    """
    For a surface F in a collar bounded by L: 2 beta(L) = 2 beta(F) + F.F
    mod 8.
    """
    _finite(beta_link, "Brown invariant of the link")
    _finite(beta_f, "Brown invariant of the surface")
    value = (2 * beta_link.residue - 2 * beta_f.residue - f_dot_f) % 8
    return Residual(value=value, modulus=constants.COLLAR_MODULUS)


def arf_from_disk(sigma_x, f_square, mu_boundary=0, ks=0):
    """
    Arf of a knot bounding a characteristic disk:
    (sigma(X) - [F]^2) / 8 + mu(dX) + KS(X) mod 2.
    """
    eighth = _eighth(sigma_x, f_square)
    return ArfValue.from_bit(eighth + _bit(mu_boundary, "mu_boundary") + _bit(ks, "ks"))


def build_planar_scenario(beta_link):
    """
    A connected planar surface in B^4 bounded by the link: every number
    but beta(L) is zero.  When verify_relative fails on it the link
    bounds no such surface.
    """
    return RelativeScenario(sigma_x=0,
                            f_square=0,
                            surface=constants.NONORIENTABLE,
                            surface_invariant=BrownValue(0),
                            boundary_invariant=beta_link)

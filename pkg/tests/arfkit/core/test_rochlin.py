import random

import attr
import pytest

from arfkit.base import constants
from arfkit.base.exceptions import (DivisibilityError, InconsistentDataError,
                                    InvalidFormError, NotUnimodularError)
from arfkit.core import lattice, rochlin, seifert
from arfkit.core.enhanced import BrownValue
from arfkit.core.quadspace import ArfValue
from arfkit.core.rochlin import ClosedScenario, EvenPresentation, RelativeScenario
from arfkit.core.seifert import SeifertData

from ..randomdata import random_even_lattice, random_knot


UNKNOT = SeifertData([])
TREFOIL = SeifertData([[-1, 1], [0, -1]])
FIGURE_EIGHT = SeifertData([[-1, 1], [0, 1]])


def orientable(sigma_x, f_square, arf_f, arf_boundary, mu=0, ks=0):
    return RelativeScenario(sigma_x=sigma_x, f_square=f_square,
                            surface=constants.ORIENTABLE,
                            surface_invariant=ArfValue(arf_f),
                            boundary_invariant=ArfValue(arf_boundary),
                            mu_boundary=mu, ks=ks)


def test_even_presentation_validation():
    with pytest.raises(InvalidFormError):
        EvenPresentation(lattice.diagonal(1))

    with pytest.raises(NotUnimodularError):
        EvenPresentation([[2]])

    assert EvenPresentation([[0, 1], [1, 0]]).lam == lattice.hyperbolic()


def test_mu_from_presentation():
    assert rochlin.mu_from_presentation(EvenPresentation([])) == 0
    assert rochlin.mu_from_presentation(EvenPresentation(lattice.e8())) == 1

    double = lattice.direct_sum(lattice.e8(), lattice.e8())
    assert rochlin.mu_from_presentation(EvenPresentation(double)) == 0

    stabilized = lattice.direct_sum(lattice.e8(), lattice.hyperbolic())
    assert rochlin.mu_from_presentation(EvenPresentation(stabilized)) == 1


def test_mu_additive_random():
    rng = random.Random(31)
    for _ in range(200):
        a = random_even_lattice(rng, max_dim=10)
        b = random_even_lattice(rng, max_dim=10)
        total = rochlin.mu_from_presentation(EvenPresentation(lattice.direct_sum(a, b)))
        mu_a = rochlin.mu_from_presentation(EvenPresentation(a))
        mu_b = rochlin.mu_from_presentation(EvenPresentation(b))
        assert total == mu_a ^ mu_b


def test_mu_from_surgery():
    assert rochlin.mu_from_surgery(UNKNOT, 1) == 0
    assert rochlin.mu_from_surgery(TREFOIL, 1) == 1
    assert rochlin.mu_from_surgery(TREFOIL, 2) == 0
    assert rochlin.mu_from_surgery(TREFOIL, -3) == 1

    with pytest.raises(InvalidFormError):
        rochlin.mu_from_surgery(SeifertData([[-1]], components=2), 1)


def test_verify_closed():
    assert rochlin.verify_closed(0, 0, ArfValue.ZERO).holds
    assert rochlin.verify_closed(8, 0, ArfValue.ZERO, ks=1).holds
    assert rochlin.verify_closed(16, 0, ArfValue.ZERO).holds

    residual = rochlin.verify_closed(8, 0, ArfValue.ZERO)
    assert not residual.holds
    assert residual.value == 1
    assert residual.modulus == 2

    with pytest.raises(DivisibilityError):
        rochlin.verify_closed(4, 0, ArfValue.ZERO)

    with pytest.raises(InconsistentDataError):
        rochlin.verify_closed(0, 0, ArfValue.INFINITY)


def test_verify_closed_brown():
    assert rochlin.verify_closed_brown(0, 0, BrownValue(0)).holds
    assert rochlin.verify_closed_brown(0, -2, BrownValue(1)).holds
    assert rochlin.verify_closed_brown(8, 0, BrownValue(4)).holds

    residual = rochlin.verify_closed_brown(0, 0, BrownValue(1))
    assert residual.value == 14
    assert residual.modulus == 16

    with pytest.raises(InconsistentDataError):
        rochlin.verify_closed_brown(0, 0, BrownValue(None))


def test_closed_scenario():
    rp2 = ClosedScenario(sigma=0, square=-2, surface=constants.NONORIENTABLE,
                         invariant=BrownValue(1))
    assert rochlin.verify_closed_scenario(rp2).holds

    e8 = ClosedScenario(sigma=8, square=0, surface=constants.ORIENTABLE,
                        invariant=ArfValue.ZERO, ks=1)
    assert e8.orientable
    assert rochlin.verify_closed_scenario(e8).holds

    for kwargs in [dict(surface="klein", invariant=ArfValue.ZERO),
                   dict(surface=constants.ORIENTABLE, invariant=BrownValue(0)),
                   dict(surface=constants.ORIENTABLE, invariant=ArfValue.ZERO, ks=2)]:
        with pytest.raises(InvalidFormError):
            ClosedScenario(sigma=0, square=0, **kwargs)


def test_relative_scenario_validation():
    for kwargs in [dict(surface="klein", surface_invariant=ArfValue.ZERO,
                        boundary_invariant=ArfValue.ZERO),
                   dict(surface=constants.ORIENTABLE, surface_invariant=BrownValue(0),
                        boundary_invariant=ArfValue.ZERO),
                   dict(surface=constants.NONORIENTABLE, surface_invariant=BrownValue(0),
                        boundary_invariant=ArfValue.ZERO),
                   dict(surface=constants.ORIENTABLE, surface_invariant=ArfValue.ZERO,
                        boundary_invariant=ArfValue.ZERO, mu_boundary=True)]:
        with pytest.raises(InvalidFormError):
            RelativeScenario(sigma_x=0, f_square=0, **kwargs)

    with pytest.raises(InconsistentDataError):
        orientable(0, 0, 0, "inf")


def test_verify_relative():
    assert rochlin.verify_relative(orientable(0, 0, 0, 0)).holds
    assert rochlin.verify_relative(orientable(1, 1, 0, 1, mu=1)).holds
    assert not rochlin.verify_relative(orientable(1, 1, 0, 1, mu=0)).holds

    brown = RelativeScenario(sigma_x=0, f_square=0, surface=constants.NONORIENTABLE,
                             surface_invariant=BrownValue(4),
                             boundary_invariant=BrownValue(4))
    residual = rochlin.verify_relative(brown)
    assert residual.holds
    assert residual.modulus == 16

    with pytest.raises(DivisibilityError):
        rochlin.verify_relative(orientable(3, 0, 0, 0))


def test_relative_degenerates_to_closed_random():
    rng = random.Random(32)
    for _ in range(200):
        f_square = rng.randint(-40, 40)
        sigma = f_square + 8 * rng.randint(-5, 5)
        arf = rng.randint(0, 1)
        ks = rng.randint(0, 1)
        relative = rochlin.verify_relative(orientable(sigma, f_square, arf, 0, ks=ks))
        closed = rochlin.verify_closed(sigma, f_square, ArfValue(arf), ks=ks)
        assert relative == closed


def test_to_brown_agrees_random():
    rng = random.Random(33)
    for _ in range(200):
        f_square = rng.randint(-40, 40)
        s = orientable(f_square + 8 * rng.randint(-5, 5), f_square,
                       rng.randint(0, 1), rng.randint(0, 1),
                       mu=rng.randint(0, 1), ks=rng.randint(0, 1))
        brown = s.to_brown()
        assert not brown.orientable
        assert brown.to_brown() == brown
        assert rochlin.verify_relative(brown).holds == rochlin.verify_relative(s).holds


def test_solve_mu():
    assert rochlin.solve_mu(orientable(1, 1, 0, 1)) == 1
    assert rochlin.solve_mu(orientable(0, 0, 0, 0)) == 0

    brown = RelativeScenario(sigma_x=0, f_square=0, surface=constants.NONORIENTABLE,
                             surface_invariant=BrownValue(0),
                             boundary_invariant=BrownValue(4))
    assert rochlin.solve_mu(brown) == 1

    odd = attr.evolve(brown, boundary_invariant=BrownValue(1))
    with pytest.raises(DivisibilityError):
        rochlin.solve_mu(odd)


def test_build_surgery_scenario():
    assert rochlin.build_surgery_scenario(UNKNOT, 1).mu_boundary == 0

    trefoil = rochlin.build_surgery_scenario(TREFOIL, 1)
    assert trefoil == orientable(1, 1, 0, 1, mu=1)

    assert rochlin.build_surgery_scenario(FIGURE_EIGHT, -1).mu_boundary == 1

    for k, alpha in [(TREFOIL, 2), (TREFOIL, 0), (SeifertData([[-1]], components=2), 1)]:
        with pytest.raises(InvalidFormError):
            rochlin.build_surgery_scenario(k, alpha)


def test_surgery_scenarios_random():
    rng = random.Random(34)
    for _ in range(200):
        k = random_knot(rng, rng.randint(0, 4))
        for alpha in (-1, 1):
            scenario = rochlin.build_surgery_scenario(k, alpha)
            assert scenario.mu_boundary == rochlin.mu_from_surgery(k, alpha)
            assert rochlin.verify_relative(scenario).holds
            assert rochlin.verify_relative(scenario.to_brown()).holds


def test_verify_collar_brown():
    assert rochlin.verify_collar_brown(BrownValue(0), BrownValue(1), -2).holds
    assert rochlin.verify_collar_brown(BrownValue(0), BrownValue(0), 0).holds

    residual = rochlin.verify_collar_brown(BrownValue(4), BrownValue(0), 0)
    assert residual.holds
    assert residual.modulus == 8

    assert not rochlin.verify_collar_brown(BrownValue(1), BrownValue(0), 0).holds

    with pytest.raises(InconsistentDataError):
        rochlin.verify_collar_brown(BrownValue(None), BrownValue(0), 0)


def test_arf_from_disk():
    assert rochlin.arf_from_disk(1, 1, mu_boundary=1) == ArfValue.ONE
    assert rochlin.arf_from_disk(0, 0) == ArfValue.ZERO
    assert rochlin.arf_from_disk(8, 0) == ArfValue.ONE
    assert rochlin.arf_from_disk(8, 0, ks=1) == ArfValue.ZERO

    with pytest.raises(DivisibilityError):
        rochlin.arf_from_disk(1, 0)


def test_planar_scenario():
    borromean = seifert.link_invariants(SeifertData(
        [[-1, 1, 1, 0], [0, -1, 0, 1], [0, 1, 1, 0], [0, 0, -1, 1]],
        components=3, lk=[[0, 0, 0], [0, 0, 0], [0, 0, 0]]))
    scenario = rochlin.build_planar_scenario(borromean.beta)
    assert not rochlin.verify_relative(scenario).holds

    unlink = rochlin.build_planar_scenario(BrownValue(0))
    assert rochlin.verify_relative(unlink).holds

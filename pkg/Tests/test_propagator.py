__author__ 		= "Lekan Molu"
__copyright__ 	= "2026, Hill Operator Spectra in Python"
__license__ 	= "Molux Licence"
__maintainer__ 	= "Lekan Molu"
__status__ 		= "Completed"

import logging
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from HillBandPy.Utilities import *
from HillBandPy.Potentials import buildPrimitive, randomPotential, SawtoothCombProfile
from HillBandPy.Propagator import *
import HillBandPy.Propagator.quasi_integrate as quasiModule
from HillBandPy.Oracle import kpDiscriminant, kpTransfer, kpQuasiTransfer


def test_integrator_options():
    opts = integratorSet()
    assert opts.relTol == 1e-10 and opts.absTol == 1e-12
    assert opts.method == 'DOP853' and opts.breakpointSplitting == 'on'
    tighter = integratorSet(opts, relTol=1e-12, breakpointSplitting=False)
    assert tighter.relTol == 1e-12 and tighter.breakpointSplitting == 'off'
    assert opts.relTol == 1e-10
    assert integratorSet(relTol=None).relTol == 1e-10
    with pytest.raises(UsageError):
        integratorSet(stepSize=0.1)
    with pytest.raises(UsageError):
        integratorSet(relTol=0.0)
    with pytest.raises(UsageError):
        integratorSet(method='Euler')
    with pytest.raises(UsageError):
        integratorSet(stats='maybe')


def test_prop_state():
    s = PropState(1.0, 2.0, 0.5)
    assert (s.u, s.u1, s.x) == (1.0, 2.0, 0.5)
    with pytest.raises(NumericalBlowupError):
        PropState(np.nan, 0.0)
    with pytest.raises(NumericalBlowupError):
        PropState([1.0, np.inf], [0.0, 0.0])


def test_derivative_jumps_at_the_comb(sawtooth):
    s = PropState(1.0, 0.0, 0.0)
    assert s.derivative(sawtooth, 'right') == pytest.approx(0.5)
    assert s.derivative(sawtooth, 'left') == pytest.approx(-0.5)
    with pytest.raises(UsageError):
        s.derivative(sawtooth, 'up')


def test_system_rhs(free, sawtooth):
    assert systemRHS(free, 1.0, PropState(1.0, 0.0)) == (0.0, -1.0)
    assert systemRHS(free, 0.0, PropState(1.0, 0.0)) == (0.0, 0.0)
    du, du1 = systemRHS(sawtooth, 0.0, PropState(1.0, 0.0, 0.25))
    assert du == pytest.approx(0.25)
    assert du1 == pytest.approx(-0.0625)


def test_integration_segments(sawtooth, mathieu):
    opts = integratorSet()
    assert integrationSegments(sawtooth, 0.0, 2.5, opts) == [(0.0, 1.0), (1.0, 2.0), (2.0, 2.5)]
    assert integrationSegments(sawtooth, 0.3, 0.9, opts) == [(0.3, 0.9)]
    assert integrationSegments(sawtooth, 0.0, 2.5, integratorSet(breakpointSplitting='off')) == [(0.0, 2.5)]
    assert integrationSegments(buildPrimitive(mathieu), 0.0, 3.0, opts) == [(0.0, 3.0)]


def test_propagate_free(free):
    s = propagate(free, np.pi ** 2, PropState(1.0, 0.0), 1.0)
    assert s.x == 1.0
    assert s.u == pytest.approx(-1.0, abs=1e-9)
    assert s.u1 == pytest.approx(0.0, abs=1e-9)
    s = propagate(free, 0.0, PropState(0.0, 1.0), 1.0)
    assert (s.u, s.u1) == pytest.approx((1.0, 1.0), abs=1e-12)

    lam = np.array([0.0, 1.0, 4.0])
    s = propagate(free, lam, PropState(1.0, 0.0), 0.5)
    np.testing.assert_allclose(s.u, np.cos(np.sqrt(lam) * 0.5), atol=1e-10)
    with pytest.raises(UsageError):
        propagate(free, 1.0, PropState(1.0, 0.0, 0.5), 0.2)


def test_free_monodromy(free):
    s = 2.3
    M = monodromy(free, s * s)
    expected = [[np.cos(s), np.sin(s) / s], [-s * np.sin(s), np.cos(s)]]
    np.testing.assert_allclose(M.entries, expected, atol=1e-9)
    np.testing.assert_allclose(monodromy(free, 0.0).entries, [[1, 1], [0, 1]], atol=1e-12)


def test_sawtooth_monodromy_matches_kronig_penney(sawtooth):
    M = monodromy(sawtooth, 1.0)
    np.testing.assert_allclose(M.entries, kpQuasiTransfer(1.0, 1.0), atol=1e-8)
    assert M.trace() == pytest.approx(np.trace(kpTransfer(1.0, 1.0)), abs=1e-8)
    assert monodromy(sawtooth, np.pi ** 2).trace() == pytest.approx(-2.0, abs=1e-8)


def test_discriminant_examples(free, sawtooth):
    assert discriminant(free, 4 * np.pi ** 2) == pytest.approx(2.0, abs=1e-8)
    assert discriminant(free, np.pi ** 2) == pytest.approx(-2.0, abs=1e-8)
    assert discriminant(sawtooth, 4 * np.pi ** 2) == pytest.approx(2.0, abs=1e-8)
    assert isinstance(discriminant(free, 1.0), float)


@pytest.mark.parametrize('alpha', [1.0, 4.0, -2.0])
def test_discriminant_closed_form(alpha):
    lam = np.linspace(-20.0, 200.0, 45)
    delta = discriminant(SawtoothCombProfile(alpha), lam)
    np.testing.assert_allclose(delta, kpDiscriminant(alpha, lam), rtol=1e-8, atol=1e-8)


def test_discriminant_derivative(sawtooth):
    lam = np.array([3.0, 20.0, 55.0])
    delta, dDelta = discriminantDerivative(sawtooth, lam)
    h = 1e-5
    fd = (kpDiscriminant(1.0, lam + h) - kpDiscriminant(1.0, lam - h)) / (2 * h)
    np.testing.assert_allclose(delta, kpDiscriminant(1.0, lam), atol=1e-8)
    np.testing.assert_allclose(dDelta, fd, rtol=1e-5, atol=1e-8)
    d, dd = discriminantDerivative(sawtooth, 20.0)
    assert isinstance(d, float) and isinstance(dd, float)


def test_lagrange_bracket(sawtooth):
    a, b = PropState(1.0, 0.0), PropState(0.0, 1.0)
    assert lagrangeBracket(a, b) == 1.0
    assert lagrangeBracket(a, a) == 0.0
    a1 = propagate(sawtooth, 5.0, a, 0.7)
    b1 = propagate(sawtooth, 5.0, b, 0.7)
    assert lagrangeBracket(a1, b1) == pytest.approx(1.0, abs=1e-9)
    with pytest.raises(UsageError):
        lagrangeBracket(a, b1)


def test_unit_determinant(mathieu):
    lam = np.linspace(-10.0, 300.0, 32)
    for profile in (buildPrimitive(mathieu), SawtoothCombProfile(4.0),
                    buildPrimitive(randomPotential(1, 16))):
        assert np.max(monodromy(profile, lam).detDefect()) < 1e-9


def test_system_rhs_batches_and_variational_rows(free, sawtooth):
    state = PropState([1.0, 0.0], [0.0, 1.0], 0.25)
    tangent = PropState([0.5, 0.0], [0.0, 0.0], 0.25)
    du, du1, dv, dv1 = systemRHS(free, 2.0, state, tangent)
    np.testing.assert_array_equal(du, [0.0, 1.0])
    np.testing.assert_array_equal(du1, [-2.0, 0.0])
    np.testing.assert_array_equal(dv, [0.0, 0.0])
    np.testing.assert_array_equal(dv1, [-2.0, 0.0])

    # the left piece of the sawtooth at its jump
    du, du1 = systemRHS(sawtooth, 0.0, PropState(1.0, 0.0, 1.0), piece=sawtooth.piece(0.0, 1.0))
    assert du == pytest.approx(-0.5)


def test_integrator_steps_the_system_rhs(sawtooth, monkeypatch):
    calls = []

    def counted(*args, **kwargs):
        calls.append(kwargs.get('piece'))
        return systemRHS(*args, **kwargs)

    monkeypatch.setattr(quasiModule, 'systemRHS', counted)
    M = monodromy(sawtooth, 1.0)
    assert calls and all(piece is not None for piece in calls)
    np.testing.assert_allclose(M.entries, kpQuasiTransfer(1.0, 1.0), atol=1e-8)


def test_monodromy_near_identity(free, sawtooth):
    M = monodromy(free, np.pi ** 2)
    assert M.identityDefect() < 1e-8
    assert M.offset(-2) == pytest.approx(0.0, abs=1e-12)
    M = monodromy(sawtooth, np.array([3.0, 20.0, 55.0]))
    np.testing.assert_allclose(M.splitting(), M.trace() ** 2 - 4.0 * M.det(), atol=1e-9)
    for target in (2, -2):
        np.testing.assert_allclose(M.offset(target), M.trace() - target, atol=1e-9)
    assert np.all(M.identityDefect() > 1e-3)


@pytest.mark.parametrize('x0', [0.3, 0.5])
def test_trace_is_independent_of_the_base_point(mathieu, x0):
    lam = np.linspace(-10.0, 200.0, 15)
    for profile in (SawtoothCombProfile(1.0), SawtoothCombProfile(-3.0),
                    buildPrimitive(mathieu), buildPrimitive(randomPotential(7, 16))):
        np.testing.assert_allclose(monodromy(profile, lam, x0).trace(),
                                   monodromy(profile, lam).trace(), rtol=1e-8, atol=1e-8)


def test_unit_determinant_on_a_wide_grid():
    lam = np.linspace(-50.0, 500.0, 200)
    for profile in (SawtoothCombProfile(1.0), SawtoothCombProfile(-1.0),
                    SawtoothCombProfile(4.0), buildPrimitive(randomPotential(7, 16))):
        assert np.max(monodromy(profile, lam).detDefect()) < 1e-9


@pytest.mark.parametrize('lam', [1.0, 5.0, 60.0])
def test_lagrange_bracket_is_constant(sawtooth, lam):
    a, b = PropState(1.0, 0.2), PropState(-0.4, 1.0)
    start = lagrangeBracket(a, b)
    for x in np.linspace(0.15, 1.95, 10):
        value = lagrangeBracket(propagate(sawtooth, lam, a, x), propagate(sawtooth, lam, b, x))
        assert value == pytest.approx(start, rel=1e-8, abs=1e-9)


def test_derivative_jump_of_propagated_solutions():
    alpha = 2.0
    comb = SawtoothCombProfile(alpha)
    lam = np.array([-5.0, 1.0, 10.0, 40.0, 90.0])
    s = propagate(comb, lam, PropState(1.0, 0.3), 1.0)
    jump = s.derivative(comb, 'right') - s.derivative(comb, 'left')
    np.testing.assert_allclose(jump, alpha * s.u, rtol=1e-12, atol=1e-12)


def test_floquet_quantities(free):
    rho = monodromy(free, 2.0).floquetMultipliers()
    assert rho[0] * rho[1] == pytest.approx(1.0)
    assert abs(rho[0]) == pytest.approx(1.0)
    assert quasiMomentum(free, (np.pi / 2) ** 2) == pytest.approx(np.pi / 2, abs=1e-8)
    assert np.isnan(quasiMomentum(free, -1.0))
    assert isStable(free, 1.0) and not isStable(free, -1.0)
    np.testing.assert_array_equal(isStable(free, np.array([-1.0, 1.0])), [False, True])
    assert lambdaFloor(SawtoothCombProfile(1.0)) == -9.0


def test_sensitivity_rows(free):
    Y0 = np.broadcast_to(np.eye(2), (2, 2, 2))
    Y = quasiIntegrate(free, np.array([1.0, 2.0]), Y0, 0.0, 1.0, sensitivity=True)
    assert Y.shape == (2, 4, 2)
    with pytest.raises(UsageError):
        quasiIntegrate(free, np.array([1.0]), np.zeros((2, 2, 2)), 0.0, 1.0)


def test_step_budget(free):
    with pytest.raises(IntegrationError):
        monodromy(free, 1e4, options=integratorSet(maxSteps=2))


def test_stats_are_logged(free, caplog):
    caplog.set_level(logging.INFO)
    monodromy(free, 1.0, options=integratorSet(stats='on'))
    assert 'steps in' in caplog.text


@given(alpha=st.floats(-6, 6), lam=st.floats(-30, 300))
@settings(max_examples=100, deadline=None)
def test_kronig_penney_trace_identity(alpha, lam):
    assert np.trace(kpTransfer(alpha, lam)) == pytest.approx(kpDiscriminant(alpha, lam),
                                                              rel=1e-12, abs=1e-12)
    assert np.trace(kpQuasiTransfer(alpha, lam)) == pytest.approx(kpDiscriminant(alpha, lam),
                                                                   rel=1e-12, abs=1e-12)


@given(c=st.floats(-10, 10), lam=st.floats(-5, 150))
@settings(max_examples=10, deadline=None)
def test_shift_equivariance_of_the_discriminant(c, lam):
    q = randomPotential(2, 8)
    base = discriminant(buildPrimitive(q), lam)
    moved = discriminant(buildPrimitive(q.shifted(c)), lam + c)
    assert moved == pytest.approx(base, rel=1e-8, abs=1e-8)

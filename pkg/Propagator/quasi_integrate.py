__all__ = ["quasiIntegrate", "integrationSegments"]

__author__ = "Lekan Molux"
__date__ = "Oct. 08, 2026"

import logging
import numpy as np

from HillBandPy.Utilities import *
from .integrator_set import integratorSet, INTEGRATOR_METHODS
from .prop_state import PropState
from .system_rhs import systemRHS

logger = logging.getLogger(__name__)


def integrationSegments(profile, x0, x1, options):
    """
        Splits [x0, x1] at the jumps of Q (the periodic images of
        profile.breakpoints) when breakpointSplitting is on. Returns a
        list of (a, b) with a < b.
    """
    if not isOn(options.breakpointSplitting) or profile.isSmooth():
        return [(x0, x1)] if x1 > x0 else []
    cuts = [x0]
    for n in range(int(np.floor(x0)), int(np.ceil(x1)) + 1):
        for bp in profile.breakpoints:
            x = n + bp
            if x0 < x < x1:
                cuts.append(x)
    cuts.append(x1)
    cuts = sorted(set(cuts))
    return [(a, b) for a, b in zip(cuts[:-1], cuts[1:]) if b > a]


def _stepSegment(profile, Q, mu, Y, a, b, options, sensitivity, steps):
    shape = Y.shape
    muCol = mu[:, None]

    def fun(x, y):
        S = y.reshape(shape)
        state = PropState(S[:, 0], S[:, 1], x)
        tangent = PropState(S[:, 2], S[:, 3], x) if sensitivity else None
        return np.stack(systemRHS(profile, muCol, state, tangent, piece=Q), axis=1).ravel()

    solver = INTEGRATOR_METHODS[options.method](fun, a, Y.ravel(), b,
                                                rtol=options.relTol, atol=options.absTol)
    while solver.status == 'running':
        message = solver.step()
        steps += 1
        if solver.status == 'failed':
            error(f'integrator failed at x={solver.t:.6g}: {message}', IntegrationError)
        if not np.all(np.isfinite(solver.y)):
            error(f'non-finite state at x={solver.t:.6g} for lambda-mean in '
                  f'[{mu.min():.6g}, {mu.max():.6g}]', NumericalBlowupError)
        if steps >= options.maxSteps and solver.status == 'running':
            error(f'maxSteps={options.maxSteps} exceeded at x={solver.t:.6g}',
                  IntegrationError)
    return solver.y.reshape(shape), steps


def quasiIntegrate(profile, mu, Y0, x0, x1, options=None, sensitivity=False):
    """
     Y = quasiIntegrate(profile, mu, Y0, x0, x1, options, sensitivity)

     Integrates the quasi-derivative system from x0 to x1 for a batch of
     centred spectral parameters at once.

     Inp.ts:
       profile     - PrimitiveProfile
       mu          - (L,) spectral parameters measured from the mean
       Y0          - (L, 2, c) initial columns (u; u^[1]) at x0
       x0, x1      - x0 <= x1
       options     - integratorSet Bundle
       sensitivity - also integrate d/dmu of the columns (variational
                     equation), started from zero

     Output:
       Y - (L, 2, c) columns at x1, or (L, 4, c) with the mu-derivatives in
           rows 2 and 3 when sensitivity is on.
    """
    if options is None:
        options = integratorSet()
    if x1 < x0:
        error(f'cannot propagate backwards from x={x0} to x={x1}')
    mu = np.atleast_1d(np.asarray(mu, dtype=np.float64))
    Y0 = np.asarray(Y0, dtype=np.float64)
    if Y0.ndim != 3 or Y0.shape[0] != mu.size or Y0.shape[1] != 2:
        error(f'initial data must have shape ({mu.size}, 2, c), got {Y0.shape}')

    segments = integrationSegments(profile, float(x0), float(x1), options)
    rows = 4 if sensitivity else 2
    out = np.zeros((mu.size, rows, Y0.shape[2]))
    out[:, :2] = Y0

    startTime = cputime()
    steps = 0
    for start in range(0, mu.size, options.batchSize):
        block = slice(start, start + options.batchSize)
        Y = out[block].copy()
        blockSteps = 0
        for a, b in segments:
            Q = profile.piece(a, b) if isOn(options.breakpointSplitting) else profile.evaluate
            Y, blockSteps = _stepSegment(profile, Q, mu[block], Y, a, b, options,
                                         sensitivity, blockSteps)
        out[block] = Y
        steps += blockSteps
    endTime = cputime()

    if isOn(options.stats):
        info(f'{steps} steps in {(endTime-startTime):.2} seconds from {x0:.2f} to {x1:.2f}.')
    return out

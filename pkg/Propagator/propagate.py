__all__ = ["propagate"]

import numpy as np

from HillBandPy.Utilities import *
from .prop_state import PropState
from .quasi_integrate import quasiIntegrate


def propagate(profile, lam, state, x1, options=None):
    """
     state1 = propagate(profile, lam, state, x1, options)

     The unique solution of -u'' + q u = lam u with data (u, u^[1]) given
     at state.x, evaluated at x1 >= state.x. The equation is integrated in
     quasi-derivative coordinates at lam - C, C the mean of the potential.

     Inp.ts:
       profile - PrimitiveProfile of q
       lam     - scalar or array of spectral parameters
       state   - PropState at the start point (arrays broadcast with lam)
       x1      - end point
       options - integratorSet Bundle

     Output:
       state1 - PropState at x1

     Raises IntegrationError when maxSteps is hit and
     NumericalBlowupError when the state stops being finite.
    """
    if x1 < state.x:
        error(f'x1={x1} lies before the start point x={state.x}')
    lam, scalar = asFloatArray(lam)
    u = np.broadcast_to(state.u, lam.shape)
    u1 = np.broadcast_to(state.u1, lam.shape)
    Y0 = np.stack([u, u1], axis=1)[:, :, None]

    Y = quasiIntegrate(profile, lam - profile.meanShift, Y0, state.x, x1, options)
    if scalar:
        return PropState(Y[0, 0, 0], Y[0, 1, 0], x1)
    return PropState(Y[:, 0, 0], Y[:, 1, 0], x1)

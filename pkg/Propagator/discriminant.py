__all__ = ["discriminant", "discriminantDerivative"]

import numpy as np

from HillBandPy.Utilities import *
from .integrator_set import integratorSet
from .quasi_integrate import quasiIntegrate
from .monodromy import monodromy


def discriminant(profile, lam, options=None):
    """
        The Floquet discriminant Delta(lam) = trace M(lam) at base point 0.
        The spectrum is the set of real lam with |Delta(lam)| <= 2.
        Scalar in, float out; array in, array out.
    """
    lam, scalar = asFloatArray(lam)
    values = monodromy(profile, lam, 0.0, options).trace()
    return float(values[0]) if scalar else values


def discriminantDerivative(profile, lam, options=None):
    """
     dDelta = discriminantDerivative(profile, lam, options)

     d Delta / d lam from the variational equation of the quasi-derivative
     system, integrated alongside the fundamental matrix. Returns
     (Delta, dDelta), floats or arrays like lam.
    """
    if options is None:
        options = integratorSet()
    lam, scalar = asFloatArray(lam)
    Y0 = np.broadcast_to(np.eye(2), (lam.size, 2, 2))
    Y = quasiIntegrate(profile, lam - profile.meanShift, Y0, 0.0, 1.0, options,
                       sensitivity=True)
    delta = Y[:, 0, 0] + Y[:, 1, 1]
    dDelta = Y[:, 2, 0] + Y[:, 3, 1]
    if scalar:
        return float(delta[0]), float(dDelta[0])
    return delta, dDelta

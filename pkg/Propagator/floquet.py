__all__ = ["quasiMomentum", "isStable", "lambdaFloor"]

import numpy as np

from HillBandPy.Utilities import *
from .discriminant import discriminant


def quasiMomentum(profile, lam, options=None):
    """
        Bloch quasi-momentum theta in [0, pi] with Delta(lam) = 2 cos theta
        inside the bands; NaN in the gaps.
    """
    delta = np.asarray(discriminant(profile, lam, options))
    with np.errstate(invalid='ignore'):
        theta = np.where(np.abs(delta) <= 2.0, np.arccos(np.clip(0.5 * delta, -1.0, 1.0)), np.nan)
    return float(theta) if theta.ndim == 0 else theta


def isStable(profile, lam, options=None):
    "True where every solution is bounded (|Delta| <= 2): lam lies in a band."
    delta = np.asarray(discriminant(profile, lam, options))
    stable = np.abs(delta) <= 2.0
    return bool(stable) if stable.ndim == 0 else stable


def lambdaFloor(profile):
    """
        A point below the spectrum: -4 (1 + ||Q||_inf^2 + |C|). The form
        bound int Q'|u|^2 >= -||Q||_inf^2 ||u||^2 places lambda_0 above
        C - ||Q||_inf^2, which this floor undercuts.
    """
    return -4.0 * (1.0 + profile.supNorm() ** 2 + abs(profile.meanShift))

__all__ = ["kpDiscriminant", "kpTransfer", "kpQuasiTransfer", "freeMonodromy"]

import numpy as np


def _sinc(lam):
    "(sin s / s, cos s) with s = sqrt(lam), continued through lam <= 0."
    lam = np.asarray(lam, dtype=np.float64)
    s = np.sqrt(np.abs(lam))
    with np.errstate(invalid='ignore', divide='ignore'):
        osc = np.where(s > 0, np.sin(s) / np.where(s > 0, s, 1.0), 1.0)
        hyp = np.where(s > 0, np.sinh(s) / np.where(s > 0, s, 1.0), 1.0)
    sinc = np.where(lam > 0, osc, hyp)
    cos = np.where(lam > 0, np.cos(s), np.cosh(s))
    return sinc, cos, s


def freeMonodromy(lam):
    """
        Monodromy of -u'' = lam u over one period in (u, u') coordinates:
        [[cos s, sin s / s], [-s sin s, cos s]], hyperbolic for lam < 0.
    """
    sinc, cos, s = _sinc(lam)
    lam = np.asarray(lam, dtype=np.float64)
    return np.stack([np.stack([cos, sinc], axis=-1),
                     np.stack([-lam * sinc, cos], axis=-1)], axis=-2)


def kpTransfer(alpha, lam):
    """
        J F: a free period F followed by the jump J = [[1, 0], [alpha, 1]]
        of the quasi-derivative across the delta at x = 1. det = 1.
    """
    F = freeMonodromy(lam)
    J = np.array([[1.0, 0.0], [float(alpha), 1.0]])
    return J @ F


def kpDiscriminant(alpha, lam):
    """
        Kronig-Penney discriminant 2 cos s + alpha sin s / s, s = sqrt(lam);
        2 cosh t + alpha sinh t / t with t = sqrt(-lam) for lam < 0 and the
        limit 2 + alpha at lam = 0.
    """
    sinc, cos, _ = _sinc(lam)
    value = 2.0 * cos + alpha * sinc
    return float(value) if np.ndim(value) == 0 else value


def kpQuasiTransfer(alpha, lam):
    """
        The comb monodromy over [0, 1] in the (u, u^[1]) coordinates of the
        sawtooth primitive Q = alpha (1/2 - x): S F S with
        S = [[1, 0], [alpha/2, 1]], half of the delta's jump on either side
        of the period. Similar to kpTransfer, so with the same trace.
    """
    F = freeMonodromy(lam)
    S = np.array([[1.0, 0.0], [0.5 * float(alpha), 1.0]])
    return S @ F @ S

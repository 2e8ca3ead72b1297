__all__ = ["Monodromy", "monodromy"]

__author__ = "Lekan Molux"
__date__ = "Oct. 09, 2026"

import logging
import numpy as np

from HillBandPy.Utilities import *
from .integrator_set import integratorSet
from .quasi_integrate import quasiIntegrate

logger = logging.getLogger(__name__)


class Monodromy(object):
    def __init__(self, entries, lam, basePoint=0.0):
        """
            The transfer matrix M(lam) taking (u, u^[1]) at x0 to
            (u, u^[1]) at x0 + 1.

            Parameters
            ==========
                entries: (2, 2) array, or (L, 2, 2) for L spectral parameters.
                lam: the spectral parameter(s).
                basePoint: x0.
        """
        self.entries = np.asarray(entries, dtype=np.float64)
        self.lam = lam
        self.basePoint = float(basePoint)

    def __repr__(self):
        return f'Monodromy(lam={self.lam}, basePoint={self.basePoint})'

    def trace(self):
        return np.trace(self.entries, axis1=-2, axis2=-1)

    def det(self):
        M = self.entries
        return M[..., 0, 0] * M[..., 1, 1] - M[..., 0, 1] * M[..., 1, 0]

    def detDefect(self):
        """
            |det M - 1| relative to the size of the products a d and b c,
            i.e. the cancellation the determinant suffers in floating
            point; equal to the absolute defect while the entries are O(1).
        """
        M = self.entries
        scale = np.maximum(1.0, np.maximum(np.abs(M[..., 0, 0] * M[..., 1, 1]),
                                           np.abs(M[..., 0, 1] * M[..., 1, 0])))
        return np.abs(self.det() - 1.0) / scale

    def floquetMultipliers(self):
        """
            Eigenvalues rho, 1/rho of M: roots of rho^2 - trace rho + 1. Real
            and reciprocal in gaps, unimodular and conjugate in bands.
        """
        half = 0.5 * self.trace().astype(np.complex128)
        root = np.sqrt(half * half - 1.0)
        return np.stack([half + root, half - root], axis=-1)

    def splitting(self):
        """
            (M11 - M22)^2 + 4 M12 M21, which is Delta^2 - 4 when det M = 1.
            Positive in gaps, negative in bands. Near M = +-I it keeps the
            relative accuracy of the entries, where Delta^2 - 4 cancels.
        """
        M = self.entries
        diff = M[..., 0, 0] - M[..., 1, 1]
        return diff * diff + 4.0 * M[..., 0, 1] * M[..., 1, 0]

    def offset(self, target):
        """
            Delta - target for target +-2, evaluated through splitting()
            where Delta has the sign of target.
        """
        d = self.trace()
        s = np.sign(target)
        return np.where(s * d > 0, s * self.splitting() / (np.abs(d) + 2.0), d - target)

    def identityDefect(self):
        """
            Distance of M from +-I: max(|M11 - M22|, k |M12|, |M21| / k) with
            k = sqrt(max(|lam|, 1)), the scaling of (u, u^[1]) at frequency k.
            Zero exactly at a doubled periodic or semiperiodic eigenvalue;
            of the order of the gap width inside a narrow open gap.
        """
        M = self.entries
        k = np.sqrt(np.maximum(np.abs(np.asarray(self.lam, dtype=np.float64)), 1.0))
        return np.maximum(np.abs(M[..., 0, 0] - M[..., 1, 1]),
                          np.maximum(k * np.abs(M[..., 0, 1]), np.abs(M[..., 1, 0]) / k))


def monodromy(profile, lam, x0=0.0, options=None):
    """
     M = monodromy(profile, lam, x0, options)

     Propagates the canonical initial states (1, 0) and (0, 1) from x0 to
     x0 + 1; they are the columns of M(lam). lam may be an array, in which
     case all the parameters are integrated in batches.
    """
    if options is None:
        options = integratorSet()
    lam, scalar = asFloatArray(lam)
    Y0 = np.broadcast_to(np.eye(2), (lam.size, 2, 2))
    Y = quasiIntegrate(profile, lam - profile.meanShift, Y0, x0, x0 + 1.0, options)

    M = Monodromy(Y[0] if scalar else Y, float(lam[0]) if scalar else lam, x0)
    defect = np.max(M.detDefect())
    if defect > options.detTol:
        warn(f'monodromy determinant off by {defect:.3g} (detTol={options.detTol:g}) '
             f'for lambda in [{lam.min():.6g}, {lam.max():.6g}]')
    return M

__all__ = ["GalerkinProblem", "galerkinMatrix", "galerkinEigenvalues"]

__author__ = "Lekan Molux"
__date__ = "Oct. 16, 2026"

import numpy as np
from scipy import linalg as la

from HillBandPy.Utilities import *


class GalerkinProblem(object):
    def __init__(self, potential, parity='periodic', size=256):
        """
            Fourier-Galerkin discretisation of -u'' + q u = lambda u on [0, 1]
            with periodic (u(1) = u(0)) or semiperiodic (u(1) = -u(0))
            conditions.

            Parameters
            ==========
                potential: FourierPotential.
                parity: 'periodic' (basis e^{2 pi i m x}) or 'semiperiodic'
                    (basis e^{i pi (2m+1) x}).
                size: number N of basis functions, m = -(N//2) .. N - N//2 - 1.
        """
        if parity not in ('periodic', 'semiperiodic'):
            error(f'parity must be periodic or semiperiodic, got {parity!r}')
        if int(size) < 1:
            error(f'size must be positive, got {size}')
        self.potential = potential
        self.parity = parity
        self.size = int(size)

    def __repr__(self):
        return f'GalerkinProblem(parity={self.parity}, size={self.size})'

    def modes(self):
        N = self.size
        return np.arange(-(N // 2), N - N // 2)

    def frequencies(self):
        m = self.modes()
        return 2 * np.pi * m if self.parity == 'periodic' else np.pi * (2 * m + 1)


def galerkinMatrix(gp):
    """
        H[m, m'] = freq(m)^2 delta_{m m'} + qhat(2 (m - m')), the mean on
        the diagonal. Hermitian by the symmetry of the potential table.
    """
    m = gp.modes()
    diff = m[:, None] - m[None, :]
    K = gp.potential.maxHarmonic
    ms, coeffs = gp.potential.denseCoefficients(K)
    H = np.zeros(diff.shape, dtype=np.complex128)
    inside = np.abs(diff) <= K
    H[inside] = coeffs[diff[inside] + K]
    H[np.diag_indices_from(H)] += gp.frequencies() ** 2
    return H


def galerkinEigenvalues(gp, count=None):
    "The lowest count eigenvalues of galerkinMatrix(gp), ascending."
    count = gp.size if count is None else int(count)
    if not 1 <= count <= gp.size:
        error(f'count must lie in [1, {gp.size}], got {count}')
    return la.eigh(galerkinMatrix(gp), eigvals_only=True,
                   subset_by_index=[0, count - 1])

__all__ = ["deltaComb"]

__author__ = "Lekan Molux"
__date__ = "Oct. 03, 2026"

import numpy as np

from HillBandPy.Utilities import *
from .fourier_potential import FourierPotential
from .primitive_profile import SawtoothCombProfile


def deltaComb(alpha, truncation=16):
    """
     p, profile = deltaComb(alpha, truncation)

     The Kronig-Penney comb q = alpha sum_n delta(x - n). Every Fourier
     coefficient equals alpha, so q sits in H^{-1}_per but not in L2.

     Inp.ts:
       alpha      - comb strength (finite)
       truncation - K of the returned harmonic table

     Output:
       p       - FourierPotential with qhat(2m) = alpha for 0 < |m| <= K and
                 mean alpha
       profile - exact SawtoothCombProfile Q(x) = alpha (1/2 - x) on (0, 1),
                 meanShift alpha
    """
    if not np.isfinite(alpha):
        error(f'Comb strength must be finite, got {alpha}')
    if truncation < 0:
        error(f'truncation must be non-negative, got {truncation}')
    alpha = float(alpha)
    table = {}
    for m in range(1, int(truncation) + 1):
        table[m] = complex(alpha)
        table[-m] = complex(alpha)
    return FourierPotential(table, alpha, int(truncation)), SawtoothCombProfile(alpha)

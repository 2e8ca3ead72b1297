__all__ = ["truncatePotential"]

from HillBandPy.Utilities import *
from .fourier_potential import FourierPotential


def truncatePotential(p, n):
    """
     qn = truncatePotential(q, n)
        Keeps the harmonics with |m| <= n, i.e. the trigonometric
        polynomial q_n(x) = sum_{|m|<=n} qhat(2m) exp(2 pi i m x). The mean
        is kept as is.

     Inp.ts:
       p - FourierPotential
       n - truncation order, n >= 0

     Output: qn - FourierPotential with maxHarmonic min(K, n)
    """
    if n < 0:
        error(f'Truncation order must be non-negative, got {n}')
    kept = {m: v for m, v in p.harmonics.items() if abs(m) <= n}
    return FourierPotential(kept, p.mean, min(p.maxHarmonic, int(n)))

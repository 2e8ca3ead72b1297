__all__ = ["sobolevNorm", "hminus1Norm"]

import numpy as np


def sobolevNorm(p, s):
    """
        ||q||_{H^s} = ( sum_{k in 2Z} <k>^{2s} |qhat(k)|^2 )^{1/2},  <k> = 1 + |k|,

        summed over the stored table; the mean enters with <0> = 1.
        Accumulated with hypot, so tiny or huge coefficients neither
        underflow nor overflow when squared.
    """
    weighted = [abs(p.mean)]
    for m, value in p.harmonics.items():
        weighted.append((1.0 + 2.0 * abs(m)) ** float(s) * abs(value))
    return float(np.hypot.reduce(np.asarray(weighted, dtype=np.float64)))


def hminus1Norm(p):
    "The H^{-1}_per norm of a FourierPotential."
    return sobolevNorm(p, -1)

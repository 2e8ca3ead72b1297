__all__ = ["randomPotential"]

import numpy as np

from HillBandPy.Utilities import *
from .fourier_potential import FourierPotential


def randomPotential(seed, K, amplitude=5.0, decay=0.6):
    """
        Seeded random potential with qhat(2m) = amplitude |m|^{-decay} z_m,
        z_m uniform in the complex unit disk, conjugate-symmetrized and
        with zero mean.

        With the default decay 0.6 the tables are in H^{-1} uniformly in K
        while sum |qhat|^2 grows without bound: a genuinely singular
        potential once K is large.
    """
    if K < 1:
        error(f'K must be at least 1, got {K}')
    if decay < 0:
        error(f'decay must be non-negative, got {decay}')

    rng = np.random.default_rng(seed)
    draws = rng.random((int(K), 2))
    radius = np.sqrt(draws[:, 0])
    angle = 2 * np.pi * draws[:, 1]
    ms = np.arange(1, int(K) + 1)
    values = amplitude * ms ** (-float(decay)) * radius * np.exp(1j * angle)

    table = {}
    for m, value in zip(ms, values):
        table[int(m)] = complex(value)
        table[-int(m)] = complex(value).conjugate()
    return FourierPotential(table, 0.0, int(K))

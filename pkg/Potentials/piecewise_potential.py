__all__ = ["piecewiseConstantPotential", "piecewiseFourier"]

__author__ = "Lekan Molux"
__date__ = "Oct. 05, 2026"

import numpy as np

from HillBandPy.Utilities import *
from .fourier_potential import FourierPotential
from .primitive_profile import PiecewiseLinearProfile


def piecewiseConstantPotential(breakpoints, levels, masses=None, truncation=16):
    """
     p, profile = piecewiseConstantPotential(breakpoints, levels, masses, truncation)

     Step potential with Dirac masses: q = levels[j] on
     [breakpoints[j], breakpoints[j+1]) plus masses[j] delta(x - breakpoints[j]),
     extended 1-periodically. The single-step, single-mass case is the
     Kronig-Penney comb; several masses give multi-site combs.

     Inp.ts:
       breakpoints - increasing, starting at 0, inside [0, 1)
       levels      - constant value on every piece
       masses      - delta strengths at the breakpoints, zeros by default
       truncation  - K of the returned harmonic table

     Output:
       p       - FourierPotential with the exact coefficients up to K
       profile - PiecewiseLinearProfile of the zero-mean primitive
    """
    b = np.asarray(breakpoints, dtype=np.float64)
    levels = np.asarray(levels, dtype=np.float64)
    masses = np.zeros_like(b) if masses is None else np.asarray(masses, dtype=np.float64)
    if not (b.shape == levels.shape == masses.shape) or b.ndim != 1 or b.size == 0:
        error('breakpoints, levels and masses must be 1-D lists of equal length', FormatError)
    if b[0] != 0.0 or np.any(np.diff(b) <= 0) or b[-1] >= 1.0:
        error('breakpoints must start at 0 and increase strictly inside [0, 1)', FormatError)

    lengths = np.diff(np.append(b, 1.0))
    mean = float(np.sum(levels * lengths) + np.sum(masses))
    slopes = levels - mean

    # right limits at the breakpoints, then centred
    values = np.zeros_like(b)
    values[0] = masses[0]
    for j in range(1, b.size):
        values[j] = values[j - 1] + slopes[j - 1] * lengths[j - 1] + masses[j]
    offset = np.sum(values * lengths + 0.5 * slopes * lengths ** 2)
    values -= offset

    profile = PiecewiseLinearProfile(b, slopes, values, mean)
    return piecewiseFourier(b, levels, masses, truncation), profile


def piecewiseFourier(breakpoints, levels, masses, K):
    """
        Exact qhat(2m) = int_0^1 q(x) exp(-2 pi i m x) dx, 0 < |m| <= K, of a
        step potential with masses; the mean is qhat(0).
    """
    b = np.asarray(breakpoints, dtype=np.float64)
    edges = np.append(b, 1.0)
    levels = np.asarray(levels, dtype=np.float64)
    masses = np.asarray(masses, dtype=np.float64)
    mean = float(np.sum(levels * np.diff(edges)) + np.sum(masses))

    table = {}
    for m in range(1, int(K) + 1):
        w = 2j * np.pi * m
        steps = levels * (np.exp(-w * edges[:-1]) - np.exp(-w * edges[1:])) / w
        value = complex(np.sum(steps) + np.sum(masses * np.exp(-w * b)))
        table[m] = value
        table[-m] = value.conjugate()
    return FourierPotential(table, mean, int(K))

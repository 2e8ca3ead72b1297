__all__ = ["FourierPotential"]

__author__ = "Lekan Molux"
__date__ = "Oct. 02, 2026"

import types
import numpy as np

from HillBandPy.Utilities import *


class FourierPotential(object):
    def __init__(self, harmonics, mean=0.0, maxHarmonic=None):
        """
            A real 1-periodic distributional potential

                q(x) = C + sum_{m != 0} qhat(2m) exp(2 pi i m x)

            stored as a finite harmonic table. Harmonic index m multiplies
            the basis exp(2 pi i m x); the even index k = 2m survives only
            in the Sobolev weights (1 + |k|).

            Parameters
            ==========
                harmonics: dict m -> complex qhat(2m) over both signs of m.
                    q(-2m) must be the exact conjugate of q(2m) for every
                    stored m; use fromHarmonics to synthesize the conjugates.
                mean: real C = qhat(0), never folded into the harmonics.
                maxHarmonic: K >= max |m|. Defaults to the largest stored |m|.

            Instances are immutable after construction.
        """
        table = {}
        for m, value in harmonics.items():
            m = int(m)
            if m == 0:
                error('The zero harmonic is the mean; pass it as mean=', FormatError)
            table[m] = complex(value)

        for m, value in table.items():
            if -m not in table:
                error(f'Harmonic {m} has no conjugate partner {-m}', SymmetryViolationError)
            if table[-m] != value.conjugate():
                error(f'qhat({-2*m}) = {table[-m]} is not the conjugate of '
                      f'qhat({2*m}) = {value}', SymmetryViolationError)

        if np.iscomplexobj(mean) and np.imag(mean) != 0:
            error('The mean of a real potential must be real', FormatError)
        support = max((abs(m) for m in table), default=0)
        if maxHarmonic is None:
            maxHarmonic = support
        if maxHarmonic < support:
            error(f'maxHarmonic={maxHarmonic} is below the stored support {support}')

        object.__setattr__(self, 'harmonics', types.MappingProxyType(dict(sorted(table.items()))))
        object.__setattr__(self, 'mean', float(np.real(mean)))
        object.__setattr__(self, 'maxHarmonic', int(maxHarmonic))

    def __setattr__(self, name, value):
        raise AttributeError('FourierPotential is immutable')

    def __eq__(self, other):
        if not isinstance(other, FourierPotential):
            return NotImplemented
        return (dict(self.harmonics) == dict(other.harmonics)
                and self.mean == other.mean
                and self.maxHarmonic == other.maxHarmonic)

    def __hash__(self):
        return hash((tuple(self.harmonics.items()), self.mean, self.maxHarmonic))

    def __repr__(self):
        return (f'FourierPotential(K={self.maxHarmonic}, mean={self.mean}, '
                f'harmonics={len(self.harmonics)//2} pairs)')

    def __sub__(self, other):
        "The potential self - other, harmonic by harmonic."
        table = dict(self.harmonics)
        for m, value in other.harmonics.items():
            table[m] = table.get(m, 0j) - value
        return FourierPotential(table, self.mean - other.mean,
                                max(self.maxHarmonic, other.maxHarmonic))

    def coefficient(self, m):
        "qhat(2m); the mean for m = 0 and zero outside the table."
        if m == 0:
            return complex(self.mean)
        return self.harmonics.get(int(m), 0j)

    def positiveIndices(self):
        return np.array([m for m in self.harmonics if m > 0], dtype=np.int64)

    def denseCoefficients(self, K=None):
        """
            Returns (ms, coeffs) with ms = -K..K and coeffs[j] = qhat(2 ms[j]),
            the mean sitting at ms == 0.
        """
        K = self.maxHarmonic if K is None else int(K)
        ms = np.arange(-K, K + 1, dtype=np.int64)
        coeffs = np.array([self.coefficient(m) for m in ms], dtype=np.complex128)
        return ms, coeffs

    def shifted(self, c):
        "The potential q + c."
        return FourierPotential(dict(self.harmonics), self.mean + float(c), self.maxHarmonic)

    def evaluate(self, x):
        """
            Pointwise value of the trigonometric polynomial C + sum qhat e^{2 pi i m x}.
            Only meaningful as a function for finite tables; the potential
            itself is a distribution.
        """
        x, scalar = asFloatArray(x)
        ms = self.positiveIndices()
        values = np.full(x.shape, self.mean)
        if ms.size:
            coeffs = np.array([self.harmonics[m] for m in ms])
            phases = np.exp(2j * np.pi * np.outer(x, ms))
            values = values + 2.0 * np.real(phases @ coeffs)
        return float(values[0]) if scalar else values

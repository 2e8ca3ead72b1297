__all__ = ["PrimitiveProfile", "TrigSumProfile", "SawtoothCombProfile",
           "PiecewiseLinearProfile"]

__author__ = "Lekan Molux"
__date__ = "Oct. 02, 2026"

import numpy as np

from HillBandPy.Utilities import *


class PrimitiveProfile(object):
    """
        A real 1-periodic zero-mean function Q with q = C + Q'. The
        quasi-derivative integrator only ever sees Q, the mean C rides
        along as meanShift and is applied to the spectral parameter.

        Subclasses provide

            _reduced(y): Q on the representative y in [0, 1)
            breakpoints: sorted points of [0, 1) where Q jumps
            piece(a, b): a callable equal to Q on the closed interval
                         [a, b], which must not straddle a breakpoint
            supNorm():   an upper bound of max |Q|
    """
    kind = None
    breakpoints = np.zeros(0)

    def __init__(self, meanShift=0.0):
        self.meanShift = float(meanShift)

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        x, scalar = asFloatArray(x)
        values = self._reduced(np.mod(x, 1.0))
        return float(values[0]) if scalar else values

    def isSmooth(self):
        return self.breakpoints.size == 0

    def piece(self, a, b):
        return self.evaluate

    def withMeanShift(self, meanShift):
        "The same primitive describing the potential shifted to mean meanShift."
        raise NotImplementedError

    def _reduced(self, y):
        raise NotImplementedError

    def supNorm(self):
        raise NotImplementedError


class TrigSumProfile(PrimitiveProfile):
    kind = 'trig_sum'

    def __init__(self, harmonics, meanShift=0.0):
        """
            Q(x) = sum_{m != 0} Qhat(2m) exp(2 pi i m x) with a
            Hermitian table, so Q is real and has zero mean.
        """
        super().__init__(meanShift)
        self.harmonics = dict(sorted((int(m), complex(v)) for m, v in harmonics.items()))
        positive = [m for m in self.harmonics if m > 0]
        self._ms = np.array(positive, dtype=np.float64)
        self._coeffs = np.array([self.harmonics[m] for m in positive], dtype=np.complex128)

    def __repr__(self):
        return f'TrigSumProfile(pairs={self._ms.size}, meanShift={self.meanShift})'

    def evaluate(self, x):
        # periodic by construction, no reduction needed
        x, scalar = asFloatArray(x)
        values = self._reduced(x)
        return float(values[0]) if scalar else values

    def _reduced(self, y):
        if self._ms.size == 0:
            return np.zeros(y.shape)
        phases = np.exp(2j * np.pi * np.outer(y, self._ms))
        return 2.0 * np.real(phases @ self._coeffs)

    def withMeanShift(self, meanShift):
        return TrigSumProfile(self.harmonics, meanShift)

    def supNorm(self):
        return float(2.0 * np.sum(np.abs(self._coeffs)))


class SawtoothCombProfile(PrimitiveProfile):
    kind = 'sawtooth_comb'

    def __init__(self, alpha, meanShift=None):
        """
            Primitive of the Dirac comb alpha sum_n delta(x - n):
            Q(x) = alpha (1/2 - x) on (0, 1), jump +alpha at the integers,
            Q(n) = 0 by convention. meanShift defaults to alpha, the mean
            of the comb.
        """
        self.alpha = float(alpha)
        super().__init__(self.alpha if meanShift is None else meanShift)
        self.breakpoints = np.zeros(1) if self.alpha != 0 else np.zeros(0)

    def __repr__(self):
        return f'SawtoothCombProfile(alpha={self.alpha}, meanShift={self.meanShift})'

    def _reduced(self, y):
        return np.where(y == 0.0, 0.0, self.alpha * (0.5 - y))

    def piece(self, a, b):
        n = np.floor(0.5 * (a + b))
        alpha = self.alpha
        return lambda x: alpha * (0.5 - (x - n))

    def withMeanShift(self, meanShift):
        return SawtoothCombProfile(self.alpha, meanShift)

    def supNorm(self):
        return 0.5 * abs(self.alpha)


class PiecewiseLinearProfile(PrimitiveProfile):
    kind = 'piecewise_linear'

    def __init__(self, breakpoints, slopes, values, meanShift=0.0):
        """
            Q(x) = values[j] + slopes[j] (x - breakpoints[j]) on
            [breakpoints[j], breakpoints[j+1]), extended 1-periodically.

            breakpoints start at 0 and increase strictly inside [0, 1);
            values are the right limits at the breakpoints. The caller is
            responsible for periodic closure and zero mean (see
            piecewiseConstantPotential), both are checked here.
        """
        super().__init__(meanShift)
        b = np.asarray(breakpoints, dtype=np.float64)
        self.slopes = np.asarray(slopes, dtype=np.float64)
        self.values = np.asarray(values, dtype=np.float64)
        if b.ndim != 1 or b.size == 0 or b[0] != 0.0:
            error('breakpoints must be a 1-D list starting at 0', FormatError)
        if np.any(np.diff(b) <= 0) or b[-1] >= 1.0:
            error('breakpoints must increase strictly inside [0, 1)', FormatError)
        if not (self.slopes.shape == b.shape == self.values.shape):
            error('breakpoints, slopes and values must have the same length', FormatError)
        self._edges = np.append(b, 1.0)
        lengths = np.diff(self._edges)
        mean = np.sum(self.values * lengths + 0.5 * self.slopes * lengths ** 2)
        if abs(mean) > 1e-12 * max(1.0, self.supNorm()):
            error(f'piecewise primitive must have zero mean, got {mean}', FormatError)
        jumps = self.values - np.roll(self.values + self.slopes * lengths, 1)
        self.jumps = jumps
        self.breakpoints = b

    def __repr__(self):
        return (f'PiecewiseLinearProfile(pieces={self.slopes.size}, '
                f'meanShift={self.meanShift})')

    def _reduced(self, y):
        j = np.searchsorted(self._edges, y, side='right') - 1
        j = np.clip(j, 0, self.slopes.size - 1)
        return self.values[j] + self.slopes[j] * (y - self._edges[j])

    def piece(self, a, b):
        mid = 0.5 * (a + b)
        n = np.floor(mid)
        j = int(np.clip(np.searchsorted(self._edges, mid - n, side='right') - 1,
                        0, self.slopes.size - 1))
        v, s, start = self.values[j], self.slopes[j], self._edges[j]
        return lambda x: v + s * (x - n - start)

    def withMeanShift(self, meanShift):
        return PiecewiseLinearProfile(self._edges[:-1], self.slopes, self.values, meanShift)

    def supNorm(self):
        ends = self.values + self.slopes * np.diff(self._edges)
        return float(max(np.max(np.abs(self.values)), np.max(np.abs(ends))))

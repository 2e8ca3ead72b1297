__all__ = ["PropState"]

import numpy as np

from HillBandPy.Utilities import *


class PropState(object):
    def __init__(self, u, u1, x=0.0):
        """
            The pair (u, u^[1]) at position x, with u^[1] = u' - Q u the
            quasi-derivative: the coordinates in which the Hill equation
            with an H^{-1} potential is a regular first order system.

            u and u1 may be arrays (one state per spectral parameter);
            they must be finite.
        """
        u = np.asarray(u, dtype=np.float64)
        u1 = np.asarray(u1, dtype=np.float64)
        if not (np.all(np.isfinite(u)) and np.all(np.isfinite(u1))):
            error(f'non-finite state at x={x}', NumericalBlowupError)
        self.u = float(u) if u.ndim == 0 else u
        self.u1 = float(u1) if u1.ndim == 0 else u1
        self.x = float(x)

    def __repr__(self):
        return f'PropState(u={self.u}, u1={self.u1}, x={self.x})'

    def derivative(self, profile, side='right'):
        """
            The classical derivative u' = u^[1] + Q(x) u. At a jump of Q it
            jumps too; side picks the one-sided limit.
        """
        if side not in ('left', 'right'):
            error(f'side must be left or right, got {side!r}')
        a, b = (self.x, self.x + 1e-9) if side == 'right' else (self.x - 1e-9, self.x)
        q = profile.piece(a, b)(self.x)
        return self.u1 + q * self.u

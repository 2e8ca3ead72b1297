__all__ = ["GapEndpoint", "BandStructure", "PARITIES", "SIDES"]

__author__ = "Lekan Molux"
__date__ = "Oct. 10, 2026"

from dataclasses import dataclass

import numpy as np

PARITIES = ('periodic', 'semiperiodic')
SIDES = ('bottom', 'minus', 'plus')


@dataclass(frozen=True)
class GapEndpoint:
    """
        One endpoint of a spectral gap: lambda_0 (k = 0, side 'bottom') or
        lambda_k^- / lambda_k^+ (sides 'minus' / 'plus'). Endpoints of even
        gaps are periodic eigenvalues (Delta = 2), of odd gaps
        semiperiodic ones (Delta = -2). confident is False when the
        tangency test behind the endpoint disagreed with its quadratic fit
        or the crossing did not pair up with a neighbour.
    """
    lam: float
    k: int
    side: str
    parity: str
    collapsed: bool = False
    confident: bool = True

    @property
    def target(self):
        return 2.0 if self.parity == 'periodic' else -2.0


class BandStructure(object):
    def __init__(self, endpoints, meanShiftApplied=0.0):
        """
            Ordered gap endpoints lambda_0, lambda_1^-, lambda_1^+, ... and
            the bands and gaps they delimit:

                B_0 = [lambda_0, lambda_1^-],  B_k = [lambda_k^+, lambda_{k+1}^-]
                G_0 = (-inf, lambda_0),        G_k = (lambda_k^-, lambda_k^+)

            meanShiftApplied is the mean C added to the centred endpoints.
        """
        self.endpoints = tuple(endpoints)
        self.meanShiftApplied = float(meanShiftApplied)

    def __repr__(self):
        return (f'BandStructure(numGaps={self.numGaps}, '
                f'lambdas={np.array2string(self.lambdas(), precision=6)})')

    def __eq__(self, other):
        return (isinstance(other, BandStructure) and self.endpoints == other.endpoints
                and self.meanShiftApplied == other.meanShiftApplied)

    @property
    def numGaps(self):
        return (len(self.endpoints) - 1) // 2

    @property
    def bottom(self):
        return self.endpoints[0].lam

    def lambdas(self):
        return np.array([e.lam for e in self.endpoints])

    def gap(self, k):
        "(lambda_k^-, lambda_k^+) for k >= 1."
        return self.endpoints[2 * k - 1].lam, self.endpoints[2 * k].lam

    def isCollapsed(self, k):
        return self.endpoints[2 * k - 1].collapsed

    def gaps(self):
        return [(-np.inf, self.bottom)] + [self.gap(k) for k in range(1, self.numGaps + 1)]

    def bands(self):
        "Closed bands B_0 .. B_{g-1}; the band above the last gap is not bounded here."
        edges = [self.bottom] + [self.endpoints[2 * k].lam for k in range(1, self.numGaps)]
        tops = [self.endpoints[2 * k - 1].lam for k in range(1, self.numGaps + 1)]
        return list(zip(edges, tops))

    def gapLengths(self):
        "gamma_k = lambda_k^+ - lambda_k^-, k = 1..g."
        return np.array([hi - lo for lo, hi in self.gaps()[1:]])

    def ofParity(self, parity):
        return [e.lam for e in self.endpoints if e.parity == parity]

    def toDict(self):
        return dict(meanShiftApplied=self.meanShiftApplied,
                    endpoints=[dict(k=e.k, side=e.side, lam=e.lam, parity=e.parity,
                                    collapsed=e.collapsed, confident=e.confident)
                               for e in self.endpoints],
                    gapLengths=[float(g) for g in self.gapLengths()])

    @classmethod
    def fromDict(cls, doc):
        endpoints = [GapEndpoint(float(e['lam']), int(e['k']), str(e['side']),
                                 str(e['parity']), bool(e['collapsed']),
                                 bool(e.get('confident', True)))
                     for e in doc['endpoints']]
        return cls(endpoints, doc.get('meanShiftApplied', 0.0))

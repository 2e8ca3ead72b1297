__all__ = ["detectTangency"]

__author__ = "Lekan Molux"
__date__ = "Oct. 12, 2026"

import logging
import numpy as np

from HillBandPy.Utilities import *
from HillBandPy.Propagator import discriminant, monodromy
from .search_set import searchSet
from .refine_endpoint import touchingPoint

logger = logging.getLogger(__name__)


def detectTangency(profile, lamStar, target, options=None, halfWidth=None, bracket=None):
    """
     res = detectTangency(profile, lamStar, target, options, halfWidth, bracket)

     Decides whether Delta touches target near lamStar without crossing it,
     which is how a collapsed gap shows up: the two endpoints merge into
     one doubled periodic (target +2) or semiperiodic (target -2) eigenvalue,
     and the monodromy there is +-I.

     A quadratic is fitted to sign(target) Delta - 2 on 5 points of the
     window; the vertex is then located as the extremum of Delta on the
     window. The touching is accepted when M(vertex) is within
     options.tangencyTol of +-I. Those entries grow like the width of the
     gap, while the excess of Delta over the target only grows like its
     square.

     Inp.ts:
       profile   - PrimitiveProfile
       lamStar   - candidate extremum (a grid extremum of Delta)
       target    - +2 or -2
       options   - searchSet Bundle
       halfWidth - half width of a window centred at lamStar; defaults to
                   one grid step of the s-grid at lamStar
       bracket   - (lo, hi) window to use instead of the centred one

     Output:
       res - Bundle with fields
               .kind:      'tangent' or 'crossing'
               .lam:       vertex of the extremum
               .excess:    sign(target) Delta(lam) - 2 (> 0: the gap is open)
               .defect:    Monodromy.identityDefect() at the vertex
               .curvature: second derivative of the fitted quadratic
               .confident: False when the fit and the refined extremum
                           disagree or the curvature has the wrong sign;
                           the answer then falls back to 'crossing'.
    """
    if options is None:
        options = searchSet()
    if target not in (2, -2):
        error(f'target must be +2 or -2, got {target}')
    sign = np.sign(target)
    if bracket is None:
        if halfWidth is None:
            halfWidth = 2 * options.sStep * np.sqrt(max(abs(lamStar), 1.0))
        lo, hi = lamStar - float(halfWidth), lamStar + float(halfWidth)
    else:
        lo, hi = float(bracket[0]), float(bracket[1])
    if not lo < hi:
        error(f'tangency window must satisfy lo < hi, got ({lo}, {hi})')

    xs = np.linspace(lo, hi, 5)
    g = sign * discriminant(profile, xs, options.integrator) - 2.0
    a2, a1, a0 = np.polyfit(xs - lamStar, g, 2)
    curvature = 2.0 * a2
    facing = curvature < 0

    vertex = touchingPoint(profile, target, lo, hi, options)
    M = monodromy(profile, vertex, 0.0, options.integrator)
    excess = sign * float(M.offset(target))
    defect = float(M.identityDefect())

    confident = facing
    if facing:
        fitted = lamStar - a1 / (2.0 * a2)
        confident = abs(fitted - vertex) <= 0.5 * (hi - lo)
    tangent = bool(facing and sign * M.trace() > 0 and defect <= options.tangencyTol)
    kind = 'tangent' if tangent else 'crossing'
    if not confident:
        debug(f'low-confidence tangency test at lambda={lamStar:.10g}: '
              f'curvature={curvature:.3g}, excess={excess:.3g}')
    return Bundle(dict(kind=kind, lam=float(vertex), excess=excess, defect=defect,
                       curvature=float(curvature), confident=bool(confident)))

__all__ = ["scanRange", "scanTargets", "targetRoots", "TargetRoot"]

__author__ = "Lekan Molux"
__date__ = "Oct. 12, 2026"

import logging
from dataclasses import dataclass

import numpy as np

from HillBandPy.Utilities import *
from HillBandPy.Propagator import lambdaFloor, discriminant
from .sample_discriminant import sGrid, sampleDiscriminant
from .refine_endpoint import refineEndpoint
from .detect_tangency import detectTangency

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TargetRoot:
    lam: float
    target: float
    collapsed: bool = False
    confident: bool = True


def scanRange(profile, numGaps, options, extension=0):
    """
        (floor, hi) of the grid scan resolving numGaps gaps of a centred
        profile. Endpoints of gap k lie below (k pi + ||Q||_inf)^2;
        every extension widens the range by half in s.
    """
    floor = options.lambdaFloor if options.lambdaFloor is not None else lambdaFloor(profile)
    s = (numGaps + 0.5) * np.pi + profile.supNorm() + 1.0
    s *= 1.5 ** extension
    return float(floor), float(s * s)


def _rootsOnGrid(profile, target, lam, delta, options):
    keep = np.isfinite(delta)
    lam, delta = lam[keep], delta[keep]
    g = np.sign(target) * delta - 2.0
    positive = g > 0

    roots = []
    # sign changes of sign(target) Delta - 2: crossings in or out of a gap
    crossings = []
    for i in np.flatnonzero(positive[:-1] != positive[1:]):
        x = refineEndpoint(profile, target, (lam[i], lam[i + 1]), options)
        crossings.append((x, 'up' if positive[i + 1] else 'down', i))

    # an 'up' followed by a 'down' bounds a gap; the two refined roots only
    # merge into a touching point when they agree to rootTol
    j = 0
    while j < len(crossings):
        x, direction, i = crossings[j]
        if direction == 'up' and j + 1 < len(crossings) and crossings[j + 1][1] == 'down':
            x2 = crossings[j + 1][0]
            if x2 - x <= options.rootTol:
                mid = 0.5 * (x + x2)
                roots += [TargetRoot(mid, target, True)] * 2
            else:
                roots += [TargetRoot(x, target), TargetRoot(x2, target)]
            j += 2
        elif direction == 'down' and j == 0 and positive[0]:
            # leaving the region below the spectrum: lambda_0
            roots.append(TargetRoot(x, target))
            j += 1
        elif direction == 'up' and j + 1 == len(crossings):
            debug(f'gap opening at {x:.10g} is cut by the end of the scan')
            j += 1
        else:
            roots.append(TargetRoot(x, target, False, False))
            j += 1

    # grid extrema that approach the target without reaching it on a sample:
    # touching points, or gaps narrower than the grid
    for i in range(1, lam.size - 1):
        if positive[i - 1] or positive[i] or positive[i + 1]:
            continue
        if not (g[i] >= g[i - 1] and g[i] >= g[i + 1] and g[i] > -options.nearMissWindow):
            continue
        res = detectTangency(profile, lam[i], target, options,
                             bracket=(lam[i - 1], lam[i + 1]))
        if res.kind == 'tangent':
            roots += [TargetRoot(res.lam, target, True, res.confident)] * 2
        elif res.excess > 0 and lam[i - 1] < res.lam < lam[i + 1]:
            roots.append(TargetRoot(refineEndpoint(profile, target, (lam[i - 1], res.lam), options),
                                    target, False, res.confident))
            roots.append(TargetRoot(refineEndpoint(profile, target, (res.lam, lam[i + 1]), options),
                                    target, False, res.confident))

    roots.sort(key=lambda r: r.lam)
    return roots


def targetRoots(profile, target, count, options, numGaps=None):
    """
     roots = targetRoots(profile, target, count, options)

     The lowest count roots of Delta(lambda) = target of a centred profile,
     touching points listed twice. The scan runs on the s-grid from the
     floor upwards and is extended up to options.maxExtensions times.

     Output:
       roots - list of TargetRoot, ascending

     Raises BracketingError when fewer than count roots are found.
    """
    numGaps = options.numGaps if numGaps is None else numGaps
    for extension in range(options.maxExtensions + 1):
        roots, lam, delta = scanTargets(profile, (target,), numGaps, options, extension)
        if len(roots[target]) >= count:
            return roots[target][:count]
        debug(f'{len(roots[target])} of {count} roots of Delta = {target:+g} '
              f'below {lam[-1]:.6g}; extending the scan')
    error(f'found {len(roots[target])} of {count} roots of Delta = {target:+g} after '
          f'{options.maxExtensions} extensions of the scan', BracketingError)


def scanTargets(profile, targets, numGaps, options, extension=0):
    """
        Samples Delta on the s-grid of scanRange and collects the roots of
        every target in targets. Returns (roots dict, lam, delta).
    """
    floor, hi = scanRange(profile, numGaps, options, extension)
    delta0 = discriminant(profile, floor, options.integrator)
    while delta0 <= 2.0:
        warn(f'Delta({floor:.6g}) = {delta0:.6g} is not above 2: the scan floor '
             'is inside the spectrum, lowering it')
        floor -= 4.0 * (1.0 + abs(floor))
        delta0 = discriminant(profile, floor, options.integrator)

    n = max(int(np.ceil((np.sqrt(hi - floor)) / options.sStep)) + 1, 3)
    samples = sampleDiscriminant(profile, floor, hi, n, options)
    lam, delta = samples[:, 0], samples[:, 1]
    roots = {t: _rootsOnGrid(profile, t, lam, delta, options) for t in targets}
    return roots, lam, delta

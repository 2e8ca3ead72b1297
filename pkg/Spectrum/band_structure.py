__all__ = ["bandStructure"]

__author__ = "Lekan Molux"
__date__ = "Oct. 13, 2026"

import logging

from HillBandPy.Utilities import *
from .search_set import searchSet
from .target_roots import scanTargets
from .band_structure_types import GapEndpoint, BandStructure

logger = logging.getLogger(__name__)


def _assemble(plus, minus, numGaps, options):
    "Interleaves the roots of Delta = +2 and -2 into lambda_0, lambda_1^-, lambda_1^+, ..."
    needed = 1 + 2 * numGaps
    merged = sorted(plus + minus, key=lambda r: r.lam)
    if len(merged) < needed:
        return None

    endpoints = []
    for j, root in enumerate(merged[:needed]):
        k = (j + 1) // 2
        parity = 'periodic' if k % 2 == 0 else 'semiperiodic'
        if root.target != (2.0 if parity == 'periodic' else -2.0):
            error(f'endpoint {j} at lambda={root.lam:.10g} solves Delta = {root.target:+g} '
                  f'but gap {k} needs {parity} endpoints; refine sStep', BracketingError)
        side = 'bottom' if j == 0 else ('minus' if j % 2 else 'plus')
        endpoints.append([root.lam, k, side, parity, root.collapsed, root.confident])

    for k in range(1, numGaps + 1):
        lo, hi = endpoints[2 * k - 1], endpoints[2 * k]
        close = abs(hi[0] - lo[0]) <= options.rootTol * max(1.0, abs(lo[0]))
        lo[4] = hi[4] = bool(lo[4] and hi[4]) or close
    return endpoints


def bandStructure(profile, options=None):
    """
     bs = bandStructure(profile, options)

     Gap endpoints lambda_0 < lambda_1^- <= lambda_1^+ < lambda_2^- <= ...
     of the Hill operator -u'' + q u, q = C + Q', for the first
     options.numGaps gaps.

     The discriminant of the centred profile is sampled on the s-grid, the
     roots of Delta = +2 and Delta = -2 are bracketed and refined, touching
     points are recorded as doubled endpoints of a collapsed gap, and the
     mean C is added at the end.

     Inp.ts:
       profile - PrimitiveProfile
       options - searchSet Bundle

     Output:
       bs - BandStructure; endpoints of even gaps are periodic, of odd gaps
            semiperiodic eigenvalues.

     Raises BracketingError when the endpoints are not all found after
     options.maxExtensions extensions of the scan.
    """
    if options is None:
        options = searchSet()
    shift = profile.meanShift
    centred = profile.withMeanShift(0.0)
    if options.lambdaFloor is not None:
        options = bundleUpdate(options, dict(lambdaFloor=options.lambdaFloor - shift))

    numGaps = options.numGaps
    for extension in range(options.maxExtensions + 1):
        roots, lam, delta = scanTargets(centred, (2.0, -2.0), numGaps, options, extension)
        endpoints = _assemble(roots[2.0], roots[-2.0], numGaps, options)
        if endpoints is not None:
            break
        debug(f'{len(roots[2.0]) + len(roots[-2.0])} endpoints below {lam[-1]:.6g}; '
              'extending the scan')
    else:
        error(f'could not bracket {1 + 2 * numGaps} gap endpoints after '
              f'{options.maxExtensions} extensions of the scan', BracketingError)

    if endpoints[0][0] <= lam[0] + options.rootTol:
        warn(f'lambda_0 = {endpoints[0][0] + shift:.10g} sits at the scan floor')

    bs = BandStructure([GapEndpoint(float(x + shift), k, side, parity, collapsed, confident)
                        for x, k, side, parity, collapsed, confident in endpoints], shift)
    doubtful = [e for e in bs.endpoints if not e.confident]
    if doubtful:
        warn(f'{len(doubtful)} endpoint(s) rest on a low-confidence tangency test: '
             f'{[round(e.lam, 10) for e in doubtful]}')
    info(f'band structure: {bs!r}')
    return bs

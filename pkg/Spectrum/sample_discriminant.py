__all__ = ["sampleDiscriminant", "sGrid"]

__author__ = "Lekan Molux"
__date__ = "Oct. 11, 2026"

import logging
import numpy as np
from concurrent.futures import ThreadPoolExecutor

from HillBandPy.Utilities import *
from HillBandPy.Propagator import discriminant, lambdaFloor
from .search_set import searchSet

logger = logging.getLogger(__name__)


def sGrid(lamLo, lamHi, n, floor):
    """
        n points from lamLo to lamHi, uniform in s = sqrt(lambda - floor)
        (floor <= lamLo). Gap endpoints of a Hill operator accumulate like
        (k pi)^2, i.e. evenly in s.
    """
    s = np.linspace(np.sqrt(lamLo - floor), np.sqrt(lamHi - floor), int(n))
    lam = floor + s * s
    lam[0], lam[-1] = lamLo, lamHi
    return lam


def _chunkDiscriminant(profile, lam, integrator):
    try:
        return discriminant(profile, lam, integrator)
    except IntegrationError as exc:
        debug(f'batch of {lam.size} samples failed ({exc}); retrying one by one')
    values = np.full(lam.shape, np.nan)
    for i, x in enumerate(lam):
        try:
            values[i] = discriminant(profile, x, integrator)
        except IntegrationError as exc:
            warn(f'discriminant sample at lambda={x:.10g} is missing: {exc}')
    return values


def sampleDiscriminant(profile, lamLo, lamHi, n, options=None):
    """
     samples = sampleDiscriminant(profile, lamLo, lamHi, n, options)

     Tabulates the Floquet discriminant on n points of [lamLo, lamHi],
     uniform in s = sqrt(lambda - floor), floor = min(lamLo, lambdaFloor).

     Inp.ts:
       profile      - PrimitiveProfile
       lamLo, lamHi - lamLo < lamHi
       n            - number of samples, n >= 2
       options      - searchSet Bundle (workers, integrator)

     Output:
       samples - (n, 2) array of (lambda, Delta) rows, lambda strictly
                 increasing. A sample whose integration failed has Delta = NaN.
    """
    if options is None:
        options = searchSet()
    if not lamLo < lamHi:
        error(f'need lamLo < lamHi, got [{lamLo}, {lamHi}]')
    if int(n) < 2:
        error(f'need at least 2 samples, got {n}')

    floor = min(float(lamLo), lambdaFloor(profile))
    lam = sGrid(float(lamLo), float(lamHi), n, floor)

    batch = options.integrator.batchSize
    chunks = [lam[i:i + batch] for i in range(0, lam.size, batch)]
    if options.workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=options.workers) as pool:
            parts = list(pool.map(lambda c: _chunkDiscriminant(profile, c, options.integrator), chunks))
    else:
        parts = [_chunkDiscriminant(profile, c, options.integrator) for c in chunks]

    return np.column_stack([lam, np.concatenate(parts)])

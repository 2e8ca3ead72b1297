__all__ = ["periodicEigenvalues", "semiperiodicEigenvalues"]

from HillBandPy.Utilities import *
from .search_set import searchSet
from .target_roots import targetRoots


def _eigenvalues(profile, target, count, numGaps, options):
    if count < 1:
        error(f'count must be at least 1, got {count}')
    if options is None:
        options = searchSet()
    shift = profile.meanShift
    centred = profile.withMeanShift(0.0)
    if options.lambdaFloor is not None:
        options = bundleUpdate(options, dict(lambdaFloor=options.lambdaFloor - shift))
    roots = targetRoots(centred, target, count, options, numGaps=max(numGaps, 1))
    return [r.lam + shift for r in roots]


def periodicEigenvalues(profile, count, options=None):
    """
        The lowest count eigenvalues of -u'' + q u on [0, 1] with
        u(0) = u(1), u^[1](0) = u^[1](1): the roots of Delta = 2 in
        increasing order, double eigenvalues listed twice.
    """
    return _eigenvalues(profile, 2.0, count, 2 * (count // 2), options)


def semiperiodicEigenvalues(profile, count, options=None):
    """
        The lowest count eigenvalues with u(0) = -u(1),
        u^[1](0) = -u^[1](1): the roots of Delta = -2.
    """
    return _eigenvalues(profile, -2.0, count, 2 * ((count + 1) // 2) - 1, options)

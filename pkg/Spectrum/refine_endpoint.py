__all__ = ["refineEndpoint", "touchingPoint"]

import numpy as np
from scipy import optimize

from HillBandPy.Utilities import *
from HillBandPy.Propagator import discriminant, discriminantDerivative, monodromy
from .search_set import searchSet


def touchingPoint(profile, target, lo, hi, options):
    """
        The extremum of Delta on [lo, hi] that faces target (a maximum for
        +2, a minimum for -2). Located as a root of d Delta/d lambda when
        the derivative changes sign on the bracket, by a bounded scalar
        search otherwise.
    """
    rtol = 4 * eps
    slope = lambda x: discriminantDerivative(profile, x, options.integrator)[1]
    dlo, dhi = slope(lo), slope(hi)
    if target * dlo > 0 > target * dhi:
        return optimize.brentq(slope, lo, hi, xtol=options.rootTol, rtol=rtol)
    res = optimize.minimize_scalar(lambda x: -target * discriminant(profile, x, options.integrator),
                                   bounds=(lo, hi), method='bounded',
                                   options=dict(xatol=options.rootTol))
    return float(res.x)


def refineEndpoint(profile, target, bracket, options=None, tangent=False):
    """
     lam = refineEndpoint(profile, target, bracket, options, tangent)

     Refines a gap endpoint, a root of Delta(lambda) = target, inside the
     bracket (lo, hi) with Brent's method: bisection safeguarding secant
     and inverse quadratic steps, never leaving the bracket.

     Inp.ts:
       profile - PrimitiveProfile
       target  - +2 (periodic) or -2 (semiperiodic)
       bracket - (lo, hi) on which Delta - target changes sign
       options - searchSet Bundle
       tangent - locate the touching point of a collapsed gap instead:
                 the extremum of Delta on the bracket

     Output:
       lam - the endpoint, bracketed to width rootTol

     Raises NoSignChangeError when Delta - target keeps its sign on the
     bracket and tangent is off.
    """
    if options is None:
        options = searchSet()
    if target not in (2, -2):
        error(f'target must be +2 or -2, got {target}')
    lo, hi = float(bracket[0]), float(bracket[1])
    if not lo < hi:
        error(f'bracket must satisfy lo < hi, got {bracket}')
    if tangent:
        return touchingPoint(profile, target, lo, hi, options)

    f = lambda x: float(monodromy(profile, x, 0.0, options.integrator).offset(target))
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        error(f'Delta - ({target:+g}) has the same sign at both ends of '
              f'[{lo:.10g}, {hi:.10g}]: {flo:.3g}, {fhi:.3g}', NoSignChangeError)
    return optimize.brentq(f, lo, hi, xtol=options.rootTol,
                           rtol=4 * eps)

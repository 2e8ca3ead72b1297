__all__ = ["searchSet"]

from HillBandPy.Utilities import *
from HillBandPy.Propagator import integratorSet


def searchSet(options=None, **overrides):
    """
     searchSet: Create/alter options for the band-gap search.

      Inp.ts:
        options   = an older options Bundle, or None for the defaults
        overrides = name=value pairs, e.g. searchSet(numGaps=6)
      Output:
        options   = Bundle with the fields below

     Available options:

       numGaps        Number of gaps to resolve besides lambda_0. Default = 4.
       sStep          Grid spacing in s = sqrt(lambda - lambdaFloor). Default = 0.02.
       rootTol        Absolute endpoint tolerance in lambda (brentq xtol).
                        Default = 1e-10.
       tangencyTol    A local extremum of Delta where the monodromy is within
                        tangencyTol of +-I (Monodromy.identityDefect) is a
                        touching point (collapsed gap). Also bounds
                        |Delta - (+-2)| at a doubled endpoint. Default = 1e-7.
       lambdaFloor    Bottom of the scan. Default None: -4 (1 + ||Q||^2 + |C|).
       nearMissWindow Grid extrema of Delta within this distance of +-2 are
                        inspected for hidden gaps and touchings. Default = 1e-2.
       maxExtensions  Times the upper end of the scan is extended before
                        the search gives up. Default = 2.
       residualTol    |Delta - (+-2)| accepted at a crossing endpoint by the
                        validation report. Default = 1e-8.
       workers        Threads evaluating the discriminant grid. Default = 1.
       integrator     integratorSet Bundle. Default = integratorSet().
    """
    if options is None:
        options = Bundle(dict(numGaps=4, sStep=0.02, rootTol=1e-10, tangencyTol=1e-7,
                              lambdaFloor=None, nearMissWindow=1e-2, maxExtensions=2,
                              residualTol=1e-8, workers=1, integrator=integratorSet()))
    elif not isbundle(options):
        error('options must be a Bundle created by searchSet')

    options = bundleUpdate(options, overrides)

    if int(options.numGaps) < 1:
        error('numGaps must be an integer >= 1')
    for name in ('sStep', 'rootTol', 'tangencyTol', 'nearMissWindow', 'residualTol'):
        if not options.get(name) > 0:
            error(f'{name} must be a positive scalar double value')
    if int(options.maxExtensions) < 0:
        error('maxExtensions must be a non-negative integer')
    if int(options.workers) < 1:
        error('workers must be an integer >= 1')
    if not isbundle(options.integrator):
        error('integrator must be a Bundle created by integratorSet')
    options.numGaps = int(options.numGaps)
    options.maxExtensions = int(options.maxExtensions)
    options.workers = int(options.workers)

    return options

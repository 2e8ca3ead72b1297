__all__ = ["integratorSet", "INTEGRATOR_METHODS"]

from scipy.integrate import DOP853, RK45

from HillBandPy.Utilities import *

INTEGRATOR_METHODS = {'DOP853': DOP853, 'RK45': RK45}


def integratorSet(options=None, **overrides):
    """
     integratorSet: Create/alter options for the quasi-derivative integrator.

      Inp.ts:
        options   = an older options Bundle to alter, or None for the defaults
        overrides = name=value pairs, e.g. integratorSet(relTol=1e-8)
      Output:
        options   = Bundle with the fields below

     Available options:

       relTol       Relative tolerance of the embedded Runge-Kutta pair.
                      Positive scalar, default = 1e-10.

       absTol       Absolute tolerance. Positive scalar, default = 1e-12.

       maxSteps     Maximum number of accepted steps of one propagation
                      over all segments. Integer >= 1, default = 10**6.

       breakpointSplitting
                    Split the interval at the jumps of Q so that no step
                      straddles a discontinuity. Either 'on' or 'off',
                      default = 'on'.

       method       Embedded pair: 'DOP853' (8(5,3), default) or 'RK45'
                      (Dormand-Prince 5(4)).

       batchSize    Number of spectral parameters integrated together in
                      one system. Integer >= 1, default = 64.

       detTol       Tolerance of the unit-determinant check of the
                      monodromy, relative to the size of its products.
                      Default = 1e-9.

       stats        Log steps and wall time of every propagation.
                      Either 'on' or 'off', default = 'off'.
    """
    if options is None:
        options = Bundle(dict(relTol=1e-10, absTol=1e-12, maxSteps=10**6,
                              breakpointSplitting='on', method='DOP853',
                              batchSize=64, detTol=1e-9, stats='off'))
    elif not isbundle(options):
        error('options must be a Bundle created by integratorSet')

    options = bundleUpdate(options, overrides)

    if not options.relTol > 0:
        error('relTol must be a positive scalar double value')
    if not options.absTol > 0:
        error('absTol must be a positive scalar double value')
    if int(options.maxSteps) < 1:
        error('maxSteps must be an integer >= 1')
    if int(options.batchSize) < 1:
        error('batchSize must be an integer >= 1')
    if not options.detTol > 0:
        error('detTol must be a positive scalar double value')
    if options.method not in INTEGRATOR_METHODS:
        error(f'method must be one of {sorted(INTEGRATOR_METHODS)}')
    options.maxSteps = int(options.maxSteps)
    options.batchSize = int(options.batchSize)
    options.breakpointSplitting = onOff(options.breakpointSplitting, 'breakpointSplitting')
    options.stats = onOff(options.stats, 'stats')

    return options

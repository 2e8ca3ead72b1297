__all__ = ["runVerification", "SEEDS"]

__author__ = "Lekan Molux"
__date__ = "Oct. 17, 2026"

import logging
import numpy as np

from HillBandPy.Utilities import *
from HillBandPy.Potentials import (fromHarmonics, deltaComb, randomPotential,
                                   buildPrimitive, SawtoothCombProfile)
from HillBandPy.Propagator import (integratorSet, discriminant, monodromy,
                                   propagate, PropState, lagrangeBracket)
from HillBandPy.Spectrum import (searchSet, bandStructure, classifyAndValidate,
                                 ValidationReport, periodicEigenvalues,
                                 semiperiodicEigenvalues, convergenceStudy)
from HillBandPy.Oracle import GalerkinProblem, galerkinEigenvalues, kpDiscriminant

logger = logging.getLogger(__name__)

SEEDS = tuple(range(1, 11))


def _merge(report, sub, prefix):
    for c in sub.checks:
        report.add(f'{prefix}.{c.name}', c.passed, c.detail)


def _freeOperator(report, options):
    profile = buildPrimitive(fromHarmonics([]))
    bs = bandStructure(profile, searchSet(options, numGaps=4))
    exact = np.array([0.0] + [(k * np.pi) ** 2 for k in range(1, 5) for _ in (0, 1)])
    err = np.max(np.abs(bs.lambdas() - exact))
    report.add('free.exact', err < 1e-8, f'max error {err:.3g}')
    report.add('free.collapsed', all(bs.isCollapsed(k) for k in range(1, 5)))
    _merge(report, classifyAndValidate(bs, profile, options), 'free')


def _closedForm(report, options):
    lam = np.linspace(0.0, 200.0, 200)
    for alpha in (1.0, 4.0, -2.0):
        delta = discriminant(SawtoothCombProfile(alpha), lam, options.integrator)
        err = np.max(np.abs(delta - kpDiscriminant(alpha, lam)))
        report.add('kronig-penney', err < 1e-8, f'alpha={alpha:g}: max error {err:.3g}')


def _galerkin(report, options):
    cases = dict(mathieu=fromHarmonics([(1, 1.0)]), comb=deltaComb(1.0, truncation=32)[0])
    for name, q in cases.items():
        bs = bandStructure(buildPrimitive(q), searchSet(options, numGaps=3))
        for parity in ('periodic', 'semiperiodic'):
            mine = np.sort(bs.ofParity(parity))
            ref = galerkinEigenvalues(GalerkinProblem(q, parity, 256), len(mine))
            rel = np.max(np.abs(mine - ref) / np.maximum(1.0, np.abs(ref)))
            report.add('galerkin', rel < 1e-6, f'{name} {parity}: relative error {rel:.3g}')


def _randomPotentials(report, options):
    for seed in SEEDS:
        profile = buildPrimitive(randomPotential(seed, 16))
        bs = bandStructure(profile, options)
        _merge(report, classifyAndValidate(bs, profile, options), f'seed{seed}')
        for parity, routine in (('periodic', periodicEigenvalues),
                                ('semiperiodic', semiperiodicEigenvalues)):
            ends = np.sort(bs.ofParity(parity))
            eigs = np.asarray(routine(profile, len(ends), options))
            err = np.max(np.abs(ends - eigs) / np.maximum(1.0, np.abs(eigs)))
            report.add(f'seed{seed}.multiset', err < 1e2 * options.rootTol,
                       f'{parity}: {err:.3g}')


def _convergence(report, options):
    q, sawtooth = deltaComb(1.0, truncation=32)
    study = convergenceStudy(q, [4, 8, 16, 32], searchSet(options, numGaps=3), sawtooth)
    worst = study.errors[:, 1:].max(axis=1)
    report.add('convergence.monotone', bool(np.all(np.diff(worst) < 0)),
               'worst error per order: ' + ', '.join(f'{e:.3g}' for e in worst))
    # the kinked edge eigenfunctions limit the rate to O(1/n)
    report.add('convergence.final', worst[-1] < 1e-2, f'n=32: {worst[-1]:.3g}')


def _conservation(report, options):
    lam = np.linspace(-20.0, 400.0, 43)
    profiles = dict(mathieu=buildPrimitive(fromHarmonics([(1, 1.0)])),
                    comb=SawtoothCombProfile(4.0),
                    seed1=buildPrimitive(randomPotential(1, 16)))
    for name, profile in profiles.items():
        defect = np.max(monodromy(profile, lam, options=options.integrator).detDefect())
        report.add('conservation.det', defect < 1e-9, f'{name}: {defect:.3g}')

        drift = 0.0
        a, b = PropState(1.0, 0.0), PropState(0.0, 1.0)
        for x in (0.25, 0.5, 0.75, 1.0):
            a = propagate(profile, lam, a, x, options.integrator)
            b = propagate(profile, lam, b, x, options.integrator)
            w = lagrangeBracket(a, b)
            drift = max(drift, float(np.max(np.abs(w - 1.0) / np.maximum(1.0, np.abs(a.u * b.u1)))))
        report.add('conservation.bracket', drift < 1e-9, f'{name}: {drift:.3g}')


def _shift(report, options):
    q = randomPotential(1, 16)
    base = bandStructure(buildPrimitive(q), options)
    moved = bandStructure(buildPrimitive(q.shifted(2.5)), options)
    err = np.max(np.abs(moved.lambdas() - base.lambdas() - 2.5))
    report.add('shift', err < 1e-8, f'max deviation {err:.3g}')


def runVerification(options=None):
    """
     report = runVerification(options)

     Runs the whole verification suite: exactness on the free operator,
     agreement of the sawtooth comb with the Kronig-Penney closed form and
     of the endpoints with the Fourier-Galerkin oracle, the structural
     checks on seeded random potentials, truncation convergence of the
     comb, conservation of det M and of the Lagrange bracket, and
     equivariance under a constant shift.

     Output:
       report - ValidationReport, one entry per check
    """
    if options is None:
        options = searchSet()
    report = ValidationReport()
    for stage in (_freeOperator, _closedForm, _galerkin, _randomPotentials,
                  _convergence, _conservation, _shift):
        info(f'verification stage {stage.__name__.lstrip("_")}')
        try:
            stage(report, options)
        except HillBandError as exc:
            report.add(stage.__name__.lstrip('_'), False, f'{type(exc).__name__}: {exc}')
    return report

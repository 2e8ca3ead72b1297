__all__ = ["ValidationReport", "classifyAndValidate"]

__author__ = "Lekan Molux"
__date__ = "Oct. 14, 2026"

import numpy as np

from HillBandPy.Utilities import *
from HillBandPy.Propagator import discriminant, monodromy
from .search_set import searchSet


class ValidationReport(object):
    def __init__(self):
        "Ordered pass/fail entries; failing checks never raise."
        self.checks = []

    def __repr__(self):
        return f'ValidationReport(passed={self.passed}, checks={len(self.checks)})'

    def add(self, name, passed, detail=''):
        self.checks.append(Bundle(dict(name=name, passed=bool(passed), detail=detail)))

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def check(self, name):
        "True when every entry called name passed."
        found = [c for c in self.checks if c.name == name]
        if not found:
            error(f'no check called {name!r} in the report')
        return all(c.passed for c in found)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def lines(self):
        return [f'{"PASS" if c.passed else "FAIL"}  {c.name}  {c.detail}'.rstrip()
                for c in self.checks]


def classifyAndValidate(bs, profile=None, options=None):
    """
     report = classifyAndValidate(bs, profile, options)

     Checks a BandStructure against the structure every Hill operator with
     an H^{-1} potential has:

       parity       even gaps (and lambda_0) periodic, odd gaps semiperiodic
       sides        bottom, then a minus/plus pair per gap
       interlacing  lambda_0 < lambda_1^- <= lambda_1^+ < lambda_2^- <= ...,
                    strict between consecutive bands
       collapse     a gap is flagged collapsed iff its endpoints coincide
       isolated     the doubled endpoint of a collapsed gap lies strictly
                    inside the union of the neighbouring bands

     With a profile the numerical checks run as well:

       residual     |Delta(lambda) -+ 2| at every endpoint
       continuity   |Delta| <= 2 on both sides of a collapsed gap
       dichotomy    |Delta| <= 2 in the middle of every band, > 2 in the
                    middle of every open gap

     Failures are report entries, nothing is raised.
    """
    if options is None:
        options = searchSet()
    report = ValidationReport()
    ends = bs.endpoints
    tol = lambda x: options.rootTol * max(1.0, abs(x))

    for e in ends:
        expected = 'periodic' if e.k % 2 == 0 else 'semiperiodic'
        report.add('parity', e.parity == expected,
                   f'k={e.k} {e.side}: {e.parity}, expected {expected}')

    sides = [e.side for e in ends]
    expected = ['bottom'] + ['minus', 'plus'] * bs.numGaps
    report.add('sides', sides == expected and len(ends) % 2 == 1, f'{sides}')

    lams = bs.lambdas()
    for j in range(1, len(ends)):
        a, b = lams[j - 1], lams[j]
        if ends[j].side == 'plus':
            report.add('interlacing', a <= b + tol(b),
                       f'lambda_{ends[j].k}^- = {a:.12g} <= lambda_{ends[j].k}^+ = {b:.12g}')
        else:
            report.add('interlacing', a < b - tol(b),
                       f'band below lambda_{ends[j].k}^- is non-degenerate: {a:.12g} < {b:.12g}')

    for k in range(1, bs.numGaps + 1):
        lo, hi = bs.gap(k)
        close = abs(hi - lo) <= tol(lo)
        report.add('collapse', close == bs.isCollapsed(k),
                   f'gap {k}: length {hi - lo:.3g}, flagged {bs.isCollapsed(k)}')
        if bs.isCollapsed(k):
            below = lams[2 * k - 2]
            above = lams[2 * k + 1] if 2 * k + 1 < len(lams) else np.inf
            report.add('isolated', below < lo - tol(lo) and hi + tol(hi) < above,
                       f'gap {k} touching point {lo:.12g} inside ({below:.12g}, {above:.12g})')

    if profile is None:
        return report

    integrator = options.integrator
    delta = discriminant(profile, lams, integrator)
    for e, d in zip(ends, delta):
        limit = options.tangencyTol if e.collapsed else options.residualTol
        report.add('residual', abs(d - e.target) <= limit,
                   f'k={e.k} {e.side}: |Delta - ({e.target:+g})| = {abs(d - e.target):.3g}')

    for k in range(1, bs.numGaps + 1):
        if bs.isCollapsed(k):
            x = bs.gap(k)[0]
            step = 10 * tol(x)
            sides = discriminant(profile, np.array([x - step, x + step]), integrator)
            report.add('continuity', np.all(np.abs(sides) <= 2.0 + 1e-6),
                       f'gap {k}: Delta = {sides[0]:.12g}, {sides[1]:.12g} beside {x:.12g}')

    mids = np.array([0.5 * (a + b) for a, b in bs.bands()])
    values = discriminant(profile, mids, integrator)
    for (a, b), d in zip(bs.bands(), values):
        report.add('dichotomy', abs(d) <= 2.0 + 1e-6,
                   f'band [{a:.10g}, {b:.10g}]: |Delta(mid)| = {abs(d):.6g}')
    for k in range(1, bs.numGaps + 1):
        if not bs.isCollapsed(k):
            lo, hi = bs.gap(k)
            t = bs.endpoints[2 * k - 1].target
            M = monodromy(profile, 0.5 * (lo + hi), 0.0, integrator)
            excess = np.sign(t) * float(M.offset(t))
            report.add('dichotomy', excess > 0,
                       f'gap ({lo:.10g}, {hi:.10g}): |Delta(mid)| - 2 = {excess:.3g}')
    return report

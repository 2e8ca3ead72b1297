__author__ 		= "Lekan Molu"
__copyright__ 	= "2026, Hill Operator Spectra in Python"
__license__ 	= "Molux Licence"
__maintainer__ 	= "Lekan Molu"
__status__ 		= "Completed"

import logging
import numpy as np
import pytest

from HillBandPy.Utilities import *
from HillBandPy.Potentials import (fromHarmonics, buildPrimitive, deltaComb,
                                   randomPotential, SawtoothCombProfile)
from HillBandPy.Propagator import discriminant
from HillBandPy.Spectrum import *
from HillBandPy.Oracle import GalerkinProblem, galerkinEigenvalues, kpDiscriminant

PI2 = np.pi ** 2


def test_search_options():
    opts = searchSet()
    assert opts.numGaps == 4 and opts.sStep == 0.02 and opts.rootTol == 1e-10
    assert opts.integrator.method == 'DOP853'
    assert searchSet(opts, numGaps=6).numGaps == 6
    with pytest.raises(UsageError):
        searchSet(numGaps=0)
    with pytest.raises(UsageError):
        searchSet(sStep=-1.0)
    with pytest.raises(UsageError):
        searchSet(integrator=dict(relTol=1e-8))


def test_s_grid():
    lam = sGrid(0.0, 50.0, 11, -4.0)
    assert lam[0] == 0.0 and lam[-1] == 50.0
    assert np.all(np.diff(lam) > 0)
    np.testing.assert_allclose(np.diff(np.sqrt(lam + 4.0)), np.diff(np.sqrt(lam + 4.0))[0])


def test_sample_discriminant(free, sawtooth):
    samples = sampleDiscriminant(free, 0.0, 50.0, 6)
    assert samples.shape == (6, 2)
    assert np.all(np.diff(samples[:, 0]) > 0)
    np.testing.assert_allclose(samples[:, 1], 2 * np.cos(np.sqrt(samples[:, 0])), atol=1e-9)

    samples = sampleDiscriminant(sawtooth, 0.0, 50.0, 40)
    np.testing.assert_allclose(samples[:, 1], kpDiscriminant(1.0, samples[:, 0]), atol=1e-8)

    with pytest.raises(UsageError):
        sampleDiscriminant(free, 5.0, 1.0, 10)
    with pytest.raises(UsageError):
        sampleDiscriminant(free, 0.0, 1.0, 1)


def test_threaded_sampling_agrees(mathieu):
    profile = buildPrimitive(mathieu)
    serial = sampleDiscriminant(profile, -5.0, 120.0, 150)
    threaded = sampleDiscriminant(profile, -5.0, 120.0, 150, searchSet(workers=3))
    np.testing.assert_array_equal(serial, threaded)


def test_refine_endpoint(free, sawtooth):
    assert refineEndpoint(free, -2, (8.0, 11.0), tangent=True) == pytest.approx(PI2, abs=1e-8)
    assert refineEndpoint(sawtooth, 2, (38.0, 41.0)) == pytest.approx(4 * PI2, abs=1e-8)
    with pytest.raises(NoSignChangeError):
        refineEndpoint(free, -2, (8.0, 11.0))
    with pytest.raises(BracketingError):
        refineEndpoint(free, 2, (1.0, 2.0))
    with pytest.raises(UsageError):
        refineEndpoint(free, 3, (1.0, 2.0))
    with pytest.raises(UsageError):
        refineEndpoint(free, 2, (2.0, 1.0))


def test_detect_tangency(free, sawtooth, mathieu):
    res = detectTangency(free, PI2 + 0.01, -2)
    assert res.kind == 'tangent' and res.confident
    assert res.lam == pytest.approx(PI2, abs=1e-7)
    assert res.curvature < 0

    # the comb's first gap opens at pi^2: Delta crosses -2 there
    res = detectTangency(sawtooth, PI2, -2)
    assert res.kind == 'crossing'
    assert res.excess > 0

    res = detectTangency(buildPrimitive(mathieu), PI2, -2)
    assert res.kind == 'crossing'
    assert res.excess > 1e-3


def test_free_band_structure(free):
    bs = bandStructure(free, searchSet(numGaps=4))
    assert bs.numGaps == 4
    assert bs.bottom == pytest.approx(0.0, abs=1e-8)
    for k in range(1, 5):
        lo, hi = bs.gap(k)
        assert lo == hi
        assert lo == pytest.approx((k * np.pi) ** 2, abs=1e-7)
        assert bs.isCollapsed(k)
    assert [e.parity for e in bs.endpoints[1::2]] == ['semiperiodic', 'periodic'] * 2
    np.testing.assert_allclose(bs.gapLengths(), 0.0)

    report = classifyAndValidate(bs, free)
    assert report.passed, report.lines()
    assert report.check('isolated') and report.check('continuity')


def test_constant_potential_is_shifted_free(options):
    bs = bandStructure(buildPrimitive(fromHarmonics([], mean=2.0)), options)
    assert bs.meanShiftApplied == 2.0
    assert bs.bottom == pytest.approx(2.0, abs=1e-8)
    assert bs.gap(1)[0] == pytest.approx(PI2 + 2.0, abs=1e-7)


def test_mathieu_against_galerkin(mathieu, options):
    bs = bandStructure(buildPrimitive(mathieu), options)
    assert not any(bs.isCollapsed(k) for k in range(1, 4))
    lo, hi = bs.gap(1)
    assert hi - lo > 1.0
    for parity in PARITIES:
        mine = np.sort(bs.ofParity(parity))
        ref = galerkinEigenvalues(GalerkinProblem(mathieu, parity, 256), len(mine))
        np.testing.assert_allclose(mine, ref, rtol=1e-6, atol=1e-6)
    assert classifyAndValidate(bs, buildPrimitive(mathieu), options).passed


def test_target_roots_solve_delta_equal_target(mathieu):
    profile = buildPrimitive(mathieu)
    opts = searchSet(numGaps=2)
    for target in (2, -2):
        lams = np.array([r.lam for r in targetRoots(profile, target, 3, opts)])
        assert np.all(np.diff(lams) > 0)
        np.testing.assert_allclose(discriminant(profile, lams), target, atol=1e-8)


def test_narrow_gap_is_not_collapsed(mathieu, options):
    profile = buildPrimitive(mathieu)
    bs = bandStructure(profile, options)
    lo, hi = bs.gap(3)
    ref = galerkinEigenvalues(GalerkinProblem(mathieu, 'semiperiodic', 256), 4)[2:]
    assert ref[0] == pytest.approx(88.83261247, abs=1e-7)
    assert ref[1] == pytest.approx(88.83293322, abs=1e-7)
    assert not bs.isCollapsed(3)
    np.testing.assert_allclose([lo, hi], ref, rtol=0, atol=1e-6)
    assert hi - lo == pytest.approx(ref[1] - ref[0], rel=1e-2)

    res = detectTangency(profile, 0.5 * (lo + hi), -2, options, bracket=(lo - 0.2, hi + 0.2))
    assert res.kind == 'crossing'
    assert res.excess > 0 and res.defect > options.tangencyTol
    assert lo < res.lam < hi


def test_endpoint_confidence_is_recorded(free):
    bs = bandStructure(free, searchSet(numGaps=2))
    assert all(e.confident for e in bs.endpoints)

    ends = [GapEndpoint(0.0, 0, 'bottom', 'periodic'),
            GapEndpoint(9.0, 1, 'minus', 'semiperiodic', True, False),
            GapEndpoint(9.0, 1, 'plus', 'semiperiodic', True, False)]
    doc = BandStructure(ends).toDict()
    assert [e['confident'] for e in doc['endpoints']] == [True, False, False]
    assert readBandStructure(bandStructureToJSON(BandStructure(ends))) == BandStructure(ends)
    for e in doc['endpoints']:
        del e['confident']
    assert all(e.confident for e in BandStructure.fromDict(doc).endpoints)


def test_comb_gaps_open_at_free_points(sawtooth, options):
    bs = bandStructure(sawtooth, options)
    for k in range(1, 4):
        lo, hi = bs.gap(k)
        assert lo == pytest.approx((k * np.pi) ** 2, rel=1e-8)
        assert hi > lo + 0.1
    for e in bs.endpoints:
        assert kpDiscriminant(1.0, e.lam) == pytest.approx(e.target, abs=1e-8)
    assert classifyAndValidate(bs, sawtooth, options).passed


def test_strong_comb_parity():
    bs = bandStructure(SawtoothCombProfile(4.0), searchSet(numGaps=2))
    for e in bs.endpoints:
        assert kpDiscriminant(4.0, e.lam) == pytest.approx(e.target, abs=1e-7)
    assert [e.parity for e in bs.endpoints] == ['periodic'] + ['semiperiodic'] * 2 + ['periodic'] * 2
    assert classifyAndValidate(bs).check('parity')


def test_validation_reports_failures():
    ends = [GapEndpoint(0.0, 0, 'bottom', 'periodic'),
            GapEndpoint(9.0, 1, 'minus', 'semiperiodic'),
            GapEndpoint(45.0, 1, 'plus', 'semiperiodic'),
            GapEndpoint(40.0, 2, 'minus', 'periodic'),
            GapEndpoint(50.0, 2, 'plus', 'periodic')]
    report = classifyAndValidate(BandStructure(ends))
    assert not report.passed
    assert not report.check('interlacing')
    assert report.check('parity') and report.check('sides')
    assert any(line.startswith('FAIL  interlacing') for line in report.lines())
    with pytest.raises(UsageError):
        report.check('residual')

    wrong = [GapEndpoint(0.0, 0, 'bottom', 'periodic'),
             GapEndpoint(9.0, 1, 'minus', 'periodic', True),
             GapEndpoint(9.5, 1, 'plus', 'periodic', True)]
    report = classifyAndValidate(BandStructure(wrong))
    assert not report.check('parity')
    assert not report.check('collapse')


def test_band_structure_accessors():
    ends = [GapEndpoint(0.0, 0, 'bottom', 'periodic'),
            GapEndpoint(9.0, 1, 'minus', 'semiperiodic'),
            GapEndpoint(11.0, 1, 'plus', 'semiperiodic'),
            GapEndpoint(39.0, 2, 'minus', 'periodic'),
            GapEndpoint(39.0, 2, 'plus', 'periodic', True)]
    bs = BandStructure(ends, 1.0)
    assert bs.numGaps == 2
    assert bs.bands() == [(0.0, 9.0), (11.0, 39.0)]
    assert bs.gaps()[0] == (-np.inf, 0.0)
    np.testing.assert_array_equal(bs.gapLengths(), [2.0, 0.0])
    assert bs.ofParity('semiperiodic') == [9.0, 11.0]
    assert BandStructure.fromDict(bs.toDict()) == bs
    assert ends[1].target == -2.0 and ends[0].target == 2.0


def test_periodic_and_semiperiodic_eigenvalues(free, mathieu):
    np.testing.assert_allclose(periodicEigenvalues(free, 3), [0.0, 4 * PI2, 4 * PI2], atol=1e-7)
    np.testing.assert_allclose(semiperiodicEigenvalues(free, 2), [PI2, PI2], atol=1e-7)
    values = semiperiodicEigenvalues(buildPrimitive(mathieu), 2)
    assert values[0] < PI2 < values[1]
    ref = galerkinEigenvalues(GalerkinProblem(mathieu, 'semiperiodic', 256), 2)
    np.testing.assert_allclose(values, ref, rtol=1e-6)
    with pytest.raises(UsageError):
        periodicEigenvalues(free, 0)


def test_floor_inside_the_spectrum_is_lowered(free, caplog):
    caplog.set_level(logging.WARNING)
    bs = bandStructure(free, searchSet(numGaps=1, lambdaFloor=1.0))
    assert 'lowering it' in caplog.text
    assert bs.bottom == pytest.approx(0.0, abs=1e-8)


def test_shift_equivariance(options):
    q = randomPotential(1, 16)
    base = bandStructure(buildPrimitive(q), options)
    moved = bandStructure(buildPrimitive(q.shifted(2.5)), options)
    np.testing.assert_allclose(moved.lambdas() - base.lambdas(), 2.5, atol=1e-8)


@pytest.mark.parametrize('seed', [1, 2, 3])
def test_random_potentials_interlace(seed):
    profile = buildPrimitive(randomPotential(seed, 16))
    opts = searchSet()
    bs = bandStructure(profile, opts)
    report = classifyAndValidate(bs, profile, opts)
    assert report.passed, [line for line in report.lines() if line.startswith('FAIL')]
    lams = bs.lambdas()
    assert np.all(np.diff(lams)[0::2] > opts.rootTol)
    np.testing.assert_allclose(np.sort(bs.ofParity('periodic')),
                               periodicEigenvalues(profile, 5, opts), rtol=1e-8, atol=1e-8)
    np.testing.assert_allclose(np.sort(bs.ofParity('semiperiodic')),
                               semiperiodicEigenvalues(profile, 4, opts), rtol=1e-8, atol=1e-8)


def test_convergence_of_truncations(options):
    q = fromHarmonics([(1, 1.0), (2, 0.5)])
    study = convergenceStudy(q, [2, 4], options)
    np.testing.assert_array_equal(study.differences, 0.0)
    assert study.reference is None and study.errors is None
    with pytest.raises(UsageError):
        convergenceStudy(q, [4, 2], options)


@pytest.mark.slow
@pytest.mark.timeout(600)
def test_comb_truncations_approach_the_sawtooth():
    q, sawtooth = deltaComb(1.0, truncation=32)
    study = convergenceStudy(q, [4, 8, 16, 32], searchSet(numGaps=3), reference=sawtooth)
    errors = study.errors[:, 1:].max(axis=1)
    assert errors[-1] < errors[0]
    assert study.differences[-1].max() < study.differences[0].max()
    assert len(study.structures) == 4 and study.lambdas.shape == (4, 7)

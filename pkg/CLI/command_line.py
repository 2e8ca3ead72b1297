__all__ = ["run", "main", "buildParser"]

__author__ = "Lekan Molux"
__date__ = "Oct. 17, 2026"

import os
import sys
import json
import logging
import argparse
import contextlib

from HillBandPy.Utilities import *
from HillBandPy.Potentials import loadPotential
from HillBandPy.Propagator import integratorSet
from HillBandPy.Spectrum import (searchSet, bandStructure, sampleDiscriminant,
                                 periodicEigenvalues, semiperiodicEigenvalues,
                                 convergenceStudy, writeBandStructure,
                                 bandStructureToJSON, writeDiscriminant,
                                 writeEigenvalues, writeConvergence)
from .verify import runVerification

logger = logging.getLogger(__name__)

SUBCOMMANDS = ('bands', 'disc', 'eigs', 'converge', 'verify')


def _nList(text):
    try:
        return [int(t) for t in text.split(',') if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'--n-list must be comma separated integers, got {text!r}')


def buildParser():
    p = argparse.ArgumentParser(prog='hillband',
                                description='Band and gap structure of Hill operators '
                                            'with H^{-1} periodic potentials.')
    p.add_argument('-v', '--verbose', action='count', default=0,
                   help='-v for progress, -vv for debugging output on standard error')
    sub = p.add_subparsers(dest='subcommand', metavar='{' + ','.join(SUBCOMMANDS) + '}')
    sub.required = True

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--potential', required=True, metavar='PATH',
                        help='potential JSON file')
    common.add_argument('--seed', type=int, default=None,
                        help='override the seed of a random potential file')
    common.add_argument('--out', default=None, metavar='PATH',
                        help='output file, standard output by default')
    common.add_argument('--format', choices=('csv', 'json'), default='csv')
    common.add_argument('--rel-tol', type=float, default=None, dest='relTol')
    common.add_argument('--root-tol', type=float, default=None, dest='rootTol')
    common.add_argument('--s-step', type=float, default=None, dest='sStep')

    b = sub.add_parser('bands', parents=[common], help='gap endpoints')
    b.add_argument('--gaps', type=int, default=4)

    d = sub.add_parser('disc', parents=[common], help='tabulate the discriminant')
    d.add_argument('--lambda-min', type=float, required=True, dest='lambdaMin')
    d.add_argument('--lambda-max', type=float, required=True, dest='lambdaMax')
    d.add_argument('--samples', type=int, default=200)

    e = sub.add_parser('eigs', parents=[common], help='periodic/semiperiodic eigenvalues')
    e.add_argument('--count', type=int, default=4)
    e.add_argument('--parity', choices=('periodic', 'semiperiodic'), default='periodic')

    c = sub.add_parser('converge', parents=[common], help='truncation convergence study')
    c.add_argument('--n-list', type=_nList, default=[2, 4, 8, 16], dest='nList')
    c.add_argument('--gaps', type=int, default=3)

    sub.add_parser('verify', help='run the verification suite')
    return p


def _options(args):
    integrator = integratorSet(relTol=getattr(args, 'relTol', None))
    threads = os.environ.get('HILLBAND_THREADS', '1') or '1'
    try:
        workers = int(threads)
    except ValueError:
        error(f'HILLBAND_THREADS must be an integer, got {threads!r}')
    return searchSet(integrator=integrator, rootTol=getattr(args, 'rootTol', None),
                     sStep=getattr(args, 'sStep', None), workers=max(workers, 1),
                     numGaps=getattr(args, 'gaps', None))


@contextlib.contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, 'w', newline='') as fp:
            yield fp


def _dispatch(args, out):
    if args.subcommand == 'verify':
        report = runVerification()
        for line in report.lines():
            print(line, file=out)
        return 0 if report.passed else 1

    options = _options(args)
    pot = loadPotential(args.potential, args.seed)

    if args.subcommand == 'bands':
        bs = bandStructure(pot.profile, options)
        if args.format == 'json':
            print(bandStructureToJSON(bs), file=out)
        else:
            writeBandStructure(bs, out)

    elif args.subcommand == 'disc':
        samples = sampleDiscriminant(pot.profile, args.lambdaMin, args.lambdaMax,
                                     args.samples, options)
        if args.format == 'json':
            json.dump(dict(lam=samples[:, 0].tolist(), delta=samples[:, 1].tolist()), out)
            print(file=out)
        else:
            writeDiscriminant(samples, out)

    elif args.subcommand == 'eigs':
        routine = periodicEigenvalues if args.parity == 'periodic' else semiperiodicEigenvalues
        values = routine(pot.profile, args.count, options)
        if args.format == 'json':
            json.dump(dict(parity=args.parity, eigenvalues=values), out)
            print(file=out)
        else:
            writeEigenvalues(values, args.parity, out)

    elif args.subcommand == 'converge':
        study = convergenceStudy(pot.potential, args.nList, options, reference=pot.profile)
        if args.format == 'json':
            doc = dict(nList=study.nList, lambdas=study.lambdas.tolist(),
                       differences=study.differences.tolist(),
                       gapLengths=[bs.gapLengths().tolist() for bs in study.structures],
                       reference=study.reference.lambdas().tolist(),
                       errors=study.errors.tolist())
            json.dump(doc, out, indent=2)
            print(file=out)
        else:
            writeConvergence(study, out)
    return 0


def run(argv=None):
    """
     code = run(argv)

     Command line front door. Exit codes: 0 on success, 1 on a
     computation error, 2 on a usage or format error (bad flags, unreadable
     or malformed potential file, violated potential invariants).
    """
    parser = buildParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(asctime)s %(name)s %(levelname)s: %(message)s')

    try:
        with _sink(getattr(args, 'out', None)) as out:
            return _dispatch(args, out)
    except (FormatError, UsageError) as exc:
        print(f'hillband: error: {exc}', file=sys.stderr)
        return 2
    except OSError as exc:
        print(f'hillband: error: {exc}', file=sys.stderr)
        return 2
    except HillBandError as exc:
        print(f'hillband: computation failed: {exc}', file=sys.stderr)
        return 1


def main():
    sys.exit(run())

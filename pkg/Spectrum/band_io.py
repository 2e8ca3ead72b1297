__all__ = ["writeBandStructure", "bandStructureToJSON", "readBandStructure",
           "writeDiscriminant", "writeConvergence", "writeEigenvalues"]

import csv
import json

from HillBandPy.Utilities import *
from .band_structure_types import BandStructure


def _num(x):
    # shortest repr round-trips a double exactly
    return repr(float(x))


def writeBandStructure(bs, fp):
    "CSV with header k,side,lambda,parity,collapsed."
    w = csv.writer(fp, lineterminator='\n')
    w.writerow(['k', 'side', 'lambda', 'parity', 'collapsed'])
    for e in bs.endpoints:
        w.writerow([e.k, e.side, _num(e.lam), e.parity, int(e.collapsed)])


def bandStructureToJSON(bs):
    return json.dumps(bs.toDict(), indent=2)


def readBandStructure(text):
    "Inverse of bandStructureToJSON; endpoint values come back bit for bit."
    try:
        return BandStructure.fromDict(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        error(f'not a band structure document: {exc}', FormatError)


def writeDiscriminant(samples, fp):
    "CSV with header lambda,delta; one row per sample."
    w = csv.writer(fp, lineterminator='\n')
    w.writerow(['lambda', 'delta'])
    for lam, delta in samples:
        w.writerow([_num(lam), _num(delta)])


def writeEigenvalues(values, parity, fp):
    "CSV with header index,parity,lambda."
    w = csv.writer(fp, lineterminator='\n')
    w.writerow(['index', 'parity', 'lambda'])
    for j, lam in enumerate(values):
        w.writerow([j, parity, _num(lam)])


def writeConvergence(study, fp):
    "CSV with header n,k,side,lambda; one row per truncation and endpoint."
    w = csv.writer(fp, lineterminator='\n')
    w.writerow(['n', 'k', 'side', 'lambda'])
    for n, bs in zip(study.nList, study.structures):
        for e in bs.endpoints:
            w.writerow([n, e.k, e.side, _num(e.lam)])

__all__ = ["convergenceStudy"]

__author__ = "Lekan Molux"
__date__ = "Oct. 15, 2026"

import logging
import numpy as np

from HillBandPy.Utilities import *
from HillBandPy.Potentials import truncatePotential, buildPrimitive
from .search_set import searchSet
from .band_structure import bandStructure

logger = logging.getLogger(__name__)


def convergenceStudy(q, nList, options=None, reference=None):
    """
     study = convergenceStudy(q, nList, options, reference)

     Band structures of the truncations q_n = sum_{|m|<=n} qhat(2m) e^{2 pi i m x}.
     The q_n converge to q in H^{-1}_per, hence the operators converge in
     the norm resolvent sense and every gap endpoint converges; no rate
     is claimed, only the successive differences are reported.

     Inp.ts:
       q         - FourierPotential
       nList     - strictly increasing truncation orders
       options   - searchSet Bundle
       reference - optional PrimitiveProfile of the limit (e.g. the exact
                   sawtooth of a comb); its endpoints give the errors

     Output:
       study - Bundle with fields
                 .nList:       the orders
                 .structures:  BandStructure per order
                 .lambdas:     (len(nList), 1 + 2 numGaps) endpoint table
                 .differences: |lambda(q_{n_{j+1}}) - lambda(q_{n_j})| per endpoint
                 .reference:   BandStructure of the reference or None
                 .errors:      |lambda(q_n) - lambda(reference)| or None
    """
    if options is None:
        options = searchSet()
    nList = [int(n) for n in nList]
    if not nList or any(b <= a for a, b in zip(nList[:-1], nList[1:])):
        error(f'nList must be strictly increasing, got {nList}')

    structures = []
    for n in nList:
        structures.append(bandStructure(buildPrimitive(truncatePotential(q, n)), options))
        info(f'truncation n={n}: {structures[-1]!r}')

    lambdas = np.array([bs.lambdas() for bs in structures])
    differences = np.abs(np.diff(lambdas, axis=0))

    refBs, errors = None, None
    if reference is not None:
        refBs = bandStructure(reference, options)
        errors = np.abs(lambdas - refBs.lambdas()[None, :])

    return Bundle(dict(nList=nList, structures=structures, lambdas=lambdas,
                       differences=differences, reference=refBs, errors=errors))

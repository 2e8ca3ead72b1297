__all__ = ["fromHarmonics"]

from HillBandPy.Utilities import *
from .fourier_potential import FourierPotential


def fromHarmonics(entries, mean=0.0, maxHarmonic=None):
    """
     p = fromHarmonics(entries, mean)

     Builds a FourierPotential from (m, qhat(2m)) pairs. Conjugate
     partners that are missing are synthesized, so a table of positive
     indices describes a real potential; partners that are given must be
     exact conjugates.

     Inp.ts:
       entries     - iterable of (m, complex value) with m != 0
       mean        - real C = qhat(0)
       maxHarmonic - optional K, defaults to the largest |m|

     Output:
       p - FourierPotential

     Raises FormatError on a duplicate index or m = 0 and
     SymmetryViolationError on a conflicting conjugate pair.
    """
    given = {}
    for m, value in entries:
        if int(m) != m:
            error(f'Harmonic index {m} is not an integer', FormatError)
        m = int(m)
        if m == 0:
            error('Harmonic index 0 is reserved for the mean', FormatError)
        if m in given:
            error(f'Duplicate harmonic index {m}', FormatError)
        given[m] = complex(value)

    table = dict(given)
    for m, value in given.items():
        if -m in given:
            if given[-m] != value.conjugate():
                error(f'Conflicting conjugate pair at m={m}: '
                      f'{given[-m]} != conj({value})', SymmetryViolationError)
        else:
            table[-m] = value.conjugate()

    # the self-conjugate condition on a pair fixes both entries exactly
    for m in [m for m in table if m > 0]:
        table[-m] = table[m].conjugate()

    return FourierPotential(table, mean, maxHarmonic)

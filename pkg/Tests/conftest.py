__author__ 		= "Lekan Molu"
__copyright__ 	= "2026, Hill Operator Spectra in Python"
__license__ 	= "Molux Licence"
__maintainer__ 	= "Lekan Molu"
__status__ 		= "Completed"

import sys
import importlib.util
from os.path import abspath, dirname, join

import pytest

ROOT = dirname(dirname(abspath(__file__)))

# the repository root is the package; register it under its import name
# when it has not been pip installed
try:
    import HillBandPy
except ImportError:
    spec = importlib.util.spec_from_file_location('HillBandPy', join(ROOT, '__init__.py'),
                                                  submodule_search_locations=[ROOT])
    HillBandPy = importlib.util.module_from_spec(spec)
    sys.modules['HillBandPy'] = HillBandPy
    spec.loader.exec_module(HillBandPy)

from HillBandPy.Potentials import fromHarmonics, buildPrimitive, deltaComb
from HillBandPy.Spectrum import searchSet


@pytest.fixture
def free():
    "Profile of the zero potential."
    return buildPrimitive(fromHarmonics([]))


@pytest.fixture
def mathieu():
    "q = 2 cos(2 pi x)."
    return fromHarmonics([(1, 1.0)])


@pytest.fixture
def sawtooth():
    "Exact primitive of the comb sum_n delta(x - n)."
    return deltaComb(1.0)[1]


@pytest.fixture
def options():
    return searchSet(numGaps=3)

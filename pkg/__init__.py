import sys
from os.path import abspath, join, dirname
sys.path.append(abspath(join(dirname(__file__))))

from .Utilities import *
from .Potentials import *
from .Propagator import *
from .Spectrum import *
from .Oracle import *

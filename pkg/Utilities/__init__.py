from .errors import *
from .matlab_utils import *
from ._version import __version__

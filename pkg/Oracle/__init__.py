from .galerkin import *
from .kronig_penney import *

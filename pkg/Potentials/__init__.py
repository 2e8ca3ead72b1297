from .fourier_potential import *
from .primitive_profile import *
from .from_harmonics import *
from .delta_comb import *
from .piecewise_potential import *
from .build_primitive import *
from .hminus1_norm import *
from .truncate import *
from .random_potential import *
from .evaluate_q import *
from .potential_io import *

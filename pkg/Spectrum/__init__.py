from .search_set import *
from .band_structure_types import *
from .sample_discriminant import *
from .refine_endpoint import *
from .detect_tangency import *
from .target_roots import *
from .band_structure import *
from .eigenvalues import *
from .classify_validate import *
from .convergence_study import *
from .band_io import *

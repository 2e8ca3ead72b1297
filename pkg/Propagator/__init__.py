from .integrator_set import *
from .prop_state import *
from .system_rhs import *
from .quasi_integrate import *
from .propagate import *
from .monodromy import *
from .discriminant import *
from .lagrange_bracket import *
from .floquet import *

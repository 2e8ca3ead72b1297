__all__ = ["buildPrimitive"]

import numpy as np

from .primitive_profile import TrigSumProfile


def buildPrimitive(p):
    """
     profile = buildPrimitive(p)

     The L2 primitive of the centred potential: q - C = Q' with

        Qhat(2m) = qhat(2m) / (2 pi i m),

     so Q is real, 1-periodic and has zero mean. The mean C of p is
     carried on the profile as meanShift.
    """
    table = {m: value / (2j * np.pi * m) for m, value in p.harmonics.items()}
    return TrigSumProfile(table, p.mean)

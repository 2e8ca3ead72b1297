__all__ = ["lagrangeBracket"]

from HillBandPy.Utilities import *


def lagrangeBracket(a, b):
    """
        [a, b]_x = a.u * b.u^[1] - a.u^[1] * b.u for two real states at the
        same point: the Wronskian in quasi-derivative coordinates. For two
        solutions at the same lambda it does not depend on x.
    """
    if a.x != b.x:
        error(f'Lagrange bracket of states at different points {a.x} and {b.x}')
    return a.u * b.u1 - a.u1 * b.u

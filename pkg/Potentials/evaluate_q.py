__all__ = ["evaluateQ"]


def evaluateQ(profile, x):
    "Q(x) for a scalar or an array of positions, periodic with period 1."
    return profile.evaluate(x)

__all__ = ["systemRHS"]


def systemRHS(profile, lam, state, sensitivity=None, piece=None):
    """
        Right hand side of the homogeneous quasi-derivative system

            u'     = Q u + u^[1]
            u^[1]' = (-lam - Q^2) u - Q u^[1]

        equivalent to -u'' + Q'u = lam u. Here lam is the raw parameter of
        the centred equation; propagate and everything above it take the
        physical lambda and subtract the mean of the potential first.

        state.u and state.u1 may be arrays (a batch of columns); lam then
        broadcasts against them. When sensitivity, the PropState of the
        lam-derivatives (v, v^[1]), is given, the variational rows

            v'     = Q v + v^[1]
            v^[1]' = (-lam - Q^2) v - Q v^[1] - u

        are returned too. piece replaces profile.evaluate on a segment free
        of jumps of Q.

        Returns (du, du1), or (du, du1, dv, dv1).
    """
    q = (piece or profile.evaluate)(state.x)
    du = q * state.u + state.u1
    du1 = (-lam - q * q) * state.u - q * state.u1
    if sensitivity is None:
        return du, du1
    dv = q * sensitivity.u + sensitivity.u1
    dv1 = (-lam - q * q) * sensitivity.u - q * sensitivity.u1 - state.u
    return du, du1, dv, dv1

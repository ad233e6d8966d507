"""Pure-Python integer kernels for homogeneous triples.

Every triple handled here is a tuple of three Python ints.  The compiled
module ``trisum._kernel`` exports the same four functions with identical
semantics; ``trisum._backend`` picks one at import time.
"""

from math import gcd

ZERO = (0, 0, 0)


def canon(v):
    """Divide out the content and make the first nonzero entry positive.

    The zero triple is returned unchanged.
    """
    x, y, z = v
    g = gcd(gcd(x, y), z)
    if g == 0:
        return ZERO
    if x < 0 or (x == 0 and (y < 0 or (y == 0 and z < 0))):
        g = -g
    if g == 1:
        return (x, y, z)
    return (x // g, y // g, z // g)


def cross(a, b):
    """Canonical cross product of two integer triples."""
    a0, a1, a2 = a
    b0, b1, b2 = b
    return canon((a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0))


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def det3(a, b, c):
    a0, a1, a2 = a
    b0, b1, b2 = b
    c0, c1, c2 = c
    return (a0 * (b1 * c2 - b2 * c1)
            - a1 * (b0 * c2 - b2 * c0)
            + a2 * (b0 * c1 - b1 * c0))

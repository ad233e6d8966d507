# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels for homogeneous triples.

Entries small enough for 64-bit C arithmetic take a native path; anything
larger drops back to Python integers, so results are always exact and
identical to ``trisum._kernel_py``.
"""

from trisum import _kernel_py

# |entry| bounds under which the 64-bit paths cannot overflow
cdef long long CROSS_LIMIT = 2147483647   # 2*L**2 < 2**63
cdef long long DOT_LIMIT = 1073741823     # 3*L**2 < 2**63
cdef long long DET_LIMIT = 1048575        # 6*L**3 < 2**63
cdef long long CANON_LIMIT = 9223372036854775807

ZERO = (0, 0, 0)


cdef inline long long _gcd(long long a, long long b) nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline bint _load(object v, long long limit, long long *out):
    cdef long long t
    cdef int i
    for i in range(3):
        try:
            t = v[i]
        except OverflowError:
            return False
        if t > limit or t < -limit:
            return False
        out[i] = t
    return True


cdef inline tuple _canon_c(long long x, long long y, long long z):
    cdef long long g = _gcd(_gcd(x, y), z)
    if g == 0:
        return ZERO
    if x < 0 or (x == 0 and (y < 0 or (y == 0 and z < 0))):
        g = -g
    return (x // g, y // g, z // g)


def canon(v):
    cdef long long c[3]
    if _load(v, CANON_LIMIT, c):
        return _canon_c(c[0], c[1], c[2])
    return _kernel_py.canon(v)


def cross(a, b):
    cdef long long p[3]
    cdef long long q[3]
    if _load(a, CROSS_LIMIT, p) and _load(b, CROSS_LIMIT, q):
        return _canon_c(p[1] * q[2] - p[2] * q[1],
                        p[2] * q[0] - p[0] * q[2],
                        p[0] * q[1] - p[1] * q[0])
    return _kernel_py.cross(a, b)


def dot(a, b):
    cdef long long p[3]
    cdef long long q[3]
    if _load(a, DOT_LIMIT, p) and _load(b, DOT_LIMIT, q):
        return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]
    return _kernel_py.dot(a, b)


def det3(a, b, c):
    cdef long long p[3]
    cdef long long q[3]
    cdef long long r[3]
    if _load(a, DET_LIMIT, p) and _load(b, DET_LIMIT, q) and _load(c, DET_LIMIT, r):
        return (p[0] * (q[1] * r[2] - q[2] * r[1])
                - p[1] * (q[0] * r[2] - q[2] * r[0])
                + p[2] * (q[0] * r[1] - q[1] * r[0]))
    return _kernel_py.det3(a, b, c)

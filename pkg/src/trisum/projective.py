"""Exact projective plane over the rationals.

Points and lines are homogeneous triples stored as coprime integers with the
first nonzero entry positive, so equality is plain tuple comparison.  Nothing
in this module touches floating point.

Cross-ratio convention (used by every harmonic computation in the package)::

    (a, b; c, d) = ((c - a) / (c - b)) / ((d - a) / (d - b))

evaluated on affine parameters of any chart of the common line.  Under it a
quadruple is harmonic when the value is -1, and swapping c, d inverts it.
"""

from fractions import Fraction
from math import gcd, lcm

from trisum import _backend as K
from trisum import linalg
from trisum.errors import (
    CoincidentLines,
    CoincidentPoints,
    DegeneratePoints,
    DegenerateQuadruple,
    NotCollinear,
    TangentParameter,
    UnderDetermined,
    ZeroVector,
)


def _integer_triple(values):
    fr = [Fraction(v) for v in values]
    den = lcm(*(f.denominator for f in fr))
    return tuple(int(f * den) for f in fr)


class _Triple:
    __slots__ = ("coords",)

    def __init__(self, x, y, z=1):
        v = K.canon(_integer_triple((x, y, z)))
        if v == K.ZERO:
            raise ZeroVector(f"{type(self).__name__} cannot be the zero vector")
        self.coords = v

    @classmethod
    def _wrap(cls, v):
        obj = object.__new__(cls)
        obj.coords = v
        return obj

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        return type(other) is type(self) and other.coords == self.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __repr__(self):
        return f"{type(self).__name__}({self.coords[0]}:{self.coords[1]}:{self.coords[2]})"

    def to_json(self):
        return [str(c) for c in self.coords]

    @classmethod
    def from_json(cls, data):
        if len(data) != 3:
            raise ValueError(f"expected three coordinates, got {len(data)}")
        return cls(*(Fraction(s) for s in data))


class HomPoint(_Triple):
    """A point of the rational projective plane."""

    __slots__ = ()

    @property
    def is_infinite(self):
        return self.coords[2] == 0

    def affine(self):
        x, y, z = self.coords
        if z == 0:
            raise ValueError(f"{self!r} is at infinity")
        return Fraction(x, z), Fraction(y, z)


class HomLine(_Triple):
    """A line u*x + v*y + w*z = 0."""

    __slots__ = ()

    def contains(self, p):
        return K.dot(self.coords, p.coords) == 0


LINE_AT_INFINITY = HomLine(0, 0, 1)


def incident(p, line):
    return K.dot(p.coords, line.coords) == 0


def join(p, q):
    v = K.cross(p.coords, q.coords)
    if v == K.ZERO:
        raise CoincidentPoints(f"{p!r} and {q!r} coincide")
    return HomLine._wrap(v)


def meet(l, m):
    v = K.cross(l.coords, m.coords)
    if v == K.ZERO:
        raise CoincidentLines(f"{l!r} and {m!r} coincide")
    return HomPoint._wrap(v)


def collinear(p, q, r):
    return K.det3(p.coords, q.coords, r.coords) == 0


def concurrent(l, m, n):
    return K.det3(l.coords, m.coords, n.coords) == 0


def point_from_vector(v):
    """HomPoint from any nonzero rational 3-vector."""
    return HomPoint(*v)


# -- cross-ratio ---------------------------------------------------------

def _bracket(p, q, ref):
    # [p, q] = det(p, q, ref): a chart-free 2x2 bracket on a line missing ref
    return K.det3(p.coords, q.coords, ref)


def _off_line_reference(line):
    for ref in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        if K.dot(line.coords, ref) != 0:
            return ref
    raise AssertionError("unreachable: a line misses some basis point")


def cross_ratio(a, b, c, d):
    """Cross-ratio (a, b; c, d) for four distinct collinear points."""
    pts = (a, b, c, d)
    if len(set(pts)) < 4:
        raise DegeneratePoints("cross-ratio needs four distinct points")
    line = join(a, b)
    if not (incident(c, line) and incident(d, line)):
        raise NotCollinear("cross-ratio needs collinear points")
    ref = _off_line_reference(line)
    num = _bracket(a, c, ref) * _bracket(b, d, ref)
    den = _bracket(a, d, ref) * _bracket(b, c, ref)
    return Fraction(num, den)


def harmonic_conjugate(s, a, x):
    """The point y with (s, y; a, x) = -1."""
    if len({s, a, x}) < 3:
        raise DegeneratePoints("harmonic conjugate needs three distinct points")
    if not collinear(s, a, x):
        raise NotCollinear("harmonic conjugate needs collinear points")
    n = _cross_raw(a.coords, x.coords)
    alpha = K.dot(_cross_raw(s.coords, x.coords), n)
    beta = K.dot(_cross_raw(s.coords, a.coords), n)
    # s ~ alpha*a - beta*x; the conjugate flips the sign of the x component
    ac, xc = a.coords, x.coords
    return HomPoint(*(alpha * ac[i] + beta * xc[i] for i in range(3)))


def _cross_raw(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


# -- projective maps -----------------------------------------------------

def _canon_matrix(m):
    flat = _integer_triple_n([v for row in m for v in row])
    return tuple(tuple(flat[3 * i:3 * i + 3]) for i in range(3))


def _integer_triple_n(values):
    fr = [Fraction(v) for v in values]
    den = lcm(*(f.denominator for f in fr))
    ints = [int(f * den) for f in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    first = next((v for v in ints if v != 0), 0)
    if g == 0:
        return ints
    if first < 0:
        g = -g
    return [v // g for v in ints]


class ProjMap:
    """Invertible projective transformation, stored as a normalized integer matrix."""

    __slots__ = ("matrix", "_adj")

    def __init__(self, matrix):
        m = _canon_matrix(matrix)
        if linalg.det3(m) == 0:
            raise DegenerateQuadruple("projective map must have nonzero determinant")
        self.matrix = m
        # adjugate is the inverse up to scale, which is all projective maps need
        self._adj = linalg.adjugate3(m)

    def __eq__(self, other):
        return isinstance(other, ProjMap) and other.matrix == self.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"ProjMap({self.matrix})"

    def __call__(self, p):
        return self.point(p)

    def point(self, p):
        return HomPoint._wrap(K.canon(linalg.matvec(self.matrix, p.coords)))

    def line(self, l):
        return HomLine._wrap(K.canon(linalg.matvec(linalg.transpose(self._adj), l.coords)))

    def conic(self, c):
        a = self._adj
        return Conic(linalg.matmul(linalg.matmul(linalg.transpose(a), c.sym), a))

    def inverse(self):
        return ProjMap(self._adj)

    def __matmul__(self, other):
        return ProjMap(linalg.matmul(self.matrix, other.matrix))

    @classmethod
    def identity(cls):
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def _basis_map(pts):
    """Matrix sending e1, e2, e3, (1,1,1) to the four given points."""
    p1, p2, p3, p4 = (p.coords for p in pts)
    cols = (p1, p2, p3)
    m = tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))
    try:
        lam = linalg.solve(m, p4)
    except ValueError:
        raise DegenerateQuadruple("three of the four points are collinear") from None
    if any(v == 0 for v in lam):
        raise DegenerateQuadruple("three of the four points are collinear")
    return tuple(tuple(m[i][j] * lam[j] for j in range(3)) for i in range(3))


def map_from_correspondence(src, dst):
    """The projective map sending src[i] to dst[i] for four points in general position."""
    if len(src) != 4 or len(dst) != 4:
        raise ValueError("need exactly four source and four target points")
    a = _basis_map(src)
    b = _basis_map(dst)
    return ProjMap(linalg.matmul(b, linalg.adjugate3(a)))


# -- conics --------------------------------------------------------------

class Conic:
    """Symmetric integer matrix Q; a point P is on the conic iff P^T Q P = 0."""

    __slots__ = ("sym",)

    def __init__(self, sym):
        m = _canon_matrix(sym)
        if any(m[i][j] != m[j][i] for i in range(3) for j in range(3)):
            raise ValueError("conic matrix must be symmetric")
        if all(v == 0 for row in m for v in row):
            raise ZeroVector("conic matrix must be nonzero")
        self.sym = m

    def __eq__(self, other):
        return isinstance(other, Conic) and other.sym == self.sym

    def __hash__(self):
        return hash(self.sym)

    def __repr__(self):
        return f"Conic({self.sym})"

    def bilinear(self, p, q):
        return K.dot(p, linalg.matvec(self.sym, q))

    def value(self, p):
        return self.bilinear(p.coords, p.coords)

    def contains(self, p):
        return self.value(p) == 0

    @property
    def is_degenerate(self):
        return linalg.det3(self.sym) == 0

    @classmethod
    def from_coefficients(cls, xx, xy, xz, yy, yz, zz):
        """Conic xx*x^2 + xy*x*y + xz*x*z + yy*y^2 + yz*y*z + zz*z^2."""
        h = Fraction(1, 2)
        return cls(((xx, xy * h, xz * h), (xy * h, yy, yz * h), (xz * h, yz * h, zz)))

    def coefficients(self):
        q = self.sym
        return (q[0][0], 2 * q[0][1], 2 * q[0][2], q[1][1], 2 * q[1][2], q[2][2])


def _conic_row(p):
    x, y, z = p.coords
    return [x * x, x * y, x * z, y * y, y * z, z * z]


def conic_through_5(p1, p2, p3, p4, p5):
    """The conic through five points; check ``is_degenerate`` on the result."""
    pts = (p1, p2, p3, p4, p5)
    if len(set(pts)) < 5:
        raise DegeneratePoints("conic needs five distinct points")
    basis = linalg.nullspace([_conic_row(p) for p in pts], 6)
    if len(basis) != 1:
        raise UnderDetermined(f"conic pencil has dimension {len(basis)}")
    return Conic.from_coefficients(*basis[0])


def conic_rational_point(c, base, t):
    """Second intersection of c with the line through base in direction (1 : t : 0)."""
    if not c.contains(base):
        raise ValueError(f"{base!r} is not on the conic")
    t = Fraction(t)
    v = (t.denominator, t.numerator, 0)
    qv = c.bilinear(v, v)
    bv = c.bilinear(base.coords, v)
    b = base.coords
    w = tuple(qv * b[i] - 2 * bv * v[i] for i in range(3))
    if bv == 0:
        if qv == 0:
            raise ValueError("the parameter line lies on the conic")
        raise TangentParameter(base)
    return HomPoint(*w)

"""The additive group of triangles.

All triangles live in the axis model with the perspective axis at infinity:
they share side directions with a reference triangle E.  A triangle is
identified by its barycentric triple delta (centroid coordinates scaled by the
homothety coefficient d = sum(delta) carrying it onto E).  Triples with zero
sum are formal elements: pseudo-triangles (three directions) and the three
completely-pseudo-triangles.

In coordinates the pre-sum is ``-(x + y)`` and the sum is ``x + y``.  The
geometric routes below compute the same elements from vertices with
join/meet only; the test suite checks the two against each other.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from trisum import linalg
from trisum.configurations import PERMUTATIONS, join_as, meet_as
from trisum.errors import (
    CoincidentPoints,
    DegenerateConstruction,
    KindError,
    SideMismatch,
    Unsupported,
    ZeroSum,
)
from trisum.projective import (
    LINE_AT_INFINITY,
    HomPoint,
    collinear,
    cross_ratio,
    harmonic_conjugate,
    join,
    meet,
)

THIRD = Fraction(1, 3)
UNIT = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


class Kind(str, enum.Enum):
    GEOMETRIC = "geometric"
    PSEUDO = "pseudo"
    COMPLETELY_PSEUDO = "completely_pseudo"


def _cp_triple(k):
    return tuple(Fraction(-2, 3) if i == k else THIRD for i in range(3))


COMPLETELY_PSEUDO = tuple(_cp_triple(k) for k in range(3))


def _frac3(values):
    t = tuple(Fraction(v) for v in values)
    if len(t) != 3:
        raise ValueError("a triangle element has three coordinates")
    return t


@dataclass(frozen=True)
class TriangleElement:
    delta: tuple

    def __post_init__(self):
        object.__setattr__(self, "delta", _frac3(self.delta))

    @property
    def total(self):
        return sum(self.delta)

    @property
    def kind(self):
        if self.total != 0:
            return Kind.GEOMETRIC
        if self.delta in COMPLETELY_PSEUDO:
            return Kind.COMPLETELY_PSEUDO
        return Kind.PSEUDO

    @property
    def is_geometric(self):
        return self.total != 0

    def __add__(self, other):
        return TriangleElement(a + b for a, b in zip(self.delta, other.delta))

    def __neg__(self):
        return TriangleElement(-a for a in self.delta)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        return TriangleElement(Fraction(c) * a for a in self.delta)

    def __repr__(self):
        return f"TriangleElement({', '.join(map(str, self.delta))}; {self.kind.value})"

    def to_json(self):
        return {"kind": self.kind.value, "delta": [str(a) for a in self.delta]}

    @classmethod
    def from_json(cls, data):
        el = cls(Fraction(s) for s in data["delta"])
        kind = data.get("kind")
        if kind is not None and kind != el.kind.value:
            raise ValueError(f"kind {kind!r} does not match coordinates ({el.kind.value})")
        return el


def element(*delta):
    """Shorthand: element(1, 0, 0)."""
    return TriangleElement(tuple(delta))


ZERO = element(0, 0, 0)
E_COORDS = element(THIRD, THIRD, THIRD)


def completely_pseudo(k):
    return TriangleElement(_cp_triple(k))


# -- coordinate operations ---------------------------------------------

def presum_coords(x, y):
    return TriangleElement(-(a + b) for a, b in zip(x.delta, y.delta))


def add(x, y):
    return x + y


def sum_with_fixed(f, x, y):
    """Sum with an arbitrary fixed element F: F pre-sum (x pre-sum y)."""
    return presum_coords(f, presum_coords(x, y))


def reflect_mass_center(x):
    if not x.is_geometric:
        raise ZeroSum("a formal element has no mass center")
    return -x


def half(a):
    """The element X with X pre-sum X = a."""
    return a.scaled(Fraction(-1, 2))


def pseudo_vertices(p):
    """The three directions of a pseudo-triangle, vertex k being p + e_k - 1/3."""
    if p.total != 0:
        raise KindError("pseudo_vertices needs a zero-sum element")
    if p.kind is Kind.COMPLETELY_PSEUDO:
        raise KindError("a completely-pseudo-triangle has a vanishing vertex direction")
    return tuple(
        tuple(p.delta[i] + (1 if i == k else 0) - THIRD for i in range(3)) for k in range(3)
    )


def pseudo_from_directions(dirs):
    """Recover the pseudo-triangle whose vertex directions are ``dirs`` (homogeneous)."""
    v = [_frac3(d) for d in dirs]
    if any(sum(d) != 0 for d in v):
        raise ValueError("directions must have zero coordinate sum")
    # lambda_0 v_0 - lambda_k v_k = e_0 - e_k for k = 1, 2
    rows, rhs = [], []
    for k in (1, 2):
        for i in range(3):
            row = [v[0][i], 0, 0]
            row[k] = -v[k][i]
            rows.append(row)
            rhs.append(UNIT[0][i] - UNIT[k][i])
    try:
        lam = linalg.solve(rows, rhs)
    except ValueError:
        raise KindError("directions are not the vertices of a pseudo-triangle") from None
    return TriangleElement(lam[0] * v[0][i] - UNIT[0][i] + THIRD for i in range(3))


# -- reference frame and vertex realizations -----------------------------

class ReferenceFrame:
    """Reference triangle E; barycentric coordinates are taken with respect to it."""

    def __init__(self, E1, E2, E3, label="E"):
        self.E = (E1, E2, E3)
        self.label = label
        if any(e.is_infinite for e in self.E):
            raise ValueError("reference vertices must be affine")
        if collinear(*self.E):
            raise ValueError("reference triangle is degenerate")
        cols = [(*e.affine(), Fraction(1)) for e in self.E]
        self._m = tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))
        det = linalg.det3(self._m)
        adj = linalg.adjugate3(self._m)
        self._minv = tuple(tuple(v / det for v in row) for row in adj)

    def __eq__(self, other):
        return isinstance(other, ReferenceFrame) and other.E == self.E

    def __hash__(self):
        return hash(self.E)

    def __repr__(self):
        return f"ReferenceFrame({self.E[0]!r}, {self.E[1]!r}, {self.E[2]!r})"

    def point(self, bary):
        """HomPoint with barycentric coordinates ``bary`` (sum 0 gives a direction)."""
        return HomPoint(*linalg.matvec(self._m, _frac3(bary)))

    def bary(self, p):
        """Barycentric coordinates: normalized for affine points, raw for directions."""
        b = linalg.matvec(self._minv, p.coords)
        s = sum(b)
        if s == 0:
            return b
        return tuple(v / s for v in b)

    def side_direction(self, k, m):
        """Point at infinity of side E_k E_m."""
        return meet(join(self.E[k], self.E[m]), LINE_AT_INFINITY)

    def to_json(self):
        return {"label": self.label, "vertices": [e.to_json() for e in self.E]}

    @classmethod
    def from_json(cls, data):
        return cls(*(HomPoint.from_json(v) for v in data["vertices"]), label=data.get("label", "E"))


DEFAULT_FRAME = ReferenceFrame(HomPoint(0, 0), HomPoint(1, 0), HomPoint(0, 1))


@dataclass(frozen=True)
class GeometricTriangle:
    vertices: tuple
    frame: ReferenceFrame = DEFAULT_FRAME

    def __post_init__(self):
        if len(self.vertices) != 3 or any(v.is_infinite for v in self.vertices):
            raise ValueError("a geometric triangle has three affine vertices")

    def to_json(self):
        return {"frame": self.frame.label, "vertices": [v.to_json() for v in self.vertices]}

    @classmethod
    def from_json(cls, data, frame=DEFAULT_FRAME):
        if data.get("frame", frame.label) != frame.label:
            raise ValueError(f"triangle belongs to frame {data['frame']!r}")
        return cls(tuple(HomPoint.from_json(v) for v in data["vertices"]), frame)


def bary_from_triangle(D):
    """Barycentric triple of a triangle whose sides are parallel to the frame's."""
    frame = D.frame
    b = [frame.bary(v) for v in D.vertices]
    g = tuple(sum(col) / 3 for col in zip(*b))
    inv_d = (b[0][0] - g[0]) * Fraction(3, 2)
    if inv_d == 0:
        raise SideMismatch("vertices do not form a triangle homothetic to the frame")
    for k in range(3):
        expected = tuple(((1 if i == k else 0) - THIRD) * inv_d for i in range(3))
        if tuple(b[k][i] - g[i] for i in range(3)) != expected:
            raise SideMismatch("triangle sides are not parallel to the frame's sides")
    return TriangleElement(v / inv_d for v in g)


def vertex_barys(t):
    d = t.total
    if d == 0:
        raise ZeroSum("a zero-sum element has no vertices")
    return tuple(
        tuple((t.delta[i] - THIRD + (1 if i == k else 0)) / d for i in range(3)) for k in range(3)
    )


def triangle_from_bary(t, frame=DEFAULT_FRAME):
    return GeometricTriangle(tuple(frame.point(b) for b in vertex_barys(t)), frame)


def realize(x, frame=DEFAULT_FRAME):
    """Vertices as HomPoints: affine for triangles, at infinity for pseudo-triangles."""
    if x.kind is Kind.GEOMETRIC:
        return triangle_from_bary(x, frame).vertices
    return tuple(frame.point(d) for d in pseudo_vertices(x))


def element_from_points(C, frame=DEFAULT_FRAME):
    if all(not c.is_infinite for c in C):
        return bary_from_triangle(GeometricTriangle(tuple(C), frame))
    if all(c.is_infinite for c in C):
        return pseudo_from_directions([frame.bary(c) for c in C])
    raise DegenerateConstruction("C", "mix of finite and infinite vertices")


def affine_combination(weights, points):
    """sum w_i * P_i for affine points with weights summing to 1."""
    acc = [Fraction(0)] * 3
    for w, p in zip(weights, points):
        x, y, z = p.coords
        for i, c in enumerate((x, y, z)):
            acc[i] += Fraction(w) * Fraction(c, z)
    return HomPoint(*acc)


def midpoint(p, q):
    return affine_combination((Fraction(1, 2), Fraction(1, 2)), (p, q))


def reflect_point(p, center):
    return affine_combination((2, -1), (center, p))


def centroid(points):
    return affine_combination((THIRD,) * 3, points)


def reflect_triangle(D):
    """Point reflection of the vertex triangle about its mass center."""
    g = centroid(D.vertices)
    return GeometricTriangle(tuple(reflect_point(v, g) for v in D.vertices), D.frame)


def medial_vertices(A):
    C = [None] * 3
    for i, j, k in PERMUTATIONS:
        if i < j:
            C[k] = midpoint(A[i], A[j])
    return tuple(C)


def anticomplementary_vertices(A):
    """Triangle whose medial triangle is A, built from parallels through A's vertices."""
    sides = {}
    for i, j, k in PERMUTATIONS:
        if i < j:
            direction = meet_as(join_as(A[i], A[j], "side"), LINE_AT_INFINITY, "direction")
            sides[k] = join_as(A[k], direction, f"parallel through A{k + 1}")
    X = [None] * 3
    for i, j, k in PERMUTATIONS:
        if i < j:
            X[k] = meet_as(sides[i], sides[j], f"X{k + 1}")
    return tuple(X)


# -- geometric pre-sum ---------------------------------------------------

def _try_join(p, q):
    try:
        return join(p, q)
    except CoincidentPoints:
        return None


def axis_presum_points(A, B, frame):
    """C_k = A_i B_j meet A_j B_i with the coinciding-sides repair.

    When the two lines for C_k coincide (or one is undefined), C_k is recovered
    on that line through a defined vertex C_m and the direction of side k m.
    """
    C = [None] * 3
    carrier = [None] * 3
    for i, j, k in PERMUTATIONS:
        if i > j:
            continue
        l1, l2 = _try_join(A[i], B[j]), _try_join(A[j], B[i])
        if l1 is not None and l2 is not None and l1 != l2:
            C[k] = meet(l1, l2)
        else:
            carrier[k] = l1 if l1 is not None else l2
            if carrier[k] is None:
                raise DegenerateConstruction(f"C{k + 1}", "both defining lines undefined")
    pending = [k for k in range(3) if C[k] is None]
    while pending:
        progress = False
        for k in list(pending):
            for m in range(3):
                if C[m] is None or m == k:
                    continue
                direction = frame.side_direction(k, m)
                if C[m] == direction:
                    continue
                through = join(C[m], direction)
                if through == carrier[k]:
                    continue
                C[k] = meet(carrier[k], through)
                pending.remove(k)
                progress = True
                break
        if not progress:
            raise DegenerateConstruction(f"C{pending[0] + 1}", "no defined vertex to repair from")
    return tuple(C)


def _symmetric_side(A, B):
    """Index k when A_i = B_j and A_j = B_i for the pair {i, j} opposite k."""
    for i, j, k in PERMUTATIONS:
        if i < j and A[i] == B[j] and A[j] == B[i]:
            return k
    return None


def presum_triangles(A, B, frame=DEFAULT_FRAME):
    """Geometric pre-sum of two vertex triangles (affine or at infinity)."""
    if all(not p.is_infinite for p in A + B):
        if A == B:
            return element_from_points(medial_vertices(A), frame)
        k = _symmetric_side(A, B)
        if k is not None:
            return completely_pseudo(k)
    return element_from_points(axis_presum_points(A, B, frame), frame)


def reflect_about_side_midpoint(A, k):
    i, j = (m for m in range(3) if m != k)
    c = midpoint(A[i], A[j])
    return tuple(reflect_point(v, c) for v in A)


def pseudo_parameterize(p, frame=DEFAULT_FRAME):
    """The triangle B, centrally symmetric to E, with E pre-sum B = p."""
    if p.total != 0:
        raise KindError("only zero-sum elements are parameterized")
    beta = TriangleElement(-a - THIRD for a in p.delta)
    return triangle_from_bary(beta, frame)


def _pseudo_pair_triangle(x, y, frame):
    """Parameter triangle D* with E pre-sum D* = x pre-sum y.

    With B, C the parameter triangles of x, y, M their vertex midpoints and R
    the reflection of E through its centroid (parameter of the zero element),
    D*_k = 3 R_k - 2 M_k.
    """
    B = pseudo_parameterize(x, frame).vertices
    C = pseudo_parameterize(y, frame).vertices
    R = pseudo_parameterize(ZERO, frame).vertices
    M = tuple(midpoint(b, c) for b, c in zip(B, C))
    return tuple(affine_combination((3, -2), (r, m)) for r, m in zip(R, M))


def presum_geometric(x, y, frame=DEFAULT_FRAME):
    """Pre-sum computed from vertices, covering the degenerate cases."""
    kx, ky = x.kind, y.kind
    if kx is Kind.COMPLETELY_PSEUDO and ky is Kind.COMPLETELY_PSEUDO:
        raise Unsupported("no geometric rule for two completely-pseudo-triangles")
    if kx is not Kind.GEOMETRIC and ky is Kind.GEOMETRIC:
        x, y, kx, ky = y, x, ky, kx
    if kx is Kind.GEOMETRIC:
        A = realize(x, frame)
        if ky is Kind.COMPLETELY_PSEUDO:
            k = y.delta.index(Fraction(-2, 3))
            return bary_from_triangle(GeometricTriangle(reflect_about_side_midpoint(A, k), frame))
        return presum_triangles(A, realize(y, frame), frame)
    D = _pseudo_pair_triangle(x, y, frame)
    return presum_triangles(frame.E, D, frame)


def sum_geometric(x, y, frame=DEFAULT_FRAME):
    """Sum = reflection of the pre-sum about its mass center."""
    c = presum_geometric(x, y, frame)
    if not c.is_geometric:
        return -c
    return bary_from_triangle(reflect_triangle(triangle_from_bary(c, frame)))


def half_geometric(a, frame=DEFAULT_FRAME):
    """Triangle X with X pre-sum X = a, via the anticomplementary construction."""
    if not a.is_geometric:
        raise ZeroSum("half needs a geometric element")
    X = anticomplementary_vertices(realize(a, frame))
    return bary_from_triangle(GeometricTriangle(X, frame))


def pseudo_presum_via_midpoints(x, y, frame=DEFAULT_FRAME):
    """Midpoint route for two pseudo-triangles: E pre-sum D, D_i = mid(B_i, C_i),
    where B, C are the parameter triangles of x and y."""
    for p in (x, y):
        if p.total != 0:
            raise KindError("the midpoint route takes zero-sum elements")
    B = pseudo_parameterize(x, frame).vertices
    C = pseudo_parameterize(y, frame).vertices
    D = GeometricTriangle(tuple(midpoint(b, c) for b, c in zip(B, C)), frame)
    return presum_coords(E_COORDS, bary_from_triangle(D))


def change_frame(x, src, dst):
    """Coordinates in frame dst of the triangle with coordinates x in frame src."""
    if not x.is_geometric:
        return pseudo_from_directions([dst.bary(p) for p in realize(x, src)])
    return bary_from_triangle(GeometricTriangle(triangle_from_bary(x, src).vertices, dst))


# -- central-model halving ---------------------------------------------

@dataclass(frozen=True)
class HalfConstruction:
    X: tuple  # X_i = A_j A_k meet S A_i
    Y: tuple  # harmonic conjugate of S with respect to {A_j, X_j}
    cross_ratios: tuple  # (S, Y_j; A_j, X_j)


def half_central(S, A):
    """Central-model construction of A/2 (the X) and A pre-sum A (the Y)."""
    X = [None] * 3
    for i, j, k in PERMUTATIONS:
        if j < k:
            X[i] = meet_as(join_as(A[j], A[k], f"A{j + 1}A{k + 1}"),
                           join_as(S, A[i], f"SA{i + 1}"), f"X{i + 1}")
    Y = tuple(harmonic_conjugate(S, A[j], X[j]) for j in range(3))
    cr = tuple(cross_ratio(S, Y[j], A[j], X[j]) for j in range(3))
    return HalfConstruction(tuple(X), Y, cr)


def half_central_claims(S, A):
    h = half_central(S, A)
    X, Y = h.X, h.Y
    claims = {"harmonic quadruples": all(c == -1 for c in h.cross_ratios)}
    claims["A_i on side Y_j Y_k"] = all(
        collinear(A[i], Y[j], Y[k]) for i, j, k in PERMUTATIONS if j < k)
    projected = True
    for i, j, k in PERMUTATIONS:
        yk = meet(join(A[i], Y[j]), join(S, A[k]))
        projected = projected and yk == Y[k]
    claims["projection from A_i maps Y_j to Y_k"] = projected
    # halving is undone by doubling: X's own harmonic triangle is A
    back = half_central(S, X)
    claims["X pre-sum X = A"] = back.Y == tuple(A)
    return claims


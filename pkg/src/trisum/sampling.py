"""Random group elements and deliberately degenerate triangle pairs."""

from fractions import Fraction

from trisum.triangles import (
    DEFAULT_FRAME,
    GeometricTriangle,
    Kind,
    TriangleElement,
    affine_combination,
    bary_from_triangle,
    completely_pseudo,
    midpoint,
    realize,
    reflect_about_side_midpoint,
    reflect_point,
)

DEGENERATE_CLASSES = ("equal", "shared_vertex", "crossed_vertex", "shared_line",
                      "symmetric_side", "symmetric_point")


def random_fraction(rng, bound=30, den=6):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_geometric(rng):
    while True:
        x = TriangleElement(random_fraction(rng) for _ in range(3))
        if x.is_geometric:
            return x


def random_pseudo(rng):
    while True:
        a, b = random_fraction(rng), random_fraction(rng)
        x = TriangleElement((a, b, -a - b))
        if x.kind is Kind.PSEUDO:
            return x


def random_element(rng, kind=None):
    """Random element; kind None picks geometric/pseudo/completely-pseudo at 45/45/10."""
    if kind is None:
        r = rng.random()
        kind = Kind.GEOMETRIC if r < 0.45 else Kind.PSEUDO if r < 0.9 else Kind.COMPLETELY_PSEUDO
    if kind is Kind.GEOMETRIC:
        return random_geometric(rng)
    if kind is Kind.PSEUDO:
        return random_pseudo(rng)
    return completely_pseudo(rng.randrange(3))


def _nonzero_ratio(rng, exclude=()):
    while True:
        r = random_fraction(rng, 12, 4)
        if r != 0 and r not in exclude:
            return r


def _homothety(A, center, ratio):
    return tuple(affine_combination((1 - ratio, ratio), (center, v)) for v in A)


def degenerate_pair(rng, cls, frame=DEFAULT_FRAME):
    """A pair (x, y) of geometric elements in the named degenerate class."""
    x = random_geometric(rng)
    A = realize(x, frame)
    i, j = rng.sample(range(3), 2)
    k = 3 - i - j
    if cls == "equal":
        return x, x
    if cls == "shared_vertex":
        # B_i = A_i: homothety centered at A_i
        B = _homothety(A, A[i], _nonzero_ratio(rng, (1,)))
    elif cls == "crossed_vertex":
        # B_j = A_i with sides kept parallel
        r = _nonzero_ratio(rng, (-1,))
        B = tuple(affine_combination((1, r, -r), (A[i], v, A[j])) for v in A)
    elif cls == "shared_line":
        # A_i, A_j, B_i, B_j on one line, no shared vertex
        t = _nonzero_ratio(rng, (1,))
        c = affine_combination((1 - t, t), (A[i], A[j]))
        B = _homothety(A, c, _nonzero_ratio(rng, (1, -1)))
        if len(set(A + B)) < 6:
            return degenerate_pair(rng, cls, frame)
    elif cls == "symmetric_side":
        B = reflect_about_side_midpoint(A, k)
    elif cls == "symmetric_point":
        g = midpoint(A[i], A[j])
        while True:
            u, v = random_fraction(rng, 5, 3), random_fraction(rng, 5, 3)
            o = affine_combination((1 - u - v, u, v), (g, A[k], A[i]))
            mids = {midpoint(A[a], A[b]) for a in range(3) for b in range(a + 1, 3)}
            if o not in mids:
                break
        B = tuple(reflect_point(v, o) for v in A)
    else:
        raise ValueError(f"unknown degenerate class {cls!r}")
    return x, bary_from_triangle(GeometricTriangle(B, frame))

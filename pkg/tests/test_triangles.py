import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trisum import triangles as tg
from trisum.configurations import random_central_scene
from trisum.errors import KindError, SideMismatch, Unsupported, ZeroSum
from trisum.projective import LINE_AT_INFINITY, HomPoint, cross_ratio, join, meet
from trisum.sampling import DEGENERATE_CLASSES, degenerate_pair, random_element, random_pseudo

F = Fraction
frac = st.fractions(min_value=-12, max_value=12, max_denominator=6)
any_element = st.tuples(frac, frac, frac).map(tg.TriangleElement)
geometric = any_element.filter(lambda x: x.is_geometric)
pseudo = st.tuples(frac, frac).map(lambda ab: tg.element(ab[0], ab[1], -ab[0] - ab[1])).filter(
    lambda x: x.kind is tg.Kind.PSEUDO)
seeds = st.integers(0, 10 ** 6)

OTHER_FRAME = tg.ReferenceFrame(HomPoint(2, -1), HomPoint(5, -1), HomPoint(2, 2), label="E'")


# -- kinds and JSON ------------------------------------------------------

def test_kinds():
    assert tg.element(1, 0, 0).kind is tg.Kind.GEOMETRIC
    assert tg.element(1, -1, 0).kind is tg.Kind.PSEUDO
    assert tg.ZERO.kind is tg.Kind.PSEUDO
    for k in range(3):
        cp = tg.completely_pseudo(k)
        assert cp.kind is tg.Kind.COMPLETELY_PSEUDO and cp.delta[k] == F(-2, 3)
    # pseudo coordinates are not homogeneous
    assert tg.element(2, -2, 0) != tg.element(1, -1, 0)


@given(any_element)
def test_element_json_round_trip(x):
    data = x.to_json()
    assert data["kind"] == x.kind.value
    assert tg.TriangleElement.from_json(data) == x


def test_element_json_rejects_wrong_kind():
    with pytest.raises(ValueError):
        tg.TriangleElement.from_json({"kind": "pseudo", "delta": ["1", "0", "0"]})
    with pytest.raises(ValueError):
        tg.TriangleElement((1, 2))


def test_geometric_triangle_json():
    t = tg.triangle_from_bary(tg.element(1, 0, 0))
    assert tg.GeometricTriangle.from_json(t.to_json()) == t
    with pytest.raises(ValueError):
        tg.GeometricTriangle.from_json(t.to_json(), OTHER_FRAME)


# -- barycentric coordinates ---------------------------------------------

def test_reference_triangle_is_one_third_each():
    E = tg.GeometricTriangle(tg.DEFAULT_FRAME.E)
    assert tg.bary_from_triangle(E) == tg.E_COORDS


def test_medial_triangle_coordinates():
    M = tg.GeometricTriangle(tg.medial_vertices(tg.DEFAULT_FRAME.E))
    assert tg.bary_from_triangle(M) == tg.element(F(-2, 3), F(-2, 3), F(-2, 3))


def test_vertex_coordinates_examples():
    assert tg.triangle_from_bary(tg.E_COORDS).vertices == tg.DEFAULT_FRAME.E
    assert tg.vertex_barys(tg.element(1, 0, 0))[2] == (F(2, 3), F(-1, 3), F(2, 3))
    assert tg.vertex_barys(tg.element(F(2, 3), F(2, 3), F(2, 3)))[2] == (F(1, 6), F(1, 6), F(2, 3))


@given(geometric)
def test_bary_round_trip(x):
    for frame in (tg.DEFAULT_FRAME, OTHER_FRAME):
        assert tg.bary_from_triangle(tg.triangle_from_bary(x, frame)) == x


def test_triangle_with_foreign_sides_rejected():
    with pytest.raises(SideMismatch):
        tg.bary_from_triangle(tg.GeometricTriangle((HomPoint(0, 0), HomPoint(2, 1), HomPoint(0, 1))))


# -- coordinate group law ------------------------------------------------

def test_presum_and_sum_examples():
    a, b = tg.element(1, 0, 0), tg.element(0, 1, 0)
    assert tg.presum_coords(a, b) == tg.element(-1, -1, 0)
    assert a + b == tg.element(1, 1, 0)
    assert tg.presum_coords(tg.E_COORDS, tg.E_COORDS) == tg.element(F(-2, 3), F(-2, 3), F(-2, 3))
    assert tg.reflect_mass_center(tg.E_COORDS) == tg.element(F(-1, 3), F(-1, 3), F(-1, 3))
    assert tg.half(a) == tg.element(F(-1, 2), 0, 0)


@given(any_element, any_element, any_element)
def test_group_axioms(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x + tg.ZERO == x
    assert x + (-x) == tg.ZERO
    c = tg.presum_coords(x, y)
    assert c == tg.presum_coords(y, x)
    assert tg.presum_coords(x, c) == y


@given(any_element, any_element, any_element)
def test_sum_with_zero_pseudo_is_the_sum(f, x, y):
    assert tg.sum_with_fixed(tg.ZERO, x, y) == x + y
    # general fixed element: still commutative
    assert tg.sum_with_fixed(f, x, y) == tg.sum_with_fixed(f, y, x)


@given(any_element)
def test_half_then_double(a):
    h = tg.half(a)
    assert tg.presum_coords(h, h) == a
    assert tg.presum_coords(a, tg.presum_coords(a, a)) == a


@given(geometric)
def test_reflection_is_involution(x):
    assert tg.reflect_mass_center(tg.reflect_mass_center(x)) == x
    D = tg.triangle_from_bary(x)
    R = tg.reflect_triangle(D)
    assert tg.centroid(R.vertices) == tg.centroid(D.vertices)
    assert tg.bary_from_triangle(R) == -x


def test_reflection_needs_mass_center():
    with pytest.raises(ZeroSum):
        tg.reflect_mass_center(tg.element(1, -1, 0))


# -- pseudo-triangles ----------------------------------------------------

def test_zero_is_the_median_directions():
    assert tg.pseudo_vertices(tg.ZERO) == (
        (F(2, 3), F(-1, 3), F(-1, 3)), (F(-1, 3), F(2, 3), F(-1, 3)), (F(-1, 3), F(-1, 3), F(2, 3)))


def test_completely_pseudo_has_no_direction_triple():
    with pytest.raises(KindError):
        tg.pseudo_vertices(tg.element(F(-2, 3), F(1, 3), F(1, 3)))
    with pytest.raises(KindError):
        tg.pseudo_vertices(tg.element(1, 0, 0))


@given(pseudo, pseudo)
def test_distinct_pseudo_give_distinct_directions(p, q):
    dp = [tg.DEFAULT_FRAME.point(v) for v in tg.pseudo_vertices(p)]
    dq = [tg.DEFAULT_FRAME.point(v) for v in tg.pseudo_vertices(q)]
    assert (dp == dq) == (p == q)
    assert tg.pseudo_from_directions([tg.DEFAULT_FRAME.bary(d) for d in dp]) == p


def test_parameterize_zero_is_reflected_reference():
    B = tg.pseudo_parameterize(tg.ZERO)
    assert tg.bary_from_triangle(B) == tg.element(F(-1, 3), F(-1, 3), F(-1, 3))
    assert B.vertices == tg.reflect_triangle(tg.GeometricTriangle(tg.DEFAULT_FRAME.E)).vertices


@given(pseudo)
def test_parameterize_round_trip(p):
    beta = tg.bary_from_triangle(tg.pseudo_parameterize(p))
    assert beta.total == -1  # centrally symmetric to E
    assert tg.presum_coords(tg.E_COORDS, beta) == p
    assert tg.presum_geometric(tg.E_COORDS, beta) == p


# -- geometric pre-sum ---------------------------------------------------

@given(geometric, geometric)
def test_geometric_presum_generic(x, y):
    assert tg.presum_geometric(x, y) == tg.presum_coords(x, y)


@given(any_element, any_element)
def test_geometric_presum_all_kinds(x, y):
    if x.kind is tg.Kind.COMPLETELY_PSEUDO and y.kind is tg.Kind.COMPLETELY_PSEUDO:
        with pytest.raises(Unsupported):
            tg.presum_geometric(x, y)
        return
    assert tg.presum_geometric(x, y) == tg.presum_coords(x, y)


@pytest.mark.parametrize("cls", DEGENERATE_CLASSES)
def test_degenerate_classes_agree_with_coordinates(cls, rng):
    for _ in range(40):
        x, y = degenerate_pair(rng, cls)
        assert tg.presum_geometric(x, y) == tg.presum_coords(x, y), (cls, x, y)


def test_degenerate_generators_produce_their_class(rng):
    for _ in range(20):
        x, y = degenerate_pair(rng, "equal")
        assert x == y
        x, y = degenerate_pair(rng, "symmetric_side")
        assert tg.presum_coords(x, y).kind is tg.Kind.COMPLETELY_PSEUDO
        x, y = degenerate_pair(rng, "symmetric_point")
        assert tg.presum_coords(x, y).kind is tg.Kind.PSEUDO
        x, y = degenerate_pair(rng, "shared_vertex")
        A, B = tg.realize(x), tg.realize(y)
        assert set(A) & set(B)
    with pytest.raises(ValueError):
        degenerate_pair(rng, "nonsense")


@given(geometric)
def test_a_presum_a_is_medial(x):
    A = tg.realize(x)
    C = tg.presum_triangles(A, A)
    assert C == tg.presum_coords(x, x) == x.scaled(-2)
    assert tg.realize(C) == tg.medial_vertices(A)


@given(geometric)
def test_presum_with_zero_reflects(x):
    A = tg.realize(x)
    G = tg.centroid(A)
    C = tg.axis_presum_points(A, tg.realize(tg.ZERO), tg.DEFAULT_FRAME)
    assert C == tuple(tg.reflect_point(v, G) for v in A)


@given(geometric, seeds)
def test_symmetric_about_a_point_gives_parallel_lines(x, seed):
    rng = random.Random(seed)
    A = tg.realize(x)
    O = HomPoint(F(rng.randint(-9, 9), 7), F(rng.randint(-9, 9), 5))
    if O in {tg.midpoint(A[i], A[j]) for i in range(3) for j in range(i + 1, 3)}:
        return
    C_ = tuple(tg.reflect_point(v, O) for v in A)
    pts = tg.axis_presum_points(A, C_, tg.DEFAULT_FRAME)
    assert all(p.is_infinite for p in pts)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        assert meet(join(A[i], C_[j]), LINE_AT_INFINITY) == meet(join(A[j], C_[i]), LINE_AT_INFINITY)


def test_symmetric_side_gives_completely_pseudo():
    x = tg.element(F(1, 2), F(1, 4), F(1, 4))
    A = tg.realize(x)
    B = tg.reflect_about_side_midpoint(A, 2)
    assert tg.presum_triangles(A, B) == tg.element(F(1, 3), F(1, 3), F(-2, 3))


@given(geometric, st.integers(0, 2))
def test_completely_pseudo_presum_reflects_about_side_midpoint(x, k):
    got = tg.presum_geometric(x, tg.completely_pseudo(k))
    assert got == tg.presum_coords(x, tg.completely_pseudo(k))


def test_two_completely_pseudo_unsupported():
    with pytest.raises(Unsupported):
        tg.presum_geometric(tg.completely_pseudo(0), tg.completely_pseudo(1))


# -- sums, halves, frames ------------------------------------------------

@given(any_element, any_element)
def test_geometric_sum(x, y):
    if x.kind is tg.Kind.COMPLETELY_PSEUDO and y.kind is tg.Kind.COMPLETELY_PSEUDO:
        return
    assert tg.sum_geometric(x, y) == x + y


@given(geometric)
def test_geometric_half(a):
    h = tg.half_geometric(a)
    assert h == tg.half(a)
    assert tg.presum_geometric(h, h) == a


def test_half_of_formal_element_is_undefined():
    with pytest.raises(ZeroSum):
        tg.half_geometric(tg.ZERO)


@given(seeds)
def test_central_halving_quadruples_are_harmonic(seed):
    scene = random_central_scene(seed)
    claims = tg.half_central_claims(scene.S, scene.A)
    assert all(claims.values()), claims
    h = tg.half_central(scene.S, scene.A)
    for j in range(3):
        assert cross_ratio(scene.S, h.Y[j], scene.A[j], h.X[j]) == -1


@given(geometric, geometric)
def test_geometric_sum_is_frame_independent(x, y):
    # same vertex triangles, coordinates read in two frames with parallel sides
    A, B = tg.realize(x), tg.realize(y)
    x2 = tg.bary_from_triangle(tg.GeometricTriangle(A, OTHER_FRAME))
    y2 = tg.bary_from_triangle(tg.GeometricTriangle(B, OTHER_FRAME))
    assert tg.change_frame(x, tg.DEFAULT_FRAME, OTHER_FRAME) == x2
    v1 = tg.realize(tg.presum_geometric(x, y), tg.DEFAULT_FRAME)
    v2 = tg.realize(tg.presum_geometric(x2, y2, OTHER_FRAME), OTHER_FRAME)
    assert v1 == v2


def test_frame_must_be_affine_and_nondegenerate():
    with pytest.raises(ValueError):
        tg.ReferenceFrame(HomPoint(0, 0), HomPoint(1, 1), HomPoint(2, 2))
    with pytest.raises(ValueError):
        tg.ReferenceFrame(HomPoint(1, 0, 0), HomPoint(1, 1), HomPoint(2, 0))
    assert tg.ReferenceFrame.from_json(OTHER_FRAME.to_json()) == OTHER_FRAME


# -- the midpoint route for two pseudo-triangles -------------------------

def test_midpoint_route_gives_half_the_sum():
    # the midpoint triangle carries (x + y) / 2, not -(x + y)
    x, y = tg.element(1, -1, 0), tg.element(0, 1, -1)
    assert tg.pseudo_presum_via_midpoints(x, y) == tg.element(F(1, 2), 0, F(-1, 2))
    assert tg.presum_coords(x, y) == tg.element(-1, 0, 1)


@given(pseudo, pseudo)
def test_midpoint_triangle_coordinates_average(x, y):
    B = tg.bary_from_triangle(tg.pseudo_parameterize(x))
    C = tg.bary_from_triangle(tg.pseudo_parameterize(y))
    D = tg.GeometricTriangle(tuple(
        tg.midpoint(b, c) for b, c in zip(tg.pseudo_parameterize(x).vertices,
                                          tg.pseudo_parameterize(y).vertices)))
    assert tg.bary_from_triangle(D) == (B + C).scaled(F(1, 2))


def test_pseudo_pairs_through_corrected_route(rng):
    for _ in range(200):
        x, y = random_pseudo(rng), random_pseudo(rng)
        assert tg.presum_geometric(x, y) == tg.presum_coords(x, y)


def test_random_element_spans_kinds(rng):
    kinds = {random_element(rng).kind for _ in range(300)}
    assert kinds == set(tg.Kind)

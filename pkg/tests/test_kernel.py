from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trisum import _kernel_py
from trisum._backend import BACKEND
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
from trisum.projective import (
    LINE_AT_INFINITY,
    Conic,
    HomLine,
    HomPoint,
    ProjMap,
    collinear,
    concurrent,
    conic_rational_point,
    conic_through_5,
    cross_ratio,
    harmonic_conjugate,
    incident,
    join,
    map_from_correspondence,
    meet,
)

try:
    from trisum import _kernel
except ImportError:
    _kernel = None

small = st.integers(-50, 50)
huge = st.integers(-(2 ** 80), 2 ** 80)
triple = st.tuples(small, small, small).filter(any)
point = triple.map(lambda t: HomPoint(*t))
big_triple = st.tuples(st.one_of(small, huge), st.one_of(small, huge), st.one_of(small, huge))

needs_ext = pytest.mark.skipif(_kernel is None, reason="compiled kernel not built")


# -- integer kernels -----------------------------------------------------

@needs_ext
def test_backend_prefers_compiled_kernel():
    assert BACKEND == "cython"


@needs_ext
@given(big_triple, big_triple, big_triple)
def test_compiled_kernel_matches_fallback(a, b, c):
    assert _kernel.canon(a) == _kernel_py.canon(a)
    assert _kernel.cross(a, b) == _kernel_py.cross(a, b)
    assert _kernel.dot(a, b) == _kernel_py.dot(a, b)
    assert _kernel.det3(a, b, c) == _kernel_py.det3(a, b, c)


@needs_ext
def test_compiled_kernel_at_overflow_edges():
    m = 2 ** 63 - 1
    for v in [(m, 1, 0), (-m, 2, 4), (2 ** 31, 2 ** 31, 1), (-(2 ** 63), 0, 0), (0, 0, -5)]:
        assert _kernel.canon(v) == _kernel_py.canon(v)
        assert _kernel.cross(v, (3, -7, 11)) == _kernel_py.cross(v, (3, -7, 11))
        assert _kernel.dot(v, v) == _kernel_py.dot(v, v)
        assert _kernel.det3(v, (1, 2, 3), (4, 5, 7)) == _kernel_py.det3(v, (1, 2, 3), (4, 5, 7))


def test_canon_normalizes_sign_and_gcd():
    assert _kernel_py.canon((-2, 4, -6)) == (1, -2, 3)
    assert _kernel_py.canon((0, -3, 9)) == (0, 1, -3)
    assert _kernel_py.canon((0, 0, 0)) == (0, 0, 0)


# -- points and lines ----------------------------------------------------

def test_homogeneous_points_compare_by_canonical_form():
    assert HomPoint(2, 4, 2) == HomPoint(1, 2, 1) == HomPoint(-3, -6, -3)
    assert HomPoint(Fraction(1, 2), Fraction(1, 3)) == HomPoint(3, 2, 6)
    assert hash(HomPoint(2, 4, 2)) == hash(HomPoint(1, 2, 1))
    assert HomPoint(1, 2, 1) != HomLine(1, 2, 1)


def test_zero_vector_rejected():
    with pytest.raises(ZeroVector):
        HomPoint(0, 0, 0)


def test_join_examples():
    assert join(HomPoint(1, 0, 0), HomPoint(0, 1, 0)) == HomLine(0, 0, 1) == LINE_AT_INFINITY
    assert join(HomPoint(0, 0, 1), HomPoint(1, 1, 1)) == HomLine(1, -1, 0)
    with pytest.raises(CoincidentPoints):
        join(HomPoint(2, 4, 2), HomPoint(1, 2, 1))


def test_meet_examples():
    assert meet(HomLine(1, 0, 0), HomLine(0, 1, 0)) == HomPoint(0, 0, 1)
    assert meet(HomLine(1, 0, -1), HomLine(0, 1, -1)) == HomPoint(1, 1, 1)
    p = meet(HomLine(1, 0, -1), HomLine(1, 0, -2))
    assert p == HomPoint(0, 1, 0) and p.is_infinite
    with pytest.raises(CoincidentLines):
        meet(HomLine(1, 2, 3), HomLine(-2, -4, -6))


def test_collinear_examples():
    assert collinear(HomPoint(1, 0, 1), HomPoint(0, 1, 1), HomPoint(1, 1, 2))
    assert not collinear(HomPoint(1, 0, 0), HomPoint(0, 1, 0), HomPoint(0, 0, 1))
    p, q = HomPoint(3, 1, 2), HomPoint(-1, 5, 1)
    assert collinear(p, p, q)
    assert concurrent(HomLine(1, 0, 0), HomLine(0, 1, 0), HomLine(1, 1, 0))


@given(point, point)
def test_join_contains_both_points(p, q):
    if p == q:
        return
    l = join(p, q)
    assert incident(p, l) and incident(q, l) and l.contains(p)
    assert join(q, p) == l


@given(point, point, point)
def test_collinear_is_symmetric(p, q, r):
    assert collinear(p, q, r) == collinear(q, r, p) == collinear(r, q, p)


# -- cross-ratio ---------------------------------------------------------

def _on_x_axis(t):
    return HomPoint(1, 0, 0) if t is None else HomPoint(t, 0, 1)


def test_cross_ratio_pinned_convention():
    lam = Fraction(5, 2)
    # ((c-a)/(c-b)) / ((d-a)/(d-b)) with a=0, b=1, c=lam, d=inf
    assert cross_ratio(_on_x_axis(0), _on_x_axis(1), _on_x_axis(lam), _on_x_axis(None)) == \
        lam / (lam - 1)
    assert cross_ratio(_on_x_axis(2), _on_x_axis(7), _on_x_axis(3), _on_x_axis(-4)) == \
        Fraction(3 - 2, 3 - 7) / Fraction(-4 - 2, -4 - 7)


@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=9),
                min_size=4, max_size=4, unique=True))
def test_cross_ratio_chart_independent(ts):
    a, b, c, d = ts
    expected = ((c - a) / (c - b)) / ((d - a) / (d - b))
    pts = [HomPoint(t, 2 * t + 1) for t in ts]  # on y = 2x + 1
    assert cross_ratio(*pts) == expected
    # a different chart: project the same line through a projective map
    f = ProjMap(((2, 1, 0), (0, 1, 3), (1, 0, 1)))
    assert cross_ratio(*(f(p) for p in pts)) == expected
    assert cross_ratio(pts[0], pts[1], pts[3], pts[2]) == 1 / expected


def test_cross_ratio_errors():
    a, b, c = HomPoint(0, 0), HomPoint(1, 0), HomPoint(2, 0)
    with pytest.raises(DegeneratePoints):
        cross_ratio(a, b, c, c)
    with pytest.raises(NotCollinear):
        cross_ratio(a, b, c, HomPoint(0, 1))


# -- harmonic conjugate --------------------------------------------------

def test_harmonic_conjugate_of_midpoint_is_at_infinity():
    a, x = HomPoint(1, 2), HomPoint(5, 4)
    y = harmonic_conjugate(HomPoint(3, 3), a, x)
    assert y.is_infinite and incident(y, join(a, x))


def test_harmonic_conjugate_on_axis_by_chart_oracle():
    # (s, y; a, x) = -1 with s=1, a=0, x=3: ((0-1)/(0-y)) / ((3-1)/(3-y)) = -1, so y = -3
    y = harmonic_conjugate(_on_x_axis(1), _on_x_axis(0), _on_x_axis(3))
    assert y == _on_x_axis(-3)
    assert cross_ratio(_on_x_axis(1), y, _on_x_axis(0), _on_x_axis(3)) == -1


@given(st.lists(st.fractions(min_value=-30, max_value=30, max_denominator=7),
                min_size=3, max_size=3, unique=True))
def test_harmonic_conjugate_is_involution(ts):
    s, a, x = (HomPoint(t, 1 - t) for t in ts)
    y = harmonic_conjugate(s, a, x)
    if y == s:
        return
    assert cross_ratio(s, y, a, x) == -1
    assert harmonic_conjugate(y, a, x) == s


# -- projective maps -----------------------------------------------------

BASIS = (HomPoint(1, 0, 0), HomPoint(0, 1, 0), HomPoint(0, 0, 1), HomPoint(1, 1, 1))


def test_map_from_basis_to_itself_is_identity():
    assert map_from_correspondence(BASIS, BASIS) == ProjMap.identity()


def test_map_to_rescaled_basis_is_diagonal():
    f = map_from_correspondence(BASIS, BASIS[:3] + (HomPoint(2, 1, 1),))
    assert f.matrix == ((2, 0, 0), (0, 1, 0), (0, 0, 1))


def test_map_round_trip_and_errors():
    src = (HomPoint(1, 2), HomPoint(-3, 1), HomPoint(4, -5), HomPoint(7, 7, 2))
    dst = (HomPoint(0, 1), HomPoint(2, 9), HomPoint(-1, -1), HomPoint(5, 3))
    f = map_from_correspondence(src, dst)
    assert [f(p) for p in src] == list(dst)
    assert [f.inverse()(f(p)) for p in src] == list(src)
    with pytest.raises(DegenerateQuadruple):
        map_from_correspondence((HomPoint(0, 0), HomPoint(1, 1), HomPoint(2, 2), HomPoint(0, 1)), dst)
    with pytest.raises(DegenerateQuadruple):
        ProjMap(((1, 2, 3), (2, 4, 6), (0, 0, 1)))


@given(point, point)
def test_maps_preserve_incidence(p, q):
    if p == q:
        return
    f = ProjMap(((3, -1, 2), (1, 4, 0), (-2, 1, 5)))
    assert f.line(join(p, q)) == join(f(p), f(q))
    assert (f.inverse() @ f)(p) == p


# -- conics --------------------------------------------------------------

def test_conic_through_five_points_on_unit_circle():
    pts = [HomPoint(1, 0, 1), HomPoint(0, 1, 1), HomPoint(-1, 0, 1), HomPoint(0, -1, 1),
           HomPoint(3, 4, 5)]
    c = conic_through_5(*pts)
    assert c == Conic.from_coefficients(1, 0, 0, 1, 0, -1)
    assert c.coefficients() == (1, 0, 0, 1, 0, -1)
    assert all(c.contains(p) for p in pts) and not c.is_degenerate


def test_conic_with_three_collinear_points_is_flagged_degenerate():
    pts = [HomPoint(0, 0), HomPoint(1, 0), HomPoint(2, 0), HomPoint(0, 1), HomPoint(1, 3)]
    c = conic_through_5(*pts)
    assert c.is_degenerate and all(c.contains(p) for p in pts)


def test_conic_underdetermined_and_repeated_points():
    with pytest.raises(UnderDetermined):
        conic_through_5(HomPoint(0, 0), HomPoint(1, 0), HomPoint(2, 0), HomPoint(3, 0),
                        HomPoint(0, 1))
    with pytest.raises(DegeneratePoints):
        conic_through_5(*([HomPoint(0, 0)] * 5))


def test_rational_points_on_unit_conic():
    c = Conic.from_coefficients(1, 0, 0, 1, 0, -1)
    base = HomPoint(-1, 0, 1)
    assert conic_rational_point(c, base, 1) == HomPoint(0, 1, 1)
    assert conic_rational_point(c, base, 0) == HomPoint(1, 0, 1)
    # oracle: ((1 - t^2) : 2t : (1 + t^2))
    for t in (Fraction(1, 3), Fraction(-7, 2), Fraction(5)):
        assert conic_rational_point(c, base, t) == HomPoint(1 - t * t, 2 * t, 1 + t * t)


def test_tangent_parameter_carries_base_point():
    c = Conic.from_coefficients(1, 0, 0, 0, -1, 0)  # x^2 = y z, tangent y=0 at (0:0:1)
    base = HomPoint(0, 0, 1)
    with pytest.raises(TangentParameter) as info:
        conic_rational_point(c, base, 0)
    assert info.value.point == base


@given(st.fractions(min_value=-50, max_value=50, max_denominator=20))
def test_rational_point_lies_on_mapped_conic(t):
    f = ProjMap(((1, 2, 0), (0, 1, -1), (3, 0, 1)))
    c = f.conic(Conic(((1, 0, 0), (0, 1, 0), (0, 0, -1))))
    p = conic_rational_point(Conic(((1, 0, 0), (0, 1, 0), (0, 0, -1))), HomPoint(-1, 0, 1), t)
    assert c.contains(f(p))


# -- serialization -------------------------------------------------------

def test_point_json_is_canonical_strings():
    p = HomPoint(Fraction(1, 3), -2, 0)
    assert p.to_json() == ["1", "-6", "0"]
    assert HomPoint.from_json(["1/3", "-2", "0"]) == p
    assert HomLine.from_json(HomLine(2, 4, 6).to_json()) == HomLine(1, 2, 3)
    with pytest.raises(ValueError):
        HomPoint.from_json(["1", "2"])

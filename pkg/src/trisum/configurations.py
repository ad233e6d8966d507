"""Configuration theorems built from join/meet: generalized Desargues (central
and axis models), both proof routes, generalized Pappus/Pascal and the
dual-Reye incidence count.

Index convention: ``(i, j, k)`` is always a permutation of ``(0, 1, 2)``
internally; labels shown to users are 1-based ("P12", "C3", ...).
"""

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from trisum import linalg
from trisum.errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateConstruction,
    GeneralPositionExhausted,
    TangentParameter,
)
from trisum.projective import (
    Conic,
    HomLine,
    HomPoint,
    ProjMap,
    collinear,
    concurrent,
    conic_rational_point,
    incident,
    join,
    meet,
)

PERMUTATIONS = tuple(itertools.permutations(range(3)))
PAIRS = tuple((i, j) for i, j, _ in PERMUTATIONS)
MAX_REJECTIONS = 1000
COORD_BOUND = 100


def third(i, j):
    return 3 - i - j


def _lab(prefix, *idx):
    return prefix + "".join(str(i + 1) for i in idx)


def join_as(p, q, label):
    try:
        return join(p, q)
    except CoincidentPoints:
        raise DegenerateConstruction(label, "defining points coincide") from None


def meet_as(l, m, label):
    try:
        return meet(l, m)
    except CoincidentLines:
        raise DegenerateConstruction(label, "defining lines coincide") from None


def _points_json(d):
    return {k: v.to_json() for k, v in d.items()}


# -- random instances ----------------------------------------------------

def random_point(rng, bound=COORD_BOUND):
    return HomPoint(rng.randint(-bound, bound), rng.randint(-bound, bound), 1)


def point_on_line_through(rng, p, q, bound=COORD_BOUND):
    """A random affine point of line pq (p, q affine), as an integer combination."""
    while True:
        u = rng.randint(-bound, bound)
        v = rng.randint(-bound, bound)
        if u and v and u + v:
            break
    pc, qc = p.coords, q.coords
    # affine weights u, v on p/p_z and q/q_z, scaled by p_z * q_z
    return HomPoint(*(u * pc[i] * qc[2] + v * qc[i] * pc[2] for i in range(3)))


def _no_three_collinear(points, allowed=()):
    allowed = {frozenset(t) for t in allowed}
    for a, b, c in itertools.combinations(range(len(points)), 3):
        if frozenset((a, b, c)) in allowed:
            continue
        if collinear(points[a], points[b], points[c]):
            return False
    return True


# -- central model -------------------------------------------------------

@dataclass(frozen=True)
class CentralScene:
    S: HomPoint
    A: tuple
    B: tuple

    @property
    def lines(self):
        return tuple(join(self.S, a) for a in self.A)

    def check(self):
        """Raise ValueError if a CentralScene invariant fails."""
        pts = (self.S, *self.A, *self.B)
        if len(set(pts)) != 7:
            raise ValueError("scene points must be distinct")
        for i in range(3):
            if not collinear(self.S, self.A[i], self.B[i]):
                raise ValueError(f"A{i + 1}, B{i + 1} not on a common line through S")
        if collinear(*self.A) or collinear(*self.B):
            raise ValueError("triangles must be nondegenerate")
        if len(set(self.lines)) != 3:
            raise ValueError("the three lines through S must be distinct")

    def mapped(self, f):
        return CentralScene(f(self.S), tuple(map(f, self.A)), tuple(map(f, self.B)))

    def to_json(self):
        pts = {"S": self.S}
        for i in range(3):
            pts[_lab("A", i)] = self.A[i]
            pts[_lab("B", i)] = self.B[i]
        lines = {_lab("l", i): l for i, l in enumerate(self.lines)}
        return {
            "model": "central",
            "points": _points_json(pts),
            "lines": _points_json(lines),
            "labels": list(pts) + list(lines),
        }

    @classmethod
    def from_json(cls, data):
        if data.get("model") != "central":
            raise ValueError("not a central scene")
        p = {k: HomPoint.from_json(v) for k, v in data["points"].items()}
        scene = cls(p["S"], tuple(p[f"A{i}"] for i in (1, 2, 3)),
                    tuple(p[f"B{i}"] for i in (1, 2, 3)))
        scene.check()
        return scene


@dataclass(frozen=True)
class CentralConstruction:
    P: dict  # (i, j) -> P_ij
    Sk: tuple  # S_1, S_2, S_3 (Desargues points)
    C: tuple

    def points(self):
        out = {_lab("P", i, j): p for (i, j), p in self.P.items()}
        out.update({_lab("S", k): p for k, p in enumerate(self.Sk)})
        out.update({_lab("C", k): p for k, p in enumerate(self.C)})
        return out


def main_construction_central(scene):
    A, B = scene.A, scene.B
    side_a = {}
    side_b = {}
    for i, j in itertools.combinations(range(3), 2):
        side_a[i, j] = side_a[j, i] = join_as(A[i], A[j], _lab("A", i, j))
        side_b[i, j] = side_b[j, i] = join_as(B[i], B[j], _lab("B", i, j))
    P = {}
    for i, j, k in PERMUTATIONS:
        P[i, j] = meet_as(side_a[i, k], side_b[j, k], _lab("P", i, j))
    Sk = [None] * 3
    for i, j, k in PERMUTATIONS:
        if i < j:
            Sk[k] = meet_as(side_a[i, j], side_b[i, j], _lab("S", k))
    C = [None] * 3
    for i, j, k in PERMUTATIONS:
        if i < j:
            m1 = join_as(P[i, k], P[k, i], f"line {_lab('P', i, k)}{_lab('P', k, i)}")
            m2 = join_as(P[j, k], P[k, j], f"line {_lab('P', j, k)}{_lab('P', k, j)}")
            C[k] = meet_as(m1, m2, _lab("C", k))
    return CentralConstruction(P, tuple(Sk), tuple(C))


def central_in_general_position(scene):
    """Generator predicate list: distinct points, only intended collinearities,
    and a fully defined main construction."""
    pts = (scene.S, *scene.A, *scene.B)
    if len(set(pts)) != 7:
        return False
    intended = [(0, 1 + i, 4 + i) for i in range(3)]
    if not _no_three_collinear(pts, intended):
        return False
    try:
        main_construction_central(scene)
    except DegenerateConstruction:
        return False
    return True


def random_central_scene(seed, bound=COORD_BOUND):
    rng = random.Random(seed)
    for _ in range(MAX_REJECTIONS):
        S = random_point(rng, bound)
        A = tuple(random_point(rng, bound) for _ in range(3))
        if S in A:
            continue
        B = tuple(point_on_line_through(rng, S, a, bound) for a in A)
        scene = CentralScene(S, A, B)
        if central_in_general_position(scene):
            return scene
    raise GeneralPositionExhausted(f"no general-position central scene for seed {seed}")


def verify_desargues(scene):
    """Classic Desargues: the points S_k are collinear."""
    return collinear(*main_construction_central(scene).Sk)


def verify_generalized_desargues(scene):
    """C_k lies on the line S A_k for every k, and Desargues holds."""
    con = main_construction_central(scene)
    lines = scene.lines
    return all(incident(con.C[k], lines[k]) for k in range(3)) and collinear(*con.Sk)


def proof1_claims(scene, m):
    """Intermediate claims of the perspective-triangle proof for middle index m.

    Returns a dict of named booleans.
    """
    a, b = (i for i in range(3) if i != m)
    con = main_construction_central(scene)
    P, Sk = con.P, con.Sk
    A, B = scene.A, scene.B
    line_pp1 = join_as(P[m, a], P[m, b], "P_ma P_mb")
    line_pp2 = join_as(P[a, m], P[b, m], "P_am P_bm")
    line_ss = join_as(Sk[a], Sk[b], "S_a S_b")
    a_m = meet_as(join_as(Sk[a], P[m, a], "S_a P_ma"), join_as(Sk[b], P[m, b], "S_b P_mb"), "A'")
    b_m = meet_as(join_as(Sk[a], P[a, m], "S_a P_am"), join_as(Sk[b], P[b, m], "S_b P_bm"), "B'")
    c_m = meet_as(join_as(P[m, a], P[a, m], "P_ma P_am"), join_as(P[m, b], P[b, m], "P_mb P_bm"), "C'")
    return {
        "P_ma P_mb is B_a B_b": line_pp1 == join(B[a], B[b]),
        "P_am P_bm is A_a A_b": line_pp2 == join(A[a], A[b]),
        "three lines through S_m": all(incident(Sk[m], l) for l in (line_pp1, line_pp2, line_ss)),
        "Desargues recovers A_m": a_m == A[m],
        "Desargues recovers B_m": b_m == B[m],
        "A_m, B_m, C_m collinear": collinear(A[m], B[m], c_m),
        "C_m agrees with main construction": c_m == con.C[m],
    }


def verify_proof1_path(scene):
    return all(all(proof1_claims(scene, m).values()) for m in range(3))


# -- second proof path: the 4x4 grid and quartics ----------------------

MONOMIALS = tuple(
    (a, b, 4 - a - b) for a in range(4, -1, -1) for b in range(4 - a, -1, -1)
)


@dataclass(frozen=True)
class QuarticForm:
    """Homogeneous quartic; ``coeffs`` follow MONOMIALS (x^4, x^3 y, x^3 z, ...)."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != len(MONOMIALS):
            raise ValueError("a quartic has 15 coefficients")

    def __call__(self, p):
        x, y, z = p.coords
        return sum(c * x ** a * y ** b * z ** e for c, (a, b, e) in zip(self.coeffs, MONOMIALS))

    @classmethod
    def product_of_lines(cls, lines):
        if len(lines) != 4:
            raise ValueError("need four lines")
        poly = {(0, 0, 0): 1}
        for l in lines:
            nxt = {}
            for mono, c in poly.items():
                for axis, u in enumerate(l.coords):
                    if u:
                        key = tuple(mono[t] + (t == axis) for t in range(3))
                        nxt[key] = nxt.get(key, 0) + c * u
            poly = nxt
        return cls(tuple(poly.get(m, 0) for m in MONOMIALS))


def _quartic_row(p):
    x, y, z = p.coords
    return [x ** a * y ** b * z ** c for a, b, c in MONOMIALS]


def fit_quartics(points):
    """Basis of all quartic forms vanishing on the given points."""
    if len(set(points)) != len(points):
        raise ValueError("points must be distinct")
    rows = [_quartic_row(p) for p in points]
    return [QuarticForm(v) for v in linalg.nullspace(rows, len(MONOMIALS))]


def in_span(form, basis):
    if not basis:
        return all(c == 0 for c in form.coeffs)
    rows = [list(b.coeffs) for b in basis]
    return linalg.rank(rows + [list(form.coeffs)]) == linalg.rank(rows)


@dataclass(frozen=True)
class Proof2Grid:
    p: tuple
    q: tuple
    r: tuple
    grid: dict  # (i, j) -> p_i meet q_j, 0-based
    C_prime: tuple
    membership: dict  # line label -> all listed points incident

    def thirteen(self):
        skip = {(2, 3), (3, 2), (3, 3)}
        return [pt for key, pt in sorted(self.grid.items()) if key not in skip]


def proof2_grid(scene):
    con = main_construction_central(scene)
    P = {(i + 1, j + 1): v for (i, j), v in con.P.items()}
    A = dict(zip((1, 2, 3), scene.A))
    B = dict(zip((1, 2, 3), scene.B))
    S = scene.S
    l_p12 = join_as(P[1, 2], P[2, 1], "P12P21")
    l_p23 = join_as(P[2, 3], P[3, 2], "P23P32")
    c1 = meet_as(l_p12, join_as(A[1], B[1], "A1B1"), "C'1")
    c2 = meet_as(l_p12, l_p23, "C'2")
    c3 = meet_as(l_p23, join_as(A[3], B[3], "A3B3"), "C'3")
    # (label, two defining points, all listed points)
    spec = [
        ("p1", A[1], A[2], (P[2, 3], A[1], A[2], P[1, 3])),
        ("p2", B[1], B[2], (P[3, 1], P[3, 2], B[1], B[2])),
        ("p3", S, A[3], (c3, S, A[3], B[3])),
        ("p4", P[1, 2], P[2, 1], (c2, c1, P[1, 2], P[2, 1])),
        ("q1", A[2], A[3], (P[3, 1], A[2], A[3], P[2, 1])),
        ("q2", B[3], B[2], (P[1, 3], P[1, 2], B[3], B[2])),
        ("q3", S, A[1], (c1, S, A[1], B[1])),
        ("q4", P[3, 2], P[2, 3], (c2, c3, P[3, 2], P[2, 3])),
        ("r1", P[3, 1], P[1, 3], (P[3, 1], P[1, 3])),
        ("r2", A[1], A[3], (P[3, 2], A[1], A[3], P[1, 2])),
        ("r3", B[1], B[3], (P[2, 3], B[1], B[3], P[2, 1])),
        ("r4", S, A[2], (S, A[2], B[2])),
    ]
    lines = {}
    membership = {}
    for label, u, v, listed in spec:
        lines[label] = join_as(u, v, label)
        membership[label] = all(incident(x, lines[label]) for x in listed)
    p = tuple(lines[f"p{i}"] for i in (1, 2, 3, 4))
    q = tuple(lines[f"q{i}"] for i in (1, 2, 3, 4))
    r = tuple(lines[f"r{i}"] for i in (1, 2, 3, 4))
    grid = {}
    for i in range(4):
        for j in range(4):
            grid[i, j] = meet_as(p[i], q[j], f"A{i + 1}{j + 1} (p{i + 1} meet q{j + 1})")
    if len(set(grid.values())) != 16:
        raise DegenerateConstruction("grid", "the 16 points p_i meet q_j are not distinct")
    return Proof2Grid(p, q, r, grid, (c1, c2, c3), membership)


def proof2_claims(scene):
    g = proof2_grid(scene)
    c1, c2, c3 = g.C_prime
    con = main_construction_central(scene)
    on_r = {
        key: [n for n, r in enumerate(g.r) if incident(pt, r)] for key, pt in g.grid.items()
    }
    per_line = [sum(1 for pt in g.grid.values() if incident(pt, r)) for r in g.r]
    thirteen = {k for k in g.grid if k not in {(2, 3), (3, 2), (3, 3)}}
    return {
        "listed points lie on their lines": all(g.membership.values()),
        "grid labels C'1=A43, C'2=A44, C'3=A34": (
            g.grid[3, 2] == c1 and g.grid[3, 3] == c2 and g.grid[2, 3] == c3),
        "13 points on r1..r4": all(on_r[k] for k in thirteen),
        "no r_i holds five points": max(per_line) <= 4,
        "C'3 and C'1 on r1": incident(c3, g.r[0]) and incident(c1, g.r[0]),
        "C'2 on r4": incident(c2, g.r[3]),
        "C' equals main construction C": (c1, c2, c3) == con.C,
    }


def verify_proof2_path(scene):
    return all(proof2_claims(scene).values())


def quartic_claims(scene):
    g = proof2_grid(scene)
    basis = fit_quartics(g.thirteen())
    split = QuarticForm.product_of_lines(g.r)
    return {
        "split form in nullspace": in_span(split, basis),
        "C' vanish on every basis form": all(f(c) == 0 for f in basis for c in g.C_prime),
        "nullspace nonzero": bool(basis),
    }


# -- axis model ----------------------------------------------------------

@dataclass(frozen=True)
class AxisScene:
    s: HomLine
    L: tuple
    A: tuple
    B: tuple

    def check(self):
        if not all(incident(x, self.s) for x in self.L):
            raise ValueError("L_k must lie on the axis")
        for i, j, k in PERMUTATIONS:
            if not incident(self.L[k], join(self.A[i], self.A[j])):
                raise ValueError(f"side A{i + 1}A{j + 1} misses L{k + 1}")
            if not incident(self.L[k], join(self.B[i], self.B[j])):
                raise ValueError(f"side B{i + 1}B{j + 1} misses L{k + 1}")

    def mapped(self, f):
        return AxisScene(f.line(self.s), tuple(map(f, self.L)),
                         tuple(map(f, self.A)), tuple(map(f, self.B)))

    def to_json(self):
        pts = {}
        for i in range(3):
            pts[_lab("L", i)] = self.L[i]
        for i in range(3):
            pts[_lab("A", i)] = self.A[i]
            pts[_lab("B", i)] = self.B[i]
        return {
            "model": "axis",
            "points": _points_json(pts),
            "lines": {"s": self.s.to_json()},
            "labels": list(pts) + ["s"],
        }

    @classmethod
    def from_json(cls, data):
        if data.get("model") != "axis":
            raise ValueError("not an axis scene")
        p = {k: HomPoint.from_json(v) for k, v in data["points"].items()}
        s = HomLine.from_json(data["lines"]["s"])
        scene = cls(s, tuple(p[f"L{i}"] for i in (1, 2, 3)),
                    tuple(p[f"A{i}"] for i in (1, 2, 3)),
                    tuple(p[f"B{i}"] for i in (1, 2, 3)))
        scene.check()
        return scene


def scene_from_json(data):
    model = data.get("model")
    if model == "central":
        return CentralScene.from_json(data)
    if model == "axis":
        return AxisScene.from_json(data)
    raise ValueError(f"unknown scene model {model!r}")


def triangle_through(rng, L, bound=COORD_BOUND):
    """Random triangle whose side opposite vertex k passes through L[k]."""
    a1 = random_point(rng, bound)
    while True:
        u, v = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if u and v:
            break
    a2 = HomPoint(*(u * a1.coords[i] + v * L[2].coords[i] for i in range(3)))
    a3 = meet_as(join_as(a1, L[1], "A1L2"), join_as(a2, L[0], "A2L1"), "A3")
    return (a1, a2, a3)


def main_construction_axis(scene):
    A, B = scene.A, scene.B
    C = [None] * 3
    for i, j, k in PERMUTATIONS:
        if i < j:
            C[k] = meet_as(join_as(A[i], B[j], _lab("A", i) + _lab("B", j)),
                           join_as(A[j], B[i], _lab("A", j) + _lab("B", i)), _lab("C", k))
    return tuple(C)


def axis_in_general_position(scene):
    pts = (*scene.A, *scene.B)
    if len(set(pts)) != 6 or any(incident(x, scene.s) for x in pts):
        return False
    if collinear(*scene.A) or collinear(*scene.B) or len(set(scene.L)) != 3:
        return False
    try:
        C = main_construction_axis(scene)
    except DegenerateConstruction:
        return False
    return not collinear(*C)


def points_on_line(s):
    """Two distinct points spanning the line s."""
    cands = []
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        v = (s.coords[1] * e[2] - s.coords[2] * e[1],
             s.coords[2] * e[0] - s.coords[0] * e[2],
             s.coords[0] * e[1] - s.coords[1] * e[0])
        if any(v):
            p = HomPoint(*v)
            if p not in cands:
                cands.append(p)
    return cands[0], cands[1]


def random_point_on(rng, s, bound=COORD_BOUND):
    u, w = points_on_line(s)
    while True:
        a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if a or b:
            return HomPoint(*(a * u.coords[i] + b * w.coords[i] for i in range(3)))


def random_axis_scene(seed, axis=None, bound=COORD_BOUND):
    """Random axis scene; pass ``axis`` to pin the perspective axis (e.g. infinity)."""
    rng = random.Random(seed)
    for _ in range(MAX_REJECTIONS):
        try:
            s = axis if axis is not None else join(random_point(rng, bound), random_point(rng, bound))
            L = tuple(random_point_on(rng, s, bound) for _ in range(3))
            if len(set(L)) != 3:
                continue
            scene = AxisScene(s, L, triangle_through(rng, L, bound), triangle_through(rng, L, bound))
        except (CoincidentPoints, CoincidentLines, DegenerateConstruction):
            continue
        if axis_in_general_position(scene):
            return scene
    raise GeneralPositionExhausted(f"no general-position axis scene for seed {seed}")


def verify_axis_construction(scene):
    C = main_construction_axis(scene)
    return all(incident(scene.L[k], join_as(C[i], C[j], _lab("C", i, j)))
               for i, j, k in PERMUTATIONS)


def pole(line):
    """Polarity x -> x^T with respect to the conic x^2 + y^2 + z^2."""
    return HomPoint._wrap(line.coords)


def polar(point):
    return HomLine._wrap(point.coords)


def polar_scene(scene):
    """Dualize a central scene into an axis scene via the standard polarity."""
    s = polar(scene.S)
    L = tuple(pole(l) for l in scene.lines)
    A = [None] * 3
    B = [None] * 3
    for i, j, k in PERMUTATIONS:
        A[k] = pole(join(scene.A[i], scene.A[j]))
        B[k] = pole(join(scene.B[i], scene.B[j]))
    return AxisScene(s, L, tuple(A), tuple(B))


# -- Pappus / Pascal -----------------------------------------------------

def pappus_points(A, B):
    """X_k = A_i B_j meet A_j B_i for each pair i < j (k the remaining index)."""
    if collinear(A[0], A[1], B[0]) and collinear(A[0], A[1], B[1]) and collinear(A[0], A[1], B[2]):
        raise DegenerateConstruction("pappus", "both triples lie on one line")
    X = [None] * 3
    for i, j, k in PERMUTATIONS:
        if i < j:
            X[k] = meet_as(join_as(A[i], B[j], _lab("A", i) + _lab("B", j)),
                           join_as(A[j], B[i], _lab("A", j) + _lab("B", i)), _lab("X", k))
    return tuple(X)


def pappus_line(A, B):
    X = pappus_points(A, B)
    if not collinear(*X):
        return None
    try:
        return join(X[0], X[1]) if X[0] != X[1] else join(X[0], X[2])
    except CoincidentPoints:
        raise DegenerateConstruction("pappus line", "the three points coincide") from None


def q_points(A, B):
    """Q_ij = A_i B_k meet B_j A_k for every permutation (i, j, k)."""
    Q = {}
    for i, j, k in PERMUTATIONS:
        Q[i, j] = meet_as(join_as(A[i], B[k], _lab("A", i) + _lab("B", k)),
                          join_as(B[j], A[k], _lab("B", j) + _lab("A", k)), _lab("Q", i, j))
    if len(set(Q.values())) != 6:
        raise DegenerateConstruction("Q", "the six points Q_ij are not distinct")
    return Q


def _q_center(A, B):
    Q = q_points(A, B)
    lines = [join_as(Q[i, j], Q[j, i], f"{_lab('Q', i, j)}{_lab('Q', j, i)}")
             for i, j in ((0, 1), (0, 2), (1, 2))]
    if not concurrent(*lines):
        return None
    return meet_as(lines[0], lines[1], "center")


def generalized_pappus_center(A, B):
    """Common point of Q12Q21, Q13Q31, Q23Q32, or None if not concurrent."""
    if not (collinear(*A) and collinear(*B)):
        raise ValueError("Pappus needs two collinear triples")
    return _q_center(A, B)


def pappus_reduction_holds(A, B):
    """Triangles Q12 Q23 Q31 and Q21 Q32 Q13 are perspective from the Pappus line."""
    Q = q_points(A, B)
    axis = pappus_line(A, B)
    if axis is None:
        return False
    t1 = (Q[0, 1], Q[1, 2], Q[2, 0])
    t2 = (Q[1, 0], Q[2, 1], Q[0, 2])
    for a, b in ((0, 1), (1, 2), (2, 0)):
        x = meet_as(join_as(t1[a], t1[b], "side"), join_as(t2[a], t2[b], "side"), "side meet")
        if not incident(x, axis):
            return False
    return True


def hexagon_labels(hexagon):
    """Unpack a hexagon given in traversal order A1 B3 A2 B1 A3 B2."""
    a1, b3, a2, b1, a3, b2 = hexagon
    return (a1, a2, a3), (b1, b2, b3)


def pascal_line(hexagon):
    """Pascal line of the hexagon (opposite-side meets), or None if not collinear."""
    A, B = hexagon_labels(hexagon)
    return pappus_line(A, B)


def generalized_pascal_center(hexagon):
    A, B = hexagon_labels(hexagon)
    return _q_center(A, B)


def another_pascal_points(hexagon):
    """S_ik = A_i A_j meet B_j B_k for every permutation (i, j, k)."""
    A, B = hexagon_labels(hexagon)
    S = {}
    for i, j, k in PERMUTATIONS:
        S[i, k] = meet_as(join_as(A[i], A[j], _lab("A", i, j)),
                          join_as(B[j], B[k], _lab("B", j, k)), _lab("S", i, k))
    return S


def another_pascal_center(hexagon):
    S = another_pascal_points(hexagon)
    lines = []
    for i, j, k in PERMUTATIONS:
        if j < k:
            lines.append(join_as(S[j, k], S[k, j], f"l{i + 1}"))
    if not concurrent(*lines):
        return None
    return meet_as(lines[0], lines[1], "center")


def another_pascal_intermediate(hexagon):
    """S = A3B3 meet A2B2 is collinear with S_32 and S_23."""
    A, B = hexagon_labels(hexagon)
    S = another_pascal_points(hexagon)
    s = meet_as(join_as(A[2], B[2], "A3B3"), join_as(A[1], B[1], "A2B2"), "S")
    return collinear(s, S[2, 1], S[1, 2])


UNIT_CONIC = Conic(((1, 0, 0), (0, 1, 0), (0, 0, -1)))


def random_projmap(rng, bound=10):
    while True:
        m = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)]
        if linalg.det3(m) != 0:
            return ProjMap(m)


def random_conic_hexagon(seed, bound=COORD_BOUND):
    """Six distinct exact points of a random nondegenerate conic, with the conic.

    Points are produced in traversal order A1 B3 A2 B1 A3 B2.
    """
    rng = random.Random(seed)
    base = HomPoint(-1, 0, 1)
    for _ in range(MAX_REJECTIONS):
        ts = {Fraction(rng.randint(-bound, bound), rng.randint(1, 10)) for _ in range(6)}
        if len(ts) < 6:
            continue
        try:
            pts = [conic_rational_point(UNIT_CONIC, base, t) for t in sorted(ts)]
        except TangentParameter:
            continue
        if len(set(pts)) != 6:
            continue
        rng.shuffle(pts)
        f = random_projmap(rng)
        return tuple(f(p) for p in pts), f.conic(UNIT_CONIC)
    raise GeneralPositionExhausted(f"no hexagon for seed {seed}")


def random_pappus_instance(seed, bound=COORD_BOUND):
    rng = random.Random(seed)
    for _ in range(MAX_REJECTIONS):
        a, a2, b, b2 = (random_point(rng, bound) for _ in range(4))
        if a == a2 or b == b2:
            continue
        A = tuple(point_on_line_through(rng, a, a2, bound) for _ in range(3))
        B = tuple(point_on_line_through(rng, b, b2, bound) for _ in range(3))
        if len(set(A + B)) != 6 or join(a, a2) == join(b, b2):
            continue
        return A, B
    raise GeneralPositionExhausted(f"no Pappus instance for seed {seed}")


# -- dual Reye configuration ---------------------------------------------

@dataclass
class Configuration:
    points: dict
    lines: dict
    incidence: set = field(default_factory=set)

    @classmethod
    def assemble(cls, points, lines):
        inc = {(p, l) for p, pt in points.items() for l, ln in lines.items() if incident(pt, ln)}
        return cls(dict(points), dict(lines), inc)

    def verify(self):
        return all(incident(self.points[p], self.lines[l]) for p, l in self.incidence)

    def without_line(self, label):
        lines = {k: v for k, v in self.lines.items() if k != label}
        return Configuration(self.points, lines, {(p, l) for p, l in self.incidence if l != label})

    def lines_through(self, p):
        return sorted(l for q, l in self.incidence if q == p)

    def points_on(self, l):
        return sorted(p for p, m in self.incidence if m == l)

    def counts(self):
        """(point_count, lines_per_point, line_count, points_per_line).

        A per-element count that is not uniform is reported as None.
        """
        lpp = {len(self.lines_through(p)) for p in self.points}
        ppl = {len(self.points_on(l)) for l in self.lines}
        return (len(self.points), lpp.pop() if len(lpp) == 1 else None,
                len(self.lines), ppl.pop() if len(ppl) == 1 else None)

    def to_json(self):
        return {
            "points": _points_json(self.points),
            "lines": _points_json(self.lines),
            "incidence": sorted([p, l] for p, l in self.incidence),
        }


def reye_configuration(scene):
    con = main_construction_central(scene)
    points = {"S": scene.S}
    for i in range(3):
        points[_lab("A", i)] = scene.A[i]
        points[_lab("B", i)] = scene.B[i]
        points[_lab("C", i)] = con.C[i]
    for (i, j), p in con.P.items():
        points[_lab("P", i, j)] = p
    lines = {}
    for i, l in enumerate(scene.lines):
        lines[_lab("l", i)] = l
    for i, j in itertools.combinations(range(3), 2):
        lines["A" + _lab("", i, j)] = join_as(scene.A[i], scene.A[j], _lab("A", i, j))
        lines["B" + _lab("", i, j)] = join_as(scene.B[i], scene.B[j], _lab("B", i, j))
        lines[f"P{i + 1}{j + 1}P{j + 1}{i + 1}"] = join_as(con.P[i, j], con.P[j, i], "PP")
    if len(set(points.values())) != 16 or len(set(lines.values())) != 12:
        raise DegenerateConstruction("configuration", "elements are not distinct")
    return Configuration.assemble(points, lines)


def reye_dual_counts(scene):
    return reye_configuration(scene).counts()

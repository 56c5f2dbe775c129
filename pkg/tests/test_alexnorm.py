import random
from fractions import Fraction as F

import pytest

from fiberscope.alexnorm import (
    LaurentPoly2,
    RatPolygon,
    alexander_norm,
    convex_hull,
    newton_polytope,
    parse_laurent,
    unit_ball,
)
from fiberscope.errors import DegeneracyError, ParseError
from oracles import CENSUS_ALEXANDER, brute_hull_vertices, brute_unit_ball_vertices, cross

EXAMPLE = parse_laurent(CENSUS_ALEXANDER)
EXAMPLE_HEXAGON = [(0, 0), (1, 0), (5, 4), (5, 5), (4, 5), (0, 1)]
EXAMPLE_BALL = [(F(-1, 2), F(1, 2)), (F(-1, 5), 0), (0, F(-1, 5)),
        (F(1, 2), F(-1, 2)), (F(1, 5), 0), (0, F(1, 5))]


def random_poly(rng, size=12, spread=4):
    terms = {}
    for _ in range(rng.randint(1, size)):
        terms[(rng.randint(-spread, spread), rng.randint(-spread, spread))] = rng.choice([-3, -1, 1, 2])
    return LaurentPoly2(terms)


def test_parse_example_polynomial():
    assert len(EXAMPLE.terms) == 10
    assert EXAMPLE.terms[(3, 3)] == -1
    assert EXAMPLE.terms[(0, 0)] == -1
    assert EXAMPLE.terms[(5, 5)] == 1


def test_parse_small_cases():
    assert parse_laurent("a - a").terms == {}
    assert parse_laurent("3 + a^-1").terms == {(0, 0): 3, (-1, 0): 1}
    assert parse_laurent("2*a^2*b^-1 - 3ab + 2a^2 b^-1").terms == {(2, -1): 4, (1, 1): -3}
    assert parse_laurent("-b").terms == {(0, 1): -1}


@pytest.mark.parametrize("text", ["", "a +", "a ^ ", "x + 1", "a b c", "2 3 +", "a**2", "* a"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_laurent(text)


def test_str_round_trip():
    rng = random.Random(3)
    for _ in range(100):
        f = random_poly(rng)
        assert parse_laurent(str(f)) == f


def test_newton_polytope_examples():
    assert newton_polytope(EXAMPLE).vertices == tuple((F(x), F(y)) for x, y in EXAMPLE_HEXAGON)
    assert newton_polytope(parse_laurent("a^3 b^-2")).vertices == ((3, -2),)
    assert newton_polytope(parse_laurent("1 + a + a^2")).vertices == ((0, 0), (2, 0))


def test_zero_polynomial_rejected():
    with pytest.raises(DegeneracyError):
        newton_polytope(parse_laurent("a - a"))
    with pytest.raises(DegeneracyError):
        alexander_norm(parse_laurent("0"), (1, 0))


def test_hull_matches_brute_force():
    rng = random.Random(11)
    for _ in range(300):
        pts = [(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(rng.randint(1, 12))]
        hull = convex_hull(pts)
        assert set(hull) == brute_hull_vertices(pts)
        assert hull[0] == min(hull)
        if len(hull) >= 3:
            n = len(hull)
            assert all(cross(hull[k], hull[(k + 1) % n], hull[(k + 2) % n]) > 0 for k in range(n))


def test_alexander_norm_examples():
    assert alexander_norm(EXAMPLE, (0, 0)) == 0
    assert alexander_norm(EXAMPLE, (1, 0)) == 5
    assert alexander_norm(EXAMPLE, (1, -1)) == 2
    assert alexander_norm(EXAMPLE, (1, 1)) == 10


def test_alexander_norm_brute_force():
    support = list(EXAMPLE.terms)
    for phi in [(1, 0), (1, -1), (1, 1), (3, -7), (-2, 5)]:
        expected = max(phi[0] * (u[0] - v[0]) + phi[1] * (u[1] - v[1])
                       for u in support for v in support)
        assert alexander_norm(EXAMPLE, phi) == expected


def test_unit_ball_examples():
    assert unit_ball(EXAMPLE).vertices == tuple(EXAMPLE_BALL)
    square = unit_ball(parse_laurent("1 + a + b + ab"))
    assert set(square.vertices) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    half = unit_ball(parse_laurent("1 + a^2 + b^2 + a^2 b^2"))
    assert set(half.vertices) == {(F(1, 2), 0), (F(-1, 2), 0), (0, F(1, 2)), (0, F(-1, 2))}


def test_unit_square_ball_grid_cross_check():
    f = parse_laurent("1 + a + b + ab")
    ball = unit_ball(f)
    for i in range(-12, 13):
        for j in range(-12, 13):
            q = (F(i, 8), F(j, 8))
            inside = max(abs(q[0]), abs(q[1]), abs(q[0] + q[1]), abs(q[0] - q[1])) <= 1
            assert ball.contains(q) == inside


@pytest.mark.parametrize("text", ["1 + a + a^2", "a^3 b^-2", "1 + ab + a^2 b^2"])
def test_degenerate_ball(text):
    with pytest.raises(DegeneracyError):
        unit_ball(parse_laurent(text))


def test_unit_ball_matches_halfplane_brute_force():
    rng = random.Random(17)
    checked = 0
    while checked < 150:
        f = random_poly(rng, size=8, spread=3)
        if newton_polytope(f).dimension < 2:
            continue
        assert set(unit_ball(f).vertices) == brute_unit_ball_vertices(list(f.terms))
        checked += 1


def _on_boundary(poly: RatPolygon, q) -> bool:
    vs = poly.vertices
    return any(cross(vs[k], vs[(k + 1) % len(vs)], q) == 0 for k in range(len(vs)))


def test_duality_consistency():
    for f in (EXAMPLE, parse_laurent("1 + a + b + 3a^2 b - a b^3")):
        ball = unit_ball(f)
        for x in range(-10, 11):
            for y in range(-10, 11):
                if (x, y) == (0, 0):
                    continue
                t = alexander_norm(f, (x, y))
                q = (F(x, t), F(y, t))
                assert ball.contains(q) and _on_boundary(ball, q)


def test_norm_axioms():
    rng = random.Random(23)
    for _ in range(500):
        p = (rng.randint(-20, 20), rng.randint(-20, 20))
        q = (rng.randint(-20, 20), rng.randint(-20, 20))
        k = rng.randint(-6, 6)
        n = alexander_norm(EXAMPLE, p)
        assert alexander_norm(EXAMPLE, (k * p[0], k * p[1])) == abs(k) * n
        s = (p[0] + q[0], p[1] + q[1])
        assert alexander_norm(EXAMPLE, s) <= n + alexander_norm(EXAMPLE, q)


def test_monomial_shift_invariance():
    rng = random.Random(29)
    g = EXAMPLE.shift(-7, 3)
    assert unit_ball(g) == unit_ball(EXAMPLE)
    for _ in range(100):
        phi = (rng.randint(-9, 9), rng.randint(-9, 9))
        assert alexander_norm(g, phi) == alexander_norm(EXAMPLE, phi)


def test_central_symmetry():
    rng = random.Random(31)
    for _ in range(100):
        f = random_poly(rng)
        if newton_polytope(f).dimension < 2:
            continue
        vs = set(unit_ball(f).vertices)
        assert {(-x, -y) for x, y in vs} == vs


def test_polygon_json_is_exact():
    ball = unit_ball(EXAMPLE)
    data = ball.to_json()
    assert data[0] == ["-1/2", "1/2"]
    assert data[1] == ["-1/5", "0/1"]
    assert RatPolygon.from_json(data) == ball


def test_polygon_rejects_non_canonical_order():
    with pytest.raises(ValueError):
        RatPolygon(((1, 0), (0, 0), (0, 1)))

"""Slow, independent reference computations used by the tests."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from fiberscope.words import INVERSE, Word

CENSUS_RELATOR = "a^2 b^3 a^2 b^-2 a^-3 b^-2 a^2 b^3"
CENSUS_ALEXANDER = "a^5 b^5 + a^5 b^4 + a^4 b^5 + a^4 b^4 - a^3 b^3 + a^2 b^2 - ab - a - b - 1"
CENSUS_MU = (-4, -4)
CENSUS_LAMBDA = (-5, -5)
CENSUS_NONFIBERED = [(1, 0), (0, 1), (1, -1)]


def random_reduced_word(rng: random.Random, max_len: int) -> Word:
    n = rng.randint(0, max_len)
    letters: list[str] = []
    while len(letters) < n:
        x = rng.choice("abAB")
        if letters and INVERSE[x] == letters[-1]:
            continue
        letters.append(x)
    return Word(tuple(letters))


def random_closed_word(rng: random.Random, max_half: int) -> Word:
    """Nonempty cyclically reduced word with zero exponent sums."""
    while True:
        na, nb = rng.randint(0, max_half), rng.randint(0, max_half)
        letters = list("a" * na + "A" * na + "b" * nb + "B" * nb)
        rng.shuffle(letters)
        w = Word(tuple(letters))
        ls = list(w.letters)
        while len(ls) >= 2 and ls[0] == INVERSE[ls[-1]]:
            ls = ls[1:-1]
        if ls:
            return Word(tuple(ls))


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def brute_hull_vertices(points) -> set:
    """O(n^3): ``p`` is a hull vertex iff it starts a maximal hull edge."""
    pts = sorted(set(points))
    if len(pts) == 1:
        return set(pts)
    if all(cross(pts[0], pts[1], r) == 0 for r in pts):
        return {pts[0], pts[-1]}
    verts = set()
    for p in pts:
        for q in pts:
            if p == q:
                continue
            ok = True
            for r in pts:
                c = cross(p, q, r)
                if c < 0:
                    ok = False
                    break
                if c == 0 and not (min(p, q) <= r <= max(p, q)):
                    ok = False
                    break
            if ok:
                verts.add(p)
                verts.add(q)
    return verts


def brute_unit_ball_vertices(support) -> set:
    """Vertices of ``{phi : phi.(u - v) <= 1}`` by intersecting every pair
    of constraint lines and keeping the feasible points."""
    diffs = {(u[0] - v[0], u[1] - v[1]) for u in support for v in support} - {(0, 0)}
    diffs = sorted(diffs)
    feasible = set()
    for i, w1 in enumerate(diffs):
        for w2 in diffs[i + 1:]:
            det = w1[0] * w2[1] - w1[1] * w2[0]
            if det == 0:
                continue
            x = Fraction(w2[1] - w1[1], det)
            y = Fraction(w1[0] - w2[0], det)
            if all(x * w[0] + y * w[1] <= 1 for w in diffs):
                feasible.add((x, y))
    return brute_hull_vertices(feasible)


def sector_case_norm(x: int, y: int) -> int:
    """Closed forms on the three sectors with ``x + y > 0``, extended by
    ``phi -> -phi``: ``5x + 5y`` above both axes, ``5x + 3y`` below the
    x-axis, ``3x + 5y`` left of the y-axis."""
    if x + y < 0:
        x, y = -x, -y
    if x > 0 and y > 0:
        return 5 * x + 5 * y
    if y < 0:
        return 5 * x + 3 * y
    return 3 * x + 5 * y


def sector_case_types(bound: int, primitive_only: bool = True) -> set:
    """Fiber types from the closed forms, scanning ``|x|, |y| <= bound``."""
    out = set()
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if x == 0 or y == 0 or x + y == 0:
                continue
            g = gcd(x, y)
            if primitive_only and g != 1:
                continue
            n = sector_case_norm(x, y)
            if n <= bound:
                out.add((n, abs(x + y)))
    return out


def brute_real_root_count(linear, quadratics) -> int:
    """Distinct real roots of ``prod(a x + b) * prod(x^2 + p x + q)`` where
    the quadratics are irreducible over Q."""
    roots = {Fraction(-b, a) for a, b in linear}
    real_quads = {(p, q) for p, q in quadratics if p * p - 4 * q > 0}
    return len(roots) + 2 * len(real_quads)

"""Two-variable Laurent polynomials, Newton polygons and the Alexander norm.

All geometry is exact: integer exponents, :class:`fractions.Fraction`
vertices for the dual polygon.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DegeneracyError, ParseError

Point = tuple


@dataclass(frozen=True)
class LaurentPoly2:
    """Sparse polynomial in ``a^±1, b^±1``; ``terms`` maps ``(i, j)`` to a
    nonzero integer coefficient."""

    terms: Mapping[tuple[int, int], int]

    def __post_init__(self):
        clean = {(int(i), int(j)): int(c) for (i, j), c in self.terms.items() if c}
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    @property
    def support(self) -> list[tuple[int, int]]:
        return list(self.terms)

    def shift(self, di: int, dj: int) -> LaurentPoly2:
        """Multiply by the monomial ``a^di b^dj``."""
        return LaurentPoly2({(i + di, j + dj): c for (i, j), c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mono = []
            for var, e in (("a", i), ("b", j)):
                if e == 1:
                    mono.append(var)
                elif e:
                    mono.append(f"{var}^{e}")
            body = "*".join(mono)
            mag = abs(c)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


_LEX = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\^)|([+-])|(\*))")


def _tokens(text: str):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _LEX.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        num, var, caret, sign, star = m.groups()
        if num is not None:
            yield ("num", int(num))
        elif var is not None:
            yield ("var", var)
        elif caret:
            yield ("^", caret)
        elif sign:
            yield ("sign", sign)
        else:
            yield ("*", star)


def parse_laurent(text: str) -> LaurentPoly2:
    """Parse e.g. ``a^5 b^5 - 2*a^-1*b + 3``. Juxtaposition multiplies, so
    ``ab`` is ``a*b``; ``^`` accepts a signed integer exponent."""
    toks = list(_tokens(text))
    if not toks:
        raise ParseError("empty polynomial")
    terms: dict[tuple[int, int], int] = {}
    k = 0

    def peek():
        return toks[k] if k < len(toks) else (None, None)

    first = True
    while k < len(toks):
        sign = 1
        kind, val = peek()
        if kind == "sign":
            sign = -1 if val == "-" else 1
            k += 1
        elif not first:
            raise ParseError(f"expected + or - in {text!r}")
        first = False
        coef = 1
        i = j = 0
        factors = 0
        while True:
            kind, val = peek()
            if kind == "*":
                if factors == 0:
                    raise ParseError(f"dangling * in {text!r}")
                k += 1
                kind, val = peek()
                if kind not in ("num", "var"):
                    raise ParseError(f"dangling * in {text!r}")
            if kind == "num":
                coef *= val
                k += 1
            elif kind == "var":
                if val not in ("a", "b"):
                    raise ParseError(f"unknown variable {val!r}")
                k += 1
                e = 1
                if peek()[0] == "^":
                    k += 1
                    esign = 1
                    if peek()[0] == "sign":
                        esign = -1 if peek()[1] == "-" else 1
                        k += 1
                    if peek()[0] != "num":
                        raise ParseError(f"missing exponent in {text!r}")
                    e = esign * peek()[1]
                    k += 1
                if val == "a":
                    i += e
                else:
                    j += e
            else:
                break
            factors += 1
        if factors == 0:
            raise ParseError(f"empty term in {text!r}")
        terms[(i, j)] = terms.get((i, j), 0) + sign * coef
    return LaurentPoly2(terms)


# Exact planar geometry.


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Monotone chain hull, counterclockwise, no collinear vertices,
    starting at the lexicographically smallest point."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class RatPolygon:
    """Convex polygon with exact rational vertices, counterclockwise from
    the lexicographically smallest vertex."""

    vertices: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        vs = tuple((Fraction(x), Fraction(y)) for x, y in self.vertices)
        if convex_hull(vs) != list(vs):
            raise ValueError("vertices are not a canonical strictly convex polygon")
        object.__setattr__(self, "vertices", vs)

    @classmethod
    def hull_of(cls, points) -> RatPolygon:
        return cls(tuple(convex_hull((Fraction(x), Fraction(y)) for x, y in points)))

    @property
    def dimension(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def contains(self, point) -> bool:
        """Closed containment test."""
        q = (Fraction(point[0]), Fraction(point[1]))
        vs = self.vertices
        if len(vs) == 1:
            return q == vs[0]
        if len(vs) == 2:
            a, b = vs
            return cross(a, b, q) == 0 and min(a, b) <= q <= max(a, b)
        return all(cross(vs[k], vs[(k + 1) % len(vs)], q) >= 0 for k in range(len(vs)))

    def to_json(self) -> list[list[str]]:
        return [[f"{x.numerator}/{x.denominator}", f"{y.numerator}/{y.denominator}"]
                for x, y in self.vertices]

    @classmethod
    def from_json(cls, data) -> RatPolygon:
        return cls(tuple((Fraction(x), Fraction(y)) for x, y in data))


def _require_nonzero(f: LaurentPoly2):
    if not f.terms:
        raise DegeneracyError("the zero polynomial has no Newton polytope")


def newton_polytope(f: LaurentPoly2) -> RatPolygon:
    _require_nonzero(f)
    return RatPolygon.hull_of(f.support)


def alexander_norm(f: LaurentPoly2, phi) -> int:
    """Spread ``max - min`` of ``phi`` over the support of ``f``."""
    _require_nonzero(f)
    c, d = phi
    vals = [c * i + d * j for i, j in f.terms]
    return max(vals) - min(vals)


def difference_body(f: LaurentPoly2) -> list[Point]:
    """Hull of ``u - v`` over Newton polygon vertices, counterclockwise."""
    verts = [(int(x), int(y)) for x, y in newton_polytope(f).vertices]
    diffs = {(u[0] - v[0], u[1] - v[1]) for u in verts for v in verts}
    return convex_hull(diffs)


def unit_ball(f: LaurentPoly2) -> RatPolygon:
    """The polygon ``{phi : phi . (u - v) <= 1}`` over support pairs.

    This is the polar of the difference body, so each edge ``w1 w2`` of
    the difference body gives the ball vertex solving ``phi.w1 = phi.w2 = 1``.
    """
    body = difference_body(f)
    if len(body) < 3:
        raise DegeneracyError(
            "Newton polytope has dimension < 2; the norm is only a seminorm"
        )
    verts = []
    for k, w1 in enumerate(body):
        w2 = body[(k + 1) % len(body)]
        det = w1[0] * w2[1] - w1[1] * w2[0]
        # det > 0: the origin is interior and the body is counterclockwise
        x = Fraction(w2[1] - w1[1], det)
        y = Fraction(w1[0] - w2[0], det)
        verts.append((x, y))
    return RatPolygon.hull_of(verts)

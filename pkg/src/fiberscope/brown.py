"""Brown's fibering criterion for two-generator one-relator groups.

A class ``(c, d)`` induces a fibration when the functional ``c*x + d*y``
attains its maximum and its minimum on the relator's lattice path each in
exactly one visit. A visit is a maximal interval of path time spent on the
extreme level, so a single collinear run counts once while a self-crossing
counts once per pass. Closed paths use cyclic time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import NamedTuple

from .errors import DegeneracyError, NonFiberedSectorError, ZeroClassError
from .words import LatticePath


class CohomologyClass(NamedTuple):
    c: int
    d: int

    def __neg__(self):
        return CohomologyClass(-self.c, -self.d)

    def is_primitive(self) -> bool:
        return gcd(self.c, self.d) == 1


@dataclass(frozen=True)
class ExtremeReport:
    e_min: Fraction
    e_max: Fraction
    visits_min: int
    visits_max: int


def as_class(phi) -> CohomologyClass:
    c, d = phi
    return CohomologyClass(int(c), int(d))


def primitive_line(phi) -> CohomologyClass:
    """Primitive representative of the line through ``phi``, sign fixed so
    that the first nonzero coordinate is positive."""
    c, d = as_class(phi)
    g = gcd(c, d)
    if g == 0:
        raise ZeroClassError("the zero class spans no line")
    c, d = c // g, d // g
    if c < 0 or (c == 0 and d < 0):
        c, d = -c, -d
    return CohomologyClass(c, d)


def on_line(phi, line) -> bool:
    c, d = phi
    lc, ld = line
    return c * ld - d * lc == 0


def slope_label(line) -> str:
    """Slope ``d/c`` of a line of classes, ``inf`` for the vertical one."""
    c, d = primitive_line(line)
    if c == 0:
        return "inf"
    s = Fraction(d, c)
    return str(s)


def line_from_slope(text: str) -> CohomologyClass:
    text = text.strip()
    if text in ("inf", "oo", "infinity", "∞"):
        return CohomologyClass(0, 1)
    s = Fraction(text)
    return primitive_line((s.denominator, s.numerator))


def _values(path: LatticePath, phi) -> list[int]:
    c, d = as_class(phi)
    if c == 0 and d == 0:
        raise ZeroClassError("the zero class does not define a fibration")
    return [c * x + d * y for x, y in path.vertices]


def _count_runs(values: list[int], level: int, cyclic: bool) -> int:
    runs = 0
    prev = False
    for v in values:
        cur = v == level
        if cur and not prev:
            runs += 1
        prev = cur
    if cyclic and runs > 1 and values[0] == level and values[-1] == level:
        runs -= 1
    return runs


def functional_extremes(path: LatticePath, phi) -> ExtremeReport:
    """Extreme levels of ``phi`` on the path and the number of visits to each.

    Extremes of a linear functional along a polygonal path sit at vertices
    and a segment lies on a level exactly when both ends do, so visits are
    maximal runs of consecutive vertices at the level.
    """
    vals = _values(path, phi)
    lo, hi = min(vals), max(vals)
    cyclic = path.is_closed
    return ExtremeReport(
        e_min=Fraction(lo),
        e_max=Fraction(hi),
        visits_min=_count_runs(vals, lo, cyclic),
        visits_max=_count_runs(vals, hi, cyclic),
    )


def is_fibered(path: LatticePath, phi) -> bool:
    rep = functional_extremes(path, phi)
    return rep.visits_min == 1 and rep.visits_max == 1


def _angle_cmp(u, v) -> int:
    def half(w):
        x, y = w
        return 0 if (y > 0 or (y == 0 and x > 0)) else 1

    hu, hv = half(u), half(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def candidate_lines(path: LatticePath) -> set[CohomologyClass]:
    """Lines of classes that can tie two distinct points of the path at a
    level, plus the coordinate axes."""
    points = sorted(set(path.vertices))
    lines = {CohomologyClass(1, 0), CohomologyClass(0, 1)}
    for i, (x0, y0) in enumerate(points):
        for x1, y1 in points[i + 1:]:
            lines.add(primitive_line((y1 - y0, x0 - x1)))
    return lines


def sector_samples(lines) -> list[CohomologyClass]:
    """One class strictly inside each open sector cut out by ``lines``."""
    dirs = []
    for ln in lines:
        dirs.append(tuple(ln))
        dirs.append((-ln[0], -ln[1]))
    dirs.sort(key=cmp_to_key(_angle_cmp))
    samples = []
    for u, v in zip(dirs, dirs[1:] + dirs[:1]):
        samples.append(CohomologyClass(u[0] + v[0], u[1] + v[1]))
    return samples


def nonfibered_directions(path: LatticePath) -> frozenset[CohomologyClass]:
    """Primitive representatives of the lines of non-fibered classes.

    Raises :class:`NonFiberedSectorError` when some open sector between
    candidate lines fails too, which happens when a path revisits an
    extreme point (for instance a proper power relator).
    """
    if path.segment_count < 1:
        raise DegeneracyError("path has a single vertex")
    lines = candidate_lines(path)
    bad = frozenset(ln for ln in lines if not is_fibered(path, ln))
    for sample in sector_samples(lines):
        if not is_fibered(path, sample):
            raise NonFiberedSectorError(
                f"the open sector containing {tuple(sample)} does not fiber"
            )
    return bad


# Slow reference: explicit level-set intervals over path time.


def level_set_intervals(path: LatticePath, phi, level) -> list[tuple[Fraction, Fraction]]:
    """Maximal closed time intervals spent on ``{phi = level}``.

    Time ``t`` in ``[i, i+1]`` parametrizes segment ``i`` linearly. On a
    closed path the ends of time are identified, and an interval touching
    both is reported wrapped, with start greater than end.
    """
    c, d = as_class(phi)
    if c == 0 and d == 0:
        raise ZeroClassError("the zero class does not define a fibration")
    level = Fraction(level)
    verts = path.vertices
    n = len(verts) - 1
    pieces: list[tuple[Fraction, Fraction]] = []
    if n == 0:
        x, y = verts[0]
        if c * x + d * y == level:
            pieces.append((Fraction(0), Fraction(0)))
        return pieces
    for i in range(n):
        (x0, y0), (x1, y1) = verts[i], verts[i + 1]
        f0, f1 = c * x0 + d * y0, c * x1 + d * y1
        if f0 == f1:
            if f0 == level:
                pieces.append((Fraction(i), Fraction(i + 1)))
        elif min(f0, f1) <= level <= max(f0, f1):
            t = i + (level - f0) / (f1 - f0)
            pieces.append((t, t))
    pieces.sort()
    merged: list[list[Fraction]] = []
    for a, b in pieces:
        if merged and a <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], b)
        else:
            merged.append([a, b])
    if path.is_closed and len(merged) > 1 and merged[0][0] == 0 and merged[-1][1] == n:
        first = merged.pop(0)
        merged[-1][1] = first[1]
    return [(a, b) for a, b in merged]


def reference_extremes(path: LatticePath, phi) -> ExtremeReport:
    """Segment-scan computation of :func:`functional_extremes`."""
    c, d = as_class(phi)
    verts = path.vertices
    hi = lo = None
    for (x0, y0), (x1, y1) in zip(verts, verts[1:] or verts):
        for f in (c * x0 + d * y0, c * x1 + d * y1):
            hi = f if hi is None or f > hi else hi
            lo = f if lo is None or f < lo else lo
    return ExtremeReport(
        e_min=Fraction(lo),
        e_max=Fraction(hi),
        visits_min=len(level_set_intervals(path, phi, lo)),
        visits_max=len(level_set_intervals(path, phi, hi)),
    )

"""Fiber surface types of the fibrations of a manifold with ``b1 = 2``.

A fibered primitive class ``phi`` has fiber Euler characteristic
``-chi = ||phi||`` and puncture count ``|gcd(phi(mu), phi(lambda))|`` for
peripheral generators ``mu, lambda`` of a single cusp.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd

from .alexnorm import LaurentPoly2, alexander_norm, unit_ball
from .brown import CohomologyClass, as_class, on_line
from .errors import (
    InconsistentDataError,
    InvalidSurfaceTypeError,
    NotFiberedError,
    NotPrimitiveError,
    ZeroClassError,
)


@dataclass(frozen=True, order=True)
class SurfaceType:
    """The surface with Euler characteristic ``-minus_chi`` and
    ``punctures`` punctures."""

    minus_chi: int
    punctures: int

    def __iter__(self):
        yield self.minus_chi
        yield self.punctures

    def __str__(self):
        return f"({self.minus_chi}, {self.punctures})"

    @property
    def genus(self) -> Fraction:
        return Fraction(self.minus_chi - self.punctures + 2, 2)

    @classmethod
    def parse(cls, text: str) -> SurfaceType:
        parts = text.replace("(", "").replace(")", "").split(",")
        if len(parts) != 2:
            raise InvalidSurfaceTypeError(f"expected 'minus_chi,punctures', got {text!r}")
        try:
            return cls(int(parts[0]), int(parts[1]))
        except ValueError:
            raise InvalidSurfaceTypeError(f"non-integer surface type {text!r}") from None


def is_valid_surface_type(t) -> bool:
    minus_chi, p = t
    if minus_chi < 1 or p < 0:
        return False
    return (minus_chi - p) % 2 == 0 and p <= minus_chi + 2


def require_valid(t) -> SurfaceType:
    t = SurfaceType(*t)
    if not is_valid_surface_type(t):
        raise InvalidSurfaceTypeError(f"{t} is not the type of a surface")
    return t


@dataclass(frozen=True)
class CuspData:
    """Images of the peripheral generators in ``H_1`` mod torsion."""

    mu: tuple[int, int]
    lam: tuple[int, int]

    def __post_init__(self):
        mu, lam = tuple(map(int, self.mu)), tuple(map(int, self.lam))
        if mu == (0, 0) and lam == (0, 0):
            raise ValueError("both peripheral images vanish")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "lam", lam)

    def change_basis(self, matrix) -> CuspData:
        """New peripheral basis ``(mu', lam') = M (mu, lam)``."""
        (p, q), (r, s) = matrix
        mu = (p * self.mu[0] + q * self.lam[0], p * self.mu[1] + q * self.lam[1])
        lam = (r * self.mu[0] + s * self.lam[0], r * self.mu[1] + s * self.lam[1])
        return CuspData(mu, lam)


def puncture_count(cusp: CuspData, phi) -> int:
    c, d = as_class(phi)
    if c == 0 and d == 0:
        raise ZeroClassError("puncture count needs a nonzero class")
    return abs(gcd(c * cusp.mu[0] + d * cusp.mu[1], c * cusp.lam[0] + d * cusp.lam[1]))


def fiber_type(f: LaurentPoly2, cusp: CuspData, nonfibered, phi) -> SurfaceType:
    """Type ``(-chi, p)`` of the fiber of the fibration induced by ``phi``."""
    phi = as_class(phi)
    if phi == (0, 0):
        raise ZeroClassError("the zero class does not fiber")
    if not phi.is_primitive():
        raise NotPrimitiveError(f"{tuple(phi)} is not primitive")
    for line in nonfibered:
        if on_line(phi, line):
            raise NotFiberedError(f"class does not fiber: {tuple(phi)} lies on a non-fibered line")
    t = SurfaceType(alexander_norm(f, phi), puncture_count(cusp, phi))
    if not is_valid_surface_type(t):
        raise InconsistentDataError(
            f"class {tuple(phi)} yields {t}, which is not a surface type"
        )
    return t


def scan_box(f: LaurentPoly2, bound: int) -> tuple[range, range]:
    """Integer box containing ``bound`` times the unit ball."""
    ball = unit_ball(f)
    xs = [x * bound for x, _ in ball.vertices]
    ys = [y * bound for _, y in ball.vertices]
    return (range(floor(min(xs)), ceil(max(xs)) + 1),
            range(floor(min(ys)), ceil(max(ys)) + 1))


def enumerate_witnesses(f: LaurentPoly2, cusp: CuspData, nonfibered,
                        max_minus_chi: int,
                        connected_only: bool = True) -> dict[SurfaceType, CohomologyClass]:
    """Map each realized type with ``-chi <= max_minus_chi`` to a witness
    class. Since ``phi`` and ``-phi`` give the same fiber, only classes with
    first nonzero coordinate positive are scanned; the witness is the
    lexicographically smallest of those.

    With ``connected_only=False`` non-primitive classes ``k*phi`` are
    scanned too. Their fibers are ``k`` disjoint copies of the fiber of
    ``phi`` and are reported by total ``(-chi, p)``.
    """
    if max_minus_chi < 1:
        raise ValueError("max_minus_chi must be positive")
    lines = list(nonfibered)
    xs, ys = scan_box(f, max_minus_chi)
    found: dict[SurfaceType, CohomologyClass] = {}
    for x in xs:
        for y in ys:
            g = gcd(x, y)
            if x < 0 or (x == 0 and y <= 0) or (connected_only and g != 1):
                continue
            if any(on_line((x, y), ln) for ln in lines):
                continue
            if alexander_norm(f, (x, y)) > max_minus_chi:
                continue
            t = fiber_type(f, cusp, (), (x // g, y // g))
            t = SurfaceType(g * t.minus_chi, g * t.punctures)
            if t not in found:
                found[t] = CohomologyClass(x, y)
    return dict(sorted(found.items()))


def enumerate_types(f: LaurentPoly2, cusp: CuspData, nonfibered,
                    max_minus_chi: int, connected_only: bool = True) -> frozenset[SurfaceType]:
    return frozenset(enumerate_witnesses(f, cusp, nonfibered, max_minus_chi, connected_only))


def wf_predicate(t) -> bool:
    """Types realized by the example manifold: ``5p <= -chi``, ``p >= 1``,
    excluding ``(5, 1)``."""
    t = SurfaceType(*t)
    return (
        is_valid_surface_type(t)
        and t.punctures >= 1
        and 5 * t.punctures <= t.minus_chi
        and t != SurfaceType(5, 1)
    )

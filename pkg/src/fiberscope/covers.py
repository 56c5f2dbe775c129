"""Cover calculus for surface types and real-place propagation.

A real place of a trace field passes to every finite cover, so a bundle
whose fiber covers a seed fiber with a real place inherits it.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .errors import DataFileError
from .fibertypes import SurfaceType, is_valid_surface_type, require_valid, wf_predicate

# Bundles with a real place: the (2,4) braid bundle with trace field
# x^4 - x^3 - 2x^2 - x + 1 and the genus-2 bundle with x^8 - 5x^6 + 12x^4 - 9x^2 + 2.
SEED_POLYNOMIALS = {
    SurfaceType(2, 4): [1, -1, -2, -1, 1],
    SurfaceType(2, 0): [2, 0, -9, 0, 12, 0, -5, 0, 1],
}
SEED_A = SurfaceType(2, 4)
SEED_B = SurfaceType(2, 0)
CENSUS_EXCEPTION = SurfaceType(5, 1)
EXCLUDED = {
    SurfaceType(1, 1): "once-punctured torus bundles have no real place (Calegari)",
    SurfaceType(1, 3): "no hyperbolic bundle has a thrice-punctured sphere fiber",
}

DATA_ENV = "FIBERSCOPE_DATA"


@dataclass(frozen=True)
class CoverQuery:
    cover_type: SurfaceType
    base_type: SurfaceType

    @property
    def degree(self) -> int | None:
        return massey_degree(self.cover_type, self.base_type)


def massey_degree(cover, base) -> int | None:
    """Degree of a cover of ``base`` by ``cover``, or None if none exists.

    The degree is forced to be the Euler characteristic ratio; the cover
    exists iff it is a positive integer ``d`` and ``p <= p' <= d p``.
    """
    cover, base = require_valid(cover), require_valid(base)
    d, r = divmod(cover.minus_chi, base.minus_chi)
    if r or d < 1:
        return None
    if base.punctures <= cover.punctures <= d * base.punctures:
        return d
    return None


def valid_types(max_minus_chi: int, min_minus_chi: int = 1):
    for c in range(min_minus_chi, max_minus_chi + 1):
        for p in range(c % 2, c + 3, 2):
            yield SurfaceType(c, p)


def bundle_covered_types(base, max_minus_chi: int) -> frozenset[SurfaceType]:
    """Fiber types of finite covers of a bundle with fiber ``base``."""
    base = require_valid(base)
    return frozenset(
        t for t in valid_types(max_minus_chi) if massey_degree(t, base) is not None
    )


def mt_a(t) -> bool:
    t = require_valid(t)
    return t.punctures >= 4 and t.minus_chi % 2 == 0


def mt_b(t) -> bool:
    t = require_valid(t)
    return t.punctures == 0


def mt_c(t) -> bool:
    """``5p <= -chi``; ``(5, 1)`` holds only through the census, see
    :func:`mt_c_basis`."""
    t = require_valid(t)
    return 5 * t.punctures <= t.minus_chi and t.minus_chi > 1


def mt_c_basis(t) -> str | None:
    if not mt_c(t):
        return None
    t = SurfaceType(*t)
    if t == CENSUS_EXCEPTION:
        return "census"
    return "theorem" if wf_predicate(t) else "mt_b"


# Twist knots


def _check_twist_index(m: int):
    if m < 3:
        raise ValueError(f"twist knot index must be >= 3 for a hyperbolic complement, got {m}")


def twist_knot_fraction(m: int) -> Fraction:
    """Two-bridge fraction ``(m - 1)/(2m - 1)`` of the twist knot ``K_m``."""
    _check_twist_index(m)
    return 1 / (2 + Fraction(1, m - 1))


def walsh_cover_type(m: int) -> SurfaceType:
    """Fiber type ``(q - 3, q - 1)`` of the fibered cover of a two-bridge
    knot complement with fraction ``p/q``."""
    q = twist_knot_fraction(m).denominator
    return SurfaceType(q - 3, q - 1)


def trace_field_has_odd_degree(m: int) -> bool:
    _check_twist_index(m)
    return m % 2 == 0


def twistknot_realplace_types(max_m: int) -> frozenset[SurfaceType]:
    if max_m < 4:
        raise ValueError("max_m must be at least 4")
    return frozenset(
        walsh_cover_type(m) for m in range(3, max_m + 1) if trace_field_has_odd_degree(m)
    )


# Census data


def _data_path(name: str) -> Path:
    override = os.environ.get(DATA_ENV)
    if override and name == "census.csv":
        p = Path(override)
        return p / name if p.is_dir() else p
    return Path(str(resources.files("fiberscope") / "data" / name))


def load_census(path=None) -> dict[SurfaceType, str]:
    """Read ``minus_chi,punctures,label`` rows into a type -> label map."""
    path = Path(path) if path is not None else _data_path("census.csv")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataFileError(f"cannot read census data {path}: {exc}") from exc
    out: dict[SurfaceType, str] = {}
    for lineno, row in enumerate(csv.reader(text.splitlines()), 1):
        if not row or row[0].lstrip().startswith("#"):
            continue
        if len(row) != 3:
            raise DataFileError(f"{path}:{lineno}: expected 3 fields, got {len(row)}")
        try:
            t = SurfaceType(int(row[0]), int(row[1]))
        except ValueError:
            raise DataFileError(f"{path}:{lineno}: non-integer type") from None
        if not is_valid_surface_type(t):
            raise DataFileError(f"{path}:{lineno}: {t} is not a surface type")
        if t in out:
            raise DataFileError(f"{path}:{lineno}: duplicate type {t}")
        out[t] = row[2].strip()
    return out


def load_observation(path=None) -> list[SurfaceType]:
    """Pairs listed as realized with a real place, verbatim, including any
    that are not surface types."""
    path = Path(path) if path is not None else _data_path("observation.csv")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataFileError(f"cannot read observation data {path}: {exc}") from exc
    out = []
    for lineno, row in enumerate(csv.reader(text.splitlines()), 1):
        if not row or row[0].lstrip().startswith("#"):
            continue
        try:
            out.append(SurfaceType(int(row[0]), int(row[1])))
        except (ValueError, IndexError):
            raise DataFileError(f"{path}:{lineno}: malformed row {row!r}") from None
    return out


def certifiers(t, census: dict[SurfaceType, str]) -> list[str]:
    t = require_valid(t)
    out = []
    if mt_a(t):
        out.append("mt_a")
    if mt_b(t):
        out.append("mt_b")
    if mt_c(t):
        out.append("mt_c")
    if t in census:
        out.append("census")
    return out


def conjecture_coverage(max_minus_chi: int, census=None, observation=None) -> dict:
    """Which result certifies a real-place bundle of each type with
    ``1 < -chi <= max_minus_chi``; uncovered types are ``unknown``."""
    census = load_census() if census is None else census
    observation = load_observation() if observation is None else observation
    rows = []
    for t in valid_types(max_minus_chi, min_minus_chi=2):
        by = certifiers(t, census)
        row = {
            "type": [t.minus_chi, t.punctures],
            "certified_by": by,
            "status": "certified" if by else "unknown",
        }
        if t in census:
            row["census_label"] = census[t]
        if "mt_c" in by:
            row["mt_c_basis"] = mt_c_basis(t)
        rows.append(row)

    obs_rows = []
    for t in observation:
        entry = {"type": [t.minus_chi, t.punctures]}
        if not is_valid_surface_type(t):
            entry["valid"] = False
            entry["certified_by"] = []
        else:
            entry["valid"] = True
            entry["certified_by"] = certifiers(t, census)
            entry["in_census_or_theorem"] = t in census or mt_a(t) or mt_b(t) or mt_c(t)
        obs_rows.append(entry)
    return {
        "max_minus_chi": max_minus_chi,
        "types": rows,
        "excluded": [
            {"type": [t.minus_chi, t.punctures], "reason": why}
            for t, why in sorted(EXCLUDED.items())
        ],
        "census_entries": len(census),
        "census_all_valid": all(is_valid_surface_type(t) for t in census),
        "observation": obs_rows,
        "observation_uncertified": [
            e["type"] for e in obs_rows if not e["certified_by"]
        ],
    }

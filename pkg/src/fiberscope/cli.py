"""Command line entry point.

Subcommands print a JSON report on stdout (or ``--json-out``). Failures
print ``{"error": code, "message": ...}`` on stderr and exit with the
status listed in :data:`fiberscope.errors.EXIT_CODES`.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import alexnorm, brown, covers, fibertypes, plot, realroots, words
from .errors import DataFileError, FiberscopeError, ParseError

CONFIG_KEYS = {
    "relator", "alexander", "mu", "lambda", "max_chi", "minimal_polynomial",
    "claimed_nonfibered", "nonfibered_source",
}


def read_config(path) -> dict[str, str]:
    """Parse a UTF-8 ``key = value`` file; ``#`` starts a comment line."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DataFileError(f"cannot read config {path}: {exc}") from exc
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in CONFIG_KEYS:
            raise ParseError(f"{path}:{lineno}: expected one of {sorted(CONFIG_KEYS)} = value")
        out[key] = value.strip()
    return out


def example_config_path() -> Path:
    return Path(str(resources.files("fiberscope") / "data" / "census_example.cfg"))


def parse_pair(text: str) -> tuple[int, int]:
    parts = text.replace("(", "").replace(")", "").split(",")
    try:
        x, y = (int(p) for p in parts)
    except ValueError:
        raise ParseError(f"expected an integer pair 'x,y', got {text!r}") from None
    return x, y


def _slopes(lines) -> list[str]:
    return sorted(brown.slope_label(ln) for ln in lines)


def _pairs(classes) -> list[list[int]]:
    return sorted([int(c), int(d)] for c, d in classes)


def analyze(cfg: dict[str, str], svg_out: Path | None = None) -> dict:
    report: dict = {"warnings": []}
    path = None
    computed = None
    if cfg.get("relator"):
        w = words.parse_word(cfg["relator"])
        path = words.build_path(w)
        sums = words.exponent_sums(w)
        report["relator"] = words.format_word(w)
        report["relator_length"] = len(w)
        report["exponent_sums"] = list(sums)
        if sums != (0, 0):
            report["warnings"].append(
                f"relator has exponent sums {sums}; it does not vanish in H_1, so not every "
                "(c, d) is a homomorphism to Z"
            )
    nonfib: dict = {}
    if path is not None:
        try:
            computed = brown.nonfibered_directions(path)
            nonfib["computed"] = _pairs(computed)
            nonfib["computed_slopes"] = _slopes(computed)
        except brown.NonFiberedSectorError as exc:
            nonfib["computed"] = None
            nonfib["computed_error"] = {"error": exc.code, "message": str(exc)}
    claimed = None
    if cfg.get("claimed_nonfibered"):
        claimed = {brown.line_from_slope(s) for s in cfg["claimed_nonfibered"].split(",")}
        nonfib["claimed"] = _pairs(claimed)
        nonfib["claimed_slopes"] = _slopes(claimed)
        if "computed" in nonfib:
            nonfib["match"] = computed is not None and set(computed) == claimed
            if not nonfib["match"]:
                report["warnings"].append("computed non-fibered lines differ from the claimed ones")
    source = cfg.get("nonfibered_source") or ("claimed" if claimed is not None else "computed")
    if source not in ("claimed", "computed"):
        raise ParseError(f"nonfibered_source must be 'claimed' or 'computed', got {source!r}")
    nonfib["used"] = source
    if nonfib:
        report["nonfibered"] = nonfib

    if cfg.get("alexander"):
        f = alexnorm.parse_laurent(cfg["alexander"])
        report["alexander"] = str(f)
        report["newton_polytope"] = alexnorm.newton_polytope(f).to_json()
        ball = alexnorm.unit_ball(f)
        report["unit_ball"] = ball.to_json()
        if svg_out is not None:
            svg_out.mkdir(parents=True, exist_ok=True)
            (svg_out / "norm_ball.svg").write_text(plot.polygon_svg(ball), encoding="utf-8")
        if cfg.get("mu") and cfg.get("lambda"):
            cusp = fibertypes.CuspData(parse_pair(cfg["mu"]), parse_pair(cfg["lambda"]))
            bound = int(cfg.get("max_chi") or 10)
            if bound < 1:
                raise ParseError("max_chi must be at least 1")
            if source == "claimed":
                if claimed is None:
                    raise ParseError("nonfibered_source = claimed but no claimed_nonfibered given")
                lines = claimed
            else:
                if path is None:
                    raise ParseError("computing non-fibered lines needs a relator")
                if computed is None:
                    raise brown.NonFiberedSectorError(nonfib["computed_error"]["message"])
                lines = computed
            wit = fibertypes.enumerate_witnesses(f, cusp, lines, bound)
            report["max_minus_chi"] = bound
            report["fiber_types"] = [
                {"type": [t.minus_chi, t.punctures], "witness": [phi.c, phi.d]}
                for t, phi in wit.items()
            ]
    if path is not None and svg_out is not None:
        svg_out.mkdir(parents=True, exist_ok=True)
        (svg_out / "lattice_path.svg").write_text(plot.path_svg(path), encoding="utf-8")
    if cfg.get("minimal_polynomial"):
        report["minimal_polynomial"] = realroots_report(cfg["minimal_polynomial"])
    return report


def realroots_report(text: str) -> dict:
    f = realroots.parse_polynomial(text)
    n = realroots.count_real_roots(f)
    return {
        "polynomial": str(f),
        "degree": f.degree,
        "squarefree_part": str(realroots.squarefree_part(f)),
        "real_roots": n,
        "has_real_root": n > 0,
    }


def covers_report(seeds, bound: int) -> dict:
    seeds = [fibertypes.require_valid(s) for s in seeds]
    reached: dict = {}
    for s in seeds:
        for t in covers.bundle_covered_types(s, bound):
            reached.setdefault(t, []).append(
                {"base": [s.minus_chi, s.punctures], "degree": covers.massey_degree(t, s)}
            )
    return {
        "seeds": [[s.minus_chi, s.punctures] for s in seeds],
        "max_minus_chi": bound,
        "types": [{"type": [t.minus_chi, t.punctures], "covers": reached[t]}
                  for t in sorted(reached)],
    }


def twistknots_report(max_m: int) -> dict:
    if max_m < 3:
        raise ParseError("--max-m must be at least 3")
    rows = []
    for m in range(3, max_m + 1):
        t = covers.walsh_cover_type(m)
        rows.append({
            "m": m,
            "fraction": str(covers.twist_knot_fraction(m)),
            "cover_type": [t.minus_chi, t.punctures],
            "odd_degree_trace_field": covers.trace_field_has_odd_degree(m),
        })
    fam = sorted(covers.twistknot_realplace_types(max_m)) if max_m >= 4 else []
    return {
        "max_m": max_m,
        "knots": rows,
        "real_place_types": [[t.minus_chi, t.punctures] for t in fam],
        "all_satisfy_mt_a": all(covers.mt_a(t) for t in fam),
    }


def _emit(report: dict, json_out: Path | None):
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if json_out is None:
        sys.stdout.write(text)
    else:
        json_out.write_text(text, encoding="utf-8")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fiberscope", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def out_opt(p):
        p.add_argument("--json-out", type=Path, help="write the JSON report here")

    a = sub.add_parser("analyze", help="fibering, norm ball and fiber types of a b1 = 2 manifold")
    a.add_argument("config", nargs="?", type=Path, help="key = value config file")
    a.add_argument("--example", action="store_true", help="use the bundled census example")
    a.add_argument("--relator")
    a.add_argument("--alexander")
    a.add_argument("--mu")
    a.add_argument("--lambda", dest="lam")
    a.add_argument("--max-chi", type=int)
    a.add_argument("--polynomial", help="minimal polynomial of the trace field")
    a.add_argument("--claimed-nonfibered", help="comma separated slopes, e.g. '0,-1,inf'")
    a.add_argument("--nonfibered-source", choices=("claimed", "computed"))
    a.add_argument("--svg-out", type=Path, help="directory for lattice_path.svg and norm_ball.svg")
    out_opt(a)

    c = sub.add_parser("covers", help="fiber types of covers of bundles with given fibers")
    c.add_argument("--base", help="fiber type 'minus_chi,p'")
    c.add_argument("--seeds", nargs="+", help="several fiber types")
    c.add_argument("--max", "--max-chi", dest="max", type=int, required=True)
    out_opt(c)

    r = sub.add_parser("realroots", help="count distinct real roots of an integer polynomial")
    r.add_argument("poly", nargs="?", help="polynomial text or [c0, c1, ...]")
    r.add_argument("--polynomial")
    out_opt(r)

    t = sub.add_parser("twistknots", help="fibered covers of twist knot complements")
    t.add_argument("--max-m", type=int, required=True)
    out_opt(t)

    o = sub.add_parser("check-observation", help="coverage of real-place types by results and census")
    o.add_argument("--max-chi", type=int, default=22)
    out_opt(o)
    return ap


def run(args) -> dict:
    if args.command == "analyze":
        cfg: dict[str, str] = {}
        if args.example:
            cfg.update(read_config(example_config_path()))
        if args.config is not None:
            cfg.update(read_config(args.config))
        overrides = {
            "relator": args.relator, "alexander": args.alexander, "mu": args.mu,
            "lambda": args.lam, "minimal_polynomial": args.polynomial,
            "claimed_nonfibered": args.claimed_nonfibered,
            "nonfibered_source": args.nonfibered_source,
            "max_chi": None if args.max_chi is None else str(args.max_chi),
        }
        cfg.update({k: v for k, v in overrides.items() if v is not None})
        return analyze(cfg, args.svg_out)
    if args.command == "covers":
        seeds = ([args.base] if args.base else []) + (args.seeds or [])
        if not seeds:
            raise ParseError("give --base or --seeds")
        if args.max < 1:
            raise ParseError("--max must be at least 1")
        return covers_report([fibertypes.SurfaceType.parse(s) for s in seeds], args.max)
    if args.command == "realroots":
        text = args.polynomial or args.poly
        if not text:
            raise ParseError("give a polynomial")
        return realroots_report(text)
    if args.command == "twistknots":
        return twistknots_report(args.max_m)
    if args.command == "check-observation":
        if args.max_chi < 2:
            raise ParseError("--max-chi must be at least 2")
        return covers.conjecture_coverage(args.max_chi)
    raise AssertionError(args.command)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run(args)
        _emit(report, getattr(args, "json_out", None))
    except FiberscopeError as exc:
        sys.stderr.write(json.dumps({"error": exc.code, "message": str(exc)}) + "\n")
        return exc.exit_status
    except (ValueError, ArithmeticError) as exc:
        sys.stderr.write(json.dumps({"error": "invalid_input", "message": str(exc)}) + "\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

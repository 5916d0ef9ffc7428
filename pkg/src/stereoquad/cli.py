"""Command-line front end: project, invert, section, metrics, verify, sample.

Exit codes: 0 success (all checks pass), 1 usage or malformed input,
2 domain error (pole, degenerate section, excluded origin, off-surface),
3 verification failure.  All numeric output is formatted with 17 significant
digits so repeated runs are byte-identical.
"""

import argparse
import json
import sys

from .errors import GeometryError
from .metrics import (
    DEFAULT_ARC_REL_TOL,
    eccentricity,
    ellipse_arc_length,
    ellipse_area,
    focal_half_distance,
)
from .oracles import DEFAULT_BUDGET
from .projection import POLE_THRESHOLD, project_to_plane, project_to_surface
from .sections import TWO_PI, projected_ellipse, sample_curve, section_ellipse
from .surfaces import DEFAULT_MEMBERSHIP_TOL, ellipsoid, paraboloid
from .theorems import (
    AREA_ORACLE_SAMPLES,
    AREA_ORACLE_TOL,
    DEFAULT_ARCLENGTH_TOL,
    DEFAULT_AREA_TOL,
    DEFAULT_CURVATURE_SAMPLES,
    DEFAULT_CURVATURE_TOL,
    DEFAULT_ECCENTRICITY_TOL,
    remark_scan,
    verify_all,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFICATION = 3

DEFAULT_SAMPLE_COUNT = 360

_DEFAULTS = (
    ("membership_tol", DEFAULT_MEMBERSHIP_TOL),
    ("pole_threshold", POLE_THRESHOLD),
    ("arc_rel_tol", DEFAULT_ARC_REL_TOL),
    ("quadrature_budget", DEFAULT_BUDGET),
    ("eccentricity_tol", DEFAULT_ECCENTRICITY_TOL),
    ("curvature_tol", DEFAULT_CURVATURE_TOL),
    ("arclength_tol", DEFAULT_ARCLENGTH_TOL),
    ("area_tol", DEFAULT_AREA_TOL),
    ("curvature_samples", DEFAULT_CURVATURE_SAMPLES),
    ("area_oracle_samples", AREA_ORACLE_SAMPLES),
    ("area_oracle_tol", AREA_ORACLE_TOL),
    ("sample_count", DEFAULT_SAMPLE_COUNT),
)


class UsageError(Exception):
    """Bad flags or malformed input; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt(x) -> str:
    """Deterministic decimal form with 17 significant digits."""
    return format(float(x), ".17g")


def _parse_floats(text: str, n: int, what: str):
    parts = text.split(",")
    if len(parts) != n:
        raise UsageError(f"expected {n} comma-separated values for {what}, got {text!r}")
    try:
        return tuple(float(part) for part in parts)
    except ValueError as exc:
        raise UsageError(f"malformed number in {what}: {text!r}") from exc


def _parse_sweep(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"expected start:stop:count for --d-sweep, got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError as exc:
        raise UsageError(f"malformed --d-sweep {text!r}") from exc
    if count < 1:
        raise UsageError("--d-sweep count must be at least 1")
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


def _quadric_from(args):
    if args.ellipsoid is not None:
        return ellipsoid(*_parse_floats(args.ellipsoid, 3, "--ellipsoid"))
    return paraboloid(*_parse_floats(args.paraboloid, 3, "--paraboloid"))


def _points_from(args, n: int, what: str):
    points = [_parse_floats(text, n, what) for text in (args.point or [])]
    if getattr(args, "points_file", None):
        try:
            with open(args.points_file, "r", encoding="utf-8") as handle:
                for line in handle:
                    line = line.strip()
                    if line:
                        points.append(_parse_floats(line, n, args.points_file))
        except OSError as exc:
            raise UsageError(f"cannot read {args.points_file!r}: {exc}") from exc
    if not points:
        raise UsageError(f"no input points given; use {what} (repeatable)")
    return points


def _csv(header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(fmt(v) if isinstance(v, (int, float)) else str(v) for v in row) for row in rows)
    return lines


def _emit(args, out, csv_blocks, json_doc):
    if args.format == "json":
        text = json.dumps(json_doc, indent=2) + "\n"
    else:
        text = "\n\n".join("\n".join(block) for block in csv_blocks) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        out.write(text)


def _rows_to_json(header, rows):
    return [dict(zip(header, row)) for row in rows]


def cmd_project(args, out) -> int:
    q = _quadric_from(args)
    header = ("u", "v", "x", "y", "z")
    rows = []
    for u, v in _points_from(args, 2, "--point u,v"):
        x, y, z = project_to_surface(q, (u, v))
        rows.append((u, v, x, y, z))
    _emit(args, out, [_csv(header, rows)], {"rows": _rows_to_json(header, rows)})
    return EXIT_OK


def cmd_invert(args, out) -> int:
    q = _quadric_from(args)
    tol = args.tol if args.tol is not None else DEFAULT_MEMBERSHIP_TOL
    header = ("x", "y", "z", "u", "v")
    rows = []
    for x, y, z in _points_from(args, 3, "--point x,y,z"):
        u, v = project_to_plane(q, (x, y, z), tol)
        rows.append((x, y, z, u, v))
    _emit(args, out, [_csv(header, rows)], {"rows": _rows_to_json(header, rows)})
    return EXIT_OK


def _curve_summary(name, e):
    return {
        "curve": name,
        "semi_x": e.semi_x,
        "semi_y": e.semi_y,
        "plane_height": e.plane_height,
        "eccentricity": eccentricity(e),
        "area": ellipse_area(e),
        "perimeter": ellipse_arc_length(e, 0.0, TWO_PI),
    }


def _sample_rows(sec, proj, n):
    rows = []
    for t, (x, y) in sample_curve(sec, n):
        rows.append(("section", t, x, y, sec.plane_height))
    for t, (x, y) in sample_curve(proj, n):
        rows.append(("projection", t, x, y, 0.0))
    return rows


def cmd_section(args, out) -> int:
    q = _quadric_from(args)
    sec = section_ellipse(q, args.d)
    proj = projected_ellipse(q, args.d)
    header = ("curve", "semi_x", "semi_y", "plane_height", "eccentricity", "area", "perimeter")
    summaries = [_curve_summary("section", sec), _curve_summary("projection", proj)]
    rows = [tuple(s[k] for k in header) for s in summaries]
    blocks = [_csv(header, rows)]
    doc = {"section": summaries[0], "projection": summaries[1]}
    if args.samples is not None:
        if args.samples < 3:
            raise UsageError("--samples must be at least 3")
        sample_header = ("curve", "t", "x", "y", "z")
        samples = _sample_rows(sec, proj, args.samples)
        blocks.append(_csv(sample_header, samples))
        doc["samples"] = _rows_to_json(sample_header, samples)
    _emit(args, out, blocks, doc)
    return EXIT_OK


def cmd_metrics(args, out) -> int:
    q = _quadric_from(args)
    header = (
        "curve", "semi_x", "semi_y", "eccentricity", "focal_half_distance",
        "curvature_min", "curvature_max", "perimeter", "area",
    )
    rows = []
    for name, e in (
        ("section", section_ellipse(q, args.d)),
        ("projection", projected_ellipse(q, args.d)),
    ):
        major = max(e.semi_x, e.semi_y)
        minor = min(e.semi_x, e.semi_y)
        rows.append((
            name, e.semi_x, e.semi_y, eccentricity(e), focal_half_distance(e),
            minor / (major * major), major / (minor * minor),
            ellipse_arc_length(e, 0.0, TWO_PI), ellipse_area(e),
        ))
    _emit(args, out, [_csv(header, rows)], {"rows": _rows_to_json(header, rows)})
    return EXIT_OK


def _scalar(value):
    # T3/T4 carry sampled vectors; CSV reports their t = 0 entry.
    return value[0] if isinstance(value, tuple) else value


def cmd_verify(args, out) -> int:
    q = _quadric_from(args)
    if args.d is not None:
        d_values = [args.d]
    else:
        d_values = _parse_sweep(args.d_sweep)
    overrides = {}
    if args.tol is not None:
        overrides = {
            "eccentricity_tol": args.tol,
            "curvature_tol": args.tol,
            "arclength_tol": args.tol,
            "area_tol": args.tol,
        }
    reports = []
    for d in d_values:
        reports.extend(verify_all(q, d, **overrides))
    header = (
        "theorem", "kind", "a", "b", "c", "d", "lhs", "rhs",
        "expected_ratio", "max_abs_error", "tolerance", "pass",
    )
    rows = [
        (
            r.theorem_id, q.kind, q.a, q.b, q.c, r.d, _scalar(r.lhs), _scalar(r.rhs),
            r.expected_ratio, r.max_abs_error, r.tolerance,
            "true" if r.passed else "false",
        )
        for r in reports
    ]
    blocks = [_csv(header, rows)]
    doc = {"reports": _rows_to_json(header, rows)}
    all_ok = all(r.passed for r in reports)
    if args.remark:
        if len(d_values) >= 2:
            scan_values = d_values
        else:
            scan_values = [0.0, 0.5 * q.c, 0.9 * q.c, 0.99 * q.c, 0.999 * q.c]
        remark = remark_scan(q, scan_values)
        scan_header = ("d", "projected_curvature_at_0", "projected_perimeter", "projected_area")
        scan_rows = list(zip(
            remark.d_values, remark.curvature_trend, remark.length_trend, remark.area_trend,
        ))
        flag_rows = [(name, "true" if ok else "false") for name, ok in sorted(remark.monotone_flags.items())]
        blocks.append(_csv(scan_header, scan_rows))
        blocks.append(_csv(("flag", "value"), flag_rows))
        doc["remark"] = {
            "scan": _rows_to_json(scan_header, scan_rows),
            "monotone_flags": remark.monotone_flags,
        }
        all_ok = all_ok and all(remark.monotone_flags.values())
    _emit(args, out, blocks, doc)
    return EXIT_OK if all_ok else EXIT_VERIFICATION


def cmd_sample(args, out) -> int:
    q = _quadric_from(args)
    n = args.samples if args.samples is not None else DEFAULT_SAMPLE_COUNT
    if n < 3:
        raise UsageError("--samples must be at least 3")
    sec = section_ellipse(q, args.d)
    proj = projected_ellipse(q, args.d)
    header = ("curve", "t", "x", "y", "z")
    rows = _sample_rows(sec, proj, n)
    _emit(args, out, [_csv(header, rows)], {"rows": _rows_to_json(header, rows)})
    return EXIT_OK


_HANDLERS = {
    "project": cmd_project,
    "invert": cmd_invert,
    "section": cmd_section,
    "metrics": cmd_metrics,
    "verify": cmd_verify,
    "sample": cmd_sample,
}


def _add_quadric_flags(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--ellipsoid", metavar="a,b,c", help="ellipsoid semi-axes")
    group.add_argument("--paraboloid", metavar="a,b,c", help="paraboloid coefficients and apex height")


def _add_output_flags(parser):
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="stereoquad",
        description="Project quadrics onto the plane z = 0 and verify section geometry.",
    )
    parser.add_argument(
        "--show-defaults", action="store_true",
        help="print all built-in tolerances and sample counts, then exit",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("project", help="map plane points onto the surface")
    _add_quadric_flags(p)
    p.add_argument("--point", action="append", metavar="u,v", help="plane point (repeatable)")
    p.add_argument("--points-file", metavar="PATH", help="file with one u,v pair per line")
    _add_output_flags(p)

    p = sub.add_parser("invert", help="map surface points back to the plane")
    _add_quadric_flags(p)
    p.add_argument("--point", action="append", metavar="x,y,z", help="surface point (repeatable)")
    p.add_argument("--points-file", metavar="PATH", help="file with one x,y,z triple per line")
    p.add_argument("--tol", type=float, help=f"membership tolerance (default {DEFAULT_MEMBERSHIP_TOL})")
    _add_output_flags(p)

    p = sub.add_parser("section", help="section and projected ellipses at height d")
    _add_quadric_flags(p)
    p.add_argument("--d", type=float, required=True, help="section plane height")
    p.add_argument("--samples", type=int, help="also emit this many boundary samples per curve")
    _add_output_flags(p)

    p = sub.add_parser("metrics", help="conic metrics of the section and its projection")
    _add_quadric_flags(p)
    p.add_argument("--d", type=float, required=True, help="section plane height")
    _add_output_flags(p)

    p = sub.add_parser("verify", help="run the identity checks at one or many heights")
    _add_quadric_flags(p)
    heights = p.add_mutually_exclusive_group(required=True)
    heights.add_argument("--d", type=float, help="single section plane height")
    heights.add_argument("--d-sweep", metavar="START:STOP:COUNT", help="evenly spaced heights")
    p.add_argument("--tol", type=float, help="override every per-check tolerance")
    p.add_argument("--remark", action="store_true", help="append the trend scan toward d = c")
    _add_output_flags(p)

    p = sub.add_parser("sample", help="emit boundary samples of both curves")
    _add_quadric_flags(p)
    p.add_argument("--d", type=float, required=True, help="section plane height")
    p.add_argument("--samples", type=int, help=f"samples per curve (default {DEFAULT_SAMPLE_COUNT})")
    _add_output_flags(p)

    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.show_defaults:
            lines = _csv(("name", "value"), _DEFAULTS)
            out.write("\n".join(lines) + "\n")
            return EXIT_OK
        if args.command is None:
            raise UsageError("a subcommand is required (project|invert|section|metrics|verify|sample)")
        return _HANDLERS[args.command](args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except GeometryError as exc:
        err.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN
    except ValueError as exc:
        # precondition violations surfaced by the library (bad tolerances etc.)
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface.

Subcommands: ``circle`` (render one circle to PBM or JSON), ``stringart``
(render the chord family), ``errors`` (residual-error reports: JSON file,
tab-delimited table on stdout, optional matplotlib figure), and ``compare``
(envelope rasterizer vs the midpoint reference).

Exit codes: 0 success, 1 usage or input validation error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import (
    ErrorReport,
    compare_sets,
    error_report,
    midpoint_reference,
)
from .canvas import Canvas, InvalidCanvasError, render_string_art, render_to_canvas, write_pbm
from .envelope import EmptyFamilyError
from .rasterizer import (
    CircleSpec,
    InvalidRadiusError,
    RadiusOverflowError,
    derive_params,
    rasterize_circle,
)

# Reference residual errors (average, maximum) of the corrected octant
# algorithm at the calibration radii; rows deviating beyond FLAG_THRESHOLD
# from the reference average are flagged in the report table.
REFERENCE_RESIDUALS: dict[int, tuple[float, float]] = {
    20: (0.21, 0.52),
    40: (0.32, 0.78),
    60: (0.35, 0.85),
    80: (0.30, 0.99),
    100: (0.37, 0.89),
}
FLAG_THRESHOLD = 0.25

#: Blank border around the auto-sized circle canvas, in pixels.
CANVAS_MARGIN = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # raise instead of exiting so cli_main controls the exit code
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="stringcircle",
        description="Draw circles as the envelope of intersecting chords.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_circle = sub.add_parser("circle", help="rasterize one circle")
    p_circle.add_argument("--cx", type=int, required=True, help="center column")
    p_circle.add_argument("--cy", type=int, required=True, help="center row")
    p_circle.add_argument("--radius", type=int, required=True, help="radius in pixels")
    p_circle.add_argument("--algo", choices=("one", "two"), default="two")
    p_circle.add_argument(
        "--no-correct", action="store_true", help="disable the +1 row correction"
    )
    p_circle.add_argument("--parallel", type=int, default=1, metavar="N")
    p_circle.add_argument(
        "--canvas", metavar="WxH", help="explicit canvas size; plots absolute coordinates"
    )
    p_circle.add_argument("--out", required=True, metavar="PATH")
    p_circle.add_argument("--format", choices=("pbm", "json"), default="pbm")
    p_circle.set_defaults(func=cmd_circle)

    p_art = sub.add_parser("stringart", help="render the chord-family envelope")
    p_art.add_argument("--n", type=int, required=True, help="number of chords")
    p_art.add_argument("--cell", type=int, required=True, help="pixels per axis unit")
    p_art.add_argument("--out", required=True, metavar="PATH")
    p_art.set_defaults(func=cmd_stringart)

    p_err = sub.add_parser("errors", help="residual-error report over several radii")
    p_err.add_argument(
        "--radii", required=True, metavar="CSV", help="comma-separated radii"
    )
    p_err.add_argument("--algo", choices=("one", "two"), default="two")
    p_err.add_argument("--no-correct", action="store_true")
    p_err.add_argument("--out", required=True, metavar="PATH")
    p_err.add_argument(
        "--plot", metavar="PATH", help="also render the error-vs-radius figure"
    )
    p_err.set_defaults(func=cmd_errors)

    p_cmp = sub.add_parser(
        "compare", help="diff the envelope rasterizer against the midpoint reference"
    )
    p_cmp.add_argument("--radius", type=int, required=True)
    p_cmp.add_argument("--out", required=True, metavar="PATH")
    p_cmp.set_defaults(func=cmd_compare)

    return parser


def _parse_canvas(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        return int(w), int(h)
    except ValueError:
        raise UsageError(f"--canvas expects WxH, got {text!r}") from None


def cmd_circle(args) -> int:
    if args.parallel < 1:
        raise UsageError(f"--parallel must be >= 1, got {args.parallel}")
    spec = CircleSpec(args.cx, args.cy, args.radius)
    pixels = rasterize_circle(
        spec, algo=args.algo, correct=not args.no_correct, workers=args.parallel
    )

    if args.format == "json":
        payload = {
            "center": [spec.xx, spec.yy],
            "radius_px": spec.rr,
            "algo": args.algo,
            "corrected": not args.no_correct,
            "pixel_count": len(pixels),
            "pixels": sorted(list(p) for p in pixels),
        }
        Path(args.out).write_text(json.dumps(payload, indent=2) + "\n")
        return 0

    if args.canvas:
        width_px, height_px = _parse_canvas(args.canvas)
        plot_pixels = pixels
    else:
        # auto-size: square canvas covering the duplication frame, circle centered
        width = derive_params(spec, args.algo).width
        side = 2 * width + 2 * CANVAS_MARGIN
        shift = width + CANVAS_MARGIN
        plot_pixels = {(px - spec.xx + shift, py - spec.yy + shift) for px, py in pixels}
        width_px = height_px = side
    canvas, clipped = render_to_canvas(plot_pixels, width_px, height_px)
    Path(args.out).write_bytes(write_pbm(canvas))
    if clipped:
        print(f"clipped {clipped} out-of-bounds pixels", file=sys.stderr)
    return 0


def cmd_stringart(args) -> int:
    canvas = render_string_art(args.n, args.cell)
    Path(args.out).write_bytes(write_pbm(canvas))
    return 0


def _parse_radii(text: str) -> list[int]:
    try:
        radii = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"--radii expects comma-separated integers, got {text!r}") from None
    if not radii:
        raise UsageError("--radii is empty")
    return radii


def _report_row(report: ErrorReport) -> str:
    ref = REFERENCE_RESIDUALS.get(report.radius_px)
    if ref is None:
        ref_avg = ref_max = dev = "-"
        flag = "degenerate" if report.degenerate else "-"
    else:
        deviation = abs(report.average_error_px - ref[0])
        ref_avg, ref_max = f"{ref[0]:.2f}", f"{ref[1]:.2f}"
        dev = f"{deviation:.2f}"
        flag = "DEVIATES" if deviation > FLAG_THRESHOLD else "ok"
    return "\t".join(
        [
            str(report.radius_px),
            str(report.pixel_count),
            f"{report.average_error_px:.2f}",
            f"{report.maximum_error_px:.2f}",
            ref_avg,
            ref_max,
            dev,
            flag,
        ]
    )


def render_error_figure(reports: list[ErrorReport], path: str) -> None:
    """Error-vs-radius figure: measured curves plus reference markers."""
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    radii = [rep.radius_px for rep in reports]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(radii, [rep.average_error_px for rep in reports], "o-", label="average")
    ax.plot(radii, [rep.maximum_error_px for rep in reports], "s-", label="maximum")
    ref_radii = [r for r in radii if r in REFERENCE_RESIDUALS]
    if ref_radii:
        ax.plot(
            ref_radii,
            [REFERENCE_RESIDUALS[r][0] for r in ref_radii],
            "v--",
            label="reference average",
        )
        ax.plot(
            ref_radii,
            [REFERENCE_RESIDUALS[r][1] for r in ref_radii],
            "^--",
            label="reference maximum",
        )
    ax.set_xlabel("radius (px)")
    ax.set_ylabel("radial error (px)")
    ax.grid(alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def cmd_errors(args) -> int:
    radii = _parse_radii(args.radii)
    reports = [
        error_report(CircleSpec(2 * rr, 2 * rr, rr), algo=args.algo, correct=not args.no_correct)
        for rr in radii
    ]
    Path(args.out).write_text(
        json.dumps([rep.to_json_dict() for rep in reports], indent=2) + "\n"
    )
    header = "\t".join(
        [
            "radius_px",
            "pixel_count",
            "average_error_px",
            "maximum_error_px",
            "ref_average_px",
            "ref_maximum_px",
            "avg_deviation",
            "flag",
        ]
    )
    print(header)
    for rep in reports:
        print(_report_row(rep))
    if args.plot:
        render_error_figure(reports, args.plot)
    return 0


def cmd_compare(args) -> int:
    spec = CircleSpec(2 * args.radius, 2 * args.radius, args.radius)
    envelope_set = rasterize_circle(spec)
    reference_set = midpoint_reference(spec)
    diff = compare_sets(envelope_set, reference_set)
    payload = {
        "radius_px": args.radius,
        "algo": "two",
        "corrected": True,
        "only_envelope": diff.only_a,
        "only_midpoint": diff.only_b,
        "both": diff.both,
        "jaccard": diff.jaccard,
    }
    Path(args.out).write_text(json.dumps(payload, indent=2) + "\n")
    print(
        f"radius {args.radius}: envelope {len(envelope_set)} px, "
        f"midpoint {len(reference_set)} px, jaccard {diff.jaccard:.4f}"
    )
    return 0


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (
        InvalidRadiusError,
        RadiusOverflowError,
        EmptyFamilyError,
        InvalidCanvasError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()

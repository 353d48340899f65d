"""Command-line front end.

Every number printed here comes straight out of a library call; the CLI
only parses arguments and formats results.  Exit codes: 0 success, 2 usage
error (including malformed slope strings), 3 domain error with a one-line
diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction

from .cfrac import Form, neg_cfrac, phi, psi
from .classification import (
    CountKind,
    SteinTag,
    UTTag,
    classify,
    in_classified_range,
    result_as_json,
    tight_count,
)
from .slope import Slope, parse_slope
from .surgery_enum import smooth_framing_check
from .tight_counts import solid_torus_count, solid_torus_spec
from .torus_dynamics import (
    AttachSide,
    BypassMove,
    SlopeWindow,
    bypass_step,
    slopes_in_window,
    thicken_path,
)

COUNT_WORDS = {
    CountKind.FINITE: "finite",
    CountKind.INFINITE: "infinite",
    CountKind.LOWER_BOUND: "lower-bound",
}


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(str(exc)) from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="f8tight",
        description="Count and enumerate tight contact structures on surgeries on the figure-eight knot.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="tight-structure count for M(r)")
    p.add_argument("r", type=parse_slope)

    p = sub.add_parser("enumerate", help="list the certificates for r in the classified range")
    p.add_argument("r", type=parse_slope)
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("phi", help="the per-unit-interval count function")
    p.add_argument("r", type=_fraction)

    p = sub.add_parser("psi", help="the companion count supported on r < -3")
    p.add_argument("r", type=_fraction)

    p = sub.add_parser("cfrac", help="negative continued fraction expansion")
    p.add_argument("x", type=_fraction)
    p.add_argument("--form", choices=["std", "st"], default="std")

    p = sub.add_parser("bypass-step", help="one bypass move on a convex torus")
    p.add_argument("s", type=parse_slope)
    p.add_argument("arc", type=parse_slope)
    p.add_argument("--back", action="store_true")

    p = sub.add_parser("thicken", help="iterate slope-0 bypass moves to -3 or inf")
    p.add_argument("s", type=parse_slope)

    p = sub.add_parser("window", help="admissible neighbor slopes of a coefficient")
    p.add_argument("r", type=parse_slope)
    p.add_argument("--bound", type=int, required=True)

    p = sub.add_parser("solid-torus", help="tight-structure count on a solid torus")
    p.add_argument("--meridian", type=parse_slope, required=True)
    p.add_argument("--dividing", type=parse_slope, required=True)

    p = sub.add_parser("check-framing", help="replay the Kirby moves for positive r")
    p.add_argument("r", type=_fraction)

    p = sub.add_parser("table", help="classification table over a coefficient range")
    p.add_argument("--from", dest="start", type=_fraction, required=True)
    p.add_argument("--to", dest="stop", type=_fraction, required=True)
    p.add_argument("--denominator", type=int, default=1)

    # Arguments like -3/2 or -inf must parse as values, not option flags;
    # argparse only special-cases plain negative integers by default.
    slope_matcher = re.compile(r"^-(\d+(/\d+)?|inf)$")
    parser._negative_number_matcher = slope_matcher
    for child in sub.choices.values():
        child._negative_number_matcher = slope_matcher
    return parser


def _format_count(r: Slope) -> str:
    count = tight_count(r)
    if count.kind is CountKind.INFINITE:
        return "infinite (toroidal)"
    return f"{COUNT_WORDS[count.kind]} {count.value}"


def _cmd_count(args: argparse.Namespace, out) -> int:
    print(_format_count(args.r), file=out)
    return 0


def _cmd_enumerate(args: argparse.Namespace, out) -> int:
    if not in_classified_range(args.r.as_fraction()):
        raise ValueError(f"coefficient {args.r} is outside the classified range")
    result = classify(args.r)
    if args.as_json:
        print(json.dumps(result_as_json(result)), file=out)
        return 0
    print(f"coefficient {result.coefficient}", file=out)
    print(f"geometry {result.verdict.value}", file=out)
    print(f"count {COUNT_WORDS[result.count.kind]} {result.count.value}", file=out)
    for cert in result.structures:
        evaluations = ",".join(str(e) for e in cert.certificate.evaluations)
        print(
            f"{cert.family.value} evaluations=({evaluations}) scale={cert.certificate.scale} "
            f"stein={cert.stein.value} strong={cert.strong} ut={cert.universally_tight.value}",
            file=out,
        )
    return 0


def _cmd_thicken(args: argparse.Namespace, out) -> int:
    path = thicken_path(args.s)
    payload = {
        "path": [str(s) for s in path.slopes],
        "reached_minus_three": path.reached_minus_three,
        "reached_infinity": path.reached_infinity,
    }
    print(json.dumps(payload), file=out)
    return 0


def _coefficients_between(start: Fraction, stop: Fraction, max_den: int) -> list[Fraction]:
    seen = set()
    for q in range(1, max_den + 1):
        for p in range(math.ceil(start * q), math.floor(stop * q) + 1):
            if math.gcd(abs(p), q) == 1:
                seen.add(Fraction(p, q))
    return sorted(seen)


def _cmd_table(args: argparse.Namespace, out) -> int:
    if args.denominator < 1:
        raise ValueError("denominator bound must be positive")
    coefficients = _coefficients_between(args.start, args.stop, args.denominator)
    if not coefficients:
        print("usage error: empty coefficient range", file=sys.stderr)
        return 2
    for f in coefficients:
        r = Slope(f.numerator, f.denominator)
        result = classify(r)
        row = [str(r), result.verdict.value]
        if result.count.kind is CountKind.INFINITE:
            row += ["infinite", "ut -", "cand -", "stein -"]
        elif result.count.kind is CountKind.LOWER_BOUND:
            row += [f"lower-bound {result.count.value}", "ut -", "cand -", "stein -"]
        else:
            yes = sum(1 for c in result.structures if c.universally_tight is UTTag.YES)
            cand = sum(1 for c in result.structures if c.universally_tight is UTTag.CANDIDATE_PAIR)
            stein = sum(1 for c in result.structures if c.stein is SteinTag.YES)
            row += [
                f"finite {result.count.value}",
                f"ut {yes}",
                f"cand {cand}",
                f"stein {stein}/{len(result.structures)}",
            ]
        print("  ".join(row), file=out)
    return 0


def run(argv: list[str], out=None) -> int:
    """Execute one invocation; returns the exit status."""
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "count":
            return _cmd_count(args, out)
        if args.command == "enumerate":
            return _cmd_enumerate(args, out)
        if args.command == "phi":
            print(phi(args.r), file=out)
            return 0
        if args.command == "psi":
            print(psi(args.r), file=out)
            return 0
        if args.command == "cfrac":
            form = Form.STANDARD if args.form == "std" else Form.SOLID_TORUS
            print(neg_cfrac(args.x, form), file=out)
            return 0
        if args.command == "bypass-step":
            side = AttachSide.BACK if args.back else AttachSide.FRONT
            print(bypass_step(args.s, BypassMove(side, args.arc)), file=out)
            return 0
        if args.command == "thicken":
            return _cmd_thicken(args, out)
        if args.command == "window":
            slopes = slopes_in_window(SlopeWindow(args.r, args.bound))
            print(" ".join(str(s) for s in slopes), file=out)
            return 0
        if args.command == "solid-torus":
            print(solid_torus_count(solid_torus_spec(args.meridian, args.dividing)), file=out)
            return 0
        if args.command == "check-framing":
            print("true" if smooth_framing_check(args.r) else "false", file=out)
            return 0
        if args.command == "table":
            return _cmd_table(args, out)
    except (ValueError, RuntimeError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    raise AssertionError(f"unhandled command {args.command}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))

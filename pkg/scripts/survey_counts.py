#!/usr/bin/env python3
"""Survey tight-structure counts over a sweep of surgery coefficients.

Walks every reduced p/q in a window, classifies each, and prints summary
statistics: how often each geometry shows up, the distribution of counts,
and the split of certificate tags.  Useful for eyeballing growth rates,
e.g. how the finite counts scale as the denominator bound increases.

    python3 scripts/survey_counts.py --from -8 --to 8 --denominator 6
    python3 scripts/survey_counts.py --from -30 --to -5 --denominator 4 --csv out.csv
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from f8tight import CountKind, Slope, SteinTag, UTTag, classify  # noqa: E402


@dataclass(frozen=True)
class SurveyConfig:
    start: Fraction
    stop: Fraction
    max_denominator: int
    csv_path: Path | None

    def coefficients(self) -> list[Fraction]:
        found = set()
        for q in range(1, self.max_denominator + 1):
            for p in range(math.ceil(self.start * q), math.floor(self.stop * q) + 1):
                if math.gcd(abs(p), q) == 1:
                    found.add(Fraction(p, q))
        return sorted(found)


def parse_args(argv: list[str]) -> SurveyConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--from", dest="start", type=Fraction, required=True)
    parser.add_argument("--to", dest="stop", type=Fraction, required=True)
    parser.add_argument("--denominator", type=int, default=1)
    parser.add_argument("--csv", type=Path, default=None, help="also write one row per coefficient")
    args = parser.parse_args(argv)
    if args.denominator < 1:
        parser.error("denominator bound must be positive")
    return SurveyConfig(args.start, args.stop, args.denominator, args.csv)


def main(argv: list[str] | None = None) -> int:
    config = parse_args(sys.argv[1:] if argv is None else argv)
    coefficients = config.coefficients()
    if not coefficients:
        print("empty coefficient range", file=sys.stderr)
        return 2

    geometries: Counter[str] = Counter()
    kinds: Counter[str] = Counter()
    finite_counts: Counter[int] = Counter()
    tag_totals = Counter(ut_yes=0, ut_candidate=0, stein_yes=0, certificates=0)
    rows = []

    for f in coefficients:
        result = classify(Slope(f.numerator, f.denominator))
        geometries[result.verdict.value] += 1
        kinds[result.count.kind.value] += 1
        if result.count.kind is CountKind.FINITE:
            finite_counts[result.count.value] += 1
        for cert in result.structures:
            tag_totals["certificates"] += 1
            tag_totals["ut_yes"] += cert.universally_tight is UTTag.YES
            tag_totals["ut_candidate"] += cert.universally_tight is UTTag.CANDIDATE_PAIR
            tag_totals["stein_yes"] += cert.stein is SteinTag.YES
        rows.append(
            {
                "coefficient": str(result.coefficient),
                "geometry": result.verdict.value,
                "kind": result.count.kind.value,
                "count": "" if result.count.value is None else result.count.value,
            }
        )

    print(f"coefficients surveyed: {len(coefficients)}")
    print(f"window: [{config.start}, {config.stop}], denominators <= {config.max_denominator}")
    print()
    print("geometry:", dict(sorted(geometries.items())))
    print("verdict kinds:", dict(sorted(kinds.items())))
    if finite_counts:
        ordered = sorted(finite_counts.items())
        print("finite count distribution:", dict(ordered))
        total = sum(k * v for k, v in ordered)
        print(f"mean finite count: {total / sum(finite_counts.values()):.2f}")
    if tag_totals["certificates"]:
        n = tag_totals["certificates"]
        print(
            f"certificates: {n}  ut-yes {tag_totals['ut_yes']}  "
            f"ut-candidate {tag_totals['ut_candidate']}  stein-yes {tag_totals['stein_yes']}"
        )

    if config.csv_path is not None:
        with config.csv_path.open("w", newline="") as handle:
            writer = csv.DictWriter(handle, fieldnames=["coefficient", "geometry", "kind", "count"])
            writer.writeheader()
            writer.writerows(rows)
        print(f"wrote {len(rows)} rows to {config.csv_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""End-to-end checks on the command-line surface.

Each command is exercised through run() with a captured stream, so the
frozen strings below are exactly what a shell user sees.  One subprocess
test covers the main() entry point and its exit status plumbing.
"""

from __future__ import annotations

import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from f8tight import Slope, classify, tight_count
from f8tight.classification import CountKind, result_as_json
from f8tight.cli import run


def run_cli(*argv: str) -> tuple[int, str]:
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


@pytest.mark.parametrize(
    "coefficient, expected",
    [
        ("-5", "finite 3"),
        ("-9/2", "finite 4"),
        ("-1/2", "finite 2"),
        ("3/2", "finite 4"),
        ("0", "infinite (toroidal)"),
        ("4", "infinite (toroidal)"),
        ("-4", "infinite (toroidal)"),
        ("1/2", "lower-bound 4"),
        ("-7/2", "lower-bound 3"),
    ],
)
def test_count_output(coefficient, expected):
    code, text = run_cli("count", coefficient)
    assert code == 0
    assert text == expected + "\n"


def test_count_agrees_with_library():
    for f in (Fraction(-19, 7), Fraction(23, 5), Fraction(7), Fraction(-12, 5)):
        code, text = run_cli("count", f"{f.numerator}/{f.denominator}")
        assert code == 0
        count = tight_count(Slope(f.numerator, f.denominator))
        if count.kind is CountKind.INFINITE:
            assert text.strip() == "infinite (toroidal)"
        else:
            word = "finite" if count.kind is CountKind.FINITE else "lower-bound"
            assert text.strip() == f"{word} {count.value}"


def test_phi_and_psi_commands():
    assert run_cli("phi", "1/2") == (0, "2\n")
    assert run_cli("phi", "7/3") == (0, "3\n")
    assert run_cli("psi", "-9/2") == (0, "2\n")
    assert run_cli("psi", "-10") == (0, "7\n")


def test_cfrac_command():
    assert run_cli("cfrac", "-3/2") == (0, "[-2,-2]:std\n")
    assert run_cli("cfrac", "-3/2", "--form", "st") == (0, "[-2,-2]:st\n")
    assert run_cli("cfrac", "-1/4") == (0, "[-1,-2,-2,-2]:std\n")


def test_cfrac_rejects_out_of_domain(capsys):
    code, text = run_cli("cfrac", "1/2")
    assert code == 3
    assert text == ""
    assert capsys.readouterr().err.startswith("domain error:")


def test_bypass_step_command():
    assert run_cli("bypass-step", "-9/2", "0") == (0, "-4\n")
    assert run_cli("bypass-step", "-9/2", "0", "--back") == (0, "-5\n")
    assert run_cli("bypass-step", "inf", "1/2") == (0, "0\n")


def test_bypass_step_degenerate(capsys):
    code, _ = run_cli("bypass-step", "-1", "-1")
    assert code == 3
    assert "domain error:" in capsys.readouterr().err


def test_thicken_command():
    code, text = run_cli("thicken", "-9/2")
    assert code == 0
    assert json.loads(text) == {
        "path": ["-9/2", "-4", "-3"],
        "reached_minus_three": True,
        "reached_infinity": False,
    }
    code, text = run_cli("thicken", "-2")
    assert json.loads(text) == {
        "path": ["-2", "-1", "inf"],
        "reached_minus_three": False,
        "reached_infinity": True,
    }


def test_window_command():
    assert run_cli("window", "-5", "--bound", "3") == (0, "-14/3 -9/2 -4 inf\n")


def test_window_rejects_toroidal(capsys):
    code, _ = run_cli("window", "4", "--bound", "3")
    assert code == 3
    assert "domain error:" in capsys.readouterr().err


def test_solid_torus_command():
    args = ("solid-torus", "--meridian", "inf", "--dividing")
    assert run_cli(*args, "-5/3") == (0, "2\n")
    assert run_cli(*args, "-2/5") == (0, "4\n")
    assert run_cli(*args, "-1") == (0, "1\n")


def test_check_framing_command(capsys):
    assert run_cli("check-framing", "5/2") == (0, "true\n")
    assert run_cli("check-framing", "18/5") == (0, "true\n")
    code, _ = run_cli("check-framing", "1/2")
    assert code == 3
    assert "domain error:" in capsys.readouterr().err


def test_enumerate_plain_output():
    code, text = run_cli("enumerate", "-9/2")
    assert code == 0
    assert text.splitlines() == [
        "coefficient -9/2",
        "geometry Hyperbolic",
        "count finite 4",
        "PsiStd evaluations=(-1,0) scale=1 stein=Yes strong=Yes ut=No",
        "PsiStd evaluations=(1,0) scale=1 stein=Yes strong=Yes ut=No",
        "PhiOvertwisted evaluations=(-5) scale=5 stein=Yes strong=Yes ut=Yes",
        "PhiOvertwisted evaluations=(5) scale=5 stein=Yes strong=Yes ut=Yes",
    ]


def test_enumerate_json_matches_library():
    code, text = run_cli("enumerate", "-9/2", "--json")
    assert code == 0
    expected = json.dumps(result_as_json(classify(Slope(-9, 2))))
    assert text == expected + "\n"


def test_enumerate_outside_range(capsys):
    for coefficient in ("1/2", "9/2", "0"):
        code, text = run_cli("enumerate", coefficient)
        assert code == 3
        assert text == ""
        assert capsys.readouterr().err.startswith("domain error:")


def test_table_command():
    code, text = run_cli("table", "--from", "-6", "--to", "-4")
    assert code == 0
    assert text.splitlines() == [
        "-6  Hyperbolic  finite 4  ut 1  cand 0  stein 4/4",
        "-5  Hyperbolic  finite 3  ut 1  cand 0  stein 3/3",
        "-4  Toroidal  infinite  ut -  cand -  stein -",
    ]


def test_table_with_denominator():
    code, text = run_cli("table", "--from", "0", "--to", "3/2", "--denominator", "2")
    assert code == 0
    assert text.splitlines() == [
        "0  Toroidal  infinite  ut -  cand -  stein -",
        "1/2  Hyperbolic  lower-bound 4  ut -  cand -  stein -",
        "1  SmallSeifert  finite 2  ut 2  cand 0  stein 2/2",
        "3/2  Hyperbolic  finite 4  ut 0  cand 4  stein 4/4",
    ]


def test_table_empty_range(capsys):
    code, text = run_cli("table", "--from", "1/3", "--to", "2/5")
    assert code == 2
    assert text == ""
    assert "usage error" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert run_cli()[0] == 2
    assert run_cli("count")[0] == 2
    assert run_cli("count", "abc")[0] == 2
    assert run_cli("nonsense", "1")[0] == 2
    capsys.readouterr()


def test_main_subprocess_roundtrip():
    script = "import sys; from f8tight.cli import main; sys.argv = ['f8tight'] + sys.argv[1:]; main()"
    proc = subprocess.run(
        [sys.executable, "-c", script, "count", "-5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "finite 3\n"

    proc = subprocess.run(
        [sys.executable, "-c", script, "enumerate", "1/2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 3
    assert proc.stderr.startswith("domain error:")

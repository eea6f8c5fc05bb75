"""Release acceptance checks.

Each test exercises one release criterion end to end at full scale and
prints a single ``ACCEPTANCE n (name): PASS|FAIL`` line.  Run with::

    python3 -m pytest tests/test_acceptance.py -v
"""

import json
import subprocess
import sys
import time

import pytest

from pfms import run_suite

TOLERANCE = 1e-9

CANONICAL_GAP_RECORD = {
    "blend_coordinate": 1.0,
    "channel": "positive",
    "combination": 0.55,
    "config": {"fixture": "hull-gap-canonical"},
    "envelope": 0.5,
    "instance": {
        "depth": 1,
        "domain": [0.0, 1.0, 2.0],
        "elements": [
            [[0.6, 0.1, 0.2]],
            [[0.1, 0.2, 0.1]],
            [[0.5, 0.1, 0.3]],
        ],
        "format_version": "1",
    },
    "kind": "hull-membership-gap",
    "level": 1,
    "points": [0.0, 2.0],
    "trial": 0,
    "weights": [0.5, 0.5],
}

CONVEX_DOC = {
    "format_version": "1",
    "domain": [0.0, 1.0, 2.0],
    "depth": 1,
    "elements": [
        [[0.2, 0.1, 0.5]],
        [[0.6, 0.2, 0.1]],
        [[0.3, 0.1, 0.4]],
    ],
}


def report(capsys, number, name, ok):
    with capsys.disabled():
        print(f"ACCEPTANCE {number} ({name}): {'PASS' if ok else 'FAIL'}")


def cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "pfms.cli", *argv],
        capture_output=True,
        text=True,
    )


def test_c1_cut_equivalence(capsys):
    started = time.perf_counter()
    result = run_suite("cut-equivalence", 500, seed=0)
    elapsed = time.perf_counter() - started
    ok = result.failures == () and result.passed and elapsed < 60.0
    report(capsys, 1, "cut-equivalence", ok)
    assert result.failures == ()
    assert elapsed < 60.0


def test_c2_checker_vs_oracle(capsys):
    result = run_suite("oracle-equivalence", 1000, seed=0)
    ok = result.failures == () and result.passed
    report(capsys, 2, "checker-vs-oracle", ok)
    assert result.failures == ()


def test_c3_intersection_closure(capsys):
    pairs = run_suite("intersection-closure", 500, seed=0)
    families = run_suite("family-intersection", 200, seed=0)
    ok = pairs.failures == () and families.failures == ()
    report(capsys, 3, "intersection-closure", ok)
    assert pairs.failures == ()
    assert families.failures == ()


def test_c4_jensen_criterion(capsys):
    result = run_suite("jensen", 300, seed=0)
    ok = result.failures == () and result.passed
    report(capsys, 4, "jensen-criterion", ok)
    assert result.failures == ()


def test_c5_hull_correctness(capsys):
    result = run_suite("hull-properties", 1000, seed=0)
    ok = result.failures == () and result.passed
    report(capsys, 5, "hull-correctness", ok)
    assert result.failures == ()


def test_c6_hull_theorem_discrepancy(capsys):
    result = run_suite("hull-theorem-discrepancy", 10, seed=0)
    ok = (
        result.expect_failures
        and len(result.failures) >= 1
        and result.failures[0] == CANONICAL_GAP_RECORD
        and result.passed
    )
    report(capsys, 6, "hull-theorem-discrepancy", ok)
    assert result.expect_failures
    assert len(result.failures) >= 1
    assert result.failures[0] == CANONICAL_GAP_RECORD
    assert result.passed


def test_c7_algebra_laws(capsys):
    result = run_suite("algebra-laws", 1000, seed=0)
    ok = result.failures == () and result.passed
    report(capsys, 7, "algebra-laws", ok)
    assert result.failures == ()


def test_c8_worked_fixtures_via_cli(capsys, tmp_path):
    path = tmp_path / "instance.json"
    path.write_text(json.dumps(CONVEX_DOC))

    cut_run = cli(
        "cut", str(path), "--r", "0.4", "--s", "0.15", "--t", "0.2", "--level", "1"
    )
    cut_ok = cut_run.returncode == 0
    interval = None
    if cut_ok:
        (interval,) = json.loads(cut_run.stdout)["intervals"]
        cut_ok = (
            abs(interval[0] - 0.75) <= TOLERANCE
            and abs(interval[1] - 4.0 / 3.0) <= TOLERANCE
        )

    eval_run = cli("jensen", str(path), "--points", "0.5", "--weights", "1")
    eval_ok = eval_run.returncode == 0
    grades = None
    if eval_ok:
        grades = json.loads(eval_run.stdout)["grades"]
        eval_ok = all(
            abs(g - want) <= TOLERANCE for g, want in zip(grades, (0.4, 0.15, 0.3))
        )

    report(capsys, 8, "worked-fixtures-cli", cut_ok and eval_ok)
    assert cut_run.returncode == 0, cut_run.stderr
    assert interval[0] == pytest.approx(0.75, abs=TOLERANCE)
    assert interval[1] == pytest.approx(4.0 / 3.0, abs=TOLERANCE)
    assert eval_run.returncode == 0, eval_run.stderr
    assert grades == pytest.approx((0.4, 0.15, 0.3), abs=TOLERANCE)


def test_c9_determinism(capsys):
    from pfms import SUITE_NAMES

    ok = True
    for name in SUITE_NAMES:
        first = run_suite(name, 25, seed=7).to_json()
        second = run_suite(name, 25, seed=7).to_json()
        if first != second:
            ok = False
            break
    report(capsys, 9, "determinism", ok)
    for name in SUITE_NAMES:
        assert run_suite(name, 25, seed=7).to_json() == run_suite(
            name, 25, seed=7
        ).to_json()

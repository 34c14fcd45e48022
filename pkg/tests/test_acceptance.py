"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Expected values are written out here rather than imported from the package.
Set INDGEN_ACCEPT_S7=1 to add the long degree-7 runs.
"""
import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES, analysed, enumerated
from indgen.analyze import diameter_extremes, identify_group, incremental_class_count, symmetry_histogram
from indgen.canon import canonical_rep
from indgen.closure import close, signature
from indgen.indep import PermSet
from indgen.render import all_tables, render
from indgen.search import count_generating_pairs, dead_end_classes, size_distribution

DEGREES = range(2, 7)
RUN_S7 = os.environ.get("INDGEN_ACCEPT_S7") == "1"


def verdict(label: str, checks: list[tuple[str, object, object]]):
    """Record one line for the criterion, then fail with every mismatch listed."""
    bad = [f"{what}: got {got!r}, want {want!r}" for what, got, want in checks if got != want]
    line = f"{'PASS' if not bad else 'FAIL'}  {label} ({len(checks) - len(bad)}/{len(checks)} checks)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not bad, "\n".join(bad)


def PS(texts, n):
    return PermSet.parse(texts, n)


def rep(texts, n):
    return canonical_rep(PS(texts, n))[0]


def test_criterion_1_counts_and_time():
    want = {2: (3, 3, 1), 3: (16, 6, 2), 4: (413, 31, 14), 5: (25346, 258, 178), 6: (6825268, 10294, 8621)}
    checks = []
    for n in DEGREES:
        db, _ = enumerated(n)
        checks.append((f"S{n} totals", (db.total_independent_sets, db.class_count, db.generating_class_count), want[n]))
    small = sum(enumerated(n)[1] for n in range(2, 6))
    checks.append(("n <= 5 under a minute", small < 60, True))
    checks.append(("n = 6 within ten minutes", enumerated(6)[1] < 600, True))
    verdict("criterion 1: independent sets, classes, generating classes", checks)


def test_criterion_2_dead_ends():
    want = {2: 1, 3: 1, 4: 4, 5: 19, 6: 278}
    checks = [(f"S{n} dead ends", dead_end_classes(enumerated(n)[0]), want[n]) for n in DEGREES]
    dead = {r.representative for r in enumerated(4)[0].records if r.dead_end}
    expected = {
        PS(["()"], 4): None,
        rep(["(1,3)", "(1,2,3,4)"], 4): "D4",
        rep(["(1,2)(3,4)", "(1,2,3,4)"], 4): "D4",
        rep(["(1,2)(3,4)", "(1,3)(2,4)"], 4): "Z2xZ2",
    }
    checks.append(("S4 dead-end classes", dead, set(expected)))
    for A, group in expected.items():
        if group is not None:
            got = identify_group(signature(close(A.members, 4))).name
            checks.append((f"<{', '.join(A.cycle_strings())}>", got, group))
    verdict("criterion 2: dead ends", checks)


def test_criterion_3_size_distribution():
    want = {3: {2: 2}, 4: {2: 5, 3: 9}, 5: {2: 31, 3: 138, 4: 9}, 6: {2: 163, 3: 6355, 4: 2059, 5: 44}}
    checks = [(f"S{n} sizes", size_distribution(enumerated(n)[0]), want[n]) for n in range(3, 7)]
    text = render(all_tables({n: analysed(n) for n in range(1, 7)}), "text")
    checks.append(("S4 rendered cell", "5 (35.71%)" in text, True))
    checks.append(("S5 rendered cell", "31 (17.41%)" in text, True))
    verdict("criterion 3: size distribution of generating classes", checks)


def test_criterion_3_optional_pairs8():
    t = time.perf_counter()
    got = count_generating_pairs(8)
    elapsed = time.perf_counter() - t
    verdict(f"criterion 3 (optional): S8 two-element generating classes [{elapsed:.0f}s]",
            [("pairs8", got, 21912)])


def test_criterion_4_diameters():
    want = {2: (1, 1), 3: (2, 3), 4: (4, 7), 5: (5, 14), 6: (7, 18)}
    checks = []
    ext = {n: diameter_extremes(analysed(n)) for n in DEGREES}
    for n in DEGREES:
        checks.append((f"S{n} (min, max)", (ext[n].min, ext[n].max), want[n]))
    checks.append(("S4 slow classes", set(ext[4].argmax), {rep(["(1,2,3)", "(3,4)"], 4)}))
    checks.append(("S5 slow classes", set(ext[5].argmax), {rep(["(1,2,4,3)", "(2,3)(4,5)"], 5)}))
    checks.append(("S6 slow classes", set(ext[6].argmax),
                   {rep(["(2,3)(4,5,6)", "(1,2)(3,4)(5,6)"], 6), rep(["(5,6)", "(1,2,3,4,5,6)"], 6)}))
    verdict("criterion 4: Cayley diameters", checks)


def test_criterion_5_symmetry():
    want = {
        2: {"Z2": 1},
        3: {"trivial": 1, "Z2": 1},
        4: {"trivial": 8, "Z2": 5, "S3": 1},
        5: {"trivial": 150, "Z2": 25, "Z3": 1, "S3": 1, "S4": 1},
        6: {"trivial": 7931, "Z2": 645, "Z2xZ2": 11, "Z3": 6, "D4": 4, "S3": 20, "S4": 2, "S5": 2},
    }
    checks = []
    for n in DEGREES:
        hist = symmetry_histogram(analysed(n))
        checks.append((f"S{n} histogram", hist, want[n]))
        checks.append((f"S{n} row sum", sum(hist.values()), analysed(n).generating_class_count))
    verdict("criterion 5: symmetry groups", checks)


def test_criterion_6_incremental():
    want = {2: 1, 3: 2, 4: 9, 5: 92, 6: 6907}
    verdict("criterion 6: incremental generating classes",
            [(f"S{n}", incremental_class_count(analysed(n)), want[n]) for n in DEGREES])


APPENDIX = [
    ["(3,4)", "(2,3)", "(1,2)"], ["(3,4)", "(2,3)", "(1,2)(3,4)"], ["(3,4)", "(2,3)", "(1,3)"],
    ["(3,4)", "(2,3)", "(1,3)(2,4)"], ["(3,4)", "(2,3,4)", "(1,2)(3,4)"], ["(3,4)", "(2,3,4)", "(1,3,4)"],
    ["(3,4)", "(2,3,4)", "(1,3)(2,4)"], ["(3,4)", "(2,3,4)", "(1,4,3)"], ["(3,4)", "(2,3,4)", "(1,4)(2,3)"],
    ["(3,4)", "(1,2,3)"], ["(3,4)", "(1,2,3,4)"], ["(2,3,4)", "(1,2,3,4)"], ["(2,3,4)", "(1,2,4,3)"],
    ["(1,2,3,4)", "(1,2,4,3)"],
]


def test_criterion_7_appendix():
    listed = [rep(s, 4) for s in APPENDIX]
    found = [r.representative for r in enumerated(4)[0].generating_records()]
    verdict("criterion 7: the 14 generating classes of S4", [
        ("listed sets pairwise non-conjugate", len(set(listed)), 14),
        ("enumerated generating classes", len(found), 14),
        ("one-to-one match", set(listed), set(found)),
    ])


def test_criterion_8_property_suite():
    here = Path(__file__).parent
    suite = sorted(str(p) for p in here.glob("test_*.py") if p.name != "test_acceptance.py")
    t = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", *suite],
                          capture_output=True, text=True, cwd=here.parent)
    elapsed = time.perf_counter() - t
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr[-200:]
    verdict(f"criterion 8: property suite [{tail}; {elapsed:.0f}s]", [
        ("suite exit code", proc.returncode, 0),
        ("under five minutes", elapsed < 300, True),
    ])


@pytest.mark.skipif(not RUN_S7, reason="long run; set INDGEN_ACCEPT_S7=1")
def test_optional_s7():
    db = analysed(7)
    ext = diameter_extremes(db)
    verdict("optional: S7 tables", [
        ("totals", (db.total_independent_sets, db.class_count, db.generating_class_count),
         (750102585, 155305, 126515)),
        ("dead ends", dead_end_classes(db), 17591),
        ("sizes", size_distribution(db), {2: 1576, 3: 67078, 4: 54398, 5: 3415, 6: 48}),
        ("diameters", (ext.min, ext.max), (8, 34)),
        ("symmetry", symmetry_histogram(db),
         {"trivial": 121426, "Z2": 4846, "Z2xZ2": 78, "Z3": 7, "D4": 7, "D6": 7, "S3": 134,
          "S4": 8, "S5": 1, "S6": 1}),
    ])

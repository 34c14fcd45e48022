"""End-to-end cross-checks of an enumeration.

Each check returns a :class:`Check`; :func:`verify` bundles the ones that
apply to a degree into a report.
"""
from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from math import factorial

import numpy as np

from .analyze import analyze_database, folklore, symmetry_group
from .canon import canonical_rep
from .closure import closure_bits
from .indep import PermSet
from .reference import APPENDIX_S4
from .search import ClassDatabase, brute_force_count, enumerate_classes
from .symgroup import get_group


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class Report:
    n: int
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def text(self) -> str:
        lines = [c.line() for c in self.checks]
        lines.append(f"{'PASS' if self.ok else 'FAIL'} S_{self.n}: {sum(c.ok for c in self.checks)}/{len(self.checks)} checks")
        return "\n".join(lines)


def first_difference(a: ClassDatabase, b: ClassDatabase) -> str | None:
    """Description of the first record where two databases differ, or None."""
    if a.degree != b.degree:
        return f"degrees differ: {a.degree} vs {b.degree}"
    for i, (ra, rb) in enumerate(zip(a.records, b.records)):
        if ra != rb:
            return f"record {i}: {ra.representative} vs {rb.representative}" + (
                "" if ra.representative != rb.representative else f" ({_field_diff(ra, rb)})")
    if len(a.records) != len(b.records):
        return f"record counts differ: {len(a.records)} vs {len(b.records)}"
    return None


def _field_diff(ra, rb) -> str:
    diffs = [f.name for f in fields(ra) if getattr(ra, f.name) != getattr(rb, f.name)]
    return "fields " + ", ".join(diffs)


def check_brute_force(db: ClassDatabase) -> Check:
    got = (db.total_independent_sets, db.class_count, db.generating_class_count)
    want = brute_force_count(db.degree)
    return Check("brute-force oracle", got == want, f"search {got}, brute force {want}")


def check_strategies(n: int, db: ClassDatabase | None = None) -> Check:
    a = db if db is not None and db.strategy == "canonical-path" else enumerate_classes(n, "canonical-path")
    b = enumerate_classes(n, "visited-db")
    diff = _strip_analysis_diff(a, b)
    return Check("strategy equivalence", diff is None, diff or f"{b.class_count} identical records")


def _strip_analysis_diff(a: ClassDatabase, b: ClassDatabase) -> str | None:
    def bare(db):
        return ClassDatabase(db.degree, db.strategy, [
            replace(r, symmetry=None, diameter=None, incremental=False, strongly_incremental=False)
            for r in db.records])

    return first_difference(bare(a), bare(b))


def orbit_size(G, ranks) -> int:
    """Number of distinct conjugates of a rank set, by conjugating with every element."""
    if not ranks:
        return 1
    rows = np.sort(G.conj(np.arange(G.order), np.asarray(ranks)), axis=1)
    return len(np.unique(rows, axis=0))


def check_class_sizes(db: ClassDatabase) -> Check:
    """Class sizes recomputed as explicit orbit sizes, summed against the stored total."""
    G = get_group(db.degree)
    bad = [r for r in db.records if orbit_size(G, r.key) != r.class_size]
    total = sum(orbit_size(G, r.key) for r in db.records) if not bad else None
    ok = not bad and total == db.total_independent_sets
    detail = f"sum of orbit sizes {total}" if not bad else f"first bad class {bad[0].representative}"
    return Check("class-size summation", ok, detail)


def check_records(db: ClassDatabase) -> Check:
    """Per-record consistency: canonical, orbit-stabiliser, flags, size bound, prefix closure."""
    n = db.degree
    G = get_group(n)
    keys = {r.key for r in db.records}
    problems = []
    for r in db.records:
        rep, stab = canonical_rep(r.representative)
        if rep != r.representative:
            problems.append(f"{r.representative} is not canonical")
        if stab != r.stabilizer_order or r.class_size * stab != factorial(n):
            problems.append(f"{r.representative}: orbit-stabiliser mismatch")
        c = r.classification
        if c.dead_end != (c.independent and c.maximal and not c.generating):
            problems.append(f"{r.representative}: inconsistent dead-end flag")
        if c.generating and not c.maximal:
            problems.append(f"{r.representative}: generating but not maximal")
        if c.generating != bool(closure_bits(G, r.key).all()):
            problems.append(f"{r.representative}: wrong generating flag")
        if n >= 2 and r.size > n - 1:
            problems.append(f"{r.representative}: exceeds size n - 1")
        if r.key and r.key[:-1] not in keys:
            problems.append(f"{r.representative}: prefix without its largest member is not stored")
        if (r.diameter is not None) != (c.generating and r.symmetry is not None):
            problems.append(f"{r.representative}: diameter presence disagrees with generation")
        if problems:
            break
    return Check("record invariants", not problems, problems[0] if problems else f"{len(db.records)} records")


def check_appendix(db: ClassDatabase) -> Check:
    """The 14 generating classes of S_4 match the reference list one to one."""
    n = 4
    gen = {r.representative for r in db.generating_records()}
    matched: dict[PermSet, PermSet] = {}
    classical = 0
    for texts, known in APPENDIX_S4:
        rep, _ = canonical_rep(PermSet.parse(texts, n))
        if rep in gen and rep not in matched:
            matched[rep] = PermSet.parse(texts, n)
            if known:
                classical += 1
    ok = len(matched) == len(APPENDIX_S4) == len(gen)
    kinds = [canonical_rep(folklore(k, 4))[0] for k in ("chain", "base_point", "cycle_and_transposition")]
    flagged = [s for (s, known) in APPENDIX_S4 if known]
    flags_ok = {canonical_rep(PermSet.parse(s, n))[0] for s in flagged} == set(kinds)
    return Check("appendix classes", ok and flags_ok,
                 f"{len(matched)}/{len(APPENDIX_S4)} matched, {classical} well-known flagged")


def check_symmetry_consistency(db: ClassDatabase) -> Check:
    bad = [r for r in db.generating_records()
           if r.symmetry is None or r.symmetry.order != r.stabilizer_order]
    sample = db.generating_records()[:50]
    bad += [r for r in sample if symmetry_group(r.representative)[0] != r.stabilizer_order]
    return Check("symmetry orders", not bad,
                 "" if not bad else f"first bad class {bad[0].representative}")


def verify(n: int, db: ClassDatabase | None = None) -> Report:
    """Run every applicable check for degree n, optionally against a stored database."""
    report = Report(n)
    fresh = analyze_database(enumerate_classes(n))
    if db is not None:
        diff = first_difference(db, fresh)
        report.checks.append(Check("stored database matches fresh enumeration", diff is None,
                                   diff or f"{db.class_count} records"))
    target = db if db is not None else fresh
    report.checks.append(Check(
        "totals", True,
        f"({target.total_independent_sets}, {target.class_count}, {target.generating_class_count})"))
    if n <= 4:
        report.checks.append(check_brute_force(target))
    if n <= 5:
        report.checks.append(check_strategies(n, fresh))
    report.checks.append(check_class_sizes(target))
    report.checks.append(check_records(target))
    report.checks.append(check_symmetry_consistency(target))
    if n == 4:
        report.checks.append(check_appendix(target))
    return report

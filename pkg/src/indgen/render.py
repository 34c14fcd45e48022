"""Summary tables over a family of class databases, rendered as text, CSV or JSON."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .analyze import LABEL_NAMES, diameter_extremes, incremental_class_count, symmetry_histogram
from .search import ClassDatabase, size_distribution

FORMATS = ("text", "csv", "json")

_N1_COUNTS_NOTE = ("n = 1: the empty set and {()} are both independent when generating as a "
                   "semigroup, giving 2 sets in 2 classes; the published cell reads 1.")
_N1_DEAD_END_NOTE = ("n = 1: {()} generates S_1, so no dead end exists under these conventions; "
                     "the published cell reads 1.")


@dataclass
class Table:
    name: str
    title: str
    header: list[str]
    rows: list[list[str]]
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"name": self.name, "title": self.title, "header": self.header,
                "rows": self.rows, "notes": self.notes}


def _degrees(dbs: dict[int, ClassDatabase]) -> list[int]:
    return sorted(dbs)


def _cell(n: int, value, mark_n1: bool) -> str:
    return f"{value}*" if mark_n1 and n == 1 else str(value)


def counts_table(dbs: dict[int, ClassDatabase]) -> Table:
    ns = _degrees(dbs)
    rows = [
        ["|I(S_n)|"] + [_cell(n, dbs[n].total_independent_sets, True) for n in ns],
        ["classes"] + [_cell(n, dbs[n].class_count, True) for n in ns],
        ["generating classes"] + [_cell(n, dbs[n].generating_class_count, False) for n in ns],
    ]
    notes = ["* " + _N1_COUNTS_NOTE] if 1 in ns else []
    return Table("counts", "Independent sets and their conjugacy classes",
                 ["n"] + [str(n) for n in ns], rows, notes)


def dead_end_table(dbs: dict[int, ClassDatabase]) -> Table:
    ns = _degrees(dbs)
    rows = [["dead ends"] + [_cell(n, dbs[n].dead_end_class_count, True) for n in ns]]
    notes = ["* " + _N1_DEAD_END_NOTE] if 1 in ns else []
    return Table("dead_ends", "Maximal independent sets that do not generate",
                 ["n"] + [str(n) for n in ns], rows, notes)


def percent_truncated(part: int, whole: int) -> str:
    """100 * part / whole cut (not rounded) to two decimals: 31/178 gives "17.41"."""
    hundredths = 10000 * part // whole
    return f"{hundredths // 100}.{hundredths % 100:02d}"


def size_table(dbs: dict[int, ClassDatabase]) -> Table:
    ns = [n for n in _degrees(dbs) if n >= 2]
    dists = {n: size_distribution(dbs[n]) for n in ns}
    sizes = sorted({k for d in dists.values() for k in d})
    rows = []
    for n in ns:
        d = dists[n]
        total = sum(d.values())
        row = [f"S{n}"]
        for k in sizes:
            if k not in d:
                row.append("")
            elif k == 2:
                row.append(f"{d[k]} ({percent_truncated(d[k], total)}%)")
            else:
                row.append(str(d[k]))
        rows.append(row)
    return Table("sizes", "Size distribution of generating classes (share of 2-element classes)",
                 ["size"] + [str(k) for k in sizes], rows)


def diameter_table(dbs: dict[int, ClassDatabase]) -> Table:
    ns = _degrees(dbs)
    ext = {n: diameter_extremes(dbs[n]) for n in ns}
    rows = [["min diameter"] + [str(ext[n].min) for n in ns],
            ["max diameter"] + [str(ext[n].max) for n in ns]]
    return Table("diameters", "Minimal and maximal Cayley diameters of generating classes",
                 ["n"] + [str(n) for n in ns], rows)


def symmetry_table(dbs: dict[int, ClassDatabase]) -> Table:
    ns = [n for n in _degrees(dbs) if n >= 2]
    hists = {n: symmetry_histogram(dbs[n]) for n in ns}
    extra = sorted({k for h in hists.values() for k in h if k not in LABEL_NAMES})
    labels = list(LABEL_NAMES) + extra
    rows = [[f"S{n}"] + [str(hists[n][lab]) if lab in hists[n] else "" for lab in labels] for n in ns]
    return Table("symmetry", "Symmetry groups of generating classes", ["group"] + labels, rows)


def incremental_table(dbs: dict[int, ClassDatabase]) -> Table:
    ns = _degrees(dbs)
    rows = [["incremental"] + [str(incremental_class_count(dbs[n])) for n in ns]]
    return Table("incremental", "Incremental generating classes", ["n"] + [str(n) for n in ns], rows)


def all_tables(dbs: dict[int, ClassDatabase]) -> list[Table]:
    return [counts_table(dbs), dead_end_table(dbs), size_table(dbs), diameter_table(dbs),
            symmetry_table(dbs), incremental_table(dbs)]


def render(tables: list[Table], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([t.as_dict() for t in tables], indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for t in tables:
            buf.write(f"# {t.name}: {t.title}\n")
            w.writerow(t.header)
            w.writerows(t.rows)
            for note in t.notes:
                buf.write(f"# {note}\n")
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    out = []
    for t in tables:
        grid = [t.header] + t.rows
        widths = [max(len(r[i]) for r in grid) for i in range(len(t.header))]
        out.append(t.title)
        for j, r in enumerate(grid):
            out.append("  ".join(c.ljust(widths[0]) if i == 0 else c.rjust(widths[i])
                                 for i, c in enumerate(r)).rstrip())
            if j == 0:
                out.append("  ".join("-" * w for w in widths))
        out.extend(t.notes)
        out.append("")
    return "\n".join(out)

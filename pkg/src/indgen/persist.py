"""Line-oriented JSON storage for class databases.

The first line is a header (degree, strategy, engine version, totals); each
following line is one class record with its representative in cycle
notation.  Files are written to a temporary sibling and renamed into place.
"""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from . import __version__
from .analyze import parse_label
from .indep import PermSet, SetClassification
from .search import ClassDatabase, ClassRecord

FORMAT = "indgen-classdb"


class DatabaseFormatError(ValueError):
    pass


def record_to_dict(n: int, r: ClassRecord) -> dict:
    return {
        "n": n,
        "set": r.representative.cycle_strings(),
        "size": r.size,
        "class_size": r.class_size,
        "generates": r.classification.generating,
        "maximal": r.classification.maximal,
        "dead_end": r.classification.dead_end,
        "incremental": r.incremental,
        "strongly_incremental": r.strongly_incremental,
        "symmetry": None if r.symmetry is None else str(r.symmetry),
        "symmetry_order": r.stabilizer_order,
        "diameter": r.diameter,
    }


def record_from_dict(d: dict) -> ClassRecord:
    n = d["n"]
    rep = PermSet.parse(d["set"], n)
    if len(rep) != d["size"]:
        raise DatabaseFormatError(f"size field disagrees with set {d['set']}")
    cls = SetClassification(True, d["generates"], d["maximal"], d["dead_end"])
    sym = None if d["symmetry"] is None else parse_label(d["symmetry"])
    return ClassRecord(rep, d["class_size"], cls, d["symmetry_order"], sym, d["diameter"],
                       d["incremental"], d["strongly_incremental"])


def dumps_lines(db: ClassDatabase) -> list[str]:
    header = {
        "format": FORMAT,
        "n": db.degree,
        "strategy": db.strategy,
        "engine_version": __version__,
        "totals": db.totals(),
    }
    lines = [json.dumps(header, sort_keys=True)]
    lines += [json.dumps(record_to_dict(db.degree, r), sort_keys=True) for r in db.records]
    return lines


def write_database(db: ClassDatabase, path: str | os.PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=path.name + ".", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write("\n".join(dumps_lines(db)) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def read_header(path: str | os.PathLike) -> dict:
    with open(path) as fh:
        return _header(path, fh.readline())


def _header(path, line: str) -> dict:
    try:
        header = json.loads(line)
    except json.JSONDecodeError:
        header = None
    if not isinstance(header, dict) or header.get("format") != FORMAT:
        raise DatabaseFormatError(f"{path}: not an {FORMAT} file")
    return header


def read_database(path: str | os.PathLike, check_totals: bool = True) -> ClassDatabase:
    """Load a database; with ``check_totals`` the header totals must match the records."""
    with open(path) as fh:
        header = _header(path, fh.readline())
        try:
            records = [record_from_dict(json.loads(line)) for line in fh if line.strip()]
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise DatabaseFormatError(f"{path}: malformed record ({exc})") from None
    n = header["n"]
    for r in records:
        if r.representative.degree != n:
            raise DatabaseFormatError(f"{path}: record of degree {r.representative.degree} in an S_{n} file")
    db = ClassDatabase(n, header["strategy"], records)
    if check_totals and db.totals() != header["totals"]:
        raise DatabaseFormatError(f"{path}: header totals {header['totals']} disagree with records {db.totals()}")
    return db


def cache_path(cache_dir: str | os.PathLike, n: int) -> Path:
    return Path(cache_dir) / f"s{n}-v{__version__}.jsonl"


def default_cache_dir() -> Path:
    env = os.environ.get("INDGEN_CACHE_DIR")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "indgen"

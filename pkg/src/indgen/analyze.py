"""Per-class analyses: Cayley diameter, symmetry group, incremental flags.

Also holds the classical ("folklore") generating sets of S_n and the
extension lemma as a checkable predicate.
"""
from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .canon import stabilizer_ranks
from .closure import GroupSignature, closure_bits, distances, signature_of_ranks
from .indep import PermSet
from .permcore import Perm, check_degree, embed, parse_cycles
from .search import ClassDatabase, ClassRecord
from .symgroup import SymmetricGroup, get_group

FOLKLORE_KINDS = ("all_transpositions", "base_point", "chain", "cycle_and_transposition")


@dataclass(frozen=True)
class GroupLabel:
    """Name of a small group, or ``None`` with the signature when unrecognised."""

    name: str | None
    signature: GroupSignature

    @property
    def order(self) -> int:
        return self.signature.order

    @property
    def identified(self) -> bool:
        return self.name is not None

    def __str__(self) -> str:
        if self.name is not None:
            return self.name
        sig = self.signature
        hist = ",".join(f"{k}:{v}" for k, v in sig.order_histogram)
        return f"unidentified(order={sig.order};abelian={int(sig.abelian)};hist={hist})"


_UNIDENTIFIED_RE = re.compile(r"unidentified\(order=(\d+);abelian=([01]);hist=([\d:,]*)\)")


def _sig(n: int, gens: list[str]) -> GroupSignature:
    G = get_group(n)
    ranks = [G.rank_of(parse_cycles(g, n)) for g in gens]
    return signature_of_ranks(G, np.flatnonzero(closure_bits(G, ranks)))


@lru_cache(maxsize=None)
def reference_signatures() -> dict[str, GroupSignature]:
    """Signatures of the groups that label the symmetry table, built from generators."""
    return {
        "trivial": GroupSignature.make(1, True, {1: 1}),
        "Z2": _sig(2, ["(1,2)"]),
        "Z2xZ2": _sig(4, ["(1,2)(3,4)", "(1,3)(2,4)"]),
        "Z3": _sig(3, ["(1,2,3)"]),
        "D4": _sig(4, ["(1,3)", "(1,2,3,4)"]),
        "D6": _sig(6, ["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"]),
        "S3": _sig(3, ["(1,2)", "(1,2,3)"]),
        "S4": _sig(4, ["(1,2)", "(1,2,3,4)"]),
        "S5": _sig(5, ["(1,2)", "(1,2,3,4,5)"]),
        "S6": _sig(6, ["(1,2)", "(1,2,3,4,5,6)"]),
    }


LABEL_NAMES = ("trivial", "Z2", "Z2xZ2", "Z3", "D4", "D6", "S3", "S4", "S5", "S6")


def identify_group(sig: GroupSignature) -> GroupLabel:
    for name, ref in reference_signatures().items():
        if ref == sig:
            return GroupLabel(name, sig)
    return GroupLabel(None, sig)


def parse_label(text: str) -> GroupLabel:
    refs = reference_signatures()
    if text in refs:
        return GroupLabel(text, refs[text])
    m = _UNIDENTIFIED_RE.fullmatch(text)
    if not m:
        raise ValueError(f"unrecognised group label {text!r}")
    hist = dict(tuple(int(v) for v in kv.split(":")) for kv in m.group(3).split(",") if kv)
    return GroupLabel(None, GroupSignature.make(int(m.group(1)), m.group(2) == "1", hist))


def symmetric_signature(k: int) -> GroupSignature:
    """Signature of S_k (k = 1 gives the trivial group)."""
    if k == 1:
        return GroupSignature.make(1, True, {1: 1})
    return _symmetric_signature(k)


@lru_cache(maxsize=None)
def _symmetric_signature(k: int) -> GroupSignature:
    G = get_group(k)
    return signature_of_ranks(G, np.arange(G.order))


# -- symmetry ------------------------------------------------------------------

def _symmetry_from_stabilizer(G: SymmetricGroup, stab: np.ndarray) -> tuple[int, GroupLabel]:
    group = np.flatnonzero(closure_bits(G, stab))
    return len(group), identify_group(signature_of_ranks(G, group))


def symmetry_group(A: PermSet, n: int | None = None) -> tuple[int, GroupLabel]:
    """Order and label of the setwise conjugation stabiliser {g : A^g = A}."""
    n = A.degree if n is None else n
    G = get_group(n)
    return _symmetry_from_stabilizer(G, stabilizer_ranks(G, A.ranks))


# -- diameter ------------------------------------------------------------------

def _require_generating(G: SymmetricGroup, ranks) -> None:
    if not closure_bits(G, ranks).all():
        raise ValueError("set does not generate the symmetric group")


def diameter(A: PermSet, n: int | None = None) -> int:
    """Largest shortest-word length over S_n, the identity counting as length 0."""
    n = A.degree if n is None else n
    G = get_group(n)
    _require_generating(G, A.ranks)
    return int(distances(G, A.ranks).max())


@dataclass(frozen=True)
class DiameterExtremes:
    min: int
    max: int
    argmin: tuple[PermSet, ...]
    argmax: tuple[PermSet, ...]


def diameter_extremes(db: ClassDatabase) -> DiameterExtremes:
    gen = [r for r in db.records if r.generating]
    if any(r.diameter is None for r in gen):
        raise ValueError("database has generating classes without a diameter; run analyze_database")
    lo = min(r.diameter for r in gen)
    hi = max(r.diameter for r in gen)
    return DiameterExtremes(
        lo, hi,
        tuple(r.representative for r in gen if r.diameter == lo),
        tuple(r.representative for r in gen if r.diameter == hi),
    )


# -- incremental ---------------------------------------------------------------

def _group_signature_without(G: SymmetricGroup, ranks, i: int) -> GroupSignature:
    rest = list(ranks[:i]) + list(ranks[i + 1:])
    if not rest:
        # read as a group here: nothing generates the trivial subgroup
        return GroupSignature.make(1, True, {1: 1})
    return signature_of_ranks(G, np.flatnonzero(closure_bits(G, rest)))


def _removal_matches(A: PermSet, n: int | None) -> list[bool]:
    n = A.degree if n is None else n
    if n < 2:
        raise ValueError("incremental generating sets need n >= 2")
    G = get_group(n)
    _require_generating(G, A.ranks)
    target = symmetric_signature(n - 1)
    return [_group_signature_without(G, A.ranks, i) == target for i in range(len(A))]


def is_incremental(A: PermSet, n: int | None = None) -> bool:
    """Some member's removal leaves a subgroup isomorphic to S_{n-1}."""
    return any(_removal_matches(A, n))


def is_strongly_incremental(A: PermSet, n: int | None = None) -> bool:
    """Every member's removal leaves a subgroup isomorphic to S_{n-1}."""
    return all(_removal_matches(A, n))


def incremental_class_count(db: ClassDatabase) -> int:
    return sum(r.incremental for r in db.records if r.generating)


# -- folklore generating sets ----------------------------------------------------

def folklore(kind: str, n: int) -> PermSet:
    check_degree(n)
    if n < 2:
        raise ValueError("folklore generating sets need n >= 2")

    def p(text: str) -> Perm:
        return parse_cycles(text, n)

    if kind == "all_transpositions":
        perms = [p(f"({i},{j})") for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    elif kind == "base_point":
        perms = [p(f"(1,{k})") for k in range(2, n + 1)]
    elif kind == "chain":
        perms = [p(f"({i},{i + 1})") for i in range(1, n)]
    elif kind == "cycle_and_transposition":
        if n < 3:
            raise ValueError("cycle_and_transposition needs n >= 3")
        perms = [p("(" + ",".join(map(str, range(1, n + 1))) + ")"), p("(1,2)")]
    else:
        raise ValueError(f"unknown folklore kind {kind!r}; expected one of {FOLKLORE_KINDS}")
    return PermSet(n, tuple(perms))


def lemma_extension_holds(A: PermSet, g: Perm) -> bool:
    """Whether A (generating S_{n-1}), embedded in S_n, plus g generates S_n."""
    n = g.degree
    if A.degree != n - 1:
        raise ValueError(f"A must live in S_{n - 1}, got S_{A.degree}")
    if g(n) == n:
        raise ValueError("g must move the point n")
    Gs = get_group(n - 1)
    _require_generating(Gs, A.ranks)
    G = get_group(n)
    ranks = [G.rank_of(embed(a, n)) for a in A] + [G.rank_of(g)]
    return bool(closure_bits(G, ranks).all())


# -- whole-database analysis ------------------------------------------------------

def _matches_signature(G: SymmetricGroup, ranks, target: GroupSignature) -> bool:
    if not ranks:
        # read as a group here: nothing generates the trivial subgroup
        return target.order == 1
    bits = closure_bits(G, ranks, limit=target.order)
    if bits.sum() != target.order:
        return False
    return signature_of_ranks(G, np.flatnonzero(bits)) == target


def analyze_record(G: SymmetricGroup, rec: ClassRecord) -> ClassRecord:
    ranks = rec.representative.ranks
    stab = stabilizer_ranks(G, ranks)
    sym_order, label = _symmetry_from_stabilizer(G, stab)
    if sym_order != rec.stabilizer_order:
        raise AssertionError(f"stabiliser order mismatch for {rec.representative}")
    if not rec.generating:
        return replace(rec, symmetry=label, diameter=None, incremental=False, strongly_incremental=False)
    diam = int(distances(G, ranks).max())
    inc = strong = False
    if G.n >= 2:
        target = symmetric_signature(G.n - 1)
        matches = [_matches_signature(G, ranks[:i] + ranks[i + 1:], target) for i in range(len(ranks))]
        inc, strong = any(matches), all(matches)
    return replace(rec, symmetry=label, diameter=diam, incremental=inc, strongly_incremental=strong)


def _analyze_chunk(args) -> list[ClassRecord]:
    n, records = args
    G = get_group(n)
    return [analyze_record(G, r) for r in records]


def analyze_database(db: ClassDatabase, workers: int = 1) -> ClassDatabase:
    """Fill symmetry, diameter and incremental flags on every record."""
    G = get_group(db.degree)
    if workers == 1:
        records = [analyze_record(G, r) for r in db.records]
    else:
        step = max(1, len(db.records) // (16 * workers))
        chunks = [(db.degree, db.records[i:i + step]) for i in range(0, len(db.records), step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = [r for part in pool.map(_analyze_chunk, chunks) for r in part]
    return ClassDatabase(db.degree, db.strategy, records)


def symmetry_histogram(db: ClassDatabase) -> dict[str, int]:
    """Generating classes counted by the label of their symmetry group."""
    hist: dict[str, int] = {}
    for r in db.generating_records():
        if r.symmetry is None:
            raise ValueError("database has not been analysed")
        key = str(r.symmetry)
        hist[key] = hist.get(key, 0) + 1
    return hist


def signature_collisions() -> list[tuple[str, str]]:
    """Pairs of distinct reference labels that share a signature (should be empty)."""
    refs = list(reference_signatures().items())
    return [(a, b) for i, (a, sa) in enumerate(refs) for b, sb in refs[i + 1:] if sa == sb]

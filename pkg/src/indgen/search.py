"""Enumeration of the conjugacy classes of independent sets of S_n.

Two interchangeable strategies walk the subset lattice depth-first, cutting
the tree at dependent sets:

``canonical-path``
    Children of a canonical set A are A + {x} with x ranked above every
    member of A; a child is kept iff it is independent and is itself the
    key-minimal member of its class.  No visited store is needed.

``visited-db``
    Children of a stored representative are A + {x} for *every* x that keeps
    the set independent; each child is canonicalised and looked up in a
    growing store of representatives.  It does not rely on canonical sets
    being closed under removing their largest member, which makes it an
    independent check on the first strategy.
"""
from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import factorial

import numpy as np

from .canon import extension_canonicity, minimize, stabilizer_ranks
from .closure import closure_bits
from .indep import PermSet, SetClassification
from .lattice import EMPTY, SubgroupLattice
from .permcore import Perm, check_degree, compose, conjugate
from .symgroup import SymmetricGroup, get_group

log = logging.getLogger(__name__)

STRATEGIES = ("canonical-path", "visited-db")
ENUMERATE_MAX_DEGREE = 7


@dataclass(frozen=True)
class ClassRecord:
    representative: PermSet
    class_size: int
    classification: SetClassification
    stabilizer_order: int
    symmetry: object | None = None          # analyze.GroupLabel
    diameter: int | None = None
    incremental: bool = False
    strongly_incremental: bool = False

    @property
    def size(self) -> int:
        return len(self.representative)

    @property
    def key(self) -> tuple[int, ...]:
        return self.representative.ranks

    @property
    def generating(self) -> bool:
        return self.classification.generating

    @property
    def dead_end(self) -> bool:
        return self.classification.dead_end


@dataclass
class ClassDatabase:
    degree: int
    strategy: str
    records: list[ClassRecord] = field(default_factory=list)

    def __post_init__(self):
        self.records.sort(key=lambda r: (r.size, r.key))

    @property
    def total_independent_sets(self) -> int:
        return sum(r.class_size for r in self.records)

    @property
    def class_count(self) -> int:
        return len(self.records)

    @property
    def generating_class_count(self) -> int:
        return sum(r.generating for r in self.records)

    @property
    def dead_end_class_count(self) -> int:
        return sum(r.dead_end for r in self.records)

    @property
    def size_counts(self) -> dict[int, int]:
        return dict(sorted(Counter(r.size for r in self.records).items()))

    def generating_records(self) -> list[ClassRecord]:
        return [r for r in self.records if r.generating]

    def totals(self) -> dict[str, int]:
        return {
            "independent_sets": self.total_independent_sets,
            "classes": self.class_count,
            "generating_classes": self.generating_class_count,
            "dead_end_classes": self.dead_end_class_count,
        }

    def same_records(self, other: "ClassDatabase") -> bool:
        return self.degree == other.degree and self.records == other.records


def size_cap(n: int) -> int | None:
    """Largest independent set size used as a depth cap (n - 1 for n >= 2)."""
    return n - 1 if n >= 2 else None


# -- DFS machinery -------------------------------------------------------------

@dataclass
class _Node:
    key: tuple[int, ...]
    sid: int                       # subgroup generated by the set (0 = empty)
    subs: tuple[int, ...]          # subgroup generated by the set minus each member
    stab_order: int


class _Search:
    def __init__(self, n: int, cap: int | None):
        self.n = n
        self.G = get_group(n)
        self.L = SubgroupLattice(self.G)
        self.cap = cap
        self.found: list[tuple[tuple[int, ...], int, bool, bool]] = []

    def node_from_key(self, key) -> _Node:
        key = tuple(sorted(int(x) for x in key))
        sid = self.L.generated(key)
        subs = tuple(self.L.generated(key[:i] + key[i + 1:]) for i in range(len(key)))
        stab = len(stabilizer_ranks(self.G, key))
        return _Node(key, sid, subs, stab)

    def extensions(self, node: _Node) -> np.ndarray | None:
        """Boolean vector over S_n: does adding x keep the set independent?"""
        if self.cap is not None and len(node.key) >= self.cap:
            return None
        if not node.key:
            return np.ones(self.G.order, dtype=bool)
        rows = [self.L.join_row(s) for s in node.subs]
        M = self.L.members
        ok = ~M[node.sid]
        for row, a in zip(rows, node.key):
            ok &= ~M[row, a]
        return ok

    def record(self, node: _Node, ok: np.ndarray | None) -> None:
        generating = self.L.orders[node.sid] == self.G.order
        maximal = ok is None or not ok.any()
        if generating and not maximal:
            raise AssertionError(f"independent generating set {node.key} is extendable")
        self.found.append((node.key, node.stab_order, generating, maximal))

    def child(self, node: _Node, x: int, stab_order: int) -> _Node:
        subs = tuple(int(self.L.join_row(s)[x]) for s in node.subs) + (node.sid,)
        return _Node(node.key + (x,), int(self.L.join_row(node.sid)[x]), subs, stab_order)

    # canonical-path ------------------------------------------------------

    def canonical_children(self, node: _Node, ok: np.ndarray) -> list[_Node]:
        G = self.G
        if not node.key:
            xs = np.flatnonzero(ok)
            xs = xs[G.mu_of[xs] == xs]
            return [_Node((int(x),), int(self.L.join_row(EMPTY)[x]), (EMPTY,),
                          len(G.centralizer(int(G.type_id[x])))) for x in xs]
        b0 = node.key[0]
        xs = np.flatnonzero(ok)
        xs = xs[(xs > node.key[-1]) & (G.mu_of[xs] >= b0)]
        if node.stab_order > 1 and xs.size:
            # a canonical child's new member is least in its orbit under Stab(A)
            stab = stabilizer_ranks(G, node.key)
            xs = xs[G.conj(stab, xs).min(axis=0) == xs]
        if not xs.size:
            return []
        canon, stabs = extension_canonicity(G, node.key, xs)
        return [self.child(node, int(x), len(stabs[j])) for j, x in enumerate(xs) if canon[j]]

    def walk(self, node: _Node) -> None:
        ok = self.extensions(node)
        self.record(node, ok)
        if ok is None:
            return
        for ch in self.canonical_children(node, ok):
            self.walk(ch)

    # visited-db ------------------------------------------------------------

    def walk_visited(self) -> None:
        G = self.G
        seen: set[tuple[int, ...]] = {()}
        stack = [_Node((), EMPTY, (), G.order)]
        while stack:
            node = stack.pop()
            ok = self.extensions(node)
            self.record(node, ok)
            if ok is None:
                continue
            xs = np.flatnonzero(ok)
            if node.key and node.stab_order > 1:
                # conjugating by Stab(A) maps children onto conjugate children
                stab = stabilizer_ranks(G, node.key)
                xs = xs[G.conj(stab, xs).min(axis=0) == xs]
            elif not node.key:
                xs = np.unique(G.mu_of[xs])
            for x in xs:
                key, hits = minimize(G, node.key + (int(x),))
                if key in seen:
                    continue
                seen.add(key)
                stack.append(_Node(key, self.L.generated(key),
                                   tuple(self.L.generated(key[:i] + key[i + 1:]) for i in range(len(key))),
                                   len(hits)))


def _records(n: int, found) -> list[ClassRecord]:
    N = factorial(n)
    out = []
    for key, stab, generating, maximal in found:
        cls = SetClassification(True, generating, maximal, maximal and not generating)
        out.append(ClassRecord(PermSet.from_ranks(key, n), N // stab, cls, stab))
    return out


def _subtree(args) -> list:
    n, key, cap = args
    s = _Search(n, cap)
    s.walk(s.node_from_key(key))
    return s.found


def enumerate_classes(n: int, strategy: str = "canonical-path", workers: int = 1,
                      cap: int | None | str = "default") -> ClassDatabase:
    """One record per conjugacy class of independent subsets of S_n (the empty set included).

    ``cap`` bounds the set size explored; the default is n - 1 for n >= 2.
    Pass ``cap=None`` for an unbounded search.
    """
    check_degree(n)
    if n > ENUMERATE_MAX_DEGREE:
        raise ValueError(f"degree out of supported range: {n} (enumerate supports 1..{ENUMERATE_MAX_DEGREE})")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if workers < 1:
        raise ValueError("worker count must be >= 1")
    if cap == "default":
        cap = size_cap(n)
    s = _Search(n, cap)
    if strategy == "visited-db":
        s.walk_visited()
    elif workers == 1:
        s.walk(_Node((), EMPTY, (), s.G.order))
    else:
        # expand two levels here, then farm out the disjoint subtrees rooted at pairs
        root = _Node((), EMPTY, (), s.G.order)
        ok = s.extensions(root)
        s.record(root, ok)
        tasks = []
        for single in s.canonical_children(root, ok):
            ok1 = s.extensions(single)
            s.record(single, ok1)
            if ok1 is not None:
                tasks.extend((n, pair.key, cap) for pair in s.canonical_children(single, ok1))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for found in pool.map(_subtree, tasks, chunksize=max(1, len(tasks) // (8 * workers))):
                s.found.extend(found)
    log.info("S_%d: %d classes, %d subgroups interned", n, len(s.found), len(s.L))
    return ClassDatabase(n, strategy, _records(n, s.found))


def dead_end_classes(db: ClassDatabase) -> int:
    return db.dead_end_class_count


def size_distribution(db: ClassDatabase) -> dict[int, int]:
    """Generating classes counted by set size."""
    return dict(sorted(Counter(r.size for r in db.generating_records()).items()))


def two_element_share(db: ClassDatabase) -> float:
    gen = db.generating_class_count
    return 100.0 * size_distribution(db).get(2, 0) / gen if gen else 0.0


# -- brute-force oracle --------------------------------------------------------
# Deliberately shares nothing with the tables above: tuples of images,
# permcore arithmetic, and explicit orbit partitions.

def _naive_closure(gens: list[Perm]) -> set[Perm]:
    out = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in out:
                    out.add(q)
                    nxt.append(q)
        frontier = nxt
    return out


def _naive_independent(A: tuple[Perm, ...]) -> bool:
    return all(a not in _naive_closure([b for b in A if b != a]) for a in A)


@dataclass(frozen=True)
class BruteClass:
    orbit: frozenset[frozenset[Perm]]
    generating: bool
    maximal: bool

    @property
    def size(self) -> int:
        return len(next(iter(self.orbit)))


def brute_force_classes(n: int, max_size: int | None = None) -> tuple[list[frozenset[Perm]], list[BruteClass]]:
    """Every independent subset of S_n up to ``max_size`` and their conjugacy orbits.

    Maximality is judged inside the enumerated family, so it is exact whenever
    ``max_size`` is at least the largest independent size plus one, or when the
    search is capped at n - 1 (where capped sets are maximal by the size bound).
    """
    check_degree(n)
    if n > 4:
        raise ValueError("brute force is limited to n <= 4")
    elements = [Perm(p) for p in _all_images(n)]
    identity = Perm.identity(n)
    if max_size is None:
        max_size = n - 1 if n >= 2 else 0
    indep: set[frozenset[Perm]] = set()
    for k in range(max_size + 1):
        for A in combinations(elements, k):
            if _naive_independent(A):
                indep.add(frozenset(A))
    if n == 1 or max_size < 1:
        if _naive_independent((identity,)):
            indep.add(frozenset([identity]))
    full = len(elements)
    classes = []
    seen: set[frozenset[Perm]] = set()
    for A in sorted(indep, key=lambda s: (len(s), sorted(p.images for p in s))):
        if A in seen:
            continue
        orbit = frozenset(frozenset(conjugate(a, g) for a in A) for g in elements)
        seen |= orbit
        generating = len(A) > 0 and len(_naive_closure(list(A))) == full
        at_cap = n >= 2 and len(A) >= n - 1
        maximal = at_cap or not any(A | {b} in indep for b in elements if b not in A)
        classes.append(BruteClass(orbit, generating, maximal))
    return sorted(indep, key=lambda s: (len(s), sorted(p.images for p in s))), classes


def _all_images(n: int):
    from itertools import permutations

    return [tuple(p) for p in permutations(range(1, n + 1))]


def brute_force_count(n: int) -> tuple[int, int, int]:
    """(independent sets, classes, generating classes) by exhaustive subset testing."""
    sets, classes = brute_force_classes(n)
    return len(sets), len(classes), sum(c.generating for c in classes)


# -- two-element generating sets ----------------------------------------------

def _orbit_min_labels(G: SymmetricGroup, group: np.ndarray) -> np.ndarray:
    """For every element, the least rank in its conjugation orbit under ``group``."""
    gens: list[int] = []
    bits = np.zeros(G.order, dtype=bool)
    bits[G.identity] = True
    for c in group:
        if not bits[c]:
            gens.append(int(c))
            bits = closure_bits(G, gens)
    labels = np.arange(G.order)
    maps = [np.concatenate([G.conj([g], np.arange(s, min(s + 8192, G.order)))[0]
                            for s in range(0, G.order, 8192)]) for g in gens]
    while True:
        new = labels
        for m in maps:
            new = np.minimum(new, new[m])
        if np.array_equal(new, labels):
            return labels
        labels = new


def _transitive(G: SymmetricGroup, a: int, xs: np.ndarray) -> np.ndarray:
    n = G.n
    pa = G.perms[a].astype(np.int64)
    px = G.perms[xs].astype(np.int64)
    reach = np.zeros((len(xs), n), dtype=bool)
    reach[:, 0] = True
    for _ in range(n):
        step = reach.copy()
        step[:, pa] |= reach
        np.put_along_axis(step, px, np.take_along_axis(step, px, axis=1) | reach, axis=1)
        if np.array_equal(step, reach):
            break
        reach = step
    return reach.all(axis=1)


def generates_symmetric(G: SymmetricGroup, gens) -> bool:
    """Whether ``gens`` generate all of S_n.

    For n >= 5 the closure stops early once it holds an odd element and more
    than (n-1)! elements: a subgroup of index below n is A_n or S_n.
    """
    gens = np.unique(np.asarray(gens, dtype=np.int64))
    n = G.n
    if gens.size == 0:
        return False
    odd = bool(G.parity[gens].any())
    if not odd and n >= 2:
        return False
    cutoff = factorial(n - 1) if n >= 5 else G.order - 1
    bits = np.zeros(G.order, dtype=bool)
    bits[gens] = True
    count = len(gens)
    frontier = gens
    while frontier.size:
        if count > cutoff:
            return True
        prod = np.unique(G.mul(frontier[:, None], gens[None, :]).ravel())
        prod = prod[~bits[prod]]
        bits[prod] = True
        count += len(prod)
        frontier = prod
    return count == G.order


def count_generating_pairs(n: int) -> int:
    """Conjugacy classes of independent two-element generating sets of S_n."""
    G = get_group(check_degree(n))
    if n < 3:
        return 0
    total = 0
    for t0 in range(1, len(G.types)):
        mu = int(G.mu[t0])
        cent = G.centralizer(t0)
        xs = np.arange(mu + 1, G.order)
        xs = xs[G.mu_of[xs] >= mu]
        if not G.parity[mu]:
            xs = xs[G.parity[xs] == 1]
        xs = xs[_transitive(G, mu, xs)]
        if not xs.size:
            continue
        labels = _orbit_min_labels(G, cent)
        xs = xs[labels[xs] == xs]
        for x in xs:
            x = int(x)
            if G.type_id[x] == t0:
                key, _ = minimize(G, (mu, x))
                if key != (mu, x):
                    continue
            if generates_symmetric(G, (mu, x)):
                total += 1
    return total

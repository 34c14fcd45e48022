"""Semigroup closure, membership, and Cayley-graph word lengths.

Closures are dense bitmaps over the n! ranks of S_n.  Generation is *as a
semigroup*: ``close(set())`` is empty, and a nonempty set closes to the
group it generates (inverses are powers in a finite group).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .permcore import Perm, check_degree
from .symgroup import SymmetricGroup, get_group


@dataclass(frozen=True, eq=False)
class ElementMask:
    """Membership bitmap over S_n; bit ``i`` is the element of rank ``i``."""

    degree: int
    bits: np.ndarray = field(repr=False)

    def __post_init__(self):
        bits = np.asarray(self.bits, dtype=bool)
        if bits.shape != (get_group(self.degree).order,):
            raise ValueError("mask length does not match n!")
        bits = bits.copy()
        bits.flags.writeable = False
        object.__setattr__(self, "bits", bits)

    def __eq__(self, other):
        if not isinstance(other, ElementMask):
            return NotImplemented
        return self.degree == other.degree and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.degree, np.packbits(self.bits).tobytes()))

    def __len__(self):
        return int(self.bits.sum())

    def __contains__(self, p: Perm) -> bool:
        return contains(self, p)

    def ranks(self) -> np.ndarray:
        return np.flatnonzero(self.bits)

    def perms(self) -> list[Perm]:
        G = get_group(self.degree)
        return [G.perm(int(r)) for r in self.ranks()]

    def issubset(self, other: "ElementMask") -> bool:
        return bool(np.all(other.bits[self.bits]))


@dataclass(frozen=True)
class GroupSignature:
    """Isomorphism invariants of a finite group: order, commutativity, element orders."""

    order: int
    abelian: bool
    order_histogram: tuple[tuple[int, int], ...]

    @classmethod
    def make(cls, order: int, abelian: bool, histogram: Mapping[int, int]) -> "GroupSignature":
        return cls(int(order), bool(abelian), tuple(sorted((int(k), int(v)) for k, v in histogram.items())))

    @property
    def histogram(self) -> dict[int, int]:
        return dict(self.order_histogram)


# -- rank-level kernels -------------------------------------------------------

def closure_bits(G: SymmetricGroup, gens, start=None, limit: int | None = None) -> np.ndarray:
    """Bitmap of the semigroup generated by ``gens`` (rank array).

    ``start`` optionally seeds the result with elements already known to be
    products of the generators (e.g. a subgroup being extended).  With
    ``limit`` the walk stops as soon as more than ``limit`` elements are
    found, returning a partial bitmap.
    """
    gens = np.unique(np.asarray(gens, dtype=np.int64))
    bits = np.zeros(G.order, dtype=bool)
    if gens.size == 0:
        return bits
    if start is not None:
        bits |= start
    bits[gens] = True
    frontier = np.flatnonzero(bits)
    count = len(frontier)
    while frontier.size:
        if limit is not None and count > limit:
            break
        fresh = np.zeros(G.order, dtype=bool)
        fresh[G.mul(frontier[:, None], gens[None, :]).ravel()] = True
        fresh &= ~bits
        frontier = np.flatnonzero(fresh)
        bits |= fresh
        count += len(frontier)
    return bits


def distances(G: SymmetricGroup, gens) -> np.ndarray:
    """BFS word length from the identity (length 0) by right multiplication; -1 if unreached."""
    gens = np.unique(np.asarray(gens, dtype=np.int64))
    if gens.size == 0:
        raise ValueError("word lengths need a nonempty generating set")
    dist = np.full(G.order, -1, dtype=np.int32)
    dist[G.identity] = 0
    frontier = np.array([G.identity])
    d = 0
    while frontier.size:
        d += 1
        fresh = np.zeros(G.order, dtype=bool)
        fresh[G.mul(frontier[:, None], gens[None, :]).ravel()] = True
        fresh &= dist < 0
        frontier = np.flatnonzero(fresh)
        dist[frontier] = d
    return dist


def signature_of_ranks(G: SymmetricGroup, elements) -> GroupSignature:
    elements = np.asarray(elements, dtype=np.int64)
    if elements.size == 0:
        raise ValueError("signature of an empty set")
    hist = Counter(G.element_order[elements].tolist())
    return GroupSignature.make(len(elements), _all_commute(G, elements), hist)


def _all_commute(G: SymmetricGroup, elements: np.ndarray) -> bool:
    for start in range(0, len(elements), 256):
        a = elements[start:start + 256, None]
        if not np.array_equal(G.mul(a, elements[None, :]), G.mul(elements[None, :], a)):
            return False
    return True


def is_closed(G: SymmetricGroup, bits: np.ndarray) -> bool:
    el = np.flatnonzero(bits)
    for start in range(0, len(el), 256):
        if not bits[G.mul(el[start:start + 256, None], el[None, :])].all():
            return False
    return True


# -- public API ---------------------------------------------------------------

def _ranks(perms: Iterable[Perm], n: int) -> np.ndarray:
    G = get_group(n)
    return np.array([G.rank_of(p) for p in perms], dtype=np.int64)


def close(A: Iterable[Perm], n: int) -> ElementMask:
    """The smallest composition-closed set containing ``A``."""
    check_degree(n)
    return ElementMask(n, closure_bits(get_group(n), _ranks(A, n)))


def contains(m: ElementMask, p: Perm) -> bool:
    if p.degree != m.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {m.degree}")
    return bool(m.bits[get_group(m.degree).rank_of(p)])


def order(m: ElementMask) -> int:
    return int(m.bits.sum())


def is_full(m: ElementMask, n: int) -> bool:
    if m.degree != n:
        raise ValueError(f"degree mismatch: {m.degree} vs {n}")
    return bool(m.bits.all())


def word_lengths(A: Iterable[Perm], n: int) -> dict[Perm, int]:
    """Shortest word length of every element of close(A) plus the identity."""
    check_degree(n)
    G = get_group(n)
    dist = distances(G, _ranks(A, n))
    return {G.perm(int(r)): int(dist[r]) for r in np.flatnonzero(dist >= 0)}


def signature(m: ElementMask) -> GroupSignature:
    G = get_group(m.degree)
    if not m.bits.any():
        raise ValueError("signature of an empty mask")
    if not is_closed(G, m.bits):
        raise ValueError("mask is not closed under composition")
    return signature_of_ranks(G, m.ranks())

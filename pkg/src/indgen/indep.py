"""Independence, generation and maximality of permutation sets.

A set A is independent when no member lies in the semigroup generated by
the others.  The empty set is independent (vacuously) and so is ``{()}``,
because ``<{}>`` is empty rather than the trivial group.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .closure import closure_bits
from .permcore import Perm, check_degree, format_cycles, parse_cycles
from .symgroup import get_group


@dataclass(frozen=True)
class PermSet:
    """Duplicate-free set of permutations of a common degree, sorted by rank."""

    degree: int
    members: tuple[Perm, ...] = ()

    def __post_init__(self):
        check_degree(self.degree)
        for p in self.members:
            if p.degree != self.degree:
                raise ValueError(f"degree mismatch: {p} is not in S_{self.degree}")
        ordered = tuple(sorted(set(self.members), key=lambda p: p.images))
        object.__setattr__(self, "members", ordered)

    @classmethod
    def of(cls, perms: Iterable[Perm], n: int) -> "PermSet":
        return cls(n, tuple(perms))

    @classmethod
    def parse(cls, texts: Iterable[str], n: int) -> "PermSet":
        return cls(n, tuple(parse_cycles(t, n) for t in texts))

    @classmethod
    def from_ranks(cls, ranks: Iterable[int], n: int) -> "PermSet":
        G = get_group(n)
        return cls(n, tuple(G.perm(int(r)) for r in ranks))

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        G = get_group(self.degree)
        return tuple(G.rank_of(p) for p in self.members)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, p: Perm) -> bool:
        return p in self.members

    def without(self, p: Perm) -> "PermSet":
        return PermSet(self.degree, tuple(q for q in self.members if q != p))

    def with_(self, p: Perm) -> "PermSet":
        return PermSet(self.degree, self.members + (p,))

    def cycle_strings(self) -> list[str]:
        return [format_cycles(p) for p in self.members]

    def __str__(self) -> str:
        return "{" + ", ".join(self.cycle_strings()) + "}"


@dataclass(frozen=True)
class SetClassification:
    independent: bool
    generating: bool
    maximal: bool
    dead_end: bool


def _check_n(A: PermSet, n: int | None) -> int:
    if n is None:
        return A.degree
    if n != A.degree:
        raise ValueError(f"degree mismatch: set is in S_{A.degree}, asked about S_{n}")
    return n


def independent_ranks(G, ranks) -> bool:
    ranks = list(ranks)
    for i, a in enumerate(ranks):
        rest = ranks[:i] + ranks[i + 1:]
        if closure_bits(G, rest)[a]:
            return False
    return True


def is_independent(A: PermSet) -> bool:
    """True iff no member of ``A`` is generated by the remaining members."""
    return independent_ranks(get_group(A.degree), A.ranks)


def is_generating(A: PermSet, n: int | None = None) -> bool:
    n = _check_n(A, n)
    return bool(closure_bits(get_group(n), A.ranks).all())


def is_maximal_independent(A: PermSet, n: int | None = None) -> bool:
    """True iff no permutation outside ``A`` can be added keeping it independent."""
    n = _check_n(A, n)
    G = get_group(n)
    if not independent_ranks(G, A.ranks):
        raise ValueError(f"{A} is not independent")
    generated = closure_bits(G, A.ranks)
    base = list(A.ranks)
    for b in range(G.order):
        # b in <A> makes A + {b} dependent, b being generated by the rest
        if generated[b]:
            continue
        if independent_ranks(G, base + [b]):
            return False
    return True


def classify(A: PermSet, n: int | None = None) -> SetClassification:
    n = _check_n(A, n)
    G = get_group(n)
    generating = bool(closure_bits(G, A.ranks).all())
    if not independent_ranks(G, A.ranks):
        return SetClassification(False, generating, False, False)
    maximal = generating or is_maximal_independent(A, n)
    return SetClassification(True, generating, maximal, maximal and not generating)

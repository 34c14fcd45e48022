"""Canonical conjugacy-class representatives of permutation sets.

Sets are ordered by their increasing rank sequence (the *set key*), and the
representative of a class is its key-minimal conjugate.  Rather than trying
all n! conjugators, only those that can produce the right first member are
tried: the least member of the minimised conjugate must be the lex-least
element ``mu`` of the cheapest cycle type present, so candidates are the
g with a^g = mu for some member a of that type.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .indep import PermSet
from .permcore import CycleType, Perm, check_degree, conjugate
from .symgroup import SymmetricGroup, get_group

SetKey = tuple[int, ...]

_CHUNK = 1 << 22


@dataclass(frozen=True)
class ConjugatorTable:
    """Per cycle type: its lex-least element mu and mu's centraliser.

    Together with one transporter per element (``e^t = mu``) this yields every
    conjugator sending e to mu, namely ``t * c`` for c in the centraliser.
    """

    degree: int
    mu: dict[CycleType, Perm]
    centralizers: dict[CycleType, np.ndarray]

    def conjugators_to_mu(self, p: Perm) -> np.ndarray:
        G = get_group(self.degree)
        return G.transporters(G.rank_of(p))


@lru_cache(maxsize=None)
def conjugator_table(n: int) -> ConjugatorTable:
    G = get_group(check_degree(n))
    mu = {ct: G.perm(int(G.mu[t])) for t, ct in enumerate(G.types)}
    cents = {ct: G.centralizer(t) for t, ct in enumerate(G.types)}
    return ConjugatorTable(n, mu, cents)


def set_key(A: PermSet) -> SetKey:
    return tuple(A.ranks)


# -- rank-level kernels -------------------------------------------------------

def candidate_ranks(G: SymmetricGroup, ranks) -> np.ndarray:
    ranks = np.asarray(ranks, dtype=np.int64)
    if ranks.size == 0:
        raise ValueError("conjugator candidates need a nonempty set")
    mus = G.mu_of[ranks]
    best = mus.min()
    return np.concatenate([G.transporters(int(a)) for a in ranks[mus == best]])


def minimize(G: SymmetricGroup, ranks) -> tuple[SetKey, np.ndarray]:
    """Key-minimal conjugate of a rank set and every g achieving it."""
    ranks = np.asarray(sorted(ranks), dtype=np.int64)
    if ranks.size == 0:
        return (), np.arange(G.order)
    cands = candidate_ranks(G, ranks)
    rows = np.sort(G.conj(cands, ranks), axis=1)
    best = rows[np.lexsort(rows.T[::-1])[0]]
    hits = np.all(rows == best, axis=1)
    return tuple(int(x) for x in best), cands[hits]


def stabilizer_ranks(G: SymmetricGroup, ranks) -> np.ndarray:
    """Setwise conjugation stabiliser {g : A^g = A}, sorted."""
    ranks = sorted(int(r) for r in ranks)
    if not ranks:
        return np.arange(G.order)
    _, to_rep = minimize(G, ranks)
    # to_rep is the coset Stab(A) * g0
    g0_inv = G.inv[to_rep[0]]
    return np.sort(G.mul(to_rep, np.full(len(to_rep), g0_inv)))


def extension_canonicity(G: SymmetricGroup, A: SetKey, xs: np.ndarray):
    """Which children ``A + {x}`` (x > max A) are their class's key-minimal member.

    ``A`` must be canonical and nonempty, and every x must satisfy
    ``mu_of[x] >= A[0]``.  Returns a boolean array over ``xs`` and, for each
    canonical child, its setwise stabiliser (None elsewhere).
    """
    xs = np.asarray(xs, dtype=np.int64)
    k = len(A)
    b0 = A[0]
    t0 = G.type_id[b0]
    Aarr = np.array(A, dtype=np.int64)
    GA = np.concatenate([G.transporters(a) for a in A if G.type_id[a] == t0])
    CA = G.conj(GA, Aarr).astype(np.int32)
    ok = np.ones(len(xs), dtype=bool)
    stabs: list[np.ndarray | None] = [None] * len(xs)
    step = max(1, _CHUNK // (len(GA) * (k + 1)))
    for s in range(0, len(xs), step):
        xc = xs[s:s + step]
        c = len(xc)
        CX = G.conj(GA, xc).astype(np.int32)
        S = np.empty((len(GA), c, k + 1), dtype=np.int32)
        S[:, :, :k] = CA[:, None, :]
        S[:, :, k] = CX
        S.sort(axis=-1)
        T = np.empty((c, k + 1), dtype=np.int32)
        T[:, :k] = Aarr
        T[:, k] = xc
        d = S - T[None]
        nz = d != 0
        first = nz.argmax(axis=-1)
        lead = np.take_along_axis(d, first[..., None], axis=-1)[..., 0]
        smaller = nz.any(axis=-1) & (lead < 0)
        equal = ~nz.any(axis=-1)
        ok[s:s + c] = ~smaller.any(axis=0)
        for j in np.flatnonzero(ok[s:s + c]):
            stabs[s + j] = GA[equal[:, j]]
    # a child whose new member shares b0's type has extra candidate conjugators
    for j in np.flatnonzero(ok & (G.type_id[xs] == t0)):
        x = int(xs[j])
        B = np.append(Aarr, x)
        Tx = G.transporters(x)
        rows = np.sort(G.conj(Tx, B).astype(np.int32), axis=1)
        d = rows - B[None].astype(np.int32)
        nz = d != 0
        lead = np.take_along_axis(d, nz.argmax(axis=1)[:, None], axis=1)[:, 0]
        if np.any(nz.any(axis=1) & (lead < 0)):
            ok[j] = False
            stabs[j] = None
        else:
            stabs[j] = np.concatenate([stabs[j], Tx[~nz.any(axis=1)]])
    return ok, stabs


# -- public API ---------------------------------------------------------------

def canonical_rep(A: PermSet, n: int | None = None) -> tuple[PermSet, int]:
    """Key-minimal conjugate of ``A`` and the order of its setwise stabiliser."""
    n = A.degree if n is None else n
    G = get_group(n)
    key, hits = minimize(G, A.ranks)
    return PermSet.from_ranks(key, n), len(hits)


def conjugator_candidates(A: PermSet, n: int | None = None,
                          table: ConjugatorTable | None = None) -> set[Perm]:
    n = A.degree if n is None else n
    table = table or conjugator_table(n)
    G = get_group(n)
    if len(A) == 0:
        raise ValueError("conjugator candidates need a nonempty set")
    best = min(table.mu[_type(G, a)].images for a in A)
    out: set[Perm] = set()
    for a in A:
        if table.mu[_type(G, a)].images == best:
            out.update(G.perm(int(g)) for g in table.conjugators_to_mu(a))
    return out


def _type(G: SymmetricGroup, p: Perm) -> CycleType:
    return G.types[G.type_id[G.rank_of(p)]]


def class_size(A: PermSet, n: int | None = None) -> int:
    n = A.degree if n is None else n
    return get_group(n).order // canonical_rep(A, n)[1]


def is_canonical(B: PermSet, n: int | None = None) -> bool:
    n = B.degree if n is None else n
    return canonical_rep(B, n)[0] == B


def setwise_stabilizer(A: PermSet, n: int | None = None) -> list[Perm]:
    n = A.degree if n is None else n
    G = get_group(n)
    return [G.perm(int(g)) for g in stabilizer_ranks(G, A.ranks)]


def conjugate_set(A: PermSet, g: Perm) -> PermSet:
    return PermSet(A.degree, tuple(conjugate(a, g) for a in A))

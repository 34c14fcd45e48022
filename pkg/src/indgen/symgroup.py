"""Dense lookup tables for S_n, indexed by lexicographic rank.

Everything in the engine manipulates permutations as integer ranks in
``0..n!-1``.  This module owns the per-degree tables that make that cheap:
the image array, inverses, element orders, cycle types, the lex-least
element of every cycle type, and a transporter for every element onto that
least element.  The full multiplication and conjugation tables are built
lazily and only for n <= 7; at n = 8 products are computed from images.
"""
from __future__ import annotations

from functools import cached_property, lru_cache
from itertools import permutations
from math import factorial, lcm

import numpy as np

from .permcore import CycleType, Perm, check_degree

TABLE_MAX_DEGREE = 7


def _rank_images(imgs: np.ndarray, n: int) -> np.ndarray:
    """Lehmer rank of each row of a (..., n) array of 0-based images."""
    imgs = np.asarray(imgs)
    r = np.zeros(imgs.shape[:-1], dtype=np.int64)
    for i in range(n - 1):
        smaller = (imgs[..., i + 1:] < imgs[..., i:i + 1]).sum(axis=-1)
        r += smaller * factorial(n - 1 - i)
    return r


class SymmetricGroup:
    """Rank-indexed tables for S_n.  Obtain instances through :func:`get_group`."""

    def __init__(self, n: int):
        self.n = check_degree(n)
        self.order = factorial(n)
        self.dtype = np.int16 if self.order < 2**15 else np.int32
        self.perms = np.array(list(permutations(range(n))), dtype=np.int8).reshape(self.order, n)
        self.identity = 0
        inv = np.empty_like(self.perms)
        np.put_along_axis(inv, self.perms.astype(np.int64),
                          np.broadcast_to(np.arange(n, dtype=np.int8), self.perms.shape), axis=1)
        self.inv = self.rank_images(inv).astype(self.dtype)
        self._classify_elements()

    # -- conversions --------------------------------------------------------

    def rank_images(self, imgs: np.ndarray) -> np.ndarray:
        return _rank_images(imgs, self.n)

    def perm(self, r: int) -> Perm:
        return Perm(tuple(int(x) + 1 for x in self.perms[r]))

    def rank_of(self, p: Perm) -> int:
        if p.degree != self.n:
            raise ValueError(f"degree mismatch: {p.degree} vs {self.n}")
        return int(self.rank_images(np.array(p.images) - 1))

    # -- products -----------------------------------------------------------

    @cached_property
    def mult(self) -> np.ndarray:
        """``mult[a, b]`` is the rank of compose(a, b) (apply a, then b)."""
        if self.n > TABLE_MAX_DEGREE:
            raise MemoryError(f"no dense multiplication table for n = {self.n}")
        N, P = self.order, self.perms
        table = np.empty((N, N), dtype=self.dtype)
        block = max(1, 2**20 // (N * self.n))
        for start in range(0, N, block):
            a = P[start:start + block]
            # result[a, b, x] = P[b, a[x]]
            imgs = P[:, a.astype(np.int64)].transpose(1, 0, 2)
            table[start:start + block] = self.rank_images(imgs)
        return table

    @cached_property
    def conj_table(self) -> np.ndarray:
        """``conj_table[g, e]`` is the rank of g^-1 e g."""
        mult = self.mult
        N = self.order
        table = np.empty((N, N), dtype=self.dtype)
        for g in range(N):
            table[g] = mult[mult[self.inv[g]], g]
        return table

    @property
    def has_tables(self) -> bool:
        return self.n <= TABLE_MAX_DEGREE

    def mul(self, a, b) -> np.ndarray:
        """Elementwise (broadcasting) product of rank arrays, a applied first."""
        a = np.asarray(a)
        b = np.asarray(b)
        if self.has_tables:
            return self.mult[a, b]
        a, b = np.broadcast_arrays(a, b)
        pa = self.perms[a].astype(np.int64)
        pb = self.perms[b]
        return self.rank_images(np.take_along_axis(pb, pa, axis=-1)).astype(self.dtype)

    def conj(self, gs, es) -> np.ndarray:
        """Outer conjugation: result[i, j] = rank of gs[i]^-1 es[j] gs[i]."""
        gs = np.atleast_1d(np.asarray(gs))
        es = np.atleast_1d(np.asarray(es))
        if self.has_tables:
            return self.conj_table[np.ix_(gs, es)]
        g = self.perms[gs].astype(np.int64)           # (G, n)
        e = self.perms[es].astype(np.int64)           # (E, n)
        # result[g[x]] = g[e[x]]
        ge = np.take_along_axis(g[:, None, :].repeat(len(es), 1),
                                np.broadcast_to(e[None], (len(gs),) + e.shape), axis=-1)
        out = np.empty_like(ge)
        gi = np.broadcast_to(g[:, None, :], ge.shape)
        np.put_along_axis(out, gi, ge, axis=-1)
        return self.rank_images(out).astype(self.dtype)

    # -- per-element data ---------------------------------------------------

    def _classify_elements(self) -> None:
        n, N = self.n, self.order
        type_index: dict[tuple[int, ...], int] = {}
        types: list[tuple[int, ...]] = []
        mu: list[int] = []
        mu_cycles: list[dict[int, list[list[int]]]] = []
        type_id = np.empty(N, dtype=np.int16)
        order = np.empty(N, dtype=np.int32)
        parity = np.empty(N, dtype=np.int8)
        transporter_imgs = np.empty((N, n), dtype=np.int8)
        for r in range(N):
            img = self.perms[r]
            seen = [False] * n
            cyc_by_len: dict[int, list[list[int]]] = {}
            for s in range(n):
                if seen[s]:
                    continue
                c = [s]
                seen[s] = True
                x = int(img[s])
                while x != s:
                    c.append(x)
                    seen[x] = True
                    x = int(img[x])
                cyc_by_len.setdefault(len(c), []).append(c)
            part = tuple(sorted((len(c) for cs in cyc_by_len.values() for c in cs), reverse=True))
            t = type_index.get(part)
            if t is None:
                # ranks are scanned in increasing order: first hit is the lex-least element
                t = type_index[part] = len(types)
                types.append(part)
                mu.append(r)
                mu_cycles.append(cyc_by_len)
            type_id[r] = t
            order[r] = lcm(*part)
            parity[r] = (n - sum(len(cs) for cs in cyc_by_len.values())) % 2
            # transporter g maps the points of each cycle of r onto the aligned cycle of mu
            target = mu_cycles[t]
            for length, cs in cyc_by_len.items():
                for c, d in zip(cs, target[length]):
                    for x, y in zip(c, d):
                        transporter_imgs[r, x] = y
        self.types = [CycleType(p) for p in types]
        self.mu = np.array(mu, dtype=np.int64)
        self.type_id = type_id
        self.mu_of = self.mu[type_id]
        self.element_order = order
        self.parity = parity
        self.transporter = self.rank_images(transporter_imgs).astype(self.dtype)

    @lru_cache(maxsize=None)
    def centralizer(self, t: int) -> np.ndarray:
        """Ranks of all g with mu^g = mu for the least element mu of type ``t``."""
        m = int(self.mu[t])
        if self.has_tables:
            return np.flatnonzero(self.conj_table[:, m] == m).astype(self.dtype)
        col = np.concatenate([self.conj(np.arange(s, min(s + 4096, self.order)), [m])[:, 0]
                              for s in range(0, self.order, 4096)])
        return np.flatnonzero(col == m).astype(self.dtype)

    def transporters(self, e: int) -> np.ndarray:
        """All g with e^g equal to the least element of e's cycle type."""
        c = self.centralizer(int(self.type_id[e]))
        return self.mul(np.full(len(c), self.transporter[e]), c)


@lru_cache(maxsize=None)
def get_group(n: int) -> SymmetricGroup:
    return SymmetricGroup(n)

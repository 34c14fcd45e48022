"""Memoised subgroup joins ``<H, x>`` for the independence tests in the search.

Subgroups are interned by their membership bitmap.  Id 0 is reserved for
the empty semigroup ``<{}>`` so that ``join(0, x) = <x>`` needs no special
casing.  A *join row* for subgroup H is the array ``row[x] = id(<H, x>)`` over
all of S_n; it is filled one double coset HxH at a time, since every element
of HxH generates the same subgroup together with H.
"""
from __future__ import annotations

import numpy as np

from .closure import closure_bits, signature_of_ranks, GroupSignature
from .symgroup import SymmetricGroup

EMPTY = 0


class SubgroupLattice:
    def __init__(self, G: SymmetricGroup):
        self.G = G
        self._members = np.zeros((64, G.order), dtype=bool)
        self._index: dict[bytes, int] = {}
        self.orders: list[int] = []
        self.gens: list[tuple[int, ...]] = []
        self._rows: dict[int, np.ndarray] = {}
        self._sigs: dict[int, GroupSignature] = {}
        self.intern(np.zeros(G.order, dtype=bool), ())

    def __len__(self) -> int:
        return len(self.orders)

    @property
    def members(self) -> np.ndarray:
        """``members[sid, x]`` is True iff x lies in subgroup ``sid``."""
        return self._members[:len(self.orders)]

    def intern(self, bits: np.ndarray, gens) -> int:
        key = np.packbits(bits).tobytes()
        sid = self._index.get(key)
        if sid is not None:
            return sid
        sid = len(self.orders)
        if sid == len(self._members):
            grown = np.zeros((2 * sid, self.G.order), dtype=bool)
            grown[:sid] = self._members
            self._members = grown
        self._members[sid] = bits
        self._index[key] = sid
        self.orders.append(int(bits.sum()))
        self.gens.append(tuple(int(g) for g in gens))
        return sid

    def generated(self, ranks) -> int:
        """Id of the subgroup generated by ``ranks`` (0 for the empty set)."""
        ranks = tuple(int(r) for r in ranks)
        return self.intern(closure_bits(self.G, ranks), ranks)

    def join_row(self, sid: int) -> np.ndarray:
        row = self._rows.get(sid)
        if row is None:
            row = self._rows[sid] = self._build_row(sid)
        return row

    def _build_row(self, sid: int) -> np.ndarray:
        G = self.G
        row = np.full(G.order, -1, dtype=np.int32)
        if sid == EMPTY:
            for x in range(G.order):
                if row[x] >= 0:
                    continue
                bits = closure_bits(G, [x])
                cid = self.intern(bits, (x,))
                cyc = np.flatnonzero(bits)
                # generators of the same cyclic group share the join
                same = cyc[G.element_order[cyc] == G.element_order[x]]
                row[same] = cid
            return row
        H = self._members[sid].copy()
        h = np.flatnonzero(H)
        row[h] = sid
        gens = self.gens[sid]
        for x in range(G.order):
            if row[x] >= 0:
                continue
            bits = closure_bits(G, gens + (x,), start=H)
            cid = self.intern(bits, gens + (x,))
            hx = G.mul(h, np.full(len(h), x))
            row[G.mul(hx[:, None], h[None, :]).ravel()] = cid
        return row

    def signature(self, sid: int) -> GroupSignature:
        sig = self._sigs.get(sid)
        if sig is None:
            if sid == EMPTY:
                raise ValueError("the empty semigroup has no group signature")
            sig = self._sigs[sid] = signature_of_ranks(self.G, np.flatnonzero(self._members[sid]))
        return sig

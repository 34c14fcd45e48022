"""Permutation arithmetic on S_n for small n.

A :class:`Perm` stores its image sequence with 1-based points, so
``Perm((2, 1, 3))`` is the transposition (1,2) in S_3.  Composition is
left-to-right: ``compose(p, q)`` applies ``p`` first, then ``q``.  Under this
convention ``conjugate(p, g) = g^-1 p g`` is ``p`` with its points relabelled
through ``g``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial, lcm

MAX_DEGREE = 8

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def check_degree(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"degree must be an int, got {type(n).__name__}")
    if n < 1 or n > MAX_DEGREE:
        raise ValueError(f"degree out of supported range: {n} (expected 1..{MAX_DEGREE})")
    return n


@dataclass(frozen=True, order=False)
class Perm:
    """A permutation of ``{1..n}`` given by its images.

    ``images[i - 1]`` is the image of point ``i``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", imgs)
        check_degree(len(imgs))
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(1, check_degree(n) + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __lt__(self, other: "Perm") -> bool:
        return compare(self, other) < 0

    def __le__(self, other: "Perm") -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: "Perm") -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: "Perm") -> bool:
        return compare(self, other) >= 0

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, 1))

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Perm({format_cycles(self)!r}, n={self.degree})"


@dataclass(frozen=True)
class CycleType:
    """Cycle lengths of a permutation in non-increasing order, fixed points as 1s."""

    partition: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.partition)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.partition)) + "]"


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse disjoint-cycle notation such as ``"(1,2)(3,4)"`` or ``"(1 2 3)"``.

    ``"()"`` (or an empty string) is the identity.  Points not mentioned are
    fixed.
    """
    check_degree(degree)
    s = text.strip()
    images = list(range(1, degree + 1))
    seen: set[int] = set()
    pos = 0
    for m in _CYCLE_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise ValueError(f"malformed cycle notation: {text!r}")
        pos = m.end()
        body = m.group(1).strip()
        if not body:
            continue
        tokens = [t for t in re.split(r"[,\s]+", body) if t]
        try:
            points = [int(t) for t in tokens]
        except ValueError:
            raise ValueError(f"malformed cycle notation: {text!r}") from None
        for pt in points:
            if pt < 1 or pt > degree:
                raise ValueError(f"point {pt} out of range 1..{degree} in {text!r}")
            if pt in seen:
                raise ValueError(f"point {pt} repeated in {text!r}")
            seen.add(pt)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b
    if s[pos:].strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    return Perm(tuple(images))


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Non-trivial cycles, each starting at its least point, sorted by that point."""
    out = []
    seen = set()
    for start in range(1, p.degree + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = p(start)
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p(x)
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def format_cycles(p: Perm) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cs)


def _same_degree(p: Perm, q: Perm) -> None:
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")


def compose(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` first, then ``q``: the result maps x to q(p(x))."""
    _same_degree(p, q)
    return Perm(tuple(q.images[x - 1] for x in p.images))


def inverse(p: Perm) -> Perm:
    inv = [0] * p.degree
    for i, img in enumerate(p.images, 1):
        inv[img - 1] = i
    return Perm(tuple(inv))


def conjugate(p: Perm, g: Perm) -> Perm:
    """``g^-1 p g``; maps g(x) to g(p(x))."""
    _same_degree(p, g)
    images = [0] * p.degree
    for x in range(1, p.degree + 1):
        images[g(x) - 1] = g(p(x))
    return Perm(tuple(images))


def rank(p: Perm) -> int:
    """Position of ``p`` among all n! image sequences in lexicographic order."""
    n = p.degree
    imgs = p.images
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if imgs[j] < imgs[i])
        r += smaller * factorial(n - 1 - i)
    return r


def unrank(i: int, n: int) -> Perm:
    check_degree(n)
    if not 0 <= i < factorial(n):
        raise ValueError(f"index {i} out of range for S_{n}")
    pool = list(range(1, n + 1))
    images = []
    for k in range(n - 1, -1, -1):
        d, i = divmod(i, factorial(k))
        images.append(pool.pop(d))
    return Perm(tuple(images))


def compare(p: Perm, q: Perm) -> int:
    """-1, 0 or 1 by lexicographic order of image sequences."""
    _same_degree(p, q)
    return (p.images > q.images) - (p.images < q.images)


def cycle_type(p: Perm) -> CycleType:
    lengths = [len(c) for c in cycles(p)]
    lengths += [1] * (p.degree - sum(lengths))
    return CycleType(tuple(sorted(lengths, reverse=True)))


def embed(p: Perm, m: int) -> Perm:
    """The same mapping viewed in S_m, fixing degree+1..m."""
    check_degree(m)
    if m < p.degree:
        raise ValueError(f"cannot embed degree {p.degree} into degree {m}")
    return Perm(p.images + tuple(range(p.degree + 1, m + 1)))


def order_of(p: Perm) -> int:
    return lcm(*cycle_type(p).partition)

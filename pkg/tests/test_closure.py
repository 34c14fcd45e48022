import random
from itertools import combinations

import pytest

from indgen.closure import close, contains, is_full, order, signature, word_lengths
from indgen.permcore import Perm, conjugate, inverse, parse_cycles

from oracle import closure as naive_closure, distances as naive_distances, elements


def S(texts, n):
    return [parse_cycles(t, n) for t in texts]


class TestClose:
    def test_empty_is_empty(self):
        m = close([], 3)
        assert order(m) == 0
        assert not contains(m, Perm.identity(3))

    def test_cyclic(self):
        m = close(S(["(1,2,3)"], 3), 3)
        assert set(m.perms()) == set(S(["()", "(1,2,3)", "(1,3,2)"], 3))
        assert order(m) == 3

    def test_dihedral(self):
        assert order(close(S(["(1,3)", "(1,2,3,4)"], 4), 4)) == 8

    def test_contains_identity(self):
        assert contains(close(S(["(1,2)"], 3), 3), Perm.identity(3))

    def test_full(self):
        assert is_full(close(S(["(1,2)", "(1,2,3)"], 3), 3), 3)
        assert not is_full(close(S(["(1,2)"], 3), 3), 3)

    def test_klein(self):
        assert order(close(S(["(1,2)(3,4)", "(1,3)(2,4)"], 4), 4)) == 4

    def test_matches_naive_on_s4_pairs(self):
        G = [Perm(p) for p in elements(4)]
        for a, b in combinations(G, 2):
            want = {Perm(p) for p in naive_closure([a.images, b.images])}
            assert set(close([a, b], 4).perms()) == want

    def test_idempotent_and_monotone(self):
        rng = random.Random(5)
        G = [Perm(p) for p in elements(4)]
        for _ in range(200):
            A = rng.sample(G, rng.randint(0, 3))
            B = A + rng.sample(G, rng.randint(0, 2))
            cA, cB = close(A, 4), close(B, 4)
            assert cA.issubset(cB)
            assert set(close(cA.perms(), 4).perms()) == set(cA.perms())

    def test_identity_and_inverses_all_subsets_of_s3(self):
        G = [Perm(p) for p in elements(3)]
        for k in range(1, 7):
            for A in combinations(G, k):
                m = close(A, 3)
                assert contains(m, Perm.identity(3))
                assert all(contains(m, inverse(a)) for a in A)

    def test_conjugation_equivariance(self):
        rng = random.Random(11)
        G = [Perm(p) for p in elements(4)]
        for a, b in combinations(G, 2):
            g = rng.choice(G)
            lhs = set(close([conjugate(a, g), conjugate(b, g)], 4).perms())
            rhs = {conjugate(p, g) for p in close([a, b], 4).perms()}
            assert lhs == rhs


class TestWordLengths:
    def test_s2(self):
        wl = word_lengths(S(["(1,2)"], 2), 2)
        assert wl == {Perm.identity(2): 0, parse_cycles("(1,2)", 2): 1}

    def test_s3_diameters(self):
        assert max(word_lengths(S(["(1,2,3)", "(2,3)"], 3), 3).values()) == 2
        wl = word_lengths(S(["(1,2)", "(2,3)"], 3), 3)
        assert max(wl.values()) == 3
        assert wl[parse_cycles("(1,3)", 3)] == 3

    def test_matches_naive_bfs(self):
        G = [Perm(p) for p in elements(4)]
        rng = random.Random(2)
        for _ in range(40):
            A = rng.sample(G, 2)
            want = naive_distances([a.images for a in A])
            got = {p.images: d for p, d in word_lengths(A, 4).items()}
            assert got == want

    def test_zero_only_for_identity_and_finite_on_closure(self):
        A = S(["(1,2,3)", "(3,4)"], 4)
        wl = word_lengths(A, 4)
        assert [p for p, d in wl.items() if d == 0] == [Perm.identity(4)]
        assert set(wl) == set(close(A, 4).perms())

    def test_max_invariant_under_conjugation(self):
        G = [Perm(p) for p in elements(4)]
        rng = random.Random(3)
        pairs = [(a, b) for a, b in combinations(G, 2) if is_full(close([a, b], 4), 4)]
        for a, b in rng.sample(pairs, 60):
            g = rng.choice(G)
            d0 = max(word_lengths([a, b], 4).values())
            d1 = max(word_lengths([conjugate(a, g), conjugate(b, g)], 4).values())
            assert d0 == d1

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            word_lengths([], 3)


class TestSignature:
    def test_s3(self):
        sig = signature(close(S(["(1,2)", "(2,3)"], 3), 3))
        assert (sig.order, sig.abelian, sig.histogram) == (6, False, {1: 1, 2: 3, 3: 2})

    def test_d4(self):
        sig = signature(close(S(["(1,3)", "(1,2,3,4)"], 4), 4))
        assert (sig.order, sig.abelian, sig.histogram) == (8, False, {1: 1, 2: 5, 4: 2})

    def test_klein(self):
        sig = signature(close(S(["(1,2)(3,4)", "(1,3)(2,4)"], 4), 4))
        assert (sig.order, sig.abelian, sig.histogram) == (4, True, {1: 1, 2: 3})

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            signature(close([], 3))

from itertools import combinations

import pytest

from indgen.analyze import (
    FOLKLORE_KINDS, GroupLabel, analyze_database, diameter, diameter_extremes, folklore,
    identify_group, incremental_class_count, is_incremental, is_strongly_incremental,
    lemma_extension_holds, parse_label, signature_collisions, symmetry_group, symmetry_histogram,
)
from indgen.canon import canonical_rep, conjugate_set
from indgen.closure import GroupSignature, close, signature
from indgen.indep import PermSet, is_generating, is_independent
from indgen.permcore import Perm, parse_cycles
from indgen.search import enumerate_classes

from oracle import closure as naive_closure, distances as naive_distances, elements, independent


def PS(texts, n):
    return PermSet.parse(texts, n)


class TestSymmetry:
    def test_chain_s3(self):
        order, label = symmetry_group(PS(["(1,2)", "(2,3)"], 3))
        assert (order, label.name) == (2, "Z2")

    def test_trivial(self):
        order, label = symmetry_group(PS(["(1,2)", "(1,2,3)"], 3))
        assert (order, label.name) == (1, "trivial")

    def test_base_point(self):
        order, label = symmetry_group(PS(["(1,2)", "(1,3)", "(1,4)"], 4))
        assert (order, label.name) == (6, "S3")

    @pytest.mark.parametrize("n", [3, 4])
    def test_order_is_stabilizer_order(self, n):
        for r in enumerate_classes(n).records:
            order, _ = symmetry_group(r.representative)
            assert order == r.stabilizer_order
            assert order * r.class_size == len(elements(n))


class TestIdentify:
    def test_klein(self):
        assert identify_group(GroupSignature.make(4, True, {1: 1, 2: 3})).name == "Z2xZ2"

    def test_dihedral_8_not_quaternion(self):
        assert identify_group(GroupSignature.make(8, False, {1: 1, 2: 5, 4: 2})).name == "D4"
        assert identify_group(GroupSignature.make(8, False, {1: 1, 2: 1, 4: 6})).name is None

    def test_dihedral_12_not_a4(self):
        assert identify_group(GroupSignature.make(12, False, {1: 1, 2: 7, 3: 2, 6: 2})).name == "D6"
        assert identify_group(GroupSignature.make(12, False, {1: 1, 2: 3, 3: 8})).name is None

    def test_no_collisions(self):
        assert signature_collisions() == []

    def test_label_round_trip(self):
        a4 = signature(close([parse_cycles("(1,2,3)", 4), parse_cycles("(1,2)(3,4)", 4)], 4))
        for label in (identify_group(a4), parse_label("D4"), parse_label("trivial")):
            assert parse_label(str(label)) == label
        assert str(identify_group(a4)).startswith("unidentified(order=12")
        with pytest.raises(ValueError):
            parse_label("Q8")


class TestDiameter:
    def test_slow_sets(self):
        assert diameter(PS(["(1,2,3)", "(3,4)"], 4)) == 7
        assert diameter(PS(["(1,2,4,3)", "(2,3)(4,5)"], 5)) == 14
        assert diameter(PS(["()"], 1)) == 0

    def test_requires_generating(self):
        with pytest.raises(ValueError):
            diameter(PS(["(1,2)"], 3))

    def test_conjugation_invariance_s4(self):
        G = [Perm(p) for p in elements(4)]
        for r in enumerate_classes(4).generating_records():
            d = diameter(r.representative)
            o = symmetry_group(r.representative)[0]
            for g in G:
                B = conjugate_set(r.representative, g)
                assert diameter(B) == d
                assert symmetry_group(B)[0] == o

    @pytest.mark.parametrize("n,ext", [(3, (2, 3)), (4, (4, 7))])
    def test_extremes(self, n, ext):
        e = diameter_extremes(analyze_database(enumerate_classes(n)))
        assert (e.min, e.max) == ext

    def test_unique_slow_class_s4(self):
        e = diameter_extremes(analyze_database(enumerate_classes(4)))
        assert e.argmax == (canonical_rep(PS(["(1,2,3)", "(3,4)"], 4))[0],)

    @pytest.mark.parametrize("n,max_size", [(3, 6), (4, 4)])
    def test_slow_implies_independent(self, n, max_size):
        G = elements(n)
        best, slow = -1, []
        for k in range(1, max_size + 1):
            for A in combinations(G, k):
                if len(naive_closure(A)) == len(G):
                    d = max(naive_distances(A).values())
                    if d > best:
                        best, slow = d, [A]
                    elif d == best:
                        slow.append(A)
        # the identity sits at distance 0 via the empty word, so adjoining it to
        # a slow set never changes any distance; those are the only exceptions
        e = tuple(range(1, n + 1))
        for A in slow:
            if not independent(A):
                assert e in A and independent([a for a in A if a != e])
        assert any(e not in A for A in slow)


class TestIncremental:
    def test_chain_s3(self):
        A = PS(["(1,2)", "(2,3)"], 3)
        assert is_incremental(A) and is_strongly_incremental(A)

    def test_cycle_and_transposition_s3(self):
        A = PS(["(1,2)", "(1,2,3)"], 3)
        assert is_incremental(A) and not is_strongly_incremental(A)

    def test_not_incremental_s4(self):
        assert not is_incremental(PS(["(2,3,4)", "(1,2,3,4)"], 4))

    @pytest.mark.parametrize("n,count", [(1, 0), (2, 1), (3, 2), (4, 9), (5, 92)])
    def test_counts(self, n, count):
        assert incremental_class_count(analyze_database(enumerate_classes(n))) == count

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_fast_path_agrees_with_definition(self, n):
        for r in analyze_database(enumerate_classes(n)).generating_records():
            assert r.incremental == is_incremental(r.representative)
            assert r.strongly_incremental == is_strongly_incremental(r.representative)


class TestFolklore:
    def test_chain_matches_appendix(self):
        assert canonical_rep(folklore("chain", 4))[0] == canonical_rep(PS(["(3,4)", "(2,3)", "(1,2)"], 4))[0]

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_all_transpositions(self, n):
        A = folklore("all_transpositions", n)
        assert len(A) == n * (n - 1) // 2
        assert is_generating(A) and not is_independent(A)

    def test_base_point_s5(self):
        A = folklore("base_point", 5)
        assert is_generating(A)
        assert symmetry_group(A)[1].name == "S4"

    @pytest.mark.parametrize("kind,n", [
        (k, n) for k in ("chain", "base_point", "cycle_and_transposition")
        for n in range(2 if k != "cycle_and_transposition" else 3, 8)])
    def test_independent_generating(self, kind, n):
        A = folklore(kind, n)
        assert is_independent(A) and is_generating(A)

    def test_unknown_kind(self):
        assert "chain" in FOLKLORE_KINDS
        with pytest.raises(ValueError):
            folklore("star", 4)


class TestLemma:
    def test_examples(self):
        assert lemma_extension_holds(PS(["(1,2)"], 2), parse_cycles("(2,3)", 3))
        assert lemma_extension_holds(PS(["(1,2)", "(2,3)"], 3), parse_cycles("(1,4)(2,3)", 4))
        A = PS(["(1,2)", "(1,2,3)"], 3)
        g = parse_cycles("(1,2,3,4)", 4)
        assert lemma_extension_holds(A, g)
        extended = PermSet(4, tuple(Perm(a.images + (4,)) for a in A) + (g,))
        assert not is_independent(extended)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            lemma_extension_holds(PS(["(1,2)"], 2), parse_cycles("(1,2)", 3))
        with pytest.raises(ValueError):
            lemma_extension_holds(PS(["(1,2)"], 3), parse_cycles("(1,4)", 4))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_exhaustive(self, n):
        moving = [Perm(p) for p in elements(n) if p[n - 1] != n]
        for r in enumerate_classes(n - 1).generating_records():
            assert all(lemma_extension_holds(r.representative, g) for g in moving)


def test_histogram_sums_to_generating_count():
    db = analyze_database(enumerate_classes(4))
    hist = symmetry_histogram(db)
    assert hist == {"trivial": 8, "Z2": 5, "S3": 1}
    assert sum(hist.values()) == db.generating_class_count


def test_parallel_analysis_matches_serial():
    db = enumerate_classes(5)
    assert analyze_database(db, workers=2).records == analyze_database(db).records


def test_group_label_str():
    assert str(GroupLabel("S3", parse_label("S3").signature)) == "S3"

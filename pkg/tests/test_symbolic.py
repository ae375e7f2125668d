"""Symbolically infinite constructions and their refuters."""

import random

import pytest

from effectalg import symbolic as sym
from effectalg.symbolic import Point, RegionPart, SymbolicElement


@pytest.fixture(scope="module")
def not_m():
    return sym.build("omp-not-m")


@pytest.fixture(scope="module")
def unot_sod():
    return sym.build("omp-unot-sod")


@pytest.fixture(scope="module")
def balanced():
    return sym.build("balanced")


@pytest.fixture(scope="module")
def fin_cof():
    return sym.build("finite-cofinite")


@pytest.fixture(scope="module")
def pair_cover():
    return sym.build("chain-finite-lattice")


class TestMembership:
    def test_base_blocks(self, not_m):
        for name in ("empty", "X12", "X23", "X34", "X41", "full"):
            assert not_m.is_member(not_m.base(name))

    def test_finite_corrections_anywhere_in_not_m(self, not_m):
        e = not_m.with_correction("X12", [Point("X1", 3), Point("X4", 1)])
        assert not_m.is_member(e)
        assert not not_m.contains_point(e, Point("X1", 3))
        assert not_m.contains_point(e, Point("X4", 1))

    def test_unot_sod_restricts_corrections(self, unot_sod):
        assert unot_sod.is_member(
            unot_sod.with_correction("X12", [Point("X1", 0), Point("X3", 2)])
        )
        with pytest.raises(ValueError):
            unot_sod.with_correction("X12", [Point("X2", 0)])

    def test_pattern_outside_seed_family_rejected(self, not_m):
        # X1 alone is not a block
        bad = SymbolicElement(
            (
                RegionPart(True, frozenset()),
                RegionPart(False, frozenset()),
                RegionPart(False, frozenset()),
                RegionPart(False, frozenset()),
            )
        )
        assert not not_m.is_member(bad)

    def test_balanced_rule(self, balanced):
        ok = SymbolicElement(
            (RegionPart(False, frozenset({1, 2})), RegionPart(False, frozenset({0, 5})))
        )
        assert balanced.is_member(ok)
        lopsided = SymbolicElement(
            (RegionPart(False, frozenset({1, 2})), RegionPart(False, frozenset({0})))
        )
        assert not balanced.is_member(lopsided)
        mixed = SymbolicElement(
            (RegionPart(True, frozenset({1})), RegionPart(False, frozenset({0})))
        )
        assert not balanced.is_member(mixed)

    def test_pair_cover_shapes(self, pair_cover):
        assert pair_cover.is_member(pair_cover.bottom())
        assert pair_cover.is_member(pair_cover.top())
        assert pair_cover.is_member(pair_cover.pair(4))
        assert pair_cover.is_member(pair_cover.copair(4))
        lone_y = SymbolicElement(
            (RegionPart(False, frozenset()), RegionPart(False, frozenset({0})))
        )
        assert not pair_cover.is_member(lone_y)


class TestOrderAndSum:
    def test_leq_examples(self, not_m):
        x12 = not_m.base("X12")
        singleton = not_m.from_points([Point("X1", 5)])
        assert not_m.leq(singleton, x12)
        assert not_m.leq(singleton, singleton)
        assert not not_m.leq(x12, singleton)

    def test_oplus_of_disjoint_singletons(self, not_m):
        u = not_m.from_points([Point("X1", 0)])
        v = not_m.from_points([Point("X1", 1)])
        s = sym.oplus_sym(not_m, u, v)
        assert s == not_m.from_points([Point("X1", 0), Point("X1", 1)])
        assert sym.oplus_sym(not_m, u, u) is None

    def test_complement_swaps_pattern(self, not_m):
        e = not_m.with_correction("X12", [Point("X1", 7)])
        c = not_m.complement(e)
        assert not_m.is_member(c)
        assert not_m.contains_point(c, Point("X1", 7))
        assert not not_m.contains_point(c, Point("X2", 3))
        assert sym.oplus_sym(not_m, e, c) == not_m.one()

    def test_complement_example(self, not_m):
        # the complement of (X1+X2) corrected by F keeps the correction
        e = not_m.with_correction("X12", [Point("X3", 2)])
        c = not_m.complement(e)
        expected = not_m.with_correction("X34", [Point("X3", 2)])
        assert c == expected

    def test_leq_cofinite(self, fin_cof):
        small = fin_cof.from_points([Point("X", 2)])
        big = SymbolicElement((RegionPart(True, frozenset({3})),))
        assert fin_cof.leq(small, big)
        assert not fin_cof.leq(big, small)
        assert not fin_cof.leq(fin_cof.one(), big)
        assert fin_cof.leq(big, fin_cof.one())

    def test_point_in_difference(self, fin_cof):
        u = SymbolicElement((RegionPart(True, frozenset({0})),))
        v = SymbolicElement((RegionPart(True, frozenset({0, 4})),))
        assert fin_cof.point_in_difference(u, v) == Point("X", 4)
        assert fin_cof.point_in_difference(v, u) is None


class TestNoMaximalRefuter:
    def test_from_empty(self, not_m):
        ref = sym.no_maximal_refuter(not_m, not_m.zero())
        assert ref.kind == "no-maximal"
        assert ref.witness == not_m.from_points([Point("X1", 0)])

    def test_iterated_hundred_times(self, not_m):
        current = not_m.zero()
        b1, b2 = not_m.base("X12"), not_m.base("X41")
        for _ in range(100):
            nxt = sym.no_maximal_refuter(not_m, current).witness
            assert not_m.leq(current, nxt) and current != nxt
            assert not_m.leq(nxt, b1) and not_m.leq(nxt, b2)
            current = nxt
        assert len(current.parts[0].points) == 100

    def test_candidate_outside_cone_rejected(self, not_m):
        with pytest.raises(ValueError, match="outside the lower cone"):
            sym.no_maximal_refuter(not_m, not_m.base("X12"))

    def test_non_member_rejected(self, not_m):
        bad = SymbolicElement(
            (
                RegionPart(True, frozenset()),
                RegionPart(False, frozenset()),
                RegionPart(False, frozenset()),
                RegionPart(False, frozenset()),
            )
        )
        with pytest.raises(ValueError, match="not a member"):
            sym.no_maximal_refuter(not_m, bad)


class TestNotSodWitness:
    def test_pair_and_implication(self, unot_sod):
        ref = sym.not_sod_witness(unot_sod)
        a, b = ref.witness
        assert a == unot_sod.base("X41") and b == unot_sod.base("X12")
        assert not unot_sod.leq(a, b)

    def test_x1_point_pins_both(self, unot_sod):
        a, b = unot_sod.base("X41"), unot_sod.base("X12")
        x = Point("X1", 9)
        assert sym.point_state_value(unot_sod, x, a) == 1
        assert sym.point_state_value(unot_sod, x, b) == 1

    def test_x3_point_vacuous(self, unot_sod):
        a = unot_sod.base("X41")
        assert sym.point_state_value(unot_sod, Point("X3", 2), a) == 0

    def test_rejects_sample_outside_x1_x3(self, unot_sod):
        with pytest.raises(ValueError):
            sym.not_sod_witness(unot_sod, [Point("X2", 0)])


class TestPointStates:
    def test_unitality_spot_checks(self, unot_sod):
        for e in (
            unot_sod.with_correction("empty", [Point("X3", 0)]),
            unot_sod.base("X12"),
            unot_sod.base("X23"),
            unot_sod.one(),
            unot_sod.with_correction("X41", [Point("X1", 2)]),
        ):
            x = sym.unital_point_witness(unot_sod, e)
            assert x is not None
            assert sym.point_state_value(unot_sod, x, e) == 1

    def test_jp_witness_on_sampled_pairs(self, unot_sod, not_m):
        rng = random.Random(5)
        bases = ("empty", "X12", "X23", "X34", "X41", "full")
        for alg, regions in ((unot_sod, ("X1", "X3")), (not_m, ("X1", "X2", "X3", "X4"))):
            for _ in range(50):
                x = Point(rng.choice(regions), rng.randrange(4))
                a = alg.with_correction(
                    rng.choice(bases),
                    [Point(rng.choice(regions), rng.randrange(4)) for _ in range(2)],
                )
                b = alg.with_correction(
                    rng.choice(bases),
                    [Point(rng.choice(regions), rng.randrange(4)) for _ in range(2)],
                )
                if alg.contains_point(a, x) and alg.contains_point(b, x):
                    c = sym.jp_point_witness(alg, x, a, b)
                    assert alg.leq(c, a) and alg.leq(c, b)

    def test_point_states_are_two_valued(self, not_m):
        e = not_m.with_correction("X23", [Point("X2", 1)])
        for i in range(5):
            assert sym.point_state_value(not_m, Point("X2", i), e) in (0, 1)


class TestJpWitnessGrowth:
    def test_minimal_witness_is_the_support(self, not_m):
        for k in (1, 5, 30):
            support = [Point("X1", i) for i in range(k)]
            witness = sym.jp_minimal_witness_for_support(not_m, support)
            assert witness == not_m.from_points(support)
            assert len(witness.parts[0].points) == k

    def test_rejects_points_outside_x1(self, not_m):
        with pytest.raises(ValueError):
            sym.jp_minimal_witness_for_support(not_m, [Point("X2", 0)])


class TestChainRefuter:
    def test_chain_is_inside_the_interval(self, balanced):
        a, b = balanced.bound_a(), balanced.bound_b()
        for n in range(2, 12):
            cn = balanced.chain_element(n)
            assert balanced.leq(cn, a) and balanced.leq(cn, b)
            assert balanced.leq(cn, balanced.chain_element(n + 1))

    def test_chain_element_itself(self, balanced):
        n, ref = sym.chain_no_upper_bound_refuter(balanced, balanced.chain_element(5))
        assert n == 6

    def test_empty_candidate(self, balanced):
        n, _ = sym.chain_no_upper_bound_refuter(balanced, balanced.zero())
        assert n == 2

    def test_cofinite_candidate(self, balanced):
        u = SymbolicElement(
            (RegionPart(True, frozenset({1, 3})), RegionPart(True, frozenset({0, 1})))
        )
        n, _ = sym.chain_no_upper_bound_refuter(balanced, u)
        assert n == 3

    def test_candidate_outside_interval_rejected(self, balanced):
        inside_a_only = SymbolicElement(
            (RegionPart(True, frozenset({1, 2})), RegionPart(True, frozenset({1, 4})))
        )
        with pytest.raises(ValueError, match="outside the interval"):
            sym.chain_no_upper_bound_refuter(balanced, inside_a_only)


class TestNoSupremumRefuter:
    def test_full_set(self, fin_cof):
        smaller, ref = sym.no_supremum_refuter(fin_cof, fin_cof.one())
        assert smaller == SymbolicElement((RegionPart(True, frozenset({1})),))

    def test_iterates(self, fin_cof):
        u = SymbolicElement((RegionPart(True, frozenset({1})),))
        smaller, _ = sym.no_supremum_refuter(fin_cof, u)
        assert smaller == SymbolicElement((RegionPart(True, frozenset({1, 3})),))

    def test_non_upper_bound_rejected(self, fin_cof):
        with pytest.raises(ValueError, match="not an upper bound"):
            sym.no_supremum_refuter(fin_cof, SymbolicElement((RegionPart(True, frozenset({2})),)))
        with pytest.raises(ValueError, match="finite set"):
            sym.no_supremum_refuter(fin_cof, fin_cof.from_points([Point("X", 0)]))


class TestChainBound:
    def test_bound_is_three(self, pair_cover):
        assert sym.chain_bound(pair_cover) == 3

    def test_incomparabilities(self, pair_cover):
        assert not pair_cover.leq(pair_cover.pair(0), pair_cover.copair(1))
        assert not pair_cover.leq(pair_cover.copair(1), pair_cover.pair(0))
        assert pair_cover.leq(pair_cover.pair(2), pair_cover.top())

    def test_singleton_chain_is_bounded(self, pair_cover):
        assert pair_cover.leq(pair_cover.bottom(), pair_cover.bottom())


def test_build_rejects_unknown():
    with pytest.raises(ValueError):
        sym.build("no-such-construction")

"""Structural predicates: principality, lattice data, chain conditions."""

import pytest

from effectalg import census, classify, concrete, core


class TestPrincipal:
    def test_every_concrete_element_principal(self, even4, even6):
        for alg in (even4, even6):
            for a in alg.elements():
                assert classify.is_principal(alg, a)[0]

    def test_c3_middle_not_principal(self, c3):
        ok, pair = classify.is_principal(c3, 1)
        assert not ok and pair == (1, 1)

    def test_zero_always_principal(self, c3, even4):
        for alg in (c3, even4):
            assert classify.is_principal(alg, alg.zero)[0]


class TestOrthoalgebra:
    def test_c3_fails_with_witness(self, c3):
        assert classify.is_orthoalgebra(c3) == (False, 1)

    def test_omps_are_orthoalgebras(self, even4, even6, powerset3):
        for alg in (even4, even6, powerset3):
            assert classify.is_orthoalgebra(alg)[0]

    def test_two_chain(self, two_chain):
        assert classify.is_orthoalgebra(two_chain)[0]


class TestOmp:
    def test_examples(self, c3, even6, powerset3):
        assert classify.is_omp(even6)[0]
        assert classify.is_omp(powerset3)[0]
        ok, witness = classify.is_omp(c3)
        assert not ok and witness == (1, (1, 1))


class TestLattice:
    def test_even6_is_not_a_lattice(self, even6):
        # {a,b} and {b,c} have three minimal upper bounds, so no join
        assert classify.join(even6, 1, 2) is None
        ok, pair = classify.is_lattice(even6)
        assert not ok

    def test_even6_minimal_upper_bounds(self, even6, even6_system):
        a, b = even6_system.blocks[1], even6_system.blocks[2]
        uppers = [
            i
            for i, blk in enumerate(even6_system.blocks)
            if a & ~blk == 0 and b & ~blk == 0
        ]
        minimal = [
            u
            for u in uppers
            if not any(v != u and even6.leq(v, u) for v in uppers)
        ]
        assert len(minimal) == 3

    def test_meet_join_basics(self, even4):
        for a in even4.elements():
            assert classify.meet(even4, a, a) == a
            assert classify.join(even4, a, a) == a
        # incomparable 2-sets meet at the empty set and join at X
        for a in range(1, 7):
            for b in range(1, 7):
                if a != b and not even4.leq(a, b) and not even4.leq(b, a):
                    assert classify.meet(even4, a, b) == 0
                    assert classify.join(even4, a, b) == 7
        assert classify.is_lattice(even4)[0]
        assert classify.is_oml(even4)

    def test_meet_join_are_order_theoretically_correct(self, even4, powerset3, c3):
        for alg in (even4, powerset3, c3):
            for a in alg.elements():
                for b in alg.elements():
                    m = classify.meet(alg, a, b)
                    if m is not None:
                        assert alg.leq(m, a) and alg.leq(m, b)
                        for x in alg.elements():
                            if alg.leq(x, a) and alg.leq(x, b):
                                assert alg.leq(x, m)
                    j = classify.join(alg, a, b)
                    if j is not None:
                        assert alg.leq(a, j) and alg.leq(b, j)
                        for x in alg.elements():
                            if alg.leq(a, x) and alg.leq(b, x):
                                assert alg.leq(j, x)

    def test_c3_chain_is_a_lattice_but_no_oml(self, c3):
        assert classify.is_lattice(c3)[0]
        assert not classify.is_oml(c3)


class TestMaximality:
    def test_cone_of_disjoint_pair(self, even4):
        assert classify.maximal_elements(even4, 1, 2) == (0,)

    def test_lattice_cone_maximum_is_the_meet(self, even4, powerset3):
        for alg in (even4, powerset3):
            for a in alg.elements():
                for b in alg.elements():
                    m = classify.meet(alg, a, b)
                    assert classify.maximal_elements(alg, a, b) == (m,)

    def test_every_finite_algebra_has_maximality(self, c3, even4, even6, powerset3):
        for alg in (c3, even4, even6, powerset3):
            assert classify.has_maximality(alg)[0]


class TestChainConditions:
    def test_all_hold_on_finite_corpus(self, c3, even4, even6, powerset3):
        for alg in (c3, even4, even6, powerset3):
            assert classify.is_chain_finite(alg)
            assert classify.is_orthocomplete(alg)
            assert classify.has_chain_upper_bounds(alg)

    def test_all_hold_on_census(self):
        for n in range(2, 6):
            for alg in census.enumerate_all(n):
                assert classify.is_chain_finite(alg)
                assert classify.is_orthocomplete(alg)
                assert classify.has_chain_upper_bounds(alg)

    def test_chain_heights(self, c3, even4, even6, two_chain):
        assert classify.chain_height(two_chain) == 2
        assert classify.chain_height(c3) == 3
        assert classify.chain_height(even4) == 3
        assert classify.chain_height(even6) == 4

    def test_atom_system_supremum_in_powerset3(self, powerset3):
        # the three atoms are orthogonal; their partial sums exhaust the
        # algebra and the least upper bound is the full set
        atoms = [a for a in powerset3.elements() if len(powerset3.below(a)) == 2]
        assert len(atoms) == 3
        total = atoms[0]
        for a in atoms[1:]:
            total = powerset3.oplus(total, a)
        assert total == powerset3.one

    def test_chain_in_cone_has_upper_bound(self, even4):
        # the chain {0, {a,b}} inside [0,{a,b}] & [0,{a,b}]
        cone = even4.lower_cone(1, 1)
        assert 0 in cone and 1 in cone
        assert even4.leq(0, 1)


class TestReport:
    def test_c3_report(self, c3):
        report = classify.classify(c3)
        assert report.flags["orthoalgebra"] is False
        assert report.flags["maximality"] is True
        assert report.flags["lattice"] is True
        assert report.witnesses["orthoalgebra"] == 1

    def test_even6_report(self, even6):
        flags = classify.classify(even6).flags
        assert flags["omp"] and not flags["lattice"] and not flags["oml"]

    def test_powerset3_all_structural_flags(self, powerset3):
        flags = classify.classify(powerset3).flags
        assert all(
            flags[k]
            for k in (
                "finite",
                "chain_finite",
                "orthocomplete",
                "chain_upper_bounds",
                "maximality",
                "orthoalgebra",
                "omp",
                "lattice",
                "oml",
            )
        )

    def test_no_implication_violations_on_census(self):
        for n in range(2, 6):
            for alg in census.enumerate_all(n):
                report = classify.classify(alg, with_states=True)
                assert report.implication_violations() == []

    def test_report_lines_format(self, c3):
        lines = classify.classify(c3).lines()
        assert "orthoalgebra=false" in lines
        assert "maximality=true" in lines
        assert any(line.startswith("witness omp:") for line in lines)

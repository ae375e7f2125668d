"""State theory: exact values, enumeration, LP decisions."""

import random
from fractions import Fraction as F
from itertools import product

import pytest

from effectalg import census, classify, concrete, core, states


def brute_force_two_valued(alg):
    """Independent oracle: try every {0,1} vector."""
    found = []
    for bits in product((0, 1), repeat=alg.n):
        vals = [F(b) for b in bits]
        if states.is_state(alg, vals)[0]:
            found.append(tuple(vals))
    return found


class TestIsState:
    def test_point_state_is_state(self, even4, point_states4):
        for s in point_states4:
            ok, why = states.is_state(even4, s)
            assert ok, why

    def test_all_zero_rejected_at_one(self, even4):
        ok, why = states.is_state(even4, [F(0)] * 8)
        assert not ok and "s(one)" in why

    def test_c3_forced_half(self, c3):
        assert states.is_state(c3, [F(0), F(1, 2), F(1)])[0]
        ok, why = states.is_state(c3, [F(0), F(1, 3), F(1)])
        assert not ok

    def test_out_of_range_value(self, c3):
        ok, why = states.is_state(c3, [F(0), F(3, 2), F(1)])
        assert not ok and "outside" in why


class TestTwoValued:
    def test_even4_has_eight(self, even4, point_states4):
        found = states.two_valued_states(even4)
        assert len(found) == 8
        assert {tuple(s.values) for s in found} == set(brute_force_two_valued(even4))
        assert sum(1 for p in point_states4 if p in found) == 4

    def test_c3_has_none(self, c3):
        assert states.two_valued_states(c3) == []
        assert brute_force_two_valued(c3) == []

    def test_powerset2_has_two(self):
        alg = concrete.to_algebra(concrete.powerset(2))
        found = states.two_valued_states(alg)
        assert len(found) == 2
        assert {tuple(s.values) for s in found} == set(brute_force_two_valued(alg))

    def test_matches_brute_force_on_census(self):
        for n in range(2, 6):
            for alg in census.enumerate_all(n):
                fast = {tuple(s.values) for s in states.two_valued_states(alg)}
                assert fast == set(brute_force_two_valued(alg))

    def test_deterministic_lexicographic_order(self, even4):
        found = states.two_valued_states(even4)
        as_tuples = [tuple(s.values) for s in found]
        assert as_tuples == sorted(as_tuples)
        assert found == states.two_valued_states(even4)


class TestLP:
    def test_pin_forced_element_infeasible(self, c3):
        assert states.lp_feasible(c3, [(1, F(1))]) is None

    def test_feasible_whenever_two_valued_exists(self, even4, powerset3):
        for alg in (even4, powerset3):
            assert states.lp_feasible(alg) is not None

    def test_feasible_without_any_two_valued_state(self, c3):
        witness = states.lp_feasible(c3)
        assert witness is not None and witness[1] == F(1, 2)

    def test_minimize_with_pin(self, even4):
        value, witness = states.lp_extremize(even4, 1, "min", [(4, F(1))])
        assert value == 0
        assert witness[4] == 1 and witness[1] == 0

    def test_extremize_exact_fraction(self, c3):
        value, witness = states.lp_extremize(c3, 1, "max")
        assert value == F(1, 2) and witness[1] == F(1, 2)

    def test_agrees_with_two_valued_on_concrete(self):
        # the LP face s(a)=1 is nonempty exactly when some two-valued state
        # pins a, on every concrete OMP of the corpus
        for system in (
            concrete.even_subsets(4),
            concrete.even_subsets(6),
            concrete.powerset(2),
            concrete.powerset(3),
            concrete.closure(4, [0b0011]),
        ):
            alg = concrete.to_algebra(system)
            two_valued = states.two_valued_states(alg)
            for a in alg.elements():
                if a == alg.zero:
                    continue
                lp = states.lp_feasible(alg, [(a, F(1))]) is not None
                enumerated = any(s[a] == 1 for s in two_valued)
                assert lp == enumerated, f"disagreement at element {a}"

    def test_query_wrapper(self, c3):
        assert states.run_query(c3, states.StateQuery(pins=((1, F(1)),))) is None
        value, _ = states.run_query(c3, states.StateQuery(objective=1, sense="max"))
        assert value == F(1, 2)


class TestUnital:
    def test_sabc_unital(self, even4, point_states4):
        ok, _ = states.unital_set_check(even4, point_states4[:3])
        assert ok

    def test_empty_set_not_unital(self, even4):
        ok, elem = states.unital_set_check(even4, [])
        assert not ok and elem == 1

    def test_single_point_state_fails(self, even4, point_states4):
        ok, elem = states.unital_set_check(even4, [point_states4[0]])
        assert not ok and elem == 3  # {b,c} avoids the point a

    def test_full_space(self, c3, powerset3, even6):
        assert states.unital_full_check(c3) == (False, 1)
        assert states.unital_full_check(powerset3) == (True, None)
        assert states.unital_full_check(even6) == (True, None)


class TestSOD:
    def test_sabc_not_sod_with_witness(self, even4, point_states4):
        ok, pair = states.sod_set_check(even4, point_states4[:3])
        assert not ok and pair == (4, 1)  # ({a,d}, {a,b})

    def test_all_point_states_sod(self, even4, point_states4):
        assert states.sod_set_check(even4, point_states4) == (True, None)

    def test_full_space_c3(self, c3):
        ok, _ = states.sod_full_check(c3)
        assert not ok

    def test_sod_implies_unital_on_computed_sets(self, even4, powerset3, point_states4):
        rng = random.Random(7)
        for alg, pool in ((even4, point_states4), (powerset3, states.two_valued_states(powerset3))):
            for _ in range(25):
                subset = [s for s in pool if rng.random() < 0.6]
                if states.sod_set_check(alg, subset)[0]:
                    assert states.unital_set_check(alg, subset)[0]

    def test_sod_full_implies_omp_and_unital(self):
        for n in range(2, 6):
            for alg in census.enumerate_all(n):
                if states.sod_full_check(alg)[0]:
                    assert classify.is_omp(alg)[0]
                    assert states.unital_full_check(alg)[0]


class TestJauchPiron:
    def test_point_state_fails_on_even4(self, even4, point_states4):
        ok, pair = states.jp_state_check(even4, point_states4[0])
        assert not ok and pair == (1, 2)  # ({a,b}, {a,c})

    def test_every_two_valued_on_boolean_is_jp(self, powerset3):
        for s in states.two_valued_states(powerset3):
            assert states.jp_state_check(powerset3, s)[0]

    def test_unique_c3_state_is_jp(self, c3):
        s = states.State((F(0), F(1, 2), F(1)))
        assert states.jp_state_check(c3, s)[0]

    def test_algebra_check(self, c3, even4, powerset3):
        assert states.jp_algebra_check(powerset3)[0]
        assert states.jp_algebra_check(c3)[0]
        ok, failure = states.jp_algebra_check(even4)
        assert not ok
        # the returned state is a verifiable counterexample
        assert states.is_state(even4, failure.state)[0]
        bad, pair = states.jp_state_check(even4, failure.state)
        assert not bad and pair is not None

    def test_unital_jp_algebras_are_oml(self):
        for n in range(2, 6):
            for alg in census.enumerate_all(n):
                if states.jp_algebra_check(alg)[0] and states.unital_full_check(alg)[0]:
                    assert classify.is_oml(alg)

    def test_unital_full_implies_orthoalgebra(self):
        for n in range(2, 6):
            for alg in census.enumerate_all(n):
                if states.unital_full_check(alg)[0]:
                    assert classify.is_orthoalgebra(alg)[0]


class TestConvexCombine:
    def test_half_half(self, even4, point_states4):
        s = states.convex_combine(point_states4[:2], [F(1, 2), F(1, 2)])
        assert s[1] == 1  # both points lie in {a,b}
        assert s[2] == F(1, 2)
        assert states.is_state(even4, s)[0]

    def test_singleton_combination(self, point_states4):
        assert states.convex_combine([point_states4[0]], [F(1)]) == point_states4[0]

    def test_uniform_mix_of_all_points(self, even4, point_states4):
        s = states.convex_combine(point_states4, [F(1, 4)] * 4)
        for e in range(1, 7):
            assert s[e] == F(1, 2)
        assert states.is_state(even4, s)[0]

    def test_weight_validation(self, point_states4):
        with pytest.raises(ValueError):
            states.convex_combine(point_states4[:2], [F(1, 2), F(1, 3)])
        with pytest.raises(ValueError):
            states.convex_combine(point_states4[:2], [F(3, 2), F(-1, 2)])
        with pytest.raises(ValueError):
            states.convex_combine([], [])


class TestStFormat:
    def test_derivation_of_omitted_values(self, even4, point_states4):
        named = states.parse_states("state s_a\nval 1 1\nval 2 1\nval 4 1\n", even4)
        assert named[0] == ("s_a", point_states4[0])

    def test_missing_value_is_an_error(self, even4):
        with pytest.raises(core.ParseError, match="neither given nor derivable"):
            states.parse_states("state s\nval 1 1\n", even4)

    def test_conflicting_values(self, even4):
        with pytest.raises(core.ParseError, match="conflicting"):
            states.parse_states("state s\nval 1 1\nval 1 0\n", even4)

    def test_fractional_values(self, c3):
        named = states.parse_states("state mid\nval 1 1/2\n", c3)
        assert named[0][1] == states.State((F(0), F(1, 2), F(1)))

    def test_load_requires_valid(self, tmp_path, even4):
        path = tmp_path / "bad.st"
        path.write_text("state s\nval 1 1\nval 2 1\nval 4 1\nval 3 1\n")
        with pytest.raises(core.ParseError, match="not a state"):
            states.load_states(str(path), even4)

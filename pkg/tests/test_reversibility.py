"""Classification, brute-force verdicts, witnesses, and the collision families."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qeca import (FIXED, PERIODIC, REVERSIBLE_RULES, CapacityError,
                  Configuration, ReversibilityVerdict, UnsupportedRuleError,
                  is_reversible_bruteforce, proof_family_witness,
                  reversibility_predicate, scan_all_rules, step)
from qeca.reversibility import smallest_collision

BCS = (PERIODIC, FIXED)


class TestPredicate:
    @pytest.mark.parametrize("rule,n,bc,expected", [
        (170, 8, PERIODIC, True),
        (150, 9, PERIODIC, False),   # 9 % 3 == 0
        (60, 11, FIXED, True),
        (204, 17, FIXED, True),
        (51, 4, PERIODIC, True),
        (90, 7, FIXED, False),       # odd n
        (90, 8, FIXED, True),
        (166, 6, PERIODIC, False),   # even n
        (166, 7, PERIODIC, True),
        (105, 5, FIXED, False),      # 5 % 3 == 2
        (105, 6, FIXED, True),
        (110, 9, PERIODIC, False),
        (170, 9, FIXED, False),
    ])
    def test_table_entries(self, rule, n, bc, expected):
        assert reversibility_predicate(rule, n, bc) is expected

    def test_rejects_tiny_n(self):
        with pytest.raises(ValueError):
            reversibility_predicate(90, 2, FIXED)

    def test_exactly_22_rules_ever_reversible(self):
        ever = {rule for rule in range(256) for n in (4, 5, 6, 7) for bc in BCS
                if reversibility_predicate(rule, n, bc)}
        assert ever == REVERSIBLE_RULES

    def test_agrees_with_bruteforce_for_n_4_to_14(self):
        for n in range(4, 15):
            for bc in BCS:
                for rule in range(256):
                    brute = is_reversible_bruteforce(rule, n, bc).reversible
                    assert brute == reversibility_predicate(rule, n, bc), \
                        (rule, n, bc)


class TestBruteForce:
    def test_rule_204_reversible(self):
        verdict = is_reversible_bruteforce(204, 5, FIXED)
        assert verdict.reversible and verdict.witness is None

    def test_rule_110_irreversible_with_valid_witness(self):
        verdict = is_reversible_bruteforce(110, 6, PERIODIC)
        assert not verdict.reversible
        first, second = verdict.witness
        assert first != second
        assert step(first, 110, PERIODIC) == step(second, 110, PERIODIC)

    def test_rule_90_fixed_witness_is_the_known_pair(self):
        verdict = is_reversible_bruteforce(90, 7, FIXED)
        assert verdict.witness == (Configuration((0,) * 7),
                                   Configuration((1, 0, 1, 0, 1, 0, 1)))

    def test_witness_is_lexicographically_smallest(self):
        # independent oracle: enumerate every colliding pair and minimize
        for rule, n, bc in [(110, 5, PERIODIC), (30, 6, FIXED), (90, 5, FIXED),
                            (166, 6, PERIODIC), (150, 6, PERIODIC)]:
            outputs = [step(c, rule, bc).to_int()
                       for c in (Configuration.from_int(k, n) for k in range(1 << n))]
            pairs = [(x, y) for x in range(1 << n) for y in range(x + 1, 1 << n)
                     if outputs[x] == outputs[y]]
            verdict = is_reversible_bruteforce(rule, n, bc)
            got = (verdict.witness[0].to_int(), verdict.witness[1].to_int())
            assert got == min(pairs)

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            is_reversible_bruteforce(90, 25, FIXED)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            is_reversible_bruteforce(90, 0, FIXED)

    @settings(max_examples=40)
    @given(rule=st.integers(0, 255), n=st.integers(1, 10), periodic=st.booleans())
    def test_witness_soundness(self, rule, n, periodic):
        bc = PERIODIC if periodic else FIXED
        verdict = is_reversible_bruteforce(rule, n, bc)
        if verdict.reversible:
            assert verdict.witness is None
        else:
            first, second = verdict.witness
            assert first != second
            assert step(first, rule, bc) == step(second, rule, bc)

    def test_verdict_invariants_enforced(self):
        with pytest.raises(ValueError):
            ReversibilityVerdict(90, 4, FIXED, True,
                                 (Configuration((0,)), Configuration((1,))))
        with pytest.raises(ValueError):
            ReversibilityVerdict(90, 4, FIXED, False, None)


def test_smallest_collision_none_for_permutation():
    assert smallest_collision(np.array([2, 0, 1, 3], dtype=np.uint32)) is None


def test_smallest_collision_prefers_smallest_first_element():
    # first repeat while scanning is (1, 2), but (0, 3) is lexicographically
    # smaller; the exact minimum is required
    outputs = np.array([7, 5, 5, 7], dtype=np.uint32)
    assert smallest_collision(outputs) == (0, 3)


class TestProofFamilies:
    @pytest.mark.parametrize("rule,bc,ns", [
        (90, FIXED, range(3, 21, 2)),
        (150, PERIODIC, range(3, 21, 3)),
        (150, FIXED, range(2, 21, 3)),
        (166, PERIODIC, range(2, 21, 2)),
    ])
    def test_families_self_validate(self, rule, bc, ns):
        for n in ns:
            first, second = proof_family_witness(rule, bc, n)
            assert first != second
            assert step(first, rule, bc) == step(second, rule, bc)

    def test_rule_150_periodic_example(self):
        pair = proof_family_witness(150, PERIODIC, 6)
        assert pair == (Configuration((0,) * 6), Configuration((1, 1, 0, 1, 1, 0)))
        assert step(pair[1], 150, PERIODIC) == Configuration((0,) * 6)

    def test_rule_166_periodic_example(self):
        pair = proof_family_witness(166, PERIODIC, 4)
        assert pair == (Configuration((1, 0, 1, 0)), Configuration((0, 1, 0, 1)))
        assert step(pair[0], 166, PERIODIC) == Configuration((1, 1, 1, 1))

    def test_rule_150_fixed_example(self):
        pair = proof_family_witness(150, FIXED, 5)
        assert pair == (Configuration((0,) * 5), Configuration((1, 1, 0, 1, 1)))
        assert step(pair[1], 150, FIXED) == Configuration((0,) * 5)

    def test_rule_90_fixed_family(self):
        pair = proof_family_witness(90, FIXED, 7)
        assert pair == (Configuration((0,) * 7), Configuration((1, 0, 1, 0, 1, 0, 1)))

    @pytest.mark.parametrize("rule,bc,n", [
        (90, FIXED, 8),         # even n: 90 is reversible there
        (90, PERIODIC, 7),
        (150, PERIODIC, 7),     # 7 % 3 == 1: reversible
        (150, FIXED, 6),
        (166, PERIODIC, 5),
        (110, PERIODIC, 6),     # no family for rules outside the four
    ])
    def test_unsupported_combinations(self, rule, bc, n):
        with pytest.raises(UnsupportedRuleError):
            proof_family_witness(rule, bc, n)


class TestScan:
    def test_scan_4_to_12_finds_exactly_the_22_rules(self):
        report = scan_all_rules(4, 12)
        assert report.reversible_rules() == sorted(REVERSIBLE_RULES)

    def test_scan_single_n_even(self):
        report = scan_all_rules(4, 4)
        entries = {(n, bc): rev for n, bc, rev in report.cells[90]}
        assert entries[(4, FIXED)] is True
        entries165 = {(n, bc): rev for n, bc, rev in report.cells[165]}
        assert entries165[(4, FIXED)] is True

    def test_scan_rule_166_even_n_irreversible(self):
        report = scan_all_rules(6, 6)
        entries = {(n, bc): rev for n, bc, rev in report.cells[166]}
        assert entries[(6, PERIODIC)] is False

    def test_covers_every_cell(self):
        report = scan_all_rules(4, 6)
        assert set(report.cells) == set(range(256))
        for entries in report.cells.values():
            assert [(n, bc) for n, bc, _ in entries] == [
                (n, bc) for n in (4, 5, 6) for bc in BCS]

    def test_matches_predicate_on_every_cell(self):
        report = scan_all_rules(4, 8)
        for rule, entries in report.cells.items():
            for n, bc, rev in entries:
                assert rev == reversibility_predicate(rule, n, bc)

    def test_threads_give_identical_report(self):
        sequential = scan_all_rules(4, 7)
        threaded = scan_all_rules(4, 7, threads=4)
        assert sequential.cells == threaded.cells

    @pytest.mark.parametrize("n_min,n_max", [(3, 5), (4, 21), (8, 6), (0, 0)])
    def test_range_violations(self, n_min, n_max):
        with pytest.raises(ValueError):
            scan_all_rules(n_min, n_max)

    def test_json_shape(self):
        report = scan_all_rules(4, 5)
        obj = report.to_json_dict()
        assert set(obj) == {"rules"}
        assert set(obj["rules"]) == {str(code) for code in range(256)}
        assert obj["rules"]["204"] == [
            {"n": 4, "bc": "periodic", "reversible": True},
            {"n": 4, "bc": "fixed", "reversible": True},
            {"n": 5, "bc": "periodic", "reversible": True},
            {"n": 5, "bc": "fixed", "reversible": True},
        ]

    def test_text_shape(self):
        text = scan_all_rules(4, 4).to_text()
        lines = text.splitlines()
        assert len(lines) == 256 * 2
        assert lines[0] == "0\t4\tperiodic\tirreversible"


class TestTinyNDivergence:
    """At n=3 the closed form is conservative: brute force finds extra
    injective cells outside the 22-rule classification."""

    EXTRA_AT_N3 = {
        (27, PERIODIC), (29, PERIODIC), (39, PERIODIC), (43, PERIODIC),
        (53, PERIODIC), (57, PERIODIC), (71, PERIODIC), (77, PERIODIC),
        (83, PERIODIC), (99, PERIODIC), (113, PERIODIC), (142, PERIODIC),
        (156, PERIODIC), (172, PERIODIC), (178, PERIODIC), (184, PERIODIC),
        (198, PERIODIC), (202, PERIODIC), (212, PERIODIC), (216, PERIODIC),
        (226, PERIODIC), (228, PERIODIC), (108, FIXED), (147, FIXED),
    }

    def test_divergence_is_exactly_the_frozen_set(self):
        extra = set()
        for rule in range(256):
            for bc in BCS:
                brute = is_reversible_bruteforce(rule, 3, bc).reversible
                predicted = reversibility_predicate(rule, 3, bc)
                assert not (predicted and not brute), \
                    "predicate must never overclaim"
                if brute and not predicted:
                    extra.add((rule, bc))
        assert extra == self.EXTRA_AT_N3

    def test_classified_rules_still_correct_at_n3(self):
        for rule in REVERSIBLE_RULES:
            for bc in BCS:
                assert (is_reversible_bruteforce(rule, 3, bc).reversible
                        == reversibility_predicate(rule, 3, bc))

"""Interval colorings, monochromatic progressions, and threshold search."""

import random

import pytest
from hypothesis import given, strategies as st

from ramseykit import (
    BudgetError,
    IntervalColoring,
    UndecidedError,
    ap_sum,
    ap_sum_threshold,
    check_universal_ap_sum,
    classical_ap_check,
    longest_mono_ap,
    revalidate,
)
from helpers import interval_colorings, longest_ap_oracle


class TestIntervalColoring:
    def test_text_roundtrip(self):
        c = IntervalColoring(2, (0, 0, 1, 0, 0))
        assert c.to_text() == "aabaa"
        assert IntervalColoring.from_text("aabaa", 2) == c

    def test_black_white_alphabet(self):
        # two-colour strings may spell colours as b/w: b is colour 0
        c = IntervalColoring.from_text("bbwbb", 2)
        assert c.colors == (0, 0, 1, 0, 0)
        assert c.to_text() == "aabaa"

    def test_letter_b_alone_means_color_one(self):
        # without any 'w' the normal a..h table applies
        assert IntervalColoring.from_text("bb", 2).colors == (1, 1)

    def test_rejects_unknown_letters(self):
        with pytest.raises(ValueError):
            IntervalColoring.from_text("abz", 3)
        with pytest.raises(ValueError):
            IntervalColoring.from_text("c", 2)

    def test_code_roundtrip_is_little_endian(self):
        c = IntervalColoring.from_code(2, 4, 5)
        assert c.colors == (1, 0, 1, 0)
        assert c.code == 5

    def test_validation(self):
        with pytest.raises(ValueError):
            IntervalColoring(0, (0,))
        with pytest.raises(ValueError):
            IntervalColoring(9, (0,))
        with pytest.raises(ValueError):
            IntervalColoring(2, ())
        with pytest.raises(ValueError):
            IntervalColoring(2, (0, 2))

    def test_positions_bitmask(self):
        c = IntervalColoring.from_text("bbwbb", 2)
        # bit i stands for the integer i + 1
        assert c.positions(0) == 0b11011
        assert c.positions(1) == 0b00100

    @given(interval_colorings(max_m=4, max_len=16))
    def test_code_text_roundtrips(self, c):
        assert IntervalColoring.from_code(c.m, c.length, c.code) == c
        assert IntervalColoring.from_text(c.to_text(), c.m) == c


class TestLongestProgression:
    def test_black_white_example(self):
        c = IntervalColoring.from_text("bbwbb", 2)
        assert longest_mono_ap(c, 0) == 2
        assert longest_mono_ap(c, 1) == 1
        assert ap_sum(c) == (3, (2, 1))

    def test_uniform_coloring(self):
        c = IntervalColoring(2, (0,) * 7)
        assert longest_mono_ap(c, 0) == 7
        assert longest_mono_ap(c, 1) == 0

    def test_spread_progression_found(self):
        # 1, 4, 7 with step 3 in colour 1
        c = IntervalColoring.from_text("baabaab", 2)
        assert longest_mono_ap(c, 1) == 3

    @given(interval_colorings(max_m=4, max_len=24))
    def test_matches_index_set_oracle(self, c):
        for color in range(c.m):
            positions = {i + 1 for i, d in enumerate(c.colors) if d == color}
            assert longest_mono_ap(c, color) == longest_ap_oracle(positions)

    def test_bulk_random_agreement(self):
        rng = random.Random(20260814)
        for _ in range(10_000):
            m = rng.randint(1, 4)
            length = rng.randint(1, 24)
            c = IntervalColoring(m, tuple(rng.randrange(m) for _ in range(length)))
            total, per_color = ap_sum(c)
            assert total == sum(per_color)
            for color in range(m):
                positions = {i + 1 for i, d in enumerate(c.colors) if d == color}
                assert per_color[color] == longest_ap_oracle(positions)

    @given(interval_colorings(max_m=3, max_len=16))
    def test_reversal_preserves_sums(self, c):
        rev = IntervalColoring(c.m, c.colors[::-1])
        assert ap_sum(rev) == ap_sum(c)

    @given(interval_colorings(min_m=2, max_m=3, max_len=12))
    def test_color_swap_permutes_profile(self, c):
        perm = tuple(reversed(range(c.m)))
        swapped = IntervalColoring(c.m, tuple(perm[d] for d in c.colors))
        total, profile = ap_sum(c)
        total2, profile2 = ap_sum(swapped)
        assert total2 == total
        assert profile2 == tuple(reversed(profile))


class TestPairSumThresholds:
    def test_two_color_table(self):
        values = [ap_sum_threshold(2, t).value for t in range(1, 6)]
        assert values == [1, 2, 3, 6, 9]

    def test_three_color_values(self):
        assert ap_sum_threshold(3, 3).value == 3
        assert ap_sum_threshold(3, 4).value == 6

    def test_certificates_at_target_four(self):
        r = ap_sum_threshold(2, 4)
        assert r.value == 6 and r.exact and r.bracket == (6, 6)
        assert r.lower.witness_coloring == "aabaa"
        assert r.lower.value == 3
        assert r.upper.scanned_count == 64
        assert revalidate(r.lower) and revalidate(r.upper)

    def test_certificates_at_target_five(self):
        r = ap_sum_threshold(2, 5)
        assert r.lower.witness_coloring == "bbaabbaa"
        assert ap_sum(IntervalColoring.from_text("bbaabbaa", 2))[0] == 4

    def test_check_reports_minimum_code_witness(self):
        out = check_universal_ap_sum(4, 5, 2)
        assert not out.ok
        cert = out.certificate
        assert cert.witness_coloring == "aabaa"
        # nothing with a smaller code fails the target
        for code in range(IntervalColoring.from_text("aabaa", 2).code):
            c = IntervalColoring.from_code(2, 5, code)
            assert ap_sum(c)[0] >= 4

    def test_pruned_scan_same_witness_fewer_colorings(self):
        plain = check_universal_ap_sum(4, 5, 2)
        pruned = check_universal_ap_sum(4, 5, 2, prune=True)
        assert pruned.certificate.witness_coloring == plain.certificate.witness_coloring
        assert pruned.certificate.parameters["pruned"] is True

    def test_pruned_pass_counts_representatives_only(self):
        plain = check_universal_ap_sum(3, 3, 2)
        pruned = check_universal_ap_sum(3, 3, 2, prune=True)
        assert plain.ok and pruned.ok
        assert plain.certificate.scanned_count == 8
        assert pruned.certificate.scanned_count < 8
        assert revalidate(pruned.certificate, deep=True)

    def test_pruned_threshold_identical(self):
        assert ap_sum_threshold(2, 4, prune=True).value == 6

    def test_threads_merge_identically(self):
        a = ap_sum_threshold(2, 4)
        b = ap_sum_threshold(2, 4, threads=3)
        assert a.lower.to_json() == b.lower.to_json()
        assert a.upper.to_json() == b.upper.to_json()

    def test_budget_exhaustion(self):
        with pytest.raises(UndecidedError) as exc:
            ap_sum_threshold(2, 50, budget=256)
        assert exc.value.low == 9
        assert exc.value.high is None
        assert exc.value.lower is not None

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            ap_sum_threshold(0, 3)
        with pytest.raises(ValueError):
            ap_sum_threshold(9, 3)
        with pytest.raises(ValueError):
            ap_sum_threshold(2, 0)
        with pytest.raises(ValueError):
            check_universal_ap_sum(3, 0, 2)


class TestClassicalCheck:
    def test_two_colors_three_terms(self):
        # 9 integers force a monochromatic 3-term progression; 8 do not
        assert classical_ap_check(2, 3, 9) is True
        assert classical_ap_check(2, 3, 8) is False

    def test_two_terms_is_pigeonhole(self):
        assert classical_ap_check(2, 2, 2) is False
        assert classical_ap_check(2, 2, 3) is True
        assert classical_ap_check(3, 2, 3) is False
        assert classical_ap_check(3, 2, 4) is True

    def test_one_color(self):
        assert classical_ap_check(1, 3, 3) is True
        assert classical_ap_check(1, 3, 2) is False

    def test_budget_guard(self):
        with pytest.raises(BudgetError):
            classical_ap_check(2, 3, 40)

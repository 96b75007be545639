import itertools
import random

import pytest

from deephole.errors import DegenerateParameters, DeltaInBetas, DuplicateNode, InvalidShape
from deephole.identities import (
    INVERSE,
    POWER,
    BorderedVandermonde,
    coverage_failures,
    det_bordered,
    exhaustive_sweep,
    find_singular_subset,
    lemma5_reachable,
    lemma5_singular_gamma,
    lemma6_condition,
    lemma7_condition,
    random_sweep,
)
from oracles import leibniz_det


class TestBordered:
    def test_examples(self):
        assert det_bordered(BorderedVandermonde((1, 2), 3, INVERSE, 2, 7)) == 0
        assert det_bordered(BorderedVandermonde((1, 2), 3, POWER, 0, 7)) == 0

    def test_rows_against_leibniz(self, rng):
        for _ in range(200):
            p = rng.choice([7, 11, 13])
            k = rng.randint(1, 4)
            pts = rng.sample(range(p), k + 2)
            for m in (
                BorderedVandermonde(tuple(pts[:k]), pts[k], INVERSE, rng.randrange(p), p),
                BorderedVandermonde(tuple(pts[:k]), pts[k], INVERSE, rng.randrange(p), p, shift=pts[k + 1]),
                BorderedVandermonde(tuple(pts[:k]), pts[k], POWER, rng.randrange(p), p),
            ):
                assert det_bordered(m) == leibniz_det(m.rows(), p)

    def test_invalid(self):
        with pytest.raises(DuplicateNode):
            BorderedVandermonde((1, 1), 3, INVERSE, 0, 7)
        with pytest.raises(DeltaInBetas):
            BorderedVandermonde((1, 3), 3, POWER, 0, 7)
        with pytest.raises(InvalidShape):
            BorderedVandermonde((1, 2), 3, "cubic", 0, 7)


class TestClosedForms:
    def test_inverse_row_corner(self):
        assert lemma5_singular_gamma((1, 2), 3, 7) == 2
        # betas at delta +- t cancel
        assert lemma5_singular_gamma((2, 4), 3, 7) == 0

    def test_shifted_inverse_row(self):
        assert lemma6_condition((1, 2), 3, 4, 4, 7)
        assert not lemma6_condition((1, 2), 3, 4, 0, 7)
        with pytest.raises(DegenerateParameters):
            lemma6_condition((1, 2), 3, 4, 6, 7)
        with pytest.raises(DegenerateParameters):
            lemma6_condition((1, 2), 3, 3, 0, 7)

    def test_power_row(self):
        assert lemma7_condition((1, 2), 3, 0, 7)
        assert not lemma7_condition((1, 2), 3, pow(3, 2, 7), 7)
        with pytest.raises(DeltaInBetas):
            lemma7_condition((1, 2), 2, 0, 7)

    def test_exhaustive_p5(self):
        rep = exhaustive_sweep(5, 2)
        assert rep.passed and all(v > 0 for v in rep.checked.values())

    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    def test_random(self, p):
        rep = random_sweep(p, (p - 1) // 2, 1000, random.Random(p))
        assert rep.passed and rep.checked["lemma5"] == 1000

    def test_small_k_random(self):
        rng = random.Random(7)
        for p in (7, 11, 13):
            for k in range(1, p - 1):
                assert random_sweep(p, k, 50, rng).passed


class TestSingularSubsets:
    def test_inverse_row_every_gamma(self):
        for gamma in range(7):
            sub = find_singular_subset([1, 2, 3, 4, 5], 6, None, gamma, 3, 7, "lemma5")
            assert sub is not None
            assert det_bordered(BorderedVandermonde(sub, 6, INVERSE, gamma, 7)) == 0

    def test_shifted_row_every_admissible_gamma(self):
        pool = [1, 2, 3, 4, 5]
        for dp in (6,):
            for gamma in range(7):
                if gamma == pow(0 - dp, 5, 7):
                    with pytest.raises(DegenerateParameters):
                        find_singular_subset(pool, 0, dp, gamma, 3, 7, "lemma6")
                    continue
                assert find_singular_subset(pool, 0, dp, gamma, 3, 7, "lemma6") is not None

    def test_lexicographic_first(self):
        pool, delta, gamma = [1, 2, 3, 4, 5], 6, 0
        got = find_singular_subset(pool, delta, None, gamma, 3, 7, "lemma5")
        first = next(
            s
            for s in itertools.combinations(pool, 3)
            if lemma5_singular_gamma(s, delta, 7) == gamma
        )
        assert got == first

    def test_not_found(self):
        assert find_singular_subset([1], 2, None, 1, 1, 5, "lemma5") is None
        assert find_singular_subset([1], 2, None, 4, 1, 5, "lemma5") == (1,)

    def test_errors(self):
        with pytest.raises(InvalidShape):
            find_singular_subset([1, 2], 3, None, 0, 1, 7, "lemma9")
        with pytest.raises(InvalidShape):
            find_singular_subset([1, 2], 3, None, 0, 3, 7, "lemma5")
        with pytest.raises(DeltaInBetas):
            find_singular_subset([1, 2], 2, None, 0, 1, 7, "lemma5")
        with pytest.raises(DegenerateParameters):
            find_singular_subset([1, 2], 3, None, 2, 2, 7, "lemma7")

    @pytest.mark.parametrize("p", [5, 7])
    def test_coverage(self, p):
        assert coverage_failures(p, (p - 1) // 2) == []

    def test_coverage_can_fail_with_tiny_pools(self):
        # pool of size k + 1 has only k + 1 subsets, fewer than p values of gamma
        assert coverage_failures(7, 3, d_min=1)

    @pytest.mark.parametrize("p", [5, 7])
    def test_inverse_sums_are_surjective(self, p):
        k = (p - 1) // 2
        for delta in range(p):
            others = [x for x in range(p) if x != delta]
            for size in range(k + 2, p):
                for pool in itertools.combinations(others, size):
                    assert lemma5_reachable(pool, delta, k, p) == set(range(p))

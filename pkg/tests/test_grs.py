import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deephole.algebra import Poly
from deephole.errors import (
    BudgetExceeded,
    DegreeOutOfRange,
    DimensionMismatch,
    DuplicateNode,
    InvalidDimension,
)
from deephole.grs import (
    GrsCode,
    Matrix,
    default_order,
    degree_bounds,
    det_mod_p,
    encode,
    enumeration_budget,
    error_distance,
    generator_matrix,
    interpolant,
    is_deep_hole,
    is_mds,
    minimum_distance,
    nonsingular_batch,
)
from oracles import leibniz_det, naive_error_distance


def test_generator_matrix_example():
    g = generator_matrix(GrsCode(7, 3, (1, 2, 3, 4, 5)))
    assert g.rows == ((1, 1, 1, 1, 1), (1, 2, 3, 4, 5), (1, 4, 2, 2, 4))


def test_encode_example():
    code = GrsCode(7, 3, (1, 2, 3, 4, 5))
    assert encode(code, (1, 1, 1)) == (3, 0, 6, 0, 3)
    with pytest.raises(DimensionMismatch):
        encode(code, (1, 1))


def test_code_validation():
    with pytest.raises(DuplicateNode):
        GrsCode(7, 2, (1, 2, 2))
    with pytest.raises(InvalidDimension):
        GrsCode(7, 3, (1, 2, 3))
    with pytest.raises(InvalidDimension):
        GrsCode(7, 0, (1, 2, 3))
    assert GrsCode(7, 2, (8, 9, 10)).evalset == (1, 2, 3)


def test_default_order():
    assert default_order(7) == (1, 2, 3, 4, 5, 6, 0)


def test_budget_resolution(monkeypatch):
    monkeypatch.delenv("DEEPHOLE_BUDGET", raising=False)
    assert enumeration_budget() == 10**8
    monkeypatch.setenv("DEEPHOLE_BUDGET", "1e3")
    assert enumeration_budget() == 1000
    assert enumeration_budget(5) == 5
    code = GrsCode(11, 5, tuple(range(1, 11)))
    with pytest.raises(BudgetExceeded):
        error_distance(code, [0] * 10)


class TestDeterminant:
    def test_against_leibniz(self, rng):
        for _ in range(200):
            p = rng.choice([5, 7, 11, 13])
            r = rng.randint(1, 5)
            m = [[rng.randrange(p) for _ in range(r)] for _ in range(r)]
            assert det_mod_p(m, p) == leibniz_det(m, p)

    def test_batch_against_scalar(self, rng):
        p = 7
        batch = np.array([[[rng.randrange(p) for _ in range(4)] for _ in range(4)] for _ in range(500)])
        got = nonsingular_batch(batch, p)
        assert got.tolist() == [det_mod_p(m.tolist(), p) != 0 for m in batch]

    def test_singular_examples(self):
        assert det_mod_p([[1, 2], [2, 4]], 7) == 0
        assert det_mod_p([[0, 1], [1, 0]], 7) == 6


class TestMds:
    def test_vandermonde_is_mds(self):
        for p in (5, 7):
            for k in range(1, p):
                assert is_mds(generator_matrix(GrsCode(p, k, default_order(p))))

    def test_against_minor_oracle(self, rng):
        for _ in range(100):
            p = rng.choice([5, 7])
            r = rng.randint(1, 3)
            n = rng.randint(r, 5)
            rows = [[rng.randrange(p) for _ in range(n)] for _ in range(r)]
            want = all(
                leibniz_det([[row[c] for c in cols] for row in rows], p) != 0
                for cols in itertools.combinations(range(n), r)
            )
            assert is_mds(Matrix(tuple(map(tuple, rows)), p)) == want

    def test_shape_error(self):
        with pytest.raises(DimensionMismatch):
            is_mds(Matrix(((1,), (2,)), 7))


class TestErrorDistance:
    def test_example(self):
        code = GrsCode(7, 2, (1, 2, 3, 4))
        assert error_distance(code, (0, 0, 2, 5)) == 2

    def test_against_naive(self, rng):
        for _ in range(60):
            p = rng.choice([5, 7])
            n = rng.randint(2, p)
            k = rng.randint(1, min(3, n - 1))
            evalset = rng.sample(range(p), n)
            code = GrsCode(p, k, evalset)
            u = [rng.randrange(p) for _ in range(n)]
            assert error_distance(code, u) == naive_error_distance(p, k, evalset, u)

    def test_minimum_distance_is_singleton(self):
        for p in (5, 7):
            for k in (1, 2, 3):
                for n in range(k + 1, p + 1):
                    code = GrsCode(p, k, default_order(p)[:n])
                    assert minimum_distance(code) == n - k + 1

    def test_word_length(self):
        with pytest.raises(DimensionMismatch):
            error_distance(GrsCode(7, 2, (1, 2, 3)), (1, 2))


class TestDeepHoles:
    def test_examples(self):
        code = GrsCode(7, 2, (1, 2, 3, 4))
        assert is_deep_hole(code, (0, 0, 2, 5))
        assert not is_deep_hole(code, encode(code, (3, 1)))

    def test_predicates_agree_exhaustively_p5(self):
        p = 5
        for k in (1, 2, 3):
            for n in range(k + 1, p + 1):
                code = GrsCode(p, k, default_order(p)[:n])
                for u in itertools.product(range(p), repeat=n):
                    assert is_deep_hole(code, u, "mds") == is_deep_hole(code, u, "bruteforce")

    def test_predicates_agree_random_p7(self, rng):
        for _ in range(300):
            n = rng.randint(3, 7)
            k = rng.randint(1, n - 1)
            code = GrsCode(7, k, rng.sample(range(7), n))
            u = [rng.randrange(7) for _ in range(n)]
            assert is_deep_hole(code, u, "mds") == is_deep_hole(code, u, "bruteforce")

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            is_deep_hole(GrsCode(7, 2, (1, 2, 3)), (0, 0, 1), "magic")

    @pytest.mark.parametrize("p", [5, 7, 11])
    def test_degree_k_words(self, p, rng):
        for _ in range(20):
            n = rng.randint(3, p)
            k = rng.randint(1, min(n - 1, 5))
            code = GrsCode(p, k, rng.sample(range(p), n))
            a = rng.randrange(1, p)
            h = Poly.of([rng.randrange(p) for _ in range(k)], p)
            u = code.word_of(Poly.monomial(k, p, a) + h)
            assert error_distance(code, u) == n - k

    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    def test_inverse_shift_words(self, p, rng):
        for _ in range(15):
            k = rng.randint(2, min(4, p - 2))
            n = rng.randint(k + 1, min(p - 1, k + 4))
            pts = rng.sample(range(p), n + 1)
            code = GrsCode(p, k, pts[:n])
            u = code.inverse_shift_word(pts[n])
            assert is_deep_hole(code, u)
            if p <= 7:
                assert is_deep_hole(code, u, "bruteforce")


class TestDegreeBounds:
    def test_example(self):
        code = GrsCode(7, 2, (1, 2, 3, 4))
        assert degree_bounds(code, (0, 0, 2, 5)) == (1, 2)
        assert degree_bounds(code, code.word_of(Poly.monomial(2, 7))) == (2, 2)

    def test_codeword_rejected(self):
        code = GrsCode(7, 2, (1, 2, 3, 4))
        with pytest.raises(DegreeOutOfRange):
            degree_bounds(code, encode(code, (1, 1)))

    @settings(max_examples=150, deadline=None)
    @given(st.data())
    def test_bounds_contain_distance(self, data):
        p = data.draw(st.sampled_from([5, 7]))
        n = data.draw(st.integers(3, p))
        k = data.draw(st.integers(1, min(3, n - 1)))
        code = GrsCode(p, k, default_order(p)[:n])
        u = data.draw(st.lists(st.integers(0, p - 1), min_size=n, max_size=n))
        if interpolant(code, u).degree < k:
            assert error_distance(code, u) == 0
            return
        lo, hi = degree_bounds(code, u)
        assert lo <= error_distance(code, u) <= hi

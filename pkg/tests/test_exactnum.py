import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kronrep.exactnum import QuadNum, is_square, lr


def q5(p, q):
    return QuadNum(Fraction(p), Fraction(q), 5)


class TestConstruction:
    def test_radicand_must_be_nonsquare(self):
        for bad in (0, 1, 4, 9, -5):
            with pytest.raises(ValueError):
                QuadNum(Fraction(1), Fraction(1), bad)

    def test_is_square(self):
        assert is_square(49) and not is_square(50) and not is_square(-4)

    def test_lr_values(self):
        L = lr(3)
        assert (L.p, L.q, L.d) == (Fraction(3, 2), Fraction(1, 2), 5)
        assert lr(4).d == 12
        with pytest.raises(ValueError):
            lr(2)


class TestArithmetic:
    def test_minimal_polynomial(self):
        # lr(r) is a root of x^2 - r x + 1
        for r in range(3, 9):
            L = lr(r)
            assert L * L - r * L + 1 == 0
            assert L ** 2 == r * L - 1

    def test_unit_relation(self):
        # (r - L) * L = 1, so r - L is the inverse unit
        for r in range(3, 7):
            L = lr(r)
            assert (r - L) * L == 1
            assert L.inverse() == r - L

    def test_annihilation(self):
        x = q5(7, -3)
        assert (x * 0).is_zero()
        assert x * QuadNum.rational(0, 5) == 0

    def test_mixed_radicands_rejected(self):
        with pytest.raises(ValueError):
            lr(3) + lr(4)

    def test_division_and_powers(self):
        x = q5(Fraction(2, 3), Fraction(-1, 7))
        assert x / x == 1
        assert x ** 3 * x ** -3 == 1
        with pytest.raises(ZeroDivisionError):
            QuadNum.rational(0, 5).inverse()


class TestSign:
    def test_star_bounds(self):
        # r - 1 < L_r < r for every r
        for r in range(3, 12):
            L = lr(r)
            assert (L - (r - 1)).sign() == +1
            assert (L - r).sign() == -1

    def test_examples(self):
        assert (lr(3) - 2).sign() == +1
        assert (lr(3) - 3).sign() == -1
        assert q5(0, 0).sign() == 0
        assert q5(0, -1).sign() == -1
        assert q5(-3, 1).sign() == -1  # 3 > sqrt(5)
        assert q5(-2, 1).sign() == +1  # 2 < sqrt(5)

    def test_tightness_anchor(self):
        # 2*L_3 - 5 is positive but smaller than 1/2
        gap = 2 * lr(3) - 5
        assert gap.sign() == +1
        assert (gap - Fraction(1, 2)).sign() == -1


class TestFloor:
    def test_paper_values(self):
        assert (3 * lr(3)).floor() == 7
        assert (2 * lr(3)).floor() == 5

    def test_trivial(self):
        assert QuadNum.rational(0, 5).floor() == 0
        assert QuadNum.rational(Fraction(-7, 2), 5).floor() == -4

    def test_negative_floors_toward_minus_infinity(self):
        assert (-lr(3)).floor() == -3  # -2.618...

    def test_against_sign_only_bisection(self):
        def floor_oracle(x: QuadNum) -> int:
            lo, hi = -1, 1
            while (x - lo).sign() < 0:
                lo *= 2
            while (x - hi).sign() >= 0:
                hi *= 2
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if (x - mid).sign() >= 0:
                    lo = mid
                else:
                    hi = mid
            return lo

        rng = random.Random(12345)
        for _ in range(10**4):
            d = rng.choice((5, 12, 21))
            x = QuadNum(
                Fraction(rng.randint(-10**3, 10**3), rng.randint(1, 10**3)),
                Fraction(rng.randint(-10**3, 10**3), rng.randint(1, 10**3)),
                d,
            )
            assert x.floor() == floor_oracle(x)


small_fractions = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)
quads = st.builds(
    QuadNum, small_fractions, small_fractions, st.sampled_from((5, 12, 21, 32))
)


def same_d(strategy):
    return st.sampled_from((5, 12, 21)).flatmap(
        lambda d: st.tuples(
            st.builds(QuadNum, small_fractions, small_fractions, st.just(d)),
            st.builds(QuadNum, small_fractions, small_fractions, st.just(d)),
            st.builds(QuadNum, small_fractions, small_fractions, st.just(d)),
        )
    )


class TestFieldAxioms:
    @settings(max_examples=200, derandomize=True)
    @given(same_d(None))
    def test_ring_axioms(self, triple):
        x, y, z = triple
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x

    @settings(max_examples=200, derandomize=True)
    @given(same_d(None))
    def test_inverses(self, triple):
        x, _, _ = triple
        if not x.is_zero():
            assert x * x.inverse() == 1
        assert x + (-x) == 0

    @settings(max_examples=200, derandomize=True)
    @given(same_d(None))
    def test_sign_respects_order(self, triple):
        x, y, _ = triple
        if (x - y).sign() > 0:
            assert x > y and not (x < y)
        assert (x - x).sign() == 0

    @settings(max_examples=100, derandomize=True)
    @given(same_d(None))
    def test_floor_bracket(self, triple):
        x, _, _ = triple
        n = x.floor()
        assert (x - n).sign() >= 0
        assert (x - (n + 1)).sign() < 0

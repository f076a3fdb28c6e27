# tests/models/test_quadratic_irrational.py
from fractions import Fraction

import pytest

from qdfao.models.continued_fraction import ContinuedFraction
from qdfao.models.qdfao_errors import QdfaoInputError
from qdfao.models.quadratic_irrational import QuadraticIrrational

PHI = QuadraticIrrational(a=1, b=1, d=5, c=2)


class TestQuadraticIrrational:
    def test_negative_denominator_normalized(self):
        q = QuadraticIrrational(a=1, b=1, d=5, c=-2)
        assert (q.a, q.b, q.c) == (-1, -1, 2)

    def test_from_surd_pulls_square_factors(self):
        q = QuadraticIrrational.from_surd(0, 1, 8, 1)
        assert (q.a, q.b, q.d, q.c) == (0, 2, 2, 1)

    def test_rational_rejected(self):
        with pytest.raises(QdfaoInputError):
            QuadraticIrrational(a=1, b=0, d=5, c=1)

    def test_floor_and_sign(self):
        assert PHI.floor() == 1
        assert PHI.sign() == 1
        assert QuadraticIrrational(a=1, b=-1, d=5, c=2).sign() == -1

    def test_reciprocal(self):
        # 1/phi = phi - 1
        assert PHI.reciprocal() == PHI - 1

    def test_arithmetic(self):
        assert PHI * 2 == QuadraticIrrational(a=1, b=1, d=5, c=1)
        assert PHI + Fraction(1, 2) == QuadraticIrrational(a=2, b=1, d=5, c=2)
        with pytest.raises(QdfaoInputError):
            PHI * 0

    def test_parts(self):
        assert PHI.rational_part == Fraction(1, 2)
        assert PHI.surd_part == Fraction(1, 2)

    @pytest.mark.parametrize(
        "q, text",
        [
            (PHI, "(1+sqrt(5))/2"),
            (QuadraticIrrational(a=0, b=1, d=2), "sqrt(2)"),
            (QuadraticIrrational(a=-3, b=1, d=17, c=4), "(-3+sqrt(17))/4"),
            (QuadraticIrrational(a=0, b=-2, d=3), "-2*sqrt(3)"),
        ],
    )
    def test_str(self, q, text):
        assert str(q) == text


class TestContinuedFraction:
    def test_partial_quotients(self):
        cf = ContinuedFraction(preperiod=(2,), period=(1, 2))
        assert [cf.partial_quotient(i) for i in range(6)] == [2, 1, 2, 1, 2, 1]
        assert cf.m == 2
        assert cf.d0 == 2
        assert str(cf) == "[2; (1, 2)]"

    def test_str_with_preperiod(self):
        assert str(ContinuedFraction(preperiod=(0, 1, 1, 1), period=(2,))) == "[0; 1, 1, 1, (2)]"

    def test_empty_period_rejected(self):
        with pytest.raises(ValueError):
            ContinuedFraction(preperiod=(1,), period=())

# tests/utils/test_surd_utils.py
from math import sqrt

import pytest

from qdfao.utils.surd_utils import floor_surd, is_square_free, normalize, split_square, surd_sign


class TestSquares:
    @pytest.mark.parametrize("d, expected", [(1, True), (2, True), (8, False), (12, False), (30, True), (0, False)])
    def test_is_square_free(self, d, expected):
        assert is_square_free(d) is expected

    @pytest.mark.parametrize("n, expected", [(8, (2, 2)), (72, (6, 2)), (5, (1, 5)), (49, (7, 1))])
    def test_split_square(self, n, expected):
        assert split_square(n) == expected

    def test_split_square_rejects_zero(self):
        with pytest.raises(ValueError):
            split_square(0)


class TestFloorSurd:
    @pytest.mark.parametrize(
        "a, b, d, c",
        [(1, 1, 5, 2), (0, 1, 2, 1), (-1, 1, 5, 2), (1, -1, 5, 2), (-3, 1, 17, 4), (7, -3, 11, 5), (0, -1, 2, 1)],
    )
    def test_matches_float_away_from_integers(self, a, b, d, c):
        assert floor_surd(a, b, d, c) == int((a + b * sqrt(d)) // c)

    def test_rational(self):
        assert floor_surd(-7, 0, 5, 2) == -4

    def test_rejects_non_positive_denominator(self):
        with pytest.raises(ValueError):
            floor_surd(1, 1, 5, 0)


class TestSign:
    @pytest.mark.parametrize(
        "a, b, d, expected",
        [(1, 1, 5, 1), (-1, -1, 5, -1), (3, -1, 5, 1), (2, -1, 5, -1), (-3, 1, 5, -1), (-2, 1, 5, 1), (0, 0, 5, 0)],
    )
    def test_surd_sign(self, a, b, d, expected):
        assert surd_sign(a, b, d) == expected


def test_normalize():
    assert normalize(2, 4, 5, -6) == (-1, -2, 5, 3)
    assert normalize(1, 1, 5, 2) == (1, 1, 5, 2)

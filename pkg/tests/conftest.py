# tests/conftest.py
from itertools import product as cartesian

import pytest

from qdfao.automata.alphabet import Alphabet
from qdfao.automata.dfao import Dfa


@pytest.fixture
def binary() -> Alphabet:
    return Alphabet((2,))


@pytest.fixture
def words():
    """All words over range(size) up to max_len, shortest first."""

    def _words(size: int, max_len: int):
        for n in range(max_len + 1):
            yield from (list(w) for w in cartesian(range(size), repeat=n))

    return _words


@pytest.fixture
def even_ones(binary) -> Dfa:
    return Dfa(binary, [{0: 0, 1: 1}, {0: 1, 1: 0}], [True, False])


@pytest.fixture
def ends_with_one(binary) -> Dfa:
    return Dfa(binary, [{0: 0, 1: 1}, {0: 0, 1: 1}], [False, True])


@pytest.fixture
def valid_strings():
    """All valid digit strings of exactly `length` digits (leading zeros kept) in a system."""

    def _valid(sys, length: int) -> list[list[int]]:
        return [
            list(w) for w in cartesian(range(sys.max_digit + 1), repeat=length) if sys.is_valid(list(w))
        ]

    return _valid

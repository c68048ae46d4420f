import pytest

from lieschur.exceptions import InvalidParameterError
from lieschur.witt import (bound_class_generators, divisors, free_nilpotent_dimension, moebius, witt_dimension,
                           witt_table)


@pytest.mark.parametrize("m, expected", [(1, 1), (2, -1), (4, 0), (6, 1), (12, 0), (30, -1), (49, 0)])
def test_moebius(m, expected):
    assert moebius(m) == expected


def test_moebius_rejects_zero():
    with pytest.raises(InvalidParameterError):
        moebius(0)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]


@pytest.mark.parametrize("n, d, expected", [(2, 1, 2), (2, 2, 1), (2, 3, 2), (2, 4, 3), (2, 5, 6), (3, 2, 3), (3, 3, 8), (1, 2, 0)])
def test_witt_dimension(n, d, expected):
    assert witt_dimension(n, d) == expected


def test_witt_two_generators_up_to_eight():
    assert [witt_dimension(2, d) for d in range(1, 9)] == [2, 1, 2, 3, 6, 9, 18, 30]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_necklace_identity(n):
    table = witt_table(n, 10)
    assert table.check_necklace()
    for d in range(1, 11):
        assert sum(m * witt_dimension(n, m) for m in divisors(d)) == n ** d


def test_witt_table_cumulative():
    table = witt_table(2, 4)
    assert [value for _, value in table.values] == [2, 1, 2, 3]
    assert table.cumulative == [2, 3, 5, 8]
    assert table[3] == 2
    with pytest.raises(KeyError):
        table[5]


@pytest.mark.parametrize("n, c, expected", [(2, 2, 3), (2, 3, 6), (4, 1, 6), (5, 1, 10)])
def test_bound_class_generators(n, c, expected):
    assert bound_class_generators(n, c) == expected


def test_free_nilpotent_dimension():
    assert free_nilpotent_dimension(2, 3) == 5
    assert free_nilpotent_dimension(2, 5) == 14
    assert free_nilpotent_dimension(3, 3) == 14


@pytest.mark.parametrize("n, d", [(0, 2), (2, 0), (-1, 3)])
def test_witt_dimension_rejects_nonpositive(n, d):
    with pytest.raises(InvalidParameterError):
        witt_dimension(n, d)

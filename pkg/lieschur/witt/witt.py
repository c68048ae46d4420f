from typing import List, Tuple

from lieschur.exceptions import InvalidParameterError


def _check_positive(**values: int) -> None:
    for name, value in values.items():
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise InvalidParameterError(f"{name} must be a positive integer, got {value!r}")


def divisors(m: int) -> List[int]:
    """Sorted divisors of m by trial division up to sqrt(m)."""
    _check_positive(m=m)
    small, large = [], []
    i = 1
    while i * i <= m:
        if m % i == 0:
            small.append(i)
            if i * i != m:
                large.append(m // i)
        i += 1
    return small + large[::-1]


def moebius(m: int) -> int:
    """
    Moebius function.
    Returns 0 if a squared prime divides m, else (-1) ** (number of prime factors).
    """
    _check_positive(m=m)
    sign = 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            sign = -sign
        p += 1
    if m > 1:
        sign = -sign
    return sign


def witt_dimension(n: int, d: int) -> int:
    """
    Dimension l_n(d) of the degree-d homogeneous part of the free Lie algebra on n generators,
    (1/d) * sum over m | d of mu(m) * n ** (d/m).
    """
    _check_positive(n=n, d=d)
    total = sum(moebius(m) * n ** (d // m) for m in divisors(d))
    assert total % d == 0, f"Witt sum {total} not divisible by {d} for n={n}"
    return total // d


def bound_class_generators(n: int, c: int) -> int:
    """Sum of l_n(j + 1) for j = 1..c."""
    _check_positive(n=n, c=c)
    return sum(witt_dimension(n, j + 1) for j in range(1, c + 1))


def free_nilpotent_dimension(n: int, c: int) -> int:
    """Dimension of F/F^(c+1) for F free on n generators."""
    _check_positive(n=n, c=c)
    return sum(witt_dimension(n, d) for d in range(1, c + 1))


class WittTable:
    __slots__ = ['_n', '_values']

    def __init__(self, n: int, maxdeg: int) -> None:
        _check_positive(n=n, maxdeg=maxdeg)
        self._n = n
        self._values = [(d, witt_dimension(n, d)) for d in range(1, maxdeg + 1)]

    @property
    def n(self) -> int:
        return self._n

    @property
    def maxdeg(self) -> int:
        return len(self._values)

    @property
    def values(self) -> List[Tuple[int, int]]:
        return list(self._values)

    def __getitem__(self, d: int) -> int:
        if not 1 <= d <= self.maxdeg:
            raise KeyError(d)
        return self._values[d - 1][1]

    @property
    def cumulative(self) -> List[int]:
        """Running sums; entry d-1 is the dimension of the free nilpotent algebra of class d."""
        totals, running = [], 0
        for _, value in self._values:
            running += value
            totals.append(running)
        return totals

    def check_necklace(self) -> bool:
        """sum over m | d of m * l_n(m) equals n ** d for every degree in the table."""
        return all(sum(m * self[m] for m in divisors(d)) == self._n ** d for d in range(1, self.maxdeg + 1))

    def __repr__(self) -> str:
        return f"WittTable(n={self._n}, values={[v for _, v in self._values]})"


def witt_table(n: int, maxdeg: int) -> WittTable:
    return WittTable(n, maxdeg)

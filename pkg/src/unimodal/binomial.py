"""Exact binomial coefficients, computed two independent ways.

``binomial_pascal`` walks the lattice-path recurrence
f(n, k) = f(n-1, k-1) + f(n-1, k) with f(0, k) = [k == 0];
``binomial_factorial`` divides factorials and insists the division is exact.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .records import CheckRecord, check

DEFAULT_N_MAX = 64


class BinomialTable:
    """Pascal's triangle up to ``n_max``, built once by the recurrence."""

    def __init__(self, n_max: int = DEFAULT_N_MAX):
        if n_max < 0:
            raise ValueError("n_max must be nonnegative")
        self.n_max = n_max
        rows = [(1,)]
        for n in range(1, n_max + 1):
            prev = rows[-1]
            row = [1] * (n + 1)
            for k in range(1, n):
                row[k] = prev[k - 1] + prev[k]
            rows.append(tuple(row))
        self.rows: tuple[tuple[int, ...], ...] = tuple(rows)

    def __call__(self, n: int, k: int) -> int:
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]


@lru_cache(maxsize=None)
def table(n_max: int = DEFAULT_N_MAX) -> BinomialTable:
    return BinomialTable(n_max)


@lru_cache(maxsize=None)
def _pascal(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k > n:
        return 0
    return _pascal(n - 1, k - 1) + _pascal(n - 1, k)


def binomial_pascal(n: int, k: int) -> int:
    """C(n, k) from the recurrence; 0 when k is outside [0, n]."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n <= DEFAULT_N_MAX:
        return table()(n, k)
    if k < 0 or k > n:
        return 0
    # beyond the memoized table, extend row by row to avoid deep recursion
    row = list(table().row(DEFAULT_N_MAX))
    for m in range(DEFAULT_N_MAX + 1, n + 1):
        row = [1] + [row[i - 1] + row[i] for i in range(1, m)] + [1]
    return row[k]


def binomial_factorial(n: int, k: int) -> int:
    """n! / (k! (n-k)!), rejecting k outside [0, n]."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = factorial(n)
    den = factorial(k) * factorial(n - k)
    q, rem = divmod(num, den)
    assert rem == 0, f"{n}!/({k}!{n - k}!) left remainder {rem}"
    return q


def factorial_remainder(n: int, k: int) -> int:
    """Remainder of n! modulo k!(n-k)!; always zero."""
    return factorial(n) % (factorial(k) * factorial(n - k))


def verify_monotone(n: int) -> list[CheckRecord]:
    """Check C(n,k) <= C(n,k+1) and C(n,k+1)(k+1) == C(n,k)(n-k) for each k < n/2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for k in range((n + 1) // 2):
        lo, hi = binomial_pascal(n, k), binomial_pascal(n, k + 1)
        ratio_ok = hi * (k + 1) == lo * (n - k)
        equal = lo == hi
        ok = lo <= hi and ratio_ok and equal == (n == 2 * k + 1)
        out.append(check("binomial.monotone", ok, n=n, k=k,
                         info={"lo": lo, "hi": hi, "equal": equal}))
    return out

"""Chebyshev's upper bound for primes, from the central binomial coefficient.

Every prime in (n, 2n] divides C(2n, n) < 4^n, so their product is at most
4^n; in logarithms theta(2n) - theta(n) <= 2n log 2, and halving repeatedly
gives theta(n) <= (2 log 2) n.  Divisibility and products are checked in
exact integers; theta lives in float64 and is compared with a relative
tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .binomial import binomial_factorial
from .records import CheckRecord, check

LOG2 = math.log(2)
CHEBYSHEV_C = 2 * LOG2
REL_TOL = 1e-6


def _sieve_flags(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if flags[p]:
            flags[p * p::2 * p] = False
    return flags


@dataclass(frozen=True, eq=False)
class PrimeTable:
    limit: int
    primes: np.ndarray  # ascending int64
    theta_cum: np.ndarray  # theta_cum[i] = log(p_0) + ... + log(p_i)

    def pi(self, x: int) -> int:
        """Number of primes <= x (x within the table)."""
        self._in_range(x)
        return int(np.searchsorted(self.primes, x, side="right"))

    def theta(self, x: int) -> float:
        i = self.pi(x)
        return float(self.theta_cum[i - 1]) if i else 0.0

    def theta_upto(self) -> np.ndarray:
        """theta(m) for every integer 0 <= m <= limit."""
        counts = np.searchsorted(self.primes, np.arange(self.limit + 1), side="right")
        padded = np.concatenate(([0.0], self.theta_cum))
        return padded[counts]

    def primes_between(self, lo: int, hi: int) -> list[int]:
        """Primes p with lo < p <= hi."""
        self._in_range(hi)
        a = np.searchsorted(self.primes, lo, side="right")
        b = np.searchsorted(self.primes, hi, side="right")
        return [int(p) for p in self.primes[a:b]]

    def _in_range(self, x: int):
        if x > self.limit:
            raise ValueError(f"{x} is beyond the sieve limit {self.limit}")


@lru_cache(maxsize=8)
def sieve(limit: int) -> PrimeTable:
    """Eratosthenes up to ``limit`` with cumulative log sums."""
    if limit < 2:
        raise ValueError(f"sieve limit must be at least 2, got {limit}")
    primes = np.flatnonzero(_sieve_flags(limit)).astype(np.int64)
    return PrimeTable(limit, primes, np.cumsum(np.log(primes.astype(np.float64))))


def _table_for(x: int, table: PrimeTable | None) -> PrimeTable:
    if table is not None and table.limit >= x:
        return table
    return sieve(max(x, 2))


def primorial_between(n: int, table: PrimeTable | None = None) -> int:
    """Exact product of the primes in (n, 2n]."""
    t = _table_for(2 * n, table)
    return math.prod(t.primes_between(n, 2 * n))


def central_divisibility(n: int, table: PrimeTable | None = None) -> CheckRecord:
    if n < 1:
        raise ValueError("n must be positive")
    prod = primorial_between(n, table)
    central = binomial_factorial(2 * n, n)
    q, r = divmod(central, prod)
    return check("chebyshev.divides_central", r == 0, n=n,
                 witness={"n": n, "product": prod, "remainder": r},
                 info={"product": prod, "quotient": q} if n <= 20 else None)


def product_bound(n: int, table: PrimeTable | None = None) -> CheckRecord:
    if n < 1:
        raise ValueError("n must be positive")
    prod = primorial_between(n, table)
    return check("chebyshev.product_bound", prod <= 1 << (2 * n), n=n,
                 witness={"n": n, "product": prod})


def theta_gap(n: int, table: PrimeTable | None = None) -> CheckRecord:
    """theta(2n) - theta(n) <= 2n log 2."""
    if n < 1:
        raise ValueError("n must be positive")
    t = _table_for(2 * n, table)
    gap = t.theta(2 * n) - t.theta(n)
    bound = 2 * n * LOG2
    return check("chebyshev.theta_gap", gap <= bound * (1 + REL_TOL), n=n,
                 info={"gap": gap, "bound": bound, "margin": bound - gap})


def telescope(n: int, table: PrimeTable | None = None) -> list[tuple[int, float, float]]:
    """Terms (m, theta(m) - theta(m // 2), m log 2) for m = n, n//2, n//4, ... >= 1."""
    t = _table_for(n, table)
    out = []
    m = n
    while m >= 1:
        out.append((m, t.theta(m) - t.theta(m // 2), m * LOG2))
        m //= 2
    return out


def theta_linear(n: int, table: PrimeTable | None = None) -> CheckRecord:
    """theta(n) <= (2 log 2) n, with the halving decomposition that proves it."""
    if n < 1:
        raise ValueError("n must be positive")
    t = _table_for(n, table)
    th = t.theta(n)
    terms = telescope(n, t)
    total = math.fsum(d for _, d, _ in terms)
    sums_ok = math.isclose(total, th, rel_tol=1e-12, abs_tol=1e-12)
    terms_ok = all(d <= b * (1 + REL_TOL) for _, d, b in terms)
    ok = th <= CHEBYSHEV_C * n * (1 + REL_TOL) and sums_ok and terms_ok
    return check("chebyshev.theta_linear", ok, n=n,
                 witness={"n": n, "theta": th, "telescoped": total, "terms_ok": terms_ok},
                 info={"theta": th, "bound": CHEBYSHEV_C * n, "ratio": th / n,
                       "terms": [[m, d, b] for m, d, b in terms]})


def theta_sweep(limit: int) -> list[CheckRecord]:
    """The gap, halving-term and linear bounds for every n <= limit at once."""
    t = sieve(max(2 * limit, 2))
    th = t.theta_upto()
    n = np.arange(1, limit + 1)
    gap = th[2 * n] - th[n]
    gap_bad = np.flatnonzero(gap > 2 * n * LOG2 * (1 + REL_TOL))
    half = th[n] - th[n // 2]
    half_bad = np.flatnonzero(half > n * LOG2 * (1 + REL_TOL))
    lin = th[n]
    lin_bad = np.flatnonzero(lin > CHEBYSHEV_C * n * (1 + REL_TOL))

    def first(bad):
        return None if bad.size == 0 else {"n": int(n[bad[0]])}

    return [
        check("chebyshev.theta_gap", gap_bad.size == 0, witness=first(gap_bad), n_max=limit,
              info={"min_margin": float(np.min(2 * n * LOG2 - gap))}),
        check("chebyshev.theta_halving", half_bad.size == 0, witness=first(half_bad), n_max=limit),
        check("chebyshev.theta_linear", lin_bad.size == 0, witness=first(lin_bad), n_max=limit,
              info={"max_ratio": float(np.max(lin / n)), "ratio_at_limit": float(lin[-1] / limit)}),
    ]


def checkpoints(limit: int) -> list[int]:
    """3, then floor(10^(i/4)) from 10 upward, then ``limit``."""
    pts = {3, limit}
    i = 4
    while (x := int(10 ** (i / 4) + 1e-9)) <= limit:
        pts.add(x)
        i += 1
    return sorted(p for p in pts if 3 <= p <= limit)


def pi_comparison(limit: int, table: PrimeTable | None = None) -> CheckRecord:
    """Tabulate pi(x) against (2 log 2) x / log x.

    Rows where pi(x) exceeds the bound are flagged, not failed: the bound on
    pi follows from the theta bound only asymptotically.
    """
    if limit < 3:
        raise ValueError("limit must be at least 3")
    t = _table_for(limit, table)
    rows = []
    for x in checkpoints(limit):
        pi = t.pi(x)
        bound = CHEBYSHEV_C * x / math.log(x)
        rows.append({"x": x, "pi": pi, "bound": bound, "ratio": pi / bound, "exceeds": pi > bound})
    return check("chebyshev.pi_comparison", True, limit=limit,
                 info={"rows": rows, "flagged": [r["x"] for r in rows if r["exceeds"]]})


def primorial(n: int, table: PrimeTable | None = None) -> int:
    t = _table_for(n, table)
    return math.prod(t.primes_between(0, n))


def sundaram_count(limit: int) -> int:
    """pi(limit) by the sieve of Sundaram, written independently of :func:`sieve`."""
    if limit < 2:
        return 0
    m = (limit - 1) // 2
    marked = bytearray(m + 1)
    i = 1
    while i + i + 2 * i * i <= m:
        step = 2 * i + 1
        marked[i + i + 2 * i * i::step] = b"\x01" * len(range(i + i + 2 * i * i, m + 1, step))
        i += 1
    # unmarked j >= 1 <=> 2j+1 is an odd prime; j = 0 (the number 1) stands in for 2
    return marked.count(0)

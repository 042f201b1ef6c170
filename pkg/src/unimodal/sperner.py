"""Sperner's theorem by two routes: chain decompositions and Lubell's count.

Families are handled as bitmasks internally; :class:`Antichain` is the
public container.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable

import numpy as np

from .binomial import binomial_pascal
from .chains import recursive_scd
from .records import CheckRecord, check
from .subsets import Subset, format_mask, level_masks, popcount

EXHAUSTIVE_MAX_N = 6
BITSET_MAX_N = 10


class NotAnAntichain(ValueError):
    pass


def _masks(n: int, fam: Iterable) -> list[int]:
    out = []
    for s in fam:
        if isinstance(s, Subset):
            if s.n != n:
                raise ValueError(f"subset {s} has ground size {s.n}, expected {n}")
            out.append(s.mask)
        else:
            out.append(int(s))
    return out


def _incomparable(masks: list[int], n: int | None = None) -> tuple[int, int] | None:
    """A pair (a, b) with a properly inside b, or None."""
    ms = sorted(set(masks), key=popcount)
    if n is not None and n <= BITSET_MAX_N and len(ms) > 16:
        blk = _blockers(n)
        members = 0
        for m in ms:
            members |= 1 << m
        for a in ms:
            hit = blk[a] & members & ~(1 << a)
            if hit:
                b = hit.bit_length() - 1
                return (a, b) if a & ~b == 0 else (b, a)
        return None
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if a & ~b == 0:
                return a, b
    return None


def is_antichain(n: int, fam: Iterable) -> bool:
    """True iff no member of ``fam`` properly contains another."""
    return _incomparable(_masks(n, fam), n) is None


@dataclass(frozen=True)
class Antichain:
    n: int
    masks: frozenset[int]

    @classmethod
    def of(cls, n: int, fam: Iterable) -> Antichain:
        return cls(n, frozenset(_masks(n, fam)))

    @property
    def subsets(self) -> list[Subset]:
        return [Subset(self.n, m) for m in sorted(self.masks)]

    def __len__(self) -> int:
        return len(self.masks)

    def __str__(self) -> str:
        return "{" + ", ".join(format_mask(m) for m in sorted(self.masks)) + "}"


def _require_antichain(a: Antichain):
    bad = _incomparable(list(a.masks), a.n)
    if bad is not None:
        raise NotAnAntichain(f"{format_mask(bad[0])} is contained in {format_mask(bad[1])}")


def lubell_sum(a: Antichain) -> tuple[int, Fraction]:
    """(sum of |S|!(n-|S|)!, sum of 1/C(n,|S|)) over the antichain.

    The first counts maximal chains of B_n through some member; no maximal
    chain meets two members, so it is at most n!.
    """
    _require_antichain(a)
    n = a.n
    per_rank = Counter(popcount(m) for m in a.masks)
    chains = sum(c * factorial(k) * factorial(n - k) for k, c in per_rank.items())
    lym = sum((Fraction(c, binomial_pascal(n, k)) for k, c in per_rank.items()), Fraction(0))
    assert chains <= factorial(n), f"Lubell count {chains} exceeds {n}!"
    assert lym <= 1, f"LYM sum {lym} exceeds 1"
    assert lym == Fraction(chains, factorial(n))
    return chains, lym


def _comparability(n: int) -> list[int]:
    size = 1 << n
    comp = []
    for a in range(size):
        bits = 0
        for b in range(size):
            if a & ~b == 0 or b & ~a == 0:
                bits |= 1 << b
        comp.append(bits)
    return comp


@lru_cache(maxsize=None)
def _scan_antichains(n: int) -> tuple[int, int]:
    """(number of antichains, largest size) by direct recursion over subsets."""
    comp = _comparability(n)
    full = (1 << (1 << n)) - 1
    count = 0
    best = 0

    def grow(avail: int, size: int):
        nonlocal count, best
        count += 1
        if size > best:
            best = size
        while avail:
            low = avail & -avail
            j = low.bit_length() - 1
            avail ^= low
            # later picks only: keep index order so each antichain is seen once
            grow(avail & ~comp[j], size + 1)

    grow(full, 0)
    return count, best


def _check_n(n: int):
    if not 0 <= n <= EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive enumeration supports 0 <= n <= {EXHAUSTIVE_MAX_N}, got {n}")


def max_antichain_exhaustive(n: int) -> int:
    _check_n(n)
    best = _scan_antichains(n)[1]
    assert best == binomial_pascal(n, n // 2), f"largest antichain {best} at n={n}"
    return best


def count_antichains(n: int) -> int:
    """Number of antichains in B_n, the empty family included."""
    _check_n(n)
    return _scan_antichains(n)[0]


def count_antichains_split(n: int) -> int:
    """Second count: antichains <-> up-sets; an up-set of B_n splits on element n
    into a pair of up-sets (U0, U1) of B_{n-1} with U0 inside U1."""
    _check_n(n)
    # up-sets as truth tables; bit x set iff subset x is in the up-set
    ups = np.array([0, 1], dtype=np.uint64)  # B_0: empty, {∅}
    for m in range(1, n + 1):
        width = 1 << (m - 1)
        nxt = []
        for u0 in ups:
            ok = ups[(u0 & ~ups) == 0]
            nxt.append(u0 | (ok << np.uint64(width)))
        ups = np.concatenate(nxt)
    return int(ups.size)


def sperner_via_chains(n: int, a: Antichain, index: dict[int, int] | None = None,
                       validated: bool = False) -> CheckRecord:
    """Each chain of the recursive decomposition meets ``a`` at most once."""
    if not validated:
        _require_antichain(a)
    if index is None:
        index = chain_index(n)
    hits: dict[int, int] = {}
    for m in a.masks:
        c = index[m]
        hits[c] = hits.get(c, 0) + 1
    clash = next((c for c, h in hits.items() if h > 1), None)
    bound = binomial_pascal(n, n // 2)
    ok = clash is None and len(a) <= bound
    return check("sperner.one_per_chain", ok, n=n,
                 witness=None if ok else {"n": n, "antichain": str(a), "chain": clash},
                 info={"size": len(a), "chains_hit": len(hits), "bound": bound})


@lru_cache(maxsize=None)
def chain_index(n: int) -> dict[int, int]:
    return recursive_scd(n).chain_index()


@lru_cache(maxsize=None)
def _levels(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(level_masks(n, k)) for k in range(n + 1))


@lru_cache(maxsize=None)
def _blockers(n: int) -> tuple[int, ...]:
    # big-int bitsets over all 2^n subsets: everything comparable with a
    return tuple(_comparability(n))


def random_antichain(n: int, rng: random.Random, extend: bool = False, max_draws: int = 60) -> Antichain:
    """Draw random sets around a random level, keep those incomparable with what is kept.

    With ``extend`` the result is completed greedily to a maximal antichain
    (practical for n <= 10).
    """
    centre = rng.randint(0, n)
    spread = rng.choice((0, 0, 1, 2, n))
    kept: list[int] = []
    levels = _levels(n)
    for _ in range(rng.randint(1, min(max_draws, 2 * (n + 1) ** 2))):
        k = min(n, max(0, centre + rng.randint(-spread, spread)))
        m = rng.choice(levels[k])
        if all((m & ~b and b & ~m) for b in kept):
            kept.append(m)
    if extend:
        blk = _blockers(n)
        blocked = 0
        for m in kept:
            blocked |= blk[m]
        order = list(range(1 << n))
        rng.shuffle(order)
        for m in order:
            if not blocked >> m & 1:
                kept.append(m)
                blocked |= blk[m]
    return Antichain(n, frozenset(kept))


def full_level(n: int, k: int) -> Antichain:
    return Antichain(n, frozenset(m for m in range(1 << n) if popcount(m) == k))


def is_full_level(a: Antichain) -> bool:
    ranks = {popcount(m) for m in a.masks}
    return len(ranks) == 1 and len(a) == binomial_pascal(a.n, ranks.pop())


def verify_random(n: int, samples: int, seed: int = 0, extend_up_to: int = 10) -> list[CheckRecord]:
    """Lubell/LYM and the one-per-chain bound on ``samples`` random antichains."""
    rng = random.Random(f"sperner:{n}:{seed}")
    index = chain_index(n)
    nfact = factorial(n)
    worst = Fraction(0)
    fails: dict[str, dict] = {}
    tight_nonlevel = None
    for i in range(samples):
        a = random_antichain(n, rng, extend=n <= extend_up_to and i % 2 == 1)
        chains, lym = lubell_sum(a)
        worst = max(worst, lym)
        if chains > nfact or lym > 1:
            fails.setdefault("lym", {"n": n, "antichain": str(a)})
        if lym == 1 and not is_full_level(a):
            tight_nonlevel = str(a)
        if not sperner_via_chains(n, a, index, validated=True).passed:
            fails.setdefault("chains", {"n": n, "antichain": str(a)})
    return [
        check("sperner.lym", "lym" not in fails, witness=fails.get("lym"), n=n, samples=samples,
              info={"max_lym": str(worst)}),
        check("sperner.lym_equality_only_on_levels", tight_nonlevel is None,
              witness={"n": n, "antichain": tight_nonlevel}, n=n, samples=samples),
        check("sperner.chain_bound", "chains" not in fails, witness=fails.get("chains"), n=n, samples=samples),
    ]

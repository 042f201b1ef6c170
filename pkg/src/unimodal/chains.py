"""Symmetric chain decompositions of the Boolean lattice B_n.

Constructions: :func:`recursive_scd` doubles the chains of B_{n-1};
:func:`aigner_scd` grows chains greedily in lexicographic order;
:func:`gk_scd` follows bracket successors.  Chains are tuples of bitmasks,
with :class:`Subset` views built on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .binomial import binomial_pascal
from .injections import gk_chain_masks, is_chain_start
from .records import CheckRecord, check
from .subsets import Subset, elements_of, format_mask, mask_of, popcount


@dataclass(frozen=True)
class Chain:
    n: int
    masks: tuple[int, ...]

    @classmethod
    def of(cls, n: int, *sets) -> Chain:
        return cls(n, tuple(mask_of(s) for s in sets))

    @property
    def subsets(self) -> tuple[Subset, ...]:
        return tuple(Subset(self.n, m) for m in self.masks)

    @property
    def start_rank(self) -> int:
        return popcount(self.masks[0])

    @property
    def end_rank(self) -> int:
        return popcount(self.masks[-1])

    def is_saturated(self) -> bool:
        for a, b in zip(self.masks, self.masks[1:]):
            if a & ~b or popcount(b) != popcount(a) + 1:
                return False
        return True

    def is_symmetric(self) -> bool:
        return self.start_rank + self.end_rank == self.n

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.subsets)

    def __str__(self) -> str:
        return " → ".join(format_mask(m) for m in self.masks)


@dataclass(frozen=True)
class ChainDecomposition:
    n: int
    chains: tuple[Chain, ...]

    def __len__(self) -> int:
        return len(self.chains)

    def __iter__(self) -> Iterator[Chain]:
        return iter(self.chains)

    def key(self) -> frozenset[tuple[int, ...]]:
        """Order-insensitive identity: the set of chains as mask sequences."""
        return frozenset(c.masks for c in self.chains)

    def same_as(self, other: ChainDecomposition) -> bool:
        return self.n == other.n and self.key() == other.key()

    def chain_index(self) -> dict[int, int]:
        """Map every mask to the index of the chain holding it."""
        return {m: i for i, c in enumerate(self.chains) for m in c.masks}

    def __str__(self) -> str:
        return " , ".join(str(c) for c in self.chains)


def _require_n(n: int):
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")


def _recursive_masks(n: int) -> list[tuple[int, ...]]:
    chains = [(0, 1)]
    for m in range(2, n + 1):
        bit = 1 << (m - 1)
        nxt = []
        for c in chains:
            nxt.append(c + (c[-1] | bit,))
            if len(c) > 1:
                nxt.append(tuple(s | bit for s in c[:-1]))
        chains = nxt
    return chains


def recursive_scd(n: int) -> ChainDecomposition:
    """Grow the decomposition of B_{n-1}: each chain C_r..C_{n-1-r} becomes
    C_r..C_{n-1-r}, C_{n-1-r}+{n} plus C_r+{n}..C_{n-2-r}+{n} (dropped if empty)."""
    _require_n(n)
    return ChainDecomposition(n, tuple(Chain(n, c) for c in _recursive_masks(n)))


def aigner_scd(n: int) -> ChainDecomposition:
    """Lexicographic greed.

    Start each chain at the lowest-rank, lexicographically first uncommitted
    set; extend it by the lexicographically first uncommitted superset one
    rank up, until no such superset remains.
    """
    _require_n(n)
    by_rank: list[list[int]] = [[] for _ in range(n + 1)]
    for m in range(1 << n):
        by_rank[popcount(m)].append(m)
    for lvl in by_rank:
        lvl.sort(key=elements_of)
    committed = bytearray(1 << n)
    chains = []
    for lvl in by_rank:
        for start in lvl:
            if committed[start]:
                continue
            committed[start] = 1
            chain = [start]
            tail = start
            while True:
                # adding the smallest admissible element gives the lex-first superset
                for j in range(n):
                    bit = 1 << j
                    if not tail & bit and not committed[tail | bit]:
                        tail |= bit
                        break
                else:
                    break
                committed[tail] = 1
                chain.append(tail)
            chains.append(Chain(n, tuple(chain)))
    return ChainDecomposition(n, tuple(chains))


def gk_scd(n: int) -> ChainDecomposition:
    """Bracket-matching chains, one per chain start, in ascending start mask."""
    _require_n(n)
    chains = [Chain(n, gk_chain_masks(m, n)) for m in range(1 << n) if is_chain_start(m, n)]
    return ChainDecomposition(n, tuple(chains))


def validate_scd(dec: ChainDecomposition) -> list[CheckRecord]:
    n = dec.n
    seen = bytearray(1 << n)
    dup = None
    for c in dec.chains:
        for m in c.masks:
            if not 0 <= m < 1 << n:
                dup = dup if dup is not None else m
                continue
            if seen[m]:
                dup = dup if dup is not None else m
            seen[m] = 1
    missing = next((m for m in range(1 << n) if not seen[m]), None)
    partition_ok = dup is None and missing is None
    unsat = next((c for c in dec.chains if not c.masks or not c.is_saturated()), None)
    asym = next((c for c in dec.chains if c.masks and not c.is_symmetric()), None)
    expected = binomial_pascal(n, n // 2)
    return [
        check("scd.partition", partition_ok,
              witness={"n": n, "duplicate": dup, "missing": missing}, n=n),
        check("scd.saturated", unsat is None,
              witness={"n": n, "chain": str(unsat)}, n=n),
        check("scd.symmetric", asym is None,
              witness={"n": n, "chain": str(asym)}, n=n),
        check("scd.chain_count", len(dec) == expected,
              witness={"n": n, "chains": len(dec), "expected": expected}, n=n,
              info={"chains": len(dec)}),
    ]


def relabel_reverse(dec: ChainDecomposition) -> ChainDecomposition:
    """Apply i -> n+1-i to every element of every set."""
    n = dec.n

    def flip(m: int) -> int:
        return int(format(m, f"0{n}b")[::-1], 2) if n else 0

    return ChainDecomposition(
        n, tuple(Chain(n, tuple(flip(m) for m in c.masks)) for c in dec.chains))


def iterate_to_middle(mask: int, n: int) -> int:
    """Follow bracket successors from ``mask`` and return the final rank reached."""
    chain = gk_chain_masks(mask, n)
    return popcount(chain[-1])

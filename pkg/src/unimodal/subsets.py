"""Subsets of {1, ..., n} as fixed-width bitmasks (bit i-1 <=> element i)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_N = 63


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for i in elements:
        m |= 1 << (i - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def format_mask(mask: int) -> str:
    if mask == 0:
        return "∅"
    return "{" + ",".join(map(str, elements_of(mask))) + "}"


def level_masks(n: int, k: int) -> list[int]:
    """All k-subsets of {1..n} as masks, in ascending mask order."""
    if k < 0 or k > n:
        return []
    return sorted(mask_of(c) for c in combinations(range(1, n + 1), k))


@dataclass(frozen=True, order=True)
class Subset:
    n: int
    mask: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise ValueError(f"ground size must be in [0, {MAX_N}], got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask} does not fit in {self.n} bits")

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> Subset:
        elements = list(elements)
        for i in elements:
            if not 1 <= i <= n:
                raise ValueError(f"element {i} outside 1..{n}")
        return cls(n, mask_of(elements))

    @classmethod
    def parse(cls, n: int, text: str) -> Subset:
        """Parse ``"1,2,4"`` (1-based, comma separated); empty string is the empty set."""
        text = text.strip().strip("{}")
        if not text or text == "∅":
            return cls(n, 0)
        return cls.of(n, (int(t) for t in text.split(",")))

    def elements(self) -> tuple[int, ...]:
        return elements_of(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.n and bool(self.mask >> (i - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements())

    def issubset(self, other: Subset) -> bool:
        return self.mask & ~other.mask == 0

    def word(self) -> str:
        """Bracket word: ``[`` at position i iff i is in the set."""
        return "".join("[" if self.mask >> i & 1 else "]" for i in range(self.n))

    def lex_key(self) -> tuple[int, ...]:
        return self.elements()

    def __str__(self) -> str:
        return format_mask(self.mask)

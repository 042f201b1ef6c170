"""Two explicit successor rules from k-subsets to (k+1)-subsets.

The prefix swap complements an initial segment {1..r}; it is injective on
k-subsets with k < n/2 but the output need not contain the input.  The
bracket rule (Greene-Kleitman) reads S as a word over ``[`` / ``]`` and
turns the last unmatched ``]`` into ``[``.  Its output always
contains the input, and iterating it traces out a symmetric chain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .subsets import Subset


def prefix_swap_index(mask: int, n: int) -> int | None:
    """Smallest odd r with |S ∩ {1..r}| = (r-1)/2, or None if there is none."""
    count = 0
    for r in range(1, n + 1):
        count += mask >> (r - 1) & 1
        if r & 1 and 2 * count == r - 1:
            return r
    return None


def prefix_swap_mask(mask: int, n: int) -> tuple[int, int]:
    r = prefix_swap_index(mask, n)
    if r is None:
        raise ValueError(f"no swap index for mask {mask} at n={n}")
    prefix = (1 << r) - 1
    return (prefix & ~mask) | (mask & ~prefix), r


def prefix_swap(s: Subset) -> tuple[Subset, int]:
    """Image of ``s`` under the prefix swap, together with the swap index r."""
    if 2 * len(s) >= s.n:
        raise ValueError(f"prefix swap needs |S| < n/2, got |S|={len(s)}, n={s.n}")
    mask, r = prefix_swap_mask(s.mask, s.n)
    return Subset(s.n, mask), r


def prefix_swap_successor(s: Subset) -> Subset:
    return prefix_swap(s)[0]


def prefix_swap_inverse(t: Subset) -> Subset:
    """Undo the swap: the prefix ends at the first r where |T ∩ {1..r}| = (r+1)/2."""
    count = 0
    for r in range(1, t.n + 1):
        count += t.mask >> (r - 1) & 1
        if r & 1 and 2 * count == r + 1:
            prefix = (1 << r) - 1
            return Subset(t.n, (prefix & ~t.mask) | (t.mask & ~prefix))
    raise ValueError(f"{t} is not in the image of the prefix swap")


@dataclass(frozen=True)
class MatchAnalysis:
    pairs: tuple[tuple[int, int], ...]  # (open, close), 1-based, in closing order
    unmatched_close: tuple[int, ...]
    unmatched_open: tuple[int, ...]


def analyze_mask(mask: int, n: int) -> MatchAnalysis:
    stack: list[int] = []
    pairs = []
    closes = []
    for i in range(1, n + 1):
        if mask >> (i - 1) & 1:
            stack.append(i)
        elif stack:
            pairs.append((stack.pop(), i))
        else:
            closes.append(i)
    return MatchAnalysis(tuple(pairs), tuple(closes), tuple(stack))


def gk_analyze(s: Subset) -> MatchAnalysis:
    return analyze_mask(s.mask, s.n)


def gk_successor_mask(mask: int, n: int) -> int | None:
    closes = analyze_mask(mask, n).unmatched_close
    if not closes:
        return None
    return mask | 1 << (closes[-1] - 1)


def gk_predecessor_mask(mask: int, n: int) -> int | None:
    opens = analyze_mask(mask, n).unmatched_open
    if not opens:
        return None
    prev = mask & ~(1 << (opens[0] - 1))
    if gk_successor_mask(prev, n) != mask:
        return None
    return prev


def gk_successor(s: Subset) -> Subset | None:
    """Flip the last unmatched ``]``; None when the word has no unmatched ``]``."""
    m = gk_successor_mask(s.mask, s.n)
    return None if m is None else Subset(s.n, m)


def gk_predecessor(s: Subset) -> Subset | None:
    """Flip the first unmatched ``[`` back, if that round-trips; None at a chain start."""
    m = gk_predecessor_mask(s.mask, s.n)
    return None if m is None else Subset(s.n, m)


def gk_chain_masks(mask: int, n: int) -> tuple[int, ...]:
    while (p := gk_predecessor_mask(mask, n)) is not None:
        mask = p
    out = [mask]
    while (mask := gk_successor_mask(mask, n)) is not None:
        out.append(mask)
    return tuple(out)


def gk_chain_of(s: Subset):
    from .chains import Chain

    return Chain(s.n, gk_chain_masks(s.mask, s.n))


def is_chain_start(mask: int, n: int) -> bool:
    return gk_predecessor_mask(mask, n) is None


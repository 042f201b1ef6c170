from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from oracles import match_brackets
from unimodal.injections import (analyze_mask, gk_analyze, gk_chain_of, gk_predecessor, gk_successor,
                                 is_chain_start, prefix_swap, prefix_swap_index, prefix_swap_inverse)
from unimodal.subsets import Subset, mask_of


def S(n, *els):
    return Subset.of(n, els)


def test_worked_example():
    t, r = prefix_swap(S(11, 1, 2, 4, 11))
    assert t.elements() == (3, 5, 6, 7, 11) and r == 7
    assert str(t) == "{3,5,6,7,11}"
    assert not S(11, 1, 2, 4, 11).issubset(t)


@pytest.mark.parametrize("n,els,want,r", [(1, (), (1,), 1), (4, (2,), (1, 2), 1)])
def test_prefix_swap_small(n, els, want, r):
    t, got_r = prefix_swap(S(n, *els))
    assert t.elements() == want and got_r == r


def test_prefix_swap_rejects_large_sets():
    with pytest.raises(ValueError):
        prefix_swap(S(4, 1, 2))


def _naive_swap(n, s):
    """Direct reading of the rule on Python sets."""
    for r in range(1, n + 1, 2):
        head = set(range(1, r + 1))
        if len(s & head) == (r - 1) // 2:
            return (head - s) | (s - head), r
    raise AssertionError


@pytest.mark.parametrize("n", range(1, 13))
def test_prefix_swap_injective_against_naive(n):
    for k in range((n + 1) // 2):
        images = set()
        for c in combinations(range(1, n + 1), k):
            want, r = _naive_swap(n, set(c))
            t, got_r = prefix_swap(S(n, *c))
            assert set(t.elements()) == want and got_r == r
            assert len(t) == k + 1
            assert prefix_swap_inverse(t) == S(n, *c)
            images.add(t.mask)
        assert len(images) == len(list(combinations(range(n), k)))


@given(st.integers(1, 40).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n), max_size=(n - 1) // 2))))
def test_prefix_swap_round_trip(ns):
    n, s = ns
    t, r = prefix_swap(Subset.of(n, s))
    assert r % 2 == 1 and len(t) == len(s) + 1
    assert prefix_swap_inverse(t) == Subset.of(n, s)


def test_no_index_for_large_sets():
    assert prefix_swap_index(mask_of([1]), 1) is None


@pytest.mark.parametrize("els,pairs,closes,opens", [
    ((), (), (1, 2, 3, 4), ()),
    ((1, 2), ((2, 3), (1, 4)), (), ()),
    ((2,), ((2, 3),), (1, 4), ()),
])
def test_match_examples(els, pairs, closes, opens):
    a = gk_analyze(S(4, *els))
    assert set(a.pairs) == set(pairs) and a.unmatched_close == closes and a.unmatched_open == opens


def test_words():
    assert S(4).word() == "]]]]"
    assert S(4, 1, 2).word() == "[[]]"
    assert S(4, 2).word() == "][]]"


@given(st.integers(0, 24).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << n) - 1 if n else 0))))
def test_matching_against_oracle(nm):
    n, m = nm
    s = Subset(n, m)
    pairs, closes, opens = match_brackets(s.word())
    a = analyze_mask(m, n)
    assert set(a.pairs) == set(pairs) and list(a.unmatched_close) == closes and list(a.unmatched_open) == opens
    # unmatched closes all sit left of unmatched opens
    assert not closes or not opens or max(closes) < min(opens)


def test_successor_examples():
    assert gk_successor(S(4)) == S(4, 4)
    assert gk_successor(S(4, 1, 2)) is None
    assert gk_successor(S(4, 2)) == S(4, 2, 4)


def test_predecessor_examples():
    assert gk_predecessor(S(4, 4)) == S(4)
    assert gk_predecessor(S(4, 2)) is None
    assert gk_predecessor(S(3, 1)) is None


def test_chain_examples():
    assert [c.elements() for c in gk_chain_of(S(3, 1)).subsets] == [(1,), (1, 3)]
    assert [c.elements() for c in gk_chain_of(S(3)).subsets] == [(), (3,), (2, 3), (1, 2, 3)]
    assert [c.elements() for c in gk_chain_of(S(2, 1)).subsets] == [(1,)]


@pytest.mark.parametrize("n", range(0, 11))
def test_successor_properties_exhaustive(n):
    for m in range(1 << n):
        s = Subset(n, m)
        t = gk_successor(s)
        if t is not None:
            assert s.issubset(t) and len(t) == len(s) + 1
            assert gk_predecessor(t) == s
            # matched pairs survive the flip
            assert set(gk_analyze(s).pairs) <= set(gk_analyze(t).pairs)
        c = gk_chain_of(s)
        assert s in c.subsets
        assert len(c.subsets[0]) + len(c.subsets[-1]) == n
        assert is_chain_start(c.masks[0], n)

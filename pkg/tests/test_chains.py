import pytest

from oracles import all_subsets
from unimodal.binomial import binomial_pascal
from unimodal.chains import (Chain, ChainDecomposition, aigner_scd, gk_scd, recursive_scd, relabel_reverse,
                             validate_scd)
from unimodal.subsets import Subset


def sets_of(dec):
    return {tuple(s.elements() for s in c.subsets) for c in dec.chains}


def test_recursive_small_cases_display():
    assert str(recursive_scd(1)) == "∅ → {1}"
    assert str(recursive_scd(2)) == "∅ → {1} → {1,2} , {2}"
    assert str(recursive_scd(3)) == "∅ → {1} → {1,2} → {1,2,3} , {3} → {1,3} , {2} → {2,3}"


def test_aigner_small_cases():
    for n in (1, 2, 3):
        assert aigner_scd(n).same_as(recursive_scd(n))


def test_gk_small_cases():
    assert sets_of(gk_scd(1)) == {((), (1,))}
    assert sets_of(gk_scd(2)) == {((), (2,), (1, 2)), ((1,),)}
    assert sets_of(gk_scd(3)) == {((), (3,), (2, 3), (1, 2, 3)), ((1,), (1, 3)), ((2,), (1, 2))}


def test_relabel():
    assert relabel_reverse(gk_scd(2)).same_as(recursive_scd(2))
    assert relabel_reverse(recursive_scd(1)).same_as(recursive_scd(1))
    assert relabel_reverse(gk_scd(3)).same_as(recursive_scd(3))


def _oracle_valid(dec):
    """Independent check on frozensets: partition, cover steps, symmetric ends, count."""
    n = dec.n
    seen = []
    for c in dec.chains:
        sets = [frozenset(s.elements()) for s in c.subsets]
        seen.extend(sets)
        for a, b in zip(sets, sets[1:]):
            if not (a < b and len(b) == len(a) + 1):
                return False
        if len(sets[0]) + len(sets[-1]) != n:
            return False
    return sorted(seen, key=sorted) == sorted(all_subsets(n), key=sorted) and \
        len(dec.chains) == binomial_pascal(n, n // 2)


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("build", [recursive_scd, aigner_scd, gk_scd])
def test_constructions_valid(build, n):
    dec = build(n)
    assert all(validate_scd(dec))
    assert _oracle_valid(dec)


@pytest.mark.parametrize("n", range(1, 11))
def test_equivalences(n):
    rec = recursive_scd(n)
    assert aigner_scd(n).same_as(rec)
    assert relabel_reverse(gk_scd(n)).same_as(rec)


def test_validator_catches_truncation():
    dec = recursive_scd(3)
    first = dec.chains[0]
    broken = ChainDecomposition(3, (Chain(3, first.masks[:-1]),) + dec.chains[1:]
                                + (Chain(3, first.masks[-1:]),))
    recs = {r.id: r for r in validate_scd(broken)}
    assert recs["scd.partition"].passed
    assert not recs["scd.symmetric"].passed
    assert not recs["scd.chain_count"].passed
    assert recs["scd.symmetric"].witness is not None


def test_validator_catches_overlap_and_gaps():
    n = 2
    bad = ChainDecomposition(n, (Chain.of(n, Subset.of(n, []), Subset.of(n, [1, 2])),
                                 Chain.of(n, Subset.of(n, [1]))))
    recs = {r.id: r for r in validate_scd(bad)}
    assert not recs["scd.partition"].passed
    assert not recs["scd.saturated"].passed


def test_recursive_n1_single_chain():
    recs = validate_scd(recursive_scd(1))
    assert all(recs) and len(recursive_scd(1)) == 1

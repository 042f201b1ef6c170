import random

import pytest
from hypothesis import given, strategies as st

from oracles import convolve
from unimodal import zpoly as zp
from unimodal.binomial import binomial_pascal

P = zp.ZPolynomial.from_dense


def test_darga_examples():
    assert zp.darga(P([0, 0, 0, 0, 1, 1])) == 9
    assert zp.darga(zp.ZPolynomial.monomial(3)) == 6
    assert zp.darga(zp.ONE) == 0
    with pytest.raises(ValueError):
        zp.darga(zp.ZERO)


@pytest.mark.parametrize("coeffs,want", [([1, 2, 1], True), ([1, 0, 1], False), ([0, 1, 2, 1], True),
                                         ([1, 2], False), ([1, 3, 2, 3, 1], False)])
def test_is_z(coeffs, want):
    assert zp.is_z(P(coeffs)) is want


def test_sum_examples():
    assert zp.add_same_darga(P([0, 1, 1, 1]), P([0, 0, 1])) == P([0, 1, 2, 1])
    assert zp.add_same_darga(zp.atom(1, 3), zp.atom(2, 2)) == P([0, 1, 2, 1])
    assert zp.add_same_darga(zp.ONE, zp.ONE) == P([2])
    with pytest.raises(ValueError):
        zp.add_same_darga(zp.atom(0, 2), zp.atom(0, 1))
    with pytest.raises(zp.NotZPolynomial):
        zp.mul(P([1, 0, 1]), zp.ONE)


def test_product_examples():
    assert zp.mul(P([0, 1, 1]), P([1, 1])) == P([0, 1, 2, 1])
    assert zp.mul(P([1, 1]), P([1, 1])) == P([1, 2, 1])
    assert zp.mul(zp.atom(0, 2), zp.atom(0, 2)) == P([1, 2, 3, 2, 1])


def test_atoms():
    assert zp.atom(0, 0) == zp.ONE
    assert zp.atom(1, 6).dense() == [0, 1, 1, 1, 1, 1, 1]
    assert zp.darga(zp.atom(2, 3)) == 5


def test_decompose_examples():
    parts = zp.decompose_atoms(P([1, 2, 1]))
    assert parts == [(zp.atom(0, 2), 1), (zp.atom(1, 1), 1)]
    assert zp.decompose_atoms(zp.DIE) == [(zp.DIE, 1)]
    with pytest.raises(zp.NotZPolynomial):
        zp.decompose_atoms(P([1, 0, 1]))


@pytest.mark.parametrize("n,row", [(0, [1]), (2, [1, 2, 1]), (4, [1, 4, 6, 4, 1])])
def test_binomial_gf(n, row):
    assert zp.binomial_gf(n).dense() == row


def test_binomial_gf_to_100():
    for n in range(101):
        p = zp.binomial_gf(n)
        assert zp.is_z(p) and zp.darga(p) == n
        assert p.dense() == [binomial_pascal(n, k) for k in range(n + 1)]


def test_gambling_examples():
    one = zp.gambling_gf(0, 1, 0)
    assert one == zp.DIE and zp.darga(one) == 7
    two = zp.gambling_gf(0, 2, 0)
    assert two.dense() == [0, 0, 1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1]
    assert zp.gambling_gf(1, 0, 1) == P([1, 1]) * zp.atom(1, 4)
    assert zp.darga(zp.gambling_gf(1, 0, 1)) == 6


def test_dice_peak_and_brute_force():
    die = [0, 1, 1, 1, 1, 1, 1]
    dense = [1]
    for n in range(1, 21):
        dense = convolve(dense, die)
        assert zp.gambling_gf(0, n, 0).dense() == dense
        lo, hi = zp.dice_peak(n)
        assert lo <= 7 * n // 2 <= (7 * n + 1) // 2 <= hi
        if n > 1:
            assert (lo, hi) == (7 * n // 2, (7 * n + 1) // 2)


@pytest.mark.parametrize("a,b,c,d", [(a, b, c, d) for a in range(4) for b in range(a, 5)
                                     for c in range(4) for d in range(c, 5)])
def test_atom_product_pattern(a, b, c, d):
    want = convolve(zp.atom(a, b).dense(), zp.atom(c, d).dense())
    assert [zp.atom_product_coeff(a, b, c, d, e) for e in range(b + d + 1)] == want


def _random_z(rng):
    d = rng.randint(0, 30)
    p = zp.ZERO
    for i in rng.sample(range(d // 2 + 1), rng.randint(1, d // 2 + 1)):
        p = p + zp.atom(i, d - i).scale(rng.randint(1, 4))
    return p


@given(st.integers(0, 10 ** 6))
def test_closure(seed):
    rng = random.Random(seed)
    p, q = _random_z(rng), _random_z(rng)
    r = zp.mul(p, q)
    assert zp.is_z(r) and zp.darga(r) == zp.darga(p) + zp.darga(q)
    assert r.dense() == convolve(p.dense(), q.dense())
    assert zp.recompose(zp.decompose_atoms(r)) == r


def test_str():
    assert str(P([1, 2, 1])) == "1+2x+x^2"
    assert str(zp.ZERO) == "0"

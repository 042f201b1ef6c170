import math

import pytest

from oracles import factorial_binomial, trial_division_primes
from unimodal import chebyshev as cb


def test_sieve_examples():
    t = cb.sieve(10)
    assert list(t.primes) == [2, 3, 5, 7]
    assert t.theta(10) == pytest.approx(math.log(210), rel=1e-12)
    assert list(cb.sieve(2).primes) == [2]
    assert cb.sieve(30).pi(30) == 10


def test_sieve_against_trial_division():
    assert [int(p) for p in cb.sieve(5000).primes] == trial_division_primes(5000)


def test_sieve_rejects_tiny_limit():
    with pytest.raises(ValueError):
        cb.sieve(1)


@pytest.mark.parametrize("n,prod", [(1, 2), (4, 35), (10, 11 * 13 * 17 * 19)])
def test_central_divisibility_examples(n, prod):
    assert cb.primorial_between(n) == prod
    r = cb.central_divisibility(n)
    assert r.passed
    assert factorial_binomial(2 * n, n) % prod == 0
    assert cb.product_bound(n).passed and prod <= 4 ** n


def test_central_n4_quotient():
    assert cb.central_divisibility(4).info["quotient"] == 2


def test_theta_gap_examples():
    r = cb.theta_gap(10)
    assert r.passed and r.info["gap"] == pytest.approx(10.740, abs=1e-3)
    assert r.info["bound"] == pytest.approx(13.863, abs=1e-3)
    r = cb.theta_gap(1)
    assert r.passed and r.info["gap"] == pytest.approx(math.log(2))
    assert cb.theta_gap(1000).info["margin"] > 0


def test_theta_linear_examples():
    r = cb.theta_linear(10)
    assert r.passed and r.info["theta"] == pytest.approx(5.347, abs=1e-3)
    r = cb.theta_linear(2)
    assert r.passed and r.info["theta"] == pytest.approx(0.693, abs=1e-3)


def test_theta_against_exact_primorial():
    t = cb.sieve(3000)
    for n in range(2, 3001, 37):
        assert t.theta(n) == pytest.approx(math.log(cb.primorial(n, t)), rel=1e-9)


def test_pi_comparison_examples():
    rec = cb.pi_comparison(100)
    rows = {r["x"]: r for r in rec.info["rows"]}
    assert rows[100]["pi"] == 25 and rows[100]["bound"] == pytest.approx(30.1, abs=0.05)
    assert rows[3]["pi"] == 2 and rows[3]["bound"] == pytest.approx(3.79, abs=0.01)
    assert rec.passed and rec.info["flagged"] == []


def test_sundaram():
    for limit in (2, 3, 10, 100, 9973, 10_000):
        assert cb.sundaram_count(limit) == len(trial_division_primes(limit))


def test_sweep_small():
    recs = cb.theta_sweep(5000)
    assert all(recs) and [r.id for r in recs] == ["chebyshev.theta_gap", "chebyshev.theta_halving",
                                                  "chebyshev.theta_linear"]


def test_checkpoints():
    pts = cb.checkpoints(1000)
    assert pts[0] == 3 and pts[-1] == 1000 and 10 in pts and 100 in pts

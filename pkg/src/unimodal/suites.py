"""Verification sweeps over every module, grouped into suites.

Each suite returns a :class:`VerificationReport`; :data:`PROFILES` holds the
parameter bounds for the ``all`` command.
"""

from __future__ import annotations

import math
import random
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, replace

from . import binomial as bn
from . import chains as ch
from . import chebyshev as cb
from . import injections as inj
from . import operators as op
from . import sperner as sp
from . import zpoly as zp
from .records import CheckRecord, check, merge
from .report import VerificationReport
from .subsets import Subset, format_mask, level_masks, popcount


@dataclass(frozen=True)
class Profile:
    binomial_n_max: int = 60
    inject_n_max: int = 20
    gk_n_max: int = 16
    chains_n_max: int = 16
    compare_n_max: int = 12
    sperner_exhaustive_n_max: int = 5
    sperner_random_n_max: int = 14
    sperner_samples: int = 10_000
    sperner_levels_n_max: int = 10
    zpoly_binomial_n_max: int = 100
    dice_n_max: int = 50
    atom_max: int = 8
    closure_samples: int = 1000
    eq1_n_max: int = 12
    eq2_n_max: int = 10
    rank_n_max: int = 12
    kernel_n_max: int = 10
    gf_prime: int = 101
    cheb_exact_n_max: int = 2000
    cheb_theta_n_max: int = 1_000_000
    cheb_pi_limit: int = 1_000_000
    primorial_n_max: int = 10_000
    seed: int = 0


PROFILES = {
    "desk": Profile(),
    "smoke": Profile(
        binomial_n_max=20, inject_n_max=10, gk_n_max=8, chains_n_max=8, compare_n_max=6,
        sperner_exhaustive_n_max=4, sperner_random_n_max=6, sperner_samples=200,
        sperner_levels_n_max=6, zpoly_binomial_n_max=20, dice_n_max=6, atom_max=3,
        closure_samples=50, eq1_n_max=6, eq2_n_max=5, rank_n_max=6, kernel_n_max=5,
        cheb_exact_n_max=100, cheb_theta_n_max=10_000, cheb_pi_limit=10_000, primorial_n_max=500,
    ),
}

# reference decompositions for n = 1, 2, 3, in display order
REFERENCE_CHAINS = {
    1: "∅ → {1}",
    2: "∅ → {1} → {1,2} , {2}",
    3: "∅ → {1} → {1,2} → {1,2,3} , {3} → {1,3} , {2} → {2,3}",
}


@contextmanager
def _timed(rep: VerificationReport):
    t0 = time.perf_counter()
    try:
        yield rep
    finally:
        rep.wall_time = time.perf_counter() - t0


# -- binomials ---------------------------------------------------------------

def binomial_suite(n_max: int = 60) -> VerificationReport:
    rep = VerificationReport("binomial", {"n_max": n_max})
    with _timed(rep):
        for n in range(n_max + 1):
            rep.records.append(merge("binomial.monotone", bn.verify_monotone(n), n=n))
        for n in range(n_max + 1):
            bad_k = next((k for k in range(n + 1)
                          if bn.binomial_pascal(n, k) != bn.binomial_factorial(n, k)
                          or bn.factorial_remainder(n, k)), None)
            row = [bn.binomial_pascal(n, k) for k in range(n + 1)]
            sum_ok = sum(row) == 1 << n
            below = n == 0 or max(row) < 1 << n
            rep.records.append(check("binomial.agreement", bad_k is None and sum_ok and below,
                                     witness={"n": n, "k": bad_k, "row_sum_ok": sum_ok, "below_2n": below},
                                     n=n))
    return rep


# -- injections ---------------------------------------------------------------

def _prefix_swap_injective(n: int) -> CheckRecord:
    for k in range((n + 1) // 2):
        seen: dict[int, int] = {}
        for s in level_masks(n, k):
            t, _ = inj.prefix_swap_mask(s, n)
            if popcount(t) != k + 1:
                return check("inject.prefix_swap", False, witness={"n": n, "set": format_mask(s), "image": format_mask(t)}, n=n)
            if t in seen:
                return check("inject.prefix_swap", False,
                             witness={"n": n, "sets": [format_mask(seen[t]), format_mask(s)], "image": format_mask(t)}, n=n)
            seen[t] = s
    return check("inject.prefix_swap", True, n=n)


def _gk_properties(n: int, chain_of_exhaustive: bool) -> CheckRecord:
    half_up = (n + 1) // 2
    for s in range(1 << n):
        a = inj.analyze_mask(s, n)
        t = inj.gk_successor_mask(s, n)
        if t is not None:
            new = t & ~s
            ok = (s & ~t == 0 and popcount(new) == 1
                  and inj.gk_predecessor_mask(t, n) == s
                  and set(a.pairs) <= set(inj.analyze_mask(t, n).pairs))
            if not ok:
                return check("inject.gk", False, witness={"n": n, "set": format_mask(s)}, n=n)
        if 2 * popcount(s) < n and ch.iterate_to_middle(s, n) < half_up:
            return check("inject.gk", False, witness={"n": n, "set": format_mask(s), "stalls": True}, n=n)
        if chain_of_exhaustive:
            c = inj.gk_chain_masks(s, n)
            if popcount(c[0]) + popcount(c[-1]) != n or s not in c:
                return check("inject.gk", False, witness={"n": n, "set": format_mask(s), "chain": list(c)}, n=n)
    return check("inject.gk", True, n=n)


def injections_suite(n_max: int = 20, gk_n_max: int = 16) -> VerificationReport:
    rep = VerificationReport("injections", {"n_max": n_max, "gk_n_max": gk_n_max})
    with _timed(rep):
        s = Subset.of(11, [1, 2, 4, 11])
        image, r = inj.prefix_swap(s)
        rep.records.append(check("inject.worked_example", image.elements() == (3, 5, 6, 7, 11) and r == 7,
                                 witness={"image": str(image), "r": r}, n=11, set="1,2,4,11",
                                 info={"image": str(image), "r": r}))
        rep.records.append(check("inject.prefix_swap_not_containing", not s.issubset(image), n=11))
        for n in range(1, n_max + 1):
            rep.records.append(_prefix_swap_injective(n))
        for n in range(1, gk_n_max + 1):
            rep.records.append(_gk_properties(n, chain_of_exhaustive=n <= 12))
    return rep


# -- chains --------------------------------------------------------------------

METHODS = {"recursive": ch.recursive_scd, "aigner": ch.aigner_scd, "gk": ch.gk_scd}


def compare_decompositions(n: int) -> list[CheckRecord]:
    rec = ch.recursive_scd(n)
    aig = ch.aigner_scd(n)
    gk = ch.gk_scd(n)
    flipped = ch.relabel_reverse(gk)
    gk_same = flipped.same_as(rec)
    both_valid = all(r.passed for r in ch.validate_scd(gk) + ch.validate_scd(rec))
    return [
        check("chains.aigner_equals_recursive", aig.same_as(rec), n=n),
        # a mismatch here is a finding, not a failure, as long as both are valid
        check("chains.gk_reversed_equals_recursive", gk_same or both_valid, n=n,
              info={"identical": gk_same}),
    ]


def chains_suite(n_max: int = 16, compare_n_max: int = 12) -> VerificationReport:
    rep = VerificationReport("chains", {"n_max": n_max, "compare_n_max": compare_n_max})
    with _timed(rep):
        for n, text in REFERENCE_CHAINS.items():
            got = str(ch.recursive_scd(n))
            rep.records.append(check("chains.reference_display", got == text,
                                     witness={"n": n, "got": got, "expected": text}, n=n))
        for n in range(1, n_max + 1):
            for name, build in METHODS.items():
                dec = build(n)
                rep.records.append(merge("chains.valid_scd", ch.validate_scd(dec), n=n, method=name,
                                         info={"chains": len(dec)}))
        for n in range(1, compare_n_max + 1):
            rep.records.extend(compare_decompositions(n))
    return rep


# -- Sperner ---------------------------------------------------------------------

def sperner_suite(exhaustive_n_max: int = 5, random_n_max: int = 14, samples: int = 10_000,
                  levels_n_max: int = 10, seed: int = 0) -> VerificationReport:
    rep = VerificationReport("sperner", {"exhaustive_n_max": exhaustive_n_max, "random_n_max": random_n_max,
                                         "samples": samples, "seed": seed})
    with _timed(rep):
        for n in range(0, exhaustive_n_max + 1):
            best = sp.max_antichain_exhaustive(n)
            a, b = sp.count_antichains(n), sp.count_antichains_split(n)
            rep.records.append(check("sperner.max_antichain", best == bn.binomial_pascal(n, n // 2), n=n,
                                     info={"max": best}))
            rep.records.append(check("sperner.antichain_count", a == b, n=n,
                                     witness={"n": n, "recursion": a, "split": b}, info={"count": a}))
        for n in range(1, levels_n_max + 1):
            sums = [sp.lubell_sum(sp.full_level(n, k))[1] for k in range(n + 1)]
            rep.records.append(check("sperner.full_level_tight", all(x == 1 for x in sums), n=n))
        for n in range(1, random_n_max + 1):
            rep.records.extend(sp.verify_random(n, samples, seed=seed))
    return rep


# -- Z-polynomials ------------------------------------------------------------------

def random_z(rng: random.Random, max_degree: int = 40) -> zp.ZPolynomial:
    """A random positive combination of atoms sharing one darga."""
    d = rng.randint(0, max_degree)
    lows = rng.sample(range(d // 2 + 1), rng.randint(1, d // 2 + 1))
    p = zp.ZERO
    for i in lows:
        p = p + zp.atom(i, d - i).scale(rng.randint(1, 5))
    return p


def zpoly_suite(binomial_n_max: int = 100, dice_n_max: int = 50, atom_max: int = 8,
                closure_samples: int = 1000, seed: int = 0) -> VerificationReport:
    rep = VerificationReport("zpoly", {"binomial_n_max": binomial_n_max, "dice_n_max": dice_n_max,
                                       "atom_max": atom_max, "closure_samples": closure_samples, "seed": seed})
    with _timed(rep):
        tbl = bn.BinomialTable(binomial_n_max)
        bad = None
        for n in range(binomial_n_max + 1):
            try:
                p = zp.binomial_gf(n, tbl)
            except AssertionError:
                bad = n
                break
            if not zp.is_z(p) or zp.darga(p) != n:
                bad = n
                break
        rep.records.append(check("zpoly.binomial_gf", bad is None, witness={"n": bad}, n_max=binomial_n_max))

        # dice, built incrementally: the top coefficient sits at the expected gain 7n/2
        bad = None
        p = zp.ONE
        for n in range(1, dice_n_max + 1):
            p = zp.mul(p, zp.DIE)
            top = max(p.coeffs)
            peak_ok = p[7 * n // 2] == top and p[(7 * n + 1) // 2] == top
            if not (zp.is_z(p) and zp.darga(p) == 7 * n and peak_ok):
                bad = n
                break
        rep.records.append(check("zpoly.dice", bad is None, witness={"n": bad}, n_max=dice_n_max))

        bad = None
        for m in range(4):
            for k in range(4):
                p = zp.gambling_gf(m, 0, k)
                for n in range(dice_n_max + 1):
                    if n:
                        p = zp.mul(p, zp.DIE)
                    if not zp.is_z(p) or zp.darga(p) != m + 7 * n + 5 * k:
                        bad = (m, n, k)
                        break
                    if n in (0, 1, 7) and p != zp.gambling_gf(m, n, k):
                        bad = (m, n, k)
                        break
        rep.records.append(check("zpoly.gambling", bad is None, witness={"mnk": bad},
                                 m_max=3, k_max=3, n_max=dice_n_max))

        bad = None
        for a in range(atom_max + 1):
            for b in range(a, atom_max + 1):
                for c in range(atom_max + 1):
                    for d in range(c, atom_max + 1):
                        prod = zp.mul(zp.atom(a, b), zp.atom(c, d))
                        want = [zp.atom_product_coeff(a, b, c, d, e) for e in range(b + d + 1)]
                        if prod.dense() != want or zp.darga(prod) != a + b + c + d:
                            bad = (a, b, c, d)
        rep.records.append(check("zpoly.atom_products", bad is None, witness={"abcd": bad}, atom_max=atom_max))

        rng = random.Random(f"zpoly:{seed}")
        bad = None
        for _ in range(closure_samples):
            p, q = random_z(rng), random_z(rng)
            r = p * q
            ok = zp.is_z(r) and zp.darga(r) == zp.darga(p) + zp.darga(q)
            for poly in (p, q, r):
                ok = ok and zp.recompose(zp.decompose_atoms(poly)) == poly
            # a second polynomial of the same darga as p, for the sum rule
            d = zp.darga(p)
            i = rng.randint(0, d // 2)
            s = p + zp.atom(i, d - i)
            ok = ok and zp.is_z(s) and zp.darga(s) == d
            if not ok:
                bad = {"p": str(p), "q": str(q)}
                break
        rep.records.append(check("zpoly.closure", bad is None, witness=bad, samples=closure_samples))
    return rep


# -- operators ---------------------------------------------------------------------

def operators_suite(eq1_n_max: int = 12, eq2_n_max: int = 10, rank_n_max: int = 12,
                    kernel_n_max: int = 10, fields=(None, 101)) -> VerificationReport:
    rep = VerificationReport("operators", {"eq1_n_max": eq1_n_max, "eq2_n_max": eq2_n_max,
                                           "rank_n_max": rank_n_max, "kernel_n_max": kernel_n_max,
                                           "fields": ["rational" if p is None else f"gf{p}" for p in fields]})
    with _timed(rep):
        for p in fields:
            for n in range(eq1_n_max + 1):
                for k in range(n + 1):
                    rep.records.append(op.check_eq1(n, k, p))
            for n in range(eq2_n_max + 1):
                for k in range(1, n + 1):
                    for r in range(1, k + 1):
                        rep.records.append(op.check_eq2(n, k, r, p))
            for n in range(1, rank_n_max + 1):
                for k in range(n):
                    rep.records.append(op.check_injectivity(n, k, p))
            for n in range(kernel_n_max + 1):
                for k in range(n + 1):
                    for r in range(1, k + 2):
                        rep.records.append(op.check_kernel_scalar(n, k, r, p))
        for n in range(1, rank_n_max + 1):
            rep.records.append(merge("operators.transpose", [op.check_transpose(n, k) for k in range(n)], n=n))
    return rep


# -- Chebyshev -------------------------------------------------------------------------

def chebyshev_suite(exact_n_max: int = 2000, theta_n_max: int = 1_000_000,
                    pi_limit: int = 1_000_000, primorial_n_max: int = 10_000) -> VerificationReport:
    rep = VerificationReport("chebyshev", {"exact_n_max": exact_n_max, "theta_n_max": theta_n_max,
                                           "pi_limit": pi_limit, "primorial_n_max": primorial_n_max})
    with _timed(rep):
        limit = max(2 * exact_n_max, 2 * theta_n_max, pi_limit, primorial_n_max, 2)
        table = cb.sieve(limit)
        rep.records.append(merge("chebyshev.divides_central",
                                 (cb.central_divisibility(n, table) for n in range(1, exact_n_max + 1)),
                                 n_max=exact_n_max))
        rep.records.append(merge("chebyshev.product_bound",
                                 (cb.product_bound(n, table) for n in range(1, exact_n_max + 1)),
                                 n_max=exact_n_max))
        rep.records.extend(cb.theta_sweep(theta_n_max))
        lin = cb.theta_linear(theta_n_max, table)
        lin.id = "chebyshev.theta_telescope"
        rep.records.append(lin)

        # float theta against the exact primorial, at every prime (theta only moves there)
        bad = None
        prim = 1
        for p in table.primes_between(0, primorial_n_max):
            prim *= p
            exact = math.log(prim)
            if not math.isclose(table.theta(p), exact, rel_tol=1e-9):
                bad = p
                break
        rep.records.append(check("chebyshev.theta_matches_primorial", bad is None,
                                 witness={"n": bad}, n_max=primorial_n_max))

        pi_rec = cb.pi_comparison(pi_limit, table)
        rep.records.append(pi_rec)
        own, other = table.pi(pi_limit), cb.sundaram_count(pi_limit)
        rep.records.append(check("chebyshev.pi_second_sieve", own == other,
                                 witness={"eratosthenes": own, "sundaram": other}, limit=pi_limit,
                                 info={"pi": own}))
    return rep


SUITES = ("binomial", "injections", "chains", "sperner", "zpoly", "operators", "chebyshev")


def run_profile(profile: Profile | str = "desk", only=None, **overrides) -> list[VerificationReport]:
    if isinstance(profile, str):
        profile = PROFILES[profile]
    if overrides:
        profile = replace(profile, **overrides)
    pf = profile
    runners = {
        "binomial": lambda: binomial_suite(pf.binomial_n_max),
        "injections": lambda: injections_suite(pf.inject_n_max, pf.gk_n_max),
        "chains": lambda: chains_suite(pf.chains_n_max, pf.compare_n_max),
        "sperner": lambda: sperner_suite(pf.sperner_exhaustive_n_max, pf.sperner_random_n_max,
                                         pf.sperner_samples, pf.sperner_levels_n_max, pf.seed),
        "zpoly": lambda: zpoly_suite(pf.zpoly_binomial_n_max, pf.dice_n_max, pf.atom_max,
                                     pf.closure_samples, pf.seed),
        "operators": lambda: operators_suite(pf.eq1_n_max, pf.eq2_n_max, pf.rank_n_max,
                                             pf.kernel_n_max, (None, pf.gf_prime)),
        "chebyshev": lambda: chebyshev_suite(pf.cheb_exact_n_max, pf.cheb_theta_n_max,
                                             pf.cheb_pi_limit, pf.primorial_n_max),
    }
    return [runners[name]() for name in SUITES if only is None or name in only]


def profile_dict(profile: Profile) -> dict:
    return asdict(profile)


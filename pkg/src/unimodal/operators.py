"""Raising and lowering operators on the levels of the subset lattice.

V_k is the space of formal combinations of k-subsets of {1..n}; its basis is
the k-subsets in ascending bitmask order.  ``up`` sends S to the sum of all
S+{j}, ``down`` sends S to the sum of all S-{i}.  On V_k the commutator
satisfies up.down - down.up = (2k - n) I, and with it up is injective on
V_k whenever k < n/2.

All matrices hold exact integers.  Passing a prime ``p`` reduces everything
mod p; ``p`` must exceed 2n so the scalars that drive the argument stay
invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .binomial import binomial_pascal
from .linalg import SparseMatrix, SparseVec, check_modulus, nullspace, rank
from .records import CheckRecord, check
from .subsets import level_masks


def mu(n: int, k: int) -> int:
    return 2 * k - n


def mu_partial_sum(n: int, k: int, r: int) -> int:
    """mu(k) + mu(k-1) + ... + mu(k-r+1), term by term."""
    return sum(mu(n, k - j) for j in range(r))


def mu_partial_sum_closed(n: int, k: int, r: int) -> int:
    return r * (2 * k - n - r + 1)


def kernel_scalar(n: int, k: int, r: int) -> int:
    """prod_{j=1..r} j(2k-n-j+1): the factor in up^r down^r f = c f when up f = 0."""
    return prod(mu_partial_sum_closed(n, k, j) for j in range(1, r + 1))


@lru_cache(maxsize=None)
def _basis(n: int, k: int) -> tuple[int, ...]:
    return tuple(level_masks(n, k))


@lru_cache(maxsize=None)
def _index(n: int, k: int) -> dict[int, int]:
    return {m: i for i, m in enumerate(_basis(n, k))}


@dataclass(frozen=True)
class LevelVector:
    n: int
    k: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_sparse(cls, n: int, k: int, v: SparseVec) -> LevelVector:
        dense = [0] * len(_basis(n, k))
        for i, x in v.items():
            dense[i] = x
        return cls(n, k, tuple(dense))

    @classmethod
    def basis_vector(cls, n: int, k: int, mask: int) -> LevelVector:
        return cls.from_sparse(n, k, {_index(n, k)[mask]: 1})

    def sparse(self) -> SparseVec:
        return {i: x for i, x in enumerate(self.coeffs) if x}

    def terms(self) -> dict[int, int]:
        """Nonzero coefficients keyed by subset mask."""
        basis = _basis(self.n, self.k)
        return {basis[i]: x for i, x in enumerate(self.coeffs) if x}


@dataclass(frozen=True, eq=False)
class LevelMap:
    n: int
    source: int
    target: int
    matrix: SparseMatrix

    def __matmul__(self, other: LevelMap) -> LevelMap:
        """Composition: ``(a @ b)(f) = a(b(f))``."""
        if other.target != self.source or other.n != self.n:
            raise ValueError(f"cannot compose V_{other.source}->V_{other.target} into V_{self.source}->V_{self.target}")
        return LevelMap(self.n, other.source, self.target, self.matrix @ other.matrix)

    def __sub__(self, other: LevelMap) -> LevelMap:
        self._same_levels(other)
        return LevelMap(self.n, self.source, self.target, self.matrix - other.matrix)

    def scale(self, c: int) -> LevelMap:
        return LevelMap(self.n, self.source, self.target, self.matrix.scale(c))

    def _same_levels(self, other: LevelMap):
        if (self.n, self.source, self.target) != (other.n, other.source, other.target):
            raise ValueError("level mismatch")

    def equals(self, other: LevelMap, p: int | None = None) -> bool:
        self._same_levels(other)
        return self.matrix.mod(p) == other.matrix.mod(p)

    def __call__(self, f: LevelVector) -> LevelVector:
        if f.k != self.source or f.n != self.n:
            raise ValueError(f"vector lives in V_{f.k}, map starts at V_{self.source}")
        return LevelVector.from_sparse(self.n, self.target, self.matrix.apply(f.sparse()))


def identity_map(n: int, k: int, scale: int = 1) -> LevelMap:
    return LevelMap(n, k, k, SparseMatrix.identity(len(_basis(n, k)), scale))


@lru_cache(maxsize=None)
def _raise(n: int, k: int) -> LevelMap:
    # total on -1 <= k <= n; levels outside [0, n] are the zero space
    src, tgt = _basis(n, k), _index(n, k + 1)
    cols = [{tgt[s | 1 << j]: 1 for j in range(n) if not s >> j & 1} for s in src]
    return LevelMap(n, k, k + 1, SparseMatrix(len(tgt), len(src), cols))


@lru_cache(maxsize=None)
def _lower(n: int, k: int) -> LevelMap:
    src, tgt = _basis(n, k), _index(n, k - 1)
    cols = [{tgt[s & ~(1 << i)]: 1 for i in range(n) if s >> i & 1} for s in src]
    return LevelMap(n, k, k - 1, SparseMatrix(len(tgt), len(src), cols))


def up_map(n: int, k: int) -> LevelMap:
    """V_k -> V_{k+1}, S -> sum of S+{j} over j not in S."""
    if not 0 <= k < n:
        raise ValueError(f"up map needs 0 <= k < n, got n={n}, k={k}")
    return _raise(n, k)


def down_map(n: int, k: int) -> LevelMap:
    """V_k -> V_{k-1}, S -> sum of S-{i} over i in S.  On V_0 it is the zero map; use
    :func:`lowering` for that case."""
    if not 0 < k <= n:
        raise ValueError(f"down map needs 0 < k <= n, got n={n}, k={k}")
    return _lower(n, k)


def raising(n: int, k: int) -> LevelMap:
    return _raise(n, k)


def lowering(n: int, k: int) -> LevelMap:
    return _lower(n, k)


def lowering_power(n: int, k: int, r: int) -> LevelMap:
    """down^r on V_k, landing in V_{k-r}; r = 0 is the identity."""
    out = identity_map(n, k)
    for j in range(r):
        out = _lower(n, k - j) @ out
    return out


def raising_power(n: int, k: int, r: int) -> LevelMap:
    out = identity_map(n, k)
    for j in range(r):
        out = _raise(n, k + j) @ out
    return out


def check_eq1(n: int, k: int, p: int | None = None) -> CheckRecord:
    """up.down - down.up == (2k-n) I on V_k."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    check_modulus(p, n)
    comm = _raise(n, k - 1) @ _lower(n, k) - _lower(n, k + 1) @ _raise(n, k)
    ok = comm.equals(identity_map(n, k, mu(n, k)), p)
    return check("operators.commutator", ok, n=n, k=k, field=_field_name(p),
                 info={"mu": mu(n, k), "dim": len(_basis(n, k))})


def check_eq2(n: int, k: int, r: int, p: int | None = None) -> CheckRecord:
    """up.down^r - down^r.up == s down^(r-1) on V_k, s = r(2k-n-r+1)."""
    if not 1 <= r <= k <= n:
        raise ValueError(f"need 1 <= r <= k <= n, got n={n}, k={k}, r={r}")
    check_modulus(p, n)
    s_terms = mu_partial_sum(n, k, r)
    s_closed = mu_partial_sum_closed(n, k, r)
    lhs = _raise(n, k - r) @ lowering_power(n, k, r) - lowering_power(n, k + 1, r) @ _raise(n, k)
    rhs = lowering_power(n, k, r - 1).scale(s_terms)
    ok = s_terms == s_closed and lhs.equals(rhs, p)
    return check("operators.commutator_power", ok, n=n, k=k, r=r, field=_field_name(p),
                 info={"s": s_terms, "closed_form": s_closed})


def check_injectivity(n: int, k: int, p: int | None = None) -> CheckRecord:
    """Rank of up on V_k: C(n,k) below the middle, C(n,k+1) from the middle on."""
    m = up_map(n, k)
    check_modulus(p, n)
    got = rank(m.matrix, p)
    dim_k, dim_k1 = binomial_pascal(n, k), binomial_pascal(n, k + 1)
    expected = dim_k if 2 * k < n else dim_k1
    return check("operators.rank", got == expected, n=n, k=k, field=_field_name(p),
                 witness={"n": n, "k": k, "rank": got, "expected": expected},
                 info={"rank": got, "kernel_dim": dim_k - got, "injective": got == dim_k})


def kernel_basis(n: int, k: int, p: int | None = None) -> list[LevelVector]:
    """Basis of the kernel of up on V_k (all of V_n when k = n)."""
    return list(_kernel_basis(n, k, p))


@lru_cache(maxsize=None)
def _kernel_basis(n: int, k: int, p: int | None) -> tuple[LevelVector, ...]:
    if k == n:
        return (LevelVector.from_sparse(n, n, {0: 1}),)
    return tuple(LevelVector.from_sparse(n, k, v) for v in nullspace(up_map(n, k).matrix, p))


def check_kernel_scalar(n: int, k: int, r: int, p: int | None = None) -> CheckRecord:
    """up^r down^r f == prod_{j<=r} j(2k-n-j+1) f for every f in ker(up | V_k).

    Below the middle the kernel is trivial and the check is that the scalar is
    nonzero, which is what forces f = 0 in the injectivity argument.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if not 1 <= r <= k + 1:
        raise ValueError(f"need 1 <= r <= k+1, got r={r}, k={k}")
    check_modulus(p, n)
    c = kernel_scalar(n, k, r)
    if 2 * k < n:
        nonzero = c != 0 and (p is None or c % p != 0)
        return check("operators.kernel_scalar", nonzero, n=n, k=k, r=r, field=_field_name(p),
                     info={"scalar": c, "kernel_dim": 0})
    op = raising_power(n, k - r, r) @ lowering_power(n, k, r)
    bad = None
    basis = _kernel_basis(n, k, p)
    for f in basis:
        got = op.matrix.apply(f.sparse())
        want = {i: c * x for i, x in f.sparse().items() if c * x}
        if p is not None:
            got = {i: x % p for i, x in got.items() if x % p}
            want = {i: x % p for i, x in want.items() if x % p}
        if got != want:
            bad = f
            break
    return check("operators.kernel_scalar", bad is None, n=n, k=k, r=r, field=_field_name(p),
                 witness={"n": n, "k": k, "r": r, "f": None if bad is None else bad.terms()},
                 info={"scalar": c, "kernel_dim": len(basis)})


def check_transpose(n: int, k: int) -> CheckRecord:
    ok = down_map(n, k + 1).matrix == up_map(n, k).matrix.transpose()
    return check("operators.transpose", ok, n=n, k=k)


def _field_name(p: int | None) -> str:
    return "rational" if p is None else f"gf{p}"

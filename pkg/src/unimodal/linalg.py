"""Sparse exact linear algebra over Q (integer entries) or GF(p).

Matrices are stored column-wise as ``{row: value}`` dicts.  Elimination is
fraction-free over Q: a row is reduced by ``lead * row - entry * pivot`` and
then divided by the gcd of its entries, so every number stays an integer.
"""

from __future__ import annotations

from math import gcd, isqrt
from typing import Iterable

SparseVec = dict[int, int]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, isqrt(p) + 1, 2))


def check_modulus(p: int | None, n: int | None = None):
    """Validate a GF(p) modulus: prime, and larger than 2n when ``n`` is given."""
    if p is None:
        return
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n is not None and p <= 2 * n:
        raise ValueError(f"GF({p}) needs p > 2n = {2 * n}")


def _content(v: SparseVec) -> int:
    g = 0
    for x in v.values():
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _normalize(v: SparseVec, p: int | None) -> SparseVec:
    if p is not None:
        return {i: x % p for i, x in v.items() if x % p}
    v = {i: x for i, x in v.items() if x}
    g = _content(v)
    if g > 1:
        v = {i: x // g for i, x in v.items()}
    return v


class SparseMatrix:
    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: list[SparseVec] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols if cols is not None else [{} for _ in range(ncols)]
        assert len(self.cols) == ncols

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @classmethod
    def identity(cls, size: int, scale: int = 1) -> SparseMatrix:
        return cls(size, size, [{i: scale} if scale else {} for i in range(size)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> SparseMatrix:
        return cls(nrows, ncols)

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for col in other.cols:
            acc: SparseVec = {}
            for k, b in col.items():
                for i, a in self.cols[k].items():
                    acc[i] = acc.get(i, 0) + a * b
            out.append({i: x for i, x in acc.items() if x})
        return SparseMatrix(self.nrows, other.ncols, out)

    def _combine(self, other: SparseMatrix, sign: int) -> SparseMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = []
        for a, b in zip(self.cols, other.cols):
            c = dict(a)
            for i, x in b.items():
                y = c.get(i, 0) + sign * x
                if y:
                    c[i] = y
                else:
                    c.pop(i, None)
            out.append(c)
        return SparseMatrix(self.nrows, self.ncols, out)

    def __add__(self, other: SparseMatrix) -> SparseMatrix:
        return self._combine(other, 1)

    def __sub__(self, other: SparseMatrix) -> SparseMatrix:
        return self._combine(other, -1)

    def scale(self, c: int) -> SparseMatrix:
        if c == 0:
            return SparseMatrix.zeros(self.nrows, self.ncols)
        return SparseMatrix(self.nrows, self.ncols, [{i: c * x for i, x in col.items()} for col in self.cols])

    def mod(self, p: int | None) -> SparseMatrix:
        if p is None:
            return self
        return SparseMatrix(self.nrows, self.ncols,
                            [{i: x % p for i, x in col.items() if x % p} for col in self.cols])

    def transpose(self) -> SparseMatrix:
        cols: list[SparseVec] = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, x in col.items():
                cols[i][j] = x
        return SparseMatrix(self.ncols, self.nrows, cols)

    def rows(self) -> list[SparseVec]:
        return self.transpose().cols

    def apply(self, v: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for k, b in v.items():
            for i, a in self.cols[k].items():
                acc[i] = acc.get(i, 0) + a * b
        return {i: x for i, x in acc.items() if x}

    def is_zero(self) -> bool:
        return not any(self.cols)

    def entries(self) -> set[int]:
        return {x for col in self.cols for x in col.values()}

    def dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, x in col.items():
                out[i][j] = x
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.cols, other.cols))

    def __repr__(self) -> str:
        nnz = sum(len(c) for c in self.cols)
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={nnz})"


def echelon(rows: Iterable[SparseVec], p: int | None = None) -> dict[int, SparseVec]:
    """Row echelon form keyed by leading column.

    Over Q each stored pivot row is primitive (content 1) with a positive
    lead; over GF(p) the lead is 1.
    """
    pivots: dict[int, SparseVec] = {}
    for row in rows:
        r = _normalize(dict(row), p)
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                if p is None:
                    if r[c] < 0:
                        r = {i: -x for i, x in r.items()}
                else:
                    inv = pow(r[c], -1, p)
                    r = {i: x * inv % p for i, x in r.items()}
                pivots[c] = r
                break
            b = r[c]
            if p is None:
                a = piv[c]
                r = {i: a * x for i, x in r.items()}
            for i, x in piv.items():
                y = r.get(i, 0) - b * x
                if p is not None:
                    y %= p
                if y:
                    r[i] = y
                else:
                    r.pop(i, None)
            r = _normalize(r, p)
    return pivots


def rank(m: SparseMatrix, p: int | None = None) -> int:
    # row space of the matrix; use whichever orientation has fewer vectors
    vecs = m.cols if m.ncols <= m.nrows else m.rows()
    return len(echelon(vecs, p))


def nullspace(m: SparseMatrix, p: int | None = None) -> list[SparseVec]:
    """Basis of {x : m x = 0}, as sparse integer vectors (reduced mod p over GF(p))."""
    piv = echelon(m.rows(), p)
    # back-substitute to reduced echelon form, highest pivot column first
    for c in sorted(piv, reverse=True):
        pr = piv[c]
        for c2 in piv:
            if c2 >= c:
                continue
            r = piv[c2]
            b = r.get(c)
            if not b:
                continue
            if p is None:
                a = pr[c]
                r = {i: a * x for i, x in r.items()}
            for i, x in pr.items():
                y = r.get(i, 0) - b * x
                if p is not None:
                    y %= p
                if y:
                    r[i] = y
                else:
                    r.pop(i, None)
            piv[c2] = _normalize(r, p)
    free = [j for j in range(m.ncols) if j not in piv]
    basis = []
    for f in free:
        if p is None:
            lcm = 1
            for c, r in piv.items():
                if f in r:
                    lcm = lcm * r[c] // gcd(lcm, r[c])
            v = {f: lcm}
            for c, r in piv.items():
                if f in r:
                    v[c] = -lcm * r[f] // r[c]
        else:
            v = {f: 1}
            for c, r in piv.items():
                if f in r:
                    v[c] = -r[f] % p
        basis.append(_normalize(v, p))
    return basis

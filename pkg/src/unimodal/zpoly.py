"""Z-polynomials: symmetric, unimodal, nonnegative integer coefficients.

A nonzero polynomial is stored as its lowest exponent plus the coefficient
run from there to the top degree (first and last entries nonzero).  The
*darga* is low degree + high degree; it adds under multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .binomial import BinomialTable, binomial_pascal


class NotZPolynomial(ValueError):
    pass


@dataclass(frozen=True)
class ZPolynomial:
    low: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = self.coeffs
        if c and (c[0] == 0 or c[-1] == 0):
            raise ValueError("coefficient run must start and end nonzero")
        if self.low < 0:
            raise ValueError("negative exponents are not allowed")

    @classmethod
    def from_dense(cls, coeffs: Sequence[int]) -> ZPolynomial:
        """Build from ``[c_0, c_1, ...]`` (coefficient of x^i at index i)."""
        coeffs = [int(c) for c in coeffs]
        lo = next((i for i, c in enumerate(coeffs) if c), None)
        if lo is None:
            return ZERO
        hi = max(i for i, c in enumerate(coeffs) if c)
        return cls(lo, tuple(coeffs[lo:hi + 1]))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> ZPolynomial:
        return cls(e, (c,)) if c else ZERO

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return self.low + len(self.coeffs) - 1

    def dense(self) -> list[int]:
        return [0] * self.low + list(self.coeffs)

    def __getitem__(self, e: int) -> int:
        i = e - self.low
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: ZPolynomial) -> ZPolynomial:
        a, b = self.dense(), other.dense()
        if len(a) < len(b):
            a, b = b, a
        return ZPolynomial.from_dense([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __sub__(self, other: ZPolynomial) -> ZPolynomial:
        a, b = self.dense(), other.dense()
        size = max(len(a), len(b))
        a += [0] * (size - len(a))
        b += [0] * (size - len(b))
        return ZPolynomial.from_dense([x - y for x, y in zip(a, b)])

    def __mul__(self, other: ZPolynomial) -> ZPolynomial:
        if self.is_zero or other.is_zero:
            return ZERO
        p, q = self.coeffs, other.coeffs
        out = [0] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            if a:
                for j, b in enumerate(q):
                    out[i + j] += a * b
        return ZPolynomial(self.low + other.low, tuple(out))

    def scale(self, c: int) -> ZPolynomial:
        return ZPolynomial(self.low, tuple(c * x for x in self.coeffs)) if c else ZERO

    def __pow__(self, e: int) -> ZPolynomial:
        if e < 0:
            raise ValueError("negative power")
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.low + i
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            coef = str(c) if (c != 1 or not mono) else ""
            terms.append(coef + mono)
        return "+".join(terms)


ZERO = ZPolynomial(0, ())
ONE = ZPolynomial(0, (1,))


def darga(p: ZPolynomial) -> int:
    if p.is_zero:
        raise ValueError("darga of the zero polynomial is undefined")
    return p.low + p.high


def is_z(p: ZPolynomial) -> bool:
    """Symmetric about darga/2, nondecreasing up to the middle, nonnegative."""
    c = p.coeffs
    if not c:
        return False
    if any(x < 0 for x in c) or c != c[::-1]:
        return False
    half = c[:(len(c) + 1) // 2]
    return all(a <= b for a, b in zip(half, half[1:]))


def _require_z(*ps: ZPolynomial):
    for p in ps:
        if not is_z(p):
            raise NotZPolynomial(f"{p} is not a Z-polynomial")


def add_same_darga(p: ZPolynomial, q: ZPolynomial) -> ZPolynomial:
    _require_z(p, q)
    if darga(p) != darga(q):
        raise ValueError(f"darga mismatch: {darga(p)} vs {darga(q)}")
    s = p + q
    assert is_z(s) and darga(s) == darga(p), f"sum {s} left the Z class"
    return s


def mul(p: ZPolynomial, q: ZPolynomial) -> ZPolynomial:
    _require_z(p, q)
    r = p * q
    assert is_z(r) and darga(r) == darga(p) + darga(q), f"product {r} left the Z class"
    return r


def atom(a: int, b: int) -> ZPolynomial:
    """x^a + x^(a+1) + ... + x^b."""
    if a < 0 or a > b:
        raise ValueError(f"need 0 <= a <= b, got a={a}, b={b}")
    return ZPolynomial(a, (1,) * (b - a + 1))


def decompose_atoms(p: ZPolynomial) -> list[tuple[ZPolynomial, int]]:
    """Peel symmetric layers: p = sum of m_i * atom(i, darga - i), outermost first."""
    if p.is_zero:
        raise NotZPolynomial("the zero polynomial has no atom decomposition")
    d = darga(p)
    if p.coeffs != p.coeffs[::-1]:
        raise NotZPolynomial(f"{p} is not symmetric")
    out = []
    prev = 0
    for i in range(p.low, d // 2 + 1):
        m = p[i] - prev
        if m < 0:
            raise NotZPolynomial(f"{p} dips at x^{i}")
        if m:
            out.append((atom(i, d - i), m))
        prev = p[i]
    return out


def recompose(parts: Iterable[tuple[ZPolynomial, int]]) -> ZPolynomial:
    total = ZERO
    for a, m in parts:
        total = total + a.scale(m)
    return total


def atom_product_coeff(a: int, b: int, c: int, d: int, e: int) -> int:
    """Coefficient of x^e in atom(a,b)*atom(c,d): ramp 1,2,3,.., plateau, ramp down."""
    if e < a + c or e > b + d:
        return 0
    return min(e - (a + c), (b + d) - e, b - a, d - c) + 1


def binomial_gf(n: int, tbl: BinomialTable | None = None) -> ZPolynomial:
    """(1+x)^n by repeated multiplication, checked against Pascal's row n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    base = atom(0, 1)
    p = ONE
    for _ in range(n):
        p = mul(p, base)
    row = tbl.row(n) if tbl is not None and n <= tbl.n_max else tuple(binomial_pascal(n, k) for k in range(n + 1))
    assert p.coeffs == tuple(row), f"(1+x)^{n} disagrees with Pascal row {n}"
    return p


DIE = atom(1, 6)
TETRAHEDRON = atom(1, 4)


def gambling_gf(m: int, n: int, k: int) -> ZPolynomial:
    """(1+x)^m (x+...+x^6)^n (x+...+x^4)^k."""
    if min(m, n, k) < 0:
        raise ValueError("exponents must be nonnegative")
    p = ONE
    for factor, e in ((atom(0, 1), m), (DIE, n), (TETRAHEDRON, k)):
        for _ in range(e):
            p = mul(p, factor)
    assert darga(p) == m + 7 * n + 5 * k
    if m == 0 and k == 0 and n > 0:
        top = max(p.coeffs)
        assert p[7 * n // 2] == top and p[(7 * n + 1) // 2] == top, "dice peak off the expected gain"
    return p


def dice_peak(n: int) -> tuple[int, int]:
    """Exponents holding the largest coefficient of (x+...+x^6)^n."""
    p = gambling_gf(0, n, 0)
    top = max(p.coeffs)
    where = [p.low + i for i, c in enumerate(p.coeffs) if c == top]
    return where[0], where[-1]

"""Brute-force linear algebra over F_{p^n} for the indecomposable modules.

Everything here is an independent check on the closed formulas: the modules
are written down as explicit matrices, and their fixed spaces and
covariants come from Gaussian elimination.  Ranks over F_{p^n} equal
ranks over any extension field (in particular the algebraically closed K),
so the conclusions carry over.

Field elements are ints ``0 .. q-1``; the base-p digits of an int are the
coefficients of the polynomial ``c_0 + c_1 e + ... + c_{n-1} e**(n-1)``,
where ``e`` is a root of the modulus.  All element operations accept ints or
numpy integer arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Tuple

import numpy as np

__all__ = [
    "SmallField",
    "small_field",
    "smallest_irreducible",
    "is_irreducible",
    "binomial_mod_p",
    "binomial_lucas",
    "rank",
    "ModMatrix",
    "jordan_block",
    "jordan_kernel_dim",
    "wj_action_matrix",
    "cyclic_action_matrix",
    "covariant_dim_oracle",
    "covariant_dim_closed",
    "fixed_space_dim",
]


# -- polynomials over F_p, coefficient tuples low degree first --------------

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    a = _poly_trim(a)
    b = _poly_trim(b)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        factor = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
        a = _poly_trim(a)
    return a


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def is_irreducible(coeffs, p: int) -> bool:
    """Trial division by every monic polynomial of degree ``1 .. deg/2``."""
    coeffs = _poly_trim(coeffs)
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(coeffs, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, n: int) -> Tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n.

    Candidates ``x**n + c_{n-1} x**(n-1) + ... + c_0`` are ordered by
    ``(c_{n-1}, ..., c_0)``.  Returned low degree first, leading 1 included.
    """
    for high_first in product(range(p), repeat=n):
        coeffs = tuple(reversed(high_first)) + (1,)
        if is_irreducible(coeffs, p):
            return coeffs
    raise ValueError(f"no irreducible polynomial of degree {n} over F_{p}")


class SmallField:
    """F_{p^n} with log/antilog tables for multiplication."""

    def __init__(self, p: int, n: int):
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = smallest_irreducible(p, n) if n > 1 else (0, 1)
        self._powers = [p ** t for t in range(n)]
        self._build_tables()

    def __repr__(self):
        return f"SmallField(p={self.p}, n={self.n})"

    # int <-> coefficient vector
    def to_poly(self, a: int):
        return [(a // pt) % self.p for pt in self._powers]

    def from_poly(self, coeffs) -> int:
        coeffs = list(coeffs) + [0] * (self.n - len(coeffs))
        return sum(c % self.p * pt for c, pt in zip(coeffs, self._powers))

    def _slow_mul(self, a: int, b: int) -> int:
        prod_ = _poly_mul(self.to_poly(a), self.to_poly(b), self.p)
        return self.from_poly(_poly_mod(prod_, self.modulus, self.p)) if prod_ else 0

    def _build_tables(self):
        q = self.q
        order = q - 1
        prime_factors = [f for f in range(2, order + 1) if order % f == 0 and all(f % d for d in range(2, f))]
        for g in range(2 if q > 2 else 1, q):
            exp = [1]
            for _ in range(order - 1):
                exp.append(self._slow_mul(exp[-1], g))
            if all(exp[order // f] != 1 for f in prime_factors) if order > 1 else True:
                break
        else:
            raise RuntimeError("no primitive element found")
        self.generator = g
        self._exp = np.array(exp + exp, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        for i, v in enumerate(exp):
            log[v] = i
        self._log = log

    @property
    def e(self) -> int:
        """The class of x modulo the defining polynomial (p when n > 1, else 1)."""
        return self.p if self.n > 1 else 1

    def basis(self) -> Tuple[int, ...]:
        """``1, e, ..., e**(n-1)`` as field elements."""
        return tuple(self._powers) if self.n > 1 else (1,)

    # element arithmetic; works elementwise on arrays
    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b) if isinstance(a, np.ndarray) or isinstance(b, np.ndarray) else a ^ b
        if self.n == 1:
            return (a + b) % self.p
        out = 0
        for pt in self._powers:
            out = out + ((a // pt + b // pt) % self.p) * pt
        return out

    def neg(self, a):
        if self.p == 2:
            return a
        if self.n == 1:
            return (-a) % self.p
        out = 0
        for pt in self._powers:
            out = out + ((-(a // pt)) % self.p) * pt
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a_arr = np.asarray(a, dtype=np.int64)
        b_arr = np.asarray(b, dtype=np.int64)
        out = self._exp[self._log[a_arr] + self._log[b_arr]]
        out = np.where((a_arr == 0) | (b_arr == 0), 0, out)
        if out.ndim == 0:
            return int(out)
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)])

    def power(self, a: int, k: int) -> int:
        if k == 0:
            return 1
        if a == 0:
            return 0
        return int(self._exp[(self._log[a] * k) % (self.q - 1)])

    def from_int(self, c: int) -> int:
        """Image of an integer under Z -> F_p -> F_q."""
        return c % self.p


@lru_cache(maxsize=None)
def small_field(p: int, n: int) -> SmallField:
    return SmallField(p, n)


@lru_cache(maxsize=None)
def _pascal_row_mod(i: int, p: int) -> Tuple[int, ...]:
    if i == 0:
        return (1,)
    prev = _pascal_row_mod(i - 1, p)
    return tuple(((prev[l - 1] if l > 0 else 0) + (prev[l] if l < i else 0)) % p for l in range(i + 1))


def binomial_mod_p(i: int, l: int, p: int) -> int:
    """``C(i, l) mod p`` from Pascal's rule, no factorials."""
    if l < 0 or l > i:
        return 0
    return _pascal_row_mod(i, p)[l]


def binomial_lucas(i: int, l: int, p: int) -> int:
    """``C(i, l) mod p`` digit by digit (Lucas); used as a cross-check."""
    out = 1
    while i or l:
        i, a = divmod(i, p)
        l, b = divmod(l, p)
        if b > a:
            return 0
        out = out * binomial_mod_p(a, b, p) % p
    return out


def rank(field: SmallField, rows) -> int:
    """Rank of a matrix over ``field`` (rows of field elements)."""
    mat = np.array(rows, dtype=np.int64)
    if mat.size == 0:
        return 0
    mat = mat.copy()
    n_rows, n_cols = mat.shape
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        nonzero = np.nonzero(mat[r:, col])[0]
        if nonzero.size == 0:
            continue
        piv = r + nonzero[0]
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        pivot_row = field.mul(field.inv(int(mat[r, col])), mat[r])
        mat[r] = pivot_row
        below = np.arange(r + 1, n_rows)
        factors = mat[below, col]
        hit = below[factors != 0]
        if hit.size:
            scaled = field.mul(mat[hit, col][:, None], pivot_row[None, :])
            mat[hit] = field.sub(mat[hit], scaled)
        r += 1
    return r


@dataclass(frozen=True)
class ModMatrix:
    """Action of one group element on a module, row i = image of basis vector i."""

    field: SmallField
    entries: Tuple[Tuple[int, ...], ...]
    label: str

    @property
    def dim(self) -> int:
        return len(self.entries)

    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.dim, self.dim)

    def __matmul__(self, other: "ModMatrix") -> "ModMatrix":
        a, b = self.array(), other.array()
        out = np.zeros_like(a)
        for t in range(self.dim):
            out = self.field.add(out, self.field.mul(a[:, t][:, None], b[t][None, :]))
        return ModMatrix(self.field, tuple(map(tuple, out.tolist())), f"{self.label}*{other.label}")

    def minus_identity(self) -> np.ndarray:
        a = self.array()
        idx = np.arange(self.dim)
        a[idx, idx] = self.field.sub(a[idx, idx], 1)
        return a

    def is_unipotent(self, power: int) -> bool:
        """``(M - I)**power == 0``."""
        nil = ModMatrix(self.field, tuple(map(tuple, self.minus_identity().tolist())), "N")
        acc = nil
        for _ in range(power - 1):
            acc = acc @ nil
        return not np.any(acc.array())


def jordan_block(k: int, field: SmallField) -> ModMatrix:
    """Generator of ``K[G]/((sigma - 1)**k)`` on the basis ``(sigma - 1)**t``."""
    rows = [[0] * k for _ in range(k)]
    for t in range(k):
        rows[t][t] = 1
        if t + 1 < k:
            rows[t][t + 1] = 1
    return ModMatrix(field, tuple(map(tuple, rows)), "sigma")


cyclic_action_matrix = jordan_block


def jordan_kernel_dim(k: int, i: int, p: int, n: int) -> int:
    """Dimension of the kernel of ``(sigma - 1)**i`` on the k-dimensional indecomposable."""
    if not 1 <= k <= p ** n:
        raise ValueError(f"module dimension k = {k} outside [1, {p ** n}]")
    if i < 0:
        raise ValueError("power i must be >= 0")
    field = small_field(p, 1)
    nil = np.array(jordan_block(k, field).entries, dtype=np.int64)
    nil[np.arange(k), np.arange(k)] = 0
    power = np.eye(k, dtype=np.int64)
    for _ in range(i):
        power = (power @ nil) % p
    return k - rank(field, power.tolist())


def wj_action_matrix(j: int, a: int, field: SmallField) -> ModMatrix:
    """``sigma_a(theta_i) = sum_{l <= i} C(i, l) a**(i - l) theta_l`` on ``W_j``."""
    if not 1 <= j <= field.q:
        raise ValueError(f"module dimension j = {j} outside [1, {field.q}]")
    rows = []
    for i in range(j):
        row = [0] * j
        for l in range(i + 1):
            c = binomial_mod_p(i, l, field.p)
            if c:
                row[l] = field.mul(field.from_int(c), field.power(a, i - l))
        rows.append(tuple(row))
    return ModMatrix(field, tuple(rows), f"sigma_{a}")


def _generator_blocks(j: int, field: SmallField):
    return [wj_action_matrix(j, a, field).minus_identity() for a in field.basis()]


def covariant_dim_oracle(j: int, field: SmallField) -> int:
    """``dim W_j / span{sigma_a w - w}`` over the additive generators a of F_q."""
    stacked = np.vstack(_generator_blocks(j, field))
    return j - rank(field, stacked)


def fixed_space_dim(j: int, field: SmallField) -> int:
    """``dim W_j^G``: vectors v with ``v (M_a - I) = 0`` for every generator a."""
    side_by_side = np.hstack(_generator_blocks(j, field))
    return j - rank(field, side_by_side)


def covariant_dim_closed(j: int, p: int, n: int) -> int:
    if not 1 <= j <= p ** n:
        raise ValueError(f"module dimension j = {j} outside [1, {p ** n}]")
    if j <= p or j % p == 0:
        return 1
    return 2

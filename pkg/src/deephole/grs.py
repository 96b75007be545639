"""Generalized Reed-Solomon codes with unit column multipliers.

Two deep-hole predicates live here: ``bruteforce`` measures the error distance
against every codeword, ``mds`` checks that the generator matrix with the word
appended as an extra row still has every maximal minor nonzero. They must agree
on every input; the test-suite checks that exhaustively at p = 5.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from deephole.algebra import (
    Poly,
    Scalar,
    check_modulus,
    inv_mod,
    lagrange_interpolate,
    poly_eval,
)
from deephole.errors import (
    BudgetExceeded,
    DegreeOutOfRange,
    DimensionMismatch,
    DuplicateNode,
    InvalidDimension,
)

DEFAULT_BUDGET = 10**8
_CHUNK = 1 << 15


def enumeration_budget(budget: int | None = None) -> int:
    """Resolve an enumeration cap: explicit value, else $DEEPHOLE_BUDGET, else 10^8."""
    if budget is not None:
        return int(budget)
    env = os.environ.get("DEEPHOLE_BUDGET")
    return int(float(env)) if env else DEFAULT_BUDGET


def default_order(p: int) -> tuple:
    """The field listed as 1, 2, ..., p-1, 0."""
    return tuple(range(1, p)) + (0,)


@dataclass(frozen=True)
class GrsCode:
    """RS_p(D, k): evaluations of polynomials of degree < k on the ordered set ``evalset``."""

    p: int
    k: int
    evalset: tuple

    def __post_init__(self):
        check_modulus(self.p)
        pts = tuple(int(a) % self.p for a in self.evalset)
        object.__setattr__(self, "evalset", pts)
        if len(set(pts)) != len(pts):
            raise DuplicateNode(f"evaluation points must be distinct: {pts}")
        if not 1 <= self.k < len(pts) <= self.p:
            raise InvalidDimension(f"need 1 <= k < n <= p; got k={self.k}, n={len(pts)}, p={self.p}")

    @property
    def n(self) -> int:
        return len(self.evalset)

    @property
    def covering_radius(self) -> int:
        return self.n - self.k

    def word_of(self, f) -> tuple:
        """Word generated by ``f``: a :class:`Poly` or any callable on residues."""
        if isinstance(f, Poly):
            return tuple(poly_eval(f, a) for a in self.evalset)
        return tuple(int(f(a)) % self.p for a in self.evalset)

    def inverse_shift_word(self, delta: int) -> tuple:
        """Word of ``1 / (x - delta)``; ``delta`` must lie outside the evaluation set."""
        return tuple(inv_mod(a - delta, self.p) for a in self.evalset)


@dataclass(frozen=True)
class Matrix:
    rows: tuple
    p: int

    def __post_init__(self):
        rows = tuple(tuple(int(x) % self.p for x in r) for r in self.rows)
        if len({len(r) for r in rows}) > 1:
            raise DimensionMismatch("matrix rows have unequal length")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def stack(self, row: Sequence[Scalar]) -> "Matrix":
        return Matrix(self.rows + (tuple(row),), self.p)

    def columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(tuple(tuple(r[j] for j in idx) for r in self.rows), self.p)

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.shape)


def det_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Determinant over GF(p) by fraction-free elimination.

    Row ``j`` below pivot row ``c`` is replaced by ``piv * row_j - a_jc * row_c``;
    that scales the determinant by ``piv``, which is divided back out once at
    the end with a single modular inverse.
    """
    a = [[int(x) % p for x in r] for r in rows]
    r = len(a)
    if any(len(row) != r for row in a):
        raise DimensionMismatch("determinant of a non-square matrix")
    sign = 1
    num = den = 1
    for c in range(r):
        piv_row = next((i for i in range(c, r) if a[i][c]), None)
        if piv_row is None:
            return 0
        if piv_row != c:
            a[c], a[piv_row] = a[piv_row], a[c]
            sign = -sign
        piv = a[c][c]
        for i in range(c + 1, r):
            f = a[i][c]
            a[i] = [(piv * x - f * y) % p for x, y in zip(a[i], a[c])]
        num = num * piv % p
        den = den * pow(piv, r - 1 - c, p) % p
    return sign * num * inv_mod(den, p) % p


def nonsingular_batch(batch: np.ndarray, p: int) -> np.ndarray:
    """Vectorised fraction-free elimination over a stack of square matrices.

    ``batch`` has shape ``(S, r, r)``; returns a boolean array of length S.
    Entries stay below p < 2**31, so every product fits in int64.
    """
    a = np.array(batch, dtype=np.int64) % p
    s, r, _ = a.shape
    ok = np.ones(s, dtype=bool)
    idx = np.arange(s)
    for c in range(r):
        nz = a[:, c:, c] != 0
        ok &= nz.any(axis=1)
        piv_row = c + nz.argmax(axis=1)
        swap = piv_row != c
        if swap.any():
            sw = idx[swap]
            tmp = a[sw, piv_row[swap]].copy()
            a[sw, piv_row[swap]] = a[sw, c]
            a[sw, c] = tmp
        if c + 1 < r:
            piv = a[:, c, c][:, None, None]
            below = a[:, c + 1 :, :]
            a[:, c + 1 :, :] = (piv * below - below[:, :, c : c + 1] * a[:, c : c + 1, :]) % p
    return ok


def generator_matrix(code: GrsCode) -> Matrix:
    """k x n Vandermonde matrix with entry (i, j) = alpha_j ** i."""
    p = code.p
    return Matrix(tuple(tuple(pow(a, i, p) for a in code.evalset) for i in range(code.k)), p)


def encode(code: GrsCode, message: Sequence[Scalar]) -> tuple:
    if len(message) != code.k:
        raise DimensionMismatch(f"message length {len(message)} != k={code.k}")
    return code.word_of(Poly.of(message, code.p))


def _check_word(code: GrsCode, u: Sequence[Scalar]) -> np.ndarray:
    if len(u) != code.n:
        raise DimensionMismatch(f"word length {len(u)} != n={code.n}")
    return np.array([int(x) % code.p for x in u], dtype=np.int64)


def _base_p_digits(start: int, stop: int, width: int, p: int) -> np.ndarray:
    """Rows ``start..stop-1`` of the lexicographic listing of GF(p)^width."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, width), dtype=np.int64)
    for col in range(width - 1, -1, -1):
        out[:, col] = idx % p
        idx //= p
    return out


def codeword_blocks(code: GrsCode, budget: int | None = None):
    """Yield all p**k codewords as numpy blocks, message-major in lexicographic order."""
    total = code.p**code.k
    if total > enumeration_budget(budget):
        raise BudgetExceeded(f"{total} codewords exceed the enumeration budget")
    g = generator_matrix(code).to_array()
    for start in range(0, total, _CHUNK):
        msgs = _base_p_digits(start, min(total, start + _CHUNK), code.k, code.p)
        yield msgs @ g % code.p


@lru_cache(maxsize=64)
def _codeword_table(code: GrsCode) -> np.ndarray:
    return np.concatenate(list(codeword_blocks(code)))


def error_distance(code: GrsCode, u: Sequence[Scalar], budget: int | None = None) -> int:
    """Minimum Hamming distance from ``u`` to the code, by exhaustive enumeration."""
    w = _check_word(code, u)
    if code.p**code.k <= _CHUNK:
        return int((_codeword_table(code) != w).sum(axis=1).min())
    best = code.n
    for block in codeword_blocks(code, budget):
        best = min(best, int((block != w).sum(axis=1).min()))
        if best == 0:
            break
    return best


def hamming(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a != b for a, b in zip(u, v))


def is_mds(m: Matrix) -> bool:
    """True iff every rows x rows column-submatrix of ``m`` is nonsingular."""
    r, n = m.shape
    if r > n:
        raise DimensionMismatch(f"MDS check needs rows <= cols, got {r}x{n}")
    arr = m.to_array()
    subsets = itertools.combinations(range(n), r)
    while True:
        chunk = list(itertools.islice(subsets, 4096))
        if not chunk:
            return True
        cols = np.array(chunk, dtype=np.intp)
        batch = np.transpose(arr[:, cols], (1, 0, 2))
        if not nonsingular_batch(batch, m.p).all():
            return False


def is_deep_hole(code: GrsCode, u: Sequence[Scalar], method: str = "mds") -> bool:
    _check_word(code, u)
    if method == "bruteforce":
        return error_distance(code, u) == code.covering_radius
    if method == "mds":
        return is_mds(generator_matrix(code).stack(u))
    raise ValueError(f"unknown method {method!r}; expected 'bruteforce' or 'mds'")


def interpolant(code: GrsCode, u: Sequence[Scalar]) -> Poly:
    """Lagrange interpolant u(x) of the word over the evaluation set."""
    _check_word(code, u)
    return lagrange_interpolate(zip(code.evalset, u), code.p)


def degree_bounds(code: GrsCode, u: Sequence[Scalar]) -> tuple:
    """``(n - deg u, n - k)``, the interval that must contain the error distance."""
    d = interpolant(code, u).degree
    if d < code.k:
        raise DegreeOutOfRange(f"deg(u) = {d} < k = {code.k}; u is a codeword")
    return (code.n - int(d), code.n - code.k)


def all_words(p: int, n: int) -> Iterable[tuple]:
    return itertools.product(range(p), repeat=n)


def minimum_distance(code: GrsCode) -> int:
    """Minimum weight of a nonzero codeword (brute force)."""
    best = math.inf
    for block in codeword_blocks(code):
        wt = (block != 0).sum(axis=1)
        wt = wt[wt > 0]
        if wt.size:
            best = min(best, int(wt.min()))
    return int(best)

"""Arithmetic in GF(p) and polynomials over it.

Residues are plain ``int`` values in ``[0, p)``; :class:`FieldElement` wraps one
together with its modulus for callers that want checked, operator-based
arithmetic. Everything that loops hard (decomposition, determinants, search)
works on bare ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

from deephole.errors import (
    DimensionMismatch,
    DuplicateNode,
    ModulusMismatch,
    NonPrimeModulus,
    ZeroInverse,
)

MAX_MODULUS = 2**31


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_modulus(p: int) -> int:
    """Return ``p`` if it is an odd prime below 2**31, else raise NonPrimeModulus."""
    if not isinstance(p, int) or p >= MAX_MODULUS or p == 2 or not is_prime(p):
        raise NonPrimeModulus(f"modulus must be an odd prime < 2^31, got {p!r}")
    return p


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)


@dataclass(frozen=True)
class FieldElement:
    value: int
    p: int

    def __post_init__(self):
        check_modulus(self.p)
        if not 0 <= self.value < self.p:
            raise ValueError(f"residue {self.value} outside [0, {self.p})")

    @classmethod
    def of(cls, value: int, p: int) -> "FieldElement":
        return cls(value % p, p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ModulusMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement((self.value + o) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement((self.value - o) % self.p, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement((o - self.value) % self.p, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.value * o % self.p, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * inv_mod(o, self.p) % self.p, self.p)

    def __neg__(self):
        return FieldElement(-self.value % self.p, self.p)

    def __pow__(self, e: int):
        if e < 0:
            return ff_inv(self) ** (-e)
        return FieldElement(pow(self.value, e, self.p), self.p)

    def __int__(self):
        return self.value

    __index__ = __int__

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF{self.p}({self.value})"


Scalar = Union[int, FieldElement]


def ff_inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; raises ZeroInverse for zero."""
    return FieldElement(inv_mod(a.value, a.p), a.p)


@dataclass(frozen=True)
class Poly:
    """Polynomial over GF(p) with ascending coefficients and no trailing zeros.

    The zero polynomial has ``coeffs == ()`` and degree ``-inf``.
    """

    coeffs: tuple
    p: int

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero; use Poly.of")
        if any(not 0 <= c < self.p for c in self.coeffs):
            raise ValueError("coefficients must be reduced residues")

    @classmethod
    def of(cls, coeffs: Iterable[Scalar], p: int) -> "Poly":
        cs = [int(c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs), p)

    @classmethod
    def zero(cls, p: int) -> "Poly":
        return cls((), p)

    @classmethod
    def monomial(cls, d: int, p: int, c: int = 1) -> "Poly":
        return cls.of([0] * d + [c], p)

    @classmethod
    def from_roots(cls, roots: Iterable[int], p: int) -> "Poly":
        """The monic product of ``(x - r)`` over ``roots``."""
        out = [1]
        for r in roots:
            out = _mul_linear(out, r, p)
        return cls.of(out, p)

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "Poly"):
        if other.p != self.p:
            raise ModulusMismatch(f"GF({self.p}) vs GF({other.p})")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly.of([(x + y) for x, y in zip(a, b)], self.p)

    def __neg__(self) -> "Poly":
        return Poly.of([-c for c in self.coeffs], self.p)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, FieldElement)):
            return Poly.of([c * int(other) for c in self.coeffs], self.p)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly.of(out, self.p)

    __rmul__ = __mul__

    def __call__(self, x: Scalar) -> int:
        return poly_eval(self, x)

    def evaluate_on(self, xs: Iterable[Scalar]) -> tuple:
        return tuple(poly_eval(self, x) for x in xs)


def _mul_linear(coeffs: list, r: int, p: int) -> list:
    """Multiply an ascending coefficient list by ``(x - r)``."""
    out = [0] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i + 1] = (out[i + 1] + c) % p
        out[i] = (out[i] - r * c) % p
    return out


def poly_eval(f: Poly, x: Scalar) -> int:
    if isinstance(x, FieldElement) and x.p != f.p:
        raise ModulusMismatch(f"GF({f.p}) vs GF({x.p})")
    x = int(x) % f.p
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * x + c) % f.p
    return acc


def _check_nodes(xs: Sequence[int], p: int) -> tuple:
    nodes = tuple(int(x) % p for x in xs)
    if len(set(nodes)) != len(nodes):
        raise DuplicateNode(f"evaluation points must be distinct: {nodes}")
    return nodes


def lagrange_interpolate(points: Iterable[tuple], p: int) -> Poly:
    """Unique polynomial of degree < len(points) through ``points``.

    Uses the Lagrange form: each basis polynomial is the master polynomial
    ``prod (x - x_j)`` divided by ``(x - x_i)``, scaled by the barycentric weight.
    """
    pts = [(int(x) % p, int(y) % p) for x, y in points]
    xs = _check_nodes([x for x, _ in pts], p)
    n = len(pts)
    if n == 0:
        return Poly.zero(p)
    master = [1]
    for x in xs:
        master = _mul_linear(master, x, p)
    out = [0] * n
    for i, (xi, yi) in enumerate(pts):
        if yi == 0:
            continue
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                denom = denom * (xi - xj) % p
        scale = yi * inv_mod(denom, p) % p
        # synthetic division of master by (x - xi), from the top down
        q = [0] * n
        carry = 0
        for d in range(n, 0, -1):
            carry = (master[d] + carry * xi) % p
            q[d - 1] = carry
        for d in range(n):
            out[d] = (out[d] + scale * q[d]) % p
    return Poly.of(out, p)


@dataclass(frozen=True)
class NewtonForm:
    """``low(x) + sum_i cs[i-1] * prod_{j<=k+i-1} (x - nodes[j-1])`` with deg(low) < k."""

    low: Poly
    cs: tuple
    nodes: tuple
    k: int

    @property
    def p(self) -> int:
        return self.low.p

    def is_codeword(self) -> bool:
        return not any(self.cs)


def divided_differences(word: Sequence[Scalar], nodes: Sequence[int], p: int) -> list:
    """Newton coefficients ``a_j`` of the interpolant in the basis ``prod_{i<j}(x - x_i)``."""
    xs = _check_nodes(nodes, p)
    if len(word) != len(xs):
        raise DimensionMismatch(f"word has {len(word)} coordinates, {len(xs)} nodes")
    a = [int(w) % p for w in word]
    n = len(a)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            a[i] = (a[i] - a[i - 1]) * inv_mod(xs[i] - xs[i - j], p) % p
    return a


def _newton_to_power(a: Sequence[int], xs: Sequence[int], p: int) -> Poly:
    if not a:
        return Poly.zero(p)
    out = [a[-1]]
    for j in range(len(a) - 2, -1, -1):
        out = _mul_linear(out, xs[j], p)
        out[0] = (out[0] + a[j]) % p
    return Poly.of(out, p)


def newton_decompose(word: Sequence[Scalar], nodes: Sequence[int], k: int, p: int) -> NewtonForm:
    xs = _check_nodes(nodes, p)
    n = len(xs)
    if len(word) != n:
        raise DimensionMismatch(f"word has {len(word)} coordinates, {n} nodes")
    if not 0 <= k < n:
        raise DimensionMismatch(f"need 0 <= k < n, got k={k}, n={n}")
    a = divided_differences(word, xs, p)
    low = _newton_to_power(a[:k], xs, p)
    return NewtonForm(low=low, cs=tuple(a[k:]), nodes=xs, k=k)


def newton_compose(form: NewtonForm) -> tuple:
    """Evaluate a :class:`NewtonForm` back into a word on its nodes."""
    p, k, xs = form.p, form.k, form.nodes
    if len(form.cs) != len(xs) - k:
        raise DimensionMismatch(f"expected {len(xs) - k} coefficients, got {len(form.cs)}")
    word = []
    for m, x in enumerate(xs):
        acc = poly_eval(form.low, x)
        # prod_{j<k+i-1}(x - x_j) vanishes once the product reaches x itself
        prod = 1
        for j in range(k):
            prod = prod * (x - xs[j]) % p
        for i, c in enumerate(form.cs):
            if k + i > m:
                break
            acc = (acc + c * prod) % p
            prod = prod * (x - xs[k + i]) % p
        word.append(acc)
    return tuple(word)

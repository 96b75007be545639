"""Restricted sumsets and the two-sum / two-product statements built on them."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from deephole.algebra import is_prime
from deephole.errors import BudgetExceeded, InvalidArity, NonPrimeModulus, ZeroInput

MAX_SET_SIZE = 24
MAX_SUBSETS = 10**7


@dataclass(frozen=True)
class ResidueSet:
    modulus: int
    members: tuple

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members must be sorted and distinct; use ResidueSet.of")
        if any(not 0 <= x < self.modulus for x in self.members):
            raise ValueError("members must be reduced residues")

    @classmethod
    def of(cls, modulus: int, members: Iterable[int]) -> "ResidueSet":
        return cls(modulus, tuple(sorted({int(x) % modulus for x in members})))

    @classmethod
    def full(cls, modulus: int) -> "ResidueSet":
        return cls(modulus, tuple(range(modulus)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return x in self.members


def subsets_of(modulus: int, elements: Iterable[int] | None = None) -> Iterator[ResidueSet]:
    """Every subset of ``elements`` (default: all residues), by increasing bitmask."""
    pool = tuple(range(modulus)) if elements is None else tuple(elements)
    for mask in range(1 << len(pool)):
        yield ResidueSet(modulus, tuple(x for i, x in enumerate(pool) if mask >> i & 1))


def restricted_sumset(n: int, s: ResidueSet) -> ResidueSet:
    """All sums of ``n`` pairwise distinct members of ``s``."""
    if not 1 <= n <= len(s):
        raise InvalidArity(f"need 1 <= n <= |S| = {len(s)}, got n={n}")
    if len(s) > MAX_SET_SIZE or math.comb(len(s), n) > MAX_SUBSETS:
        raise BudgetExceeded(f"C({len(s)}, {n}) subsets exceed the enumeration cap")
    m = s.modulus
    return ResidueSet.of(m, (sum(c) % m for c in itertools.combinations(s.members, n)))


def check_dsh_bound(n: int, s: ResidueSet) -> tuple:
    """``(|n^S|, min(p, n|S| - n^2 + 1), holds)`` for a set of residues mod a prime."""
    p = s.modulus
    if not is_prime(p):
        raise NonPrimeModulus(f"modulus {p} is not prime")
    lhs = len(restricted_sumset(n, s))
    rhs = min(p, n * len(s) - n * n + 1)
    return lhs, rhs, lhs >= rhs


def check_two_sum_complete(s: ResidueSet) -> bool:
    if len(s) < 2:
        raise InvalidArity(f"need |S| >= 2, got {len(s)}")
    return len(restricted_sumset(2, s)) == s.modulus


def two_sum_hypothesis(s: ResidueSet) -> bool:
    return 2 * len(s) > s.modulus + 2


def primitive_root(p: int) -> int:
    if not is_prime(p):
        raise NonPrimeModulus(f"modulus {p} is not prime")
    phi = p - 1
    factors = {d for d in range(2, phi + 1) if phi % d == 0 and is_prime(d)}
    return next(g for g in range(1, p) if all(pow(g, phi // q, p) != 1 for q in factors))


def discrete_logs(p: int) -> dict:
    """Map each nonzero residue to its exponent base the smallest primitive root."""
    g = primitive_root(p)
    out, x = {}, 1
    for e in range(p - 1):
        out[x] = e
        x = x * g % p
    return out


def find_two_product(s: ResidueSet, target: int) -> tuple | None:
    """Distinct ``x, y`` in ``s`` with ``x * y == target``, returned as ``(min, max)``.

    The search runs in exponent space: with ``g`` the smallest primitive root,
    it looks for ``b < c`` among the logs of ``s`` with ``b + c = log(target)``
    mod p - 1, and takes the lexicographically first such pair.
    """
    p = s.modulus
    if not is_prime(p):
        raise NonPrimeModulus(f"modulus {p} is not prime")
    target %= p
    if target == 0 or 0 in s:
        raise ZeroInput("the set and the target must avoid 0")
    logs = discrete_logs(p)
    exps = sorted(logs[x] for x in s)
    present = set(exps)
    a = logs[target]
    g = primitive_root(p)
    for b in exps:
        c = (a - b) % (p - 1)
        if c > b and c in present:
            x, y = pow(g, b, p), pow(g, c, p)
            return (min(x, y), max(x, y))
    return None


def two_product_hypothesis(s: ResidueSet) -> bool:
    return 2 * len(s) > s.modulus + 1


def two_sum_sweep(n: int, min_size: int | None = None):
    """Bitmasks of every S in Z/nZ with |S| >= min_size whose 2^S is not all of Z/nZ.

    ``min_size`` defaults to the smallest size above n/2 + 1. Bit x of a mask
    marks residue x; the pair sums are the union over x in S of
    (S minus x) rotated left by x. The whole sweep is vectorised over masks.
    """
    if not 2 <= n <= 26:
        raise InvalidArity(f"sweep supports 2 <= n <= 26, got {n}")
    if min_size is None:
        min_size = n // 2 + 2
    full = (1 << n) - 1
    masks = np.arange(1 << n, dtype=np.uint32)
    masks = masks[np.bitwise_count(masks) >= min_size]
    sums = np.zeros_like(masks)
    for x in range(n):
        has = (masks >> np.uint32(x)) & np.uint32(1)
        rest = masks & np.uint32(full ^ (1 << x))
        rot = ((rest << np.uint32(x)) | (rest >> np.uint32(n - x))) & np.uint32(full)
        sums |= rot * has
    return masks[sums != full]


def mask_to_set(n: int, mask: int) -> ResidueSet:
    return ResidueSet(n, tuple(x for x in range(n) if mask >> x & 1))

"""Bordered Vandermonde determinants and their closed-form singularity conditions.

The matrices are (k+1) x (k+1). The first k rows are powers 0..k-1 of the
columns (beta_1, ..., beta_k, delta). The last row holds 1/(beta_i - shift),
or beta_i^k, and a free corner gamma under delta. Each closed form is checked
against a direct elimination determinant.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

from deephole.algebra import check_modulus, inv_mod
from deephole.errors import DegenerateParameters, DeltaInBetas, DuplicateNode, InvalidShape
from deephole.grs import det_mod_p

INVERSE = "inverse"
POWER = "power"
SHAPES = ("lemma5", "lemma6", "lemma7")


@dataclass(frozen=True)
class BorderedVandermonde:
    betas: tuple
    delta: int
    last_row: str
    gamma: int
    p: int
    shift: int | None = None

    def __post_init__(self):
        p = check_modulus(self.p)
        betas = tuple(int(b) % p for b in self.betas)
        object.__setattr__(self, "betas", betas)
        object.__setattr__(self, "delta", int(self.delta) % p)
        object.__setattr__(self, "gamma", int(self.gamma) % p)
        if len(set(betas)) != len(betas):
            raise DuplicateNode(f"betas must be distinct: {betas}")
        if self.delta in betas:
            raise DeltaInBetas(f"delta={self.delta} is one of the betas")
        if self.last_row == INVERSE:
            shift = self.delta if self.shift is None else int(self.shift) % p
            if shift in betas:
                raise DeltaInBetas(f"shift={shift} is one of the betas")
            object.__setattr__(self, "shift", shift)
        elif self.last_row != POWER:
            raise InvalidShape(f"last_row must be {INVERSE!r} or {POWER!r}")

    @property
    def k(self) -> int:
        return len(self.betas)

    def rows(self) -> list:
        p, k = self.p, self.k
        cols = self.betas + (self.delta,)
        out = [[pow(c, r, p) for c in cols] for r in range(k)]
        if self.last_row == INVERSE:
            last = [inv_mod(b - self.shift, p) for b in self.betas]
        else:
            last = [pow(b, k, p) for b in self.betas]
        out.append(last + [self.gamma])
        return out


def det_bordered(m: BorderedVandermonde) -> int:
    return det_mod_p(m.rows(), m.p)


def _check_outside(betas: Sequence[int], p: int, **points) -> tuple:
    bs = tuple(int(b) % p for b in betas)
    for name, x in points.items():
        if x % p in bs:
            raise DeltaInBetas(f"{name}={x % p} is one of the betas")
    return bs


def lemma5_singular_gamma(betas: Sequence[int], delta: int, p: int) -> int:
    """The unique corner making the 1/(beta - delta) bordered matrix singular: -sum 1/(delta - beta_i)."""
    bs = _check_outside(betas, p, delta=delta)
    return -sum(inv_mod(delta - b, p) for b in bs) % p


def lemma6_condition(betas: Sequence[int], delta: int, delta_prime: int, gamma: int, p: int) -> bool:
    """prod(1 + (delta' - delta)/(beta_i - delta')) == 1 - gamma (delta - delta')."""
    bs = _check_outside(betas, p, delta=delta, delta_prime=delta_prime)
    if (delta - delta_prime) % p == 0:
        raise DegenerateParameters("delta and delta' coincide")
    if gamma % p == inv_mod(delta - delta_prime, p):
        raise DegenerateParameters("gamma = 1/(delta - delta') is excluded")
    lhs = 1
    for b in bs:
        lhs = lhs * (1 + (delta_prime - delta) * inv_mod(b - delta_prime, p)) % p
    return lhs == (1 - gamma * (delta - delta_prime)) % p


def lemma7_condition(betas: Sequence[int], delta: int, gamma: int, p: int) -> bool:
    """prod(delta - beta_i) == delta^k - gamma. At gamma = delta^k this is always False."""
    bs = _check_outside(betas, p, delta=delta)
    lhs = 1
    for b in bs:
        lhs = lhs * (delta - b) % p
    return lhs == (pow(delta, len(bs), p) - gamma) % p


def bordered_for(shape: str, betas, delta, delta_prime, gamma, p) -> BorderedVandermonde:
    if shape == "lemma5":
        return BorderedVandermonde(tuple(betas), delta, INVERSE, gamma, p)
    if shape == "lemma6":
        return BorderedVandermonde(tuple(betas), delta, INVERSE, gamma, p, shift=delta_prime)
    if shape == "lemma7":
        return BorderedVandermonde(tuple(betas), delta, POWER, gamma, p)
    raise InvalidShape(f"unknown shape {shape!r}; expected one of {SHAPES}")


def find_singular_subset(
    pool: Sequence[int],
    delta: int,
    delta_prime: int | None,
    gamma: int,
    k: int,
    p: int,
    shape: str,
) -> tuple | None:
    """First k-subset of ``pool`` (lexicographic) whose bordered matrix is singular."""
    check_modulus(p)
    pool = sorted({int(x) % p for x in pool})
    delta, gamma = delta % p, gamma % p
    if shape not in SHAPES:
        raise InvalidShape(f"unknown shape {shape!r}; expected one of {SHAPES}")
    if not 1 <= k <= len(pool):
        raise InvalidShape(f"pool of size {len(pool)} has no {k}-subsets")
    if delta in pool:
        raise DeltaInBetas(f"delta={delta} lies in the pool")
    if shape == "lemma6":
        if delta_prime is None:
            raise InvalidShape("lemma6 needs delta_prime")
        delta_prime %= p
        if delta_prime in pool or delta_prime == delta:
            raise DeltaInBetas(f"delta'={delta_prime} lies in the pool or equals delta")
        if gamma == inv_mod(delta - delta_prime, p):
            raise DegenerateParameters("gamma = 1/(delta - delta') is excluded")
    if shape == "lemma7" and gamma == pow(delta, k, p):
        raise DegenerateParameters("gamma = delta^k is excluded")
    for subset in itertools.combinations(pool, k):
        if det_bordered(bordered_for(shape, subset, delta, delta_prime, gamma, p)) == 0:
            return subset
    return None


@dataclass
class SweepReport:
    """Counts of closed-form vs determinant comparisons, with any disagreements."""

    checked: dict = field(default_factory=lambda: {s: 0 for s in SHAPES})
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def merge(self, other: "SweepReport") -> "SweepReport":
        for s in SHAPES:
            self.checked[s] += other.checked[s]
        self.mismatches.extend(other.mismatches)
        return self


def check_instance(betas: tuple, delta: int, delta_prime: int, gamma: int, p: int) -> SweepReport:
    """Compare all three closed forms with the determinant for one parameter choice."""
    rep = SweepReport()
    singular = det_bordered(BorderedVandermonde(betas, delta, INVERSE, gamma, p)) == 0
    closed = gamma == lemma5_singular_gamma(betas, delta, p)
    rep.checked["lemma5"] += 1
    if singular != closed:
        rep.mismatches.append(("lemma5", betas, delta, None, gamma))

    singular = det_bordered(BorderedVandermonde(betas, delta, INVERSE, gamma, p, shift=delta_prime)) == 0
    if gamma == inv_mod(delta - delta_prime, p):
        # the excluded corner: the matrix is always nonsingular there
        closed = False
    else:
        closed = lemma6_condition(betas, delta, delta_prime, gamma, p)
    rep.checked["lemma6"] += 1
    if singular != closed:
        rep.mismatches.append(("lemma6", betas, delta, delta_prime, gamma))

    singular = det_bordered(BorderedVandermonde(betas, delta, POWER, gamma, p)) == 0
    rep.checked["lemma7"] += 1
    if singular != lemma7_condition(betas, delta, gamma, p):
        rep.mismatches.append(("lemma7", betas, delta, None, gamma))
    return rep


def random_sweep(p: int, k: int, trials: int, rng: random.Random) -> SweepReport:
    check_modulus(p)
    if not 1 <= k <= p - 2:
        raise InvalidShape(f"need 1 <= k <= p - 2 for k betas plus delta, delta'; got k={k}")
    rep = SweepReport()
    for _ in range(trials):
        pts = rng.sample(range(p), k + 2)
        rep.merge(check_instance(tuple(pts[:k]), pts[k], pts[k + 1], rng.randrange(p), p))
    return rep


def exhaustive_sweep(p: int, k: int) -> SweepReport:
    """Every k-set of betas, every delta, delta' outside it, every gamma."""
    check_modulus(p)
    if not 1 <= k <= p - 2:
        raise InvalidShape(f"need 1 <= k <= p - 2, got k={k}")
    rep = SweepReport()
    for betas in itertools.combinations(range(p), k):
        rest = [x for x in range(p) if x not in betas]
        for delta, delta_prime in itertools.permutations(rest, 2):
            for gamma in range(p):
                rep.merge(check_instance(betas, delta, delta_prime, gamma, p))
    return rep


def coverage_failures(p: int, k: int, d_min: int = 2) -> list:
    """Admissible (shape, pool, delta, delta', gamma) for which no singular k-subset exists.

    Pools are every set of size k + d with d >= d_min avoiding delta (and delta').
    Empty under the lemmas' hypotheses.
    """
    fails = []
    for delta in range(p):
        others = [x for x in range(p) if x != delta]
        for size in range(k + d_min, len(others) + 1):
            for pool in itertools.combinations(others, size):
                for gamma in range(p):
                    if find_singular_subset(pool, delta, None, gamma, k, p, "lemma5") is None:
                        fails.append(("lemma5", pool, delta, None, gamma))
                    if gamma != pow(delta, k, p) and find_singular_subset(
                        pool, delta, None, gamma, k, p, "lemma7"
                    ) is None:
                        fails.append(("lemma7", pool, delta, None, gamma))
                    for dp in others:
                        if dp in pool or gamma == inv_mod(delta - dp, p):
                            continue
                        if find_singular_subset(pool, delta, dp, gamma, k, p, "lemma6") is None:
                            fails.append(("lemma6", pool, delta, dp, gamma))
    return fails


def lemma5_reachable(pool: Sequence[int], delta: int, k: int, p: int) -> set:
    """Values of sum 1/(delta - beta) over k-subsets of ``pool``."""
    inv = [inv_mod(delta - b, p) for b in pool]
    return {sum(c) % p for c in itertools.combinations(inv, k)}

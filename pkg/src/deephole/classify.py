"""Deep-hole classes up to equivalence, and a brute-force check of the classification.

Two generating functions are equivalent when ``g = a f + h`` with ``a != 0`` and
``deg h < k``. On the word side that is the same as saying their Newton
coefficient vectors agree up to a nonzero scalar, so a class is named by its
coefficient vector scaled to have leading entry 1.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from deephole.algebra import Poly, inv_mod, newton_decompose
from deephole.errors import BudgetExceeded, HypothesisViolated, IsCodeword
from deephole.grs import (
    GrsCode,
    _base_p_digits,
    default_order,
    det_mod_p,
    enumeration_budget,
    interpolant,
)
from deephole.tree import expected_tree, full_tree, truncate

MONOMIAL = "MonomialDegK"
INVERSE_SHIFT = "InverseShift"
OTHER = "Other"


@dataclass(frozen=True)
class DeepHoleClass:
    kind: str
    canonical_cs: tuple
    delta: int | None = None

    def __post_init__(self):
        if not any(self.canonical_cs):
            raise IsCodeword("a deep-hole class cannot have an all-zero coefficient vector")
        if (self.kind == INVERSE_SHIFT) != (self.delta is not None):
            raise ValueError("delta is required exactly for InverseShift classes")

    def describe(self, k: int) -> str:
        if self.kind == MONOMIAL:
            return f"x^{k}"
        if self.kind == INVERSE_SHIFT:
            return f"1/(x-{self.delta})"
        return "other"


@dataclass(frozen=True)
class EquivalenceWitness:
    """``g = a * f + h`` with ``a`` nonzero and ``deg h < k``."""

    a: int
    h: Poly

    def apply(self, f: Poly) -> Poly:
        return f * self.a + self.h


def normalize(cs: Sequence[int], p: int) -> tuple:
    lead = next((c for c in cs if c % p), 0)
    if not lead:
        raise IsCodeword("coefficient vector is zero")
    s = inv_mod(lead, p)
    return tuple(c * s % p for c in cs)


def canonical_form(code: GrsCode, u: Sequence[int]) -> tuple:
    cs = newton_decompose(u, code.evalset, code.k, code.p).cs
    try:
        return normalize(cs, code.p)
    except IsCodeword:
        raise IsCodeword("word is a codeword (degree < k)") from None


def find_equivalence(code: GrsCode, u: Sequence[int], v: Sequence[int]) -> EquivalenceWitness | None:
    """Return ``(a, h)`` with ``v = a u + h`` on the evaluation set, or None."""
    p = code.p
    cu = newton_decompose(u, code.evalset, code.k, p).cs
    cv = newton_decompose(v, code.evalset, code.k, p).cs
    lead = next((i for i, c in enumerate(cu) if c), None)
    if lead is None or not cv[lead]:
        return None
    a = cv[lead] * inv_mod(cu[lead], p) % p
    if any((y - a * x) % p for x, y in zip(cu, cv)):
        return None
    h = interpolant(code, [(y - a * x) % p for x, y in zip(u, v)])
    return EquivalenceWitness(a, h)


def hypothesis_holds(p: int, k: int) -> bool:
    return 2 * k >= p - 1


def expected_classes(code: GrsCode) -> list:
    """The x^k class plus one 1/(x - delta) class per delta outside D.

    The deltas are listed in the order 1, ..., p-1, 0. When n = k + 1 every
    non-codeword is a deep hole and all of these classes share the vector (1,).
    """
    p, k = code.p, code.k
    xk = code.word_of(Poly.monomial(k, p))
    out = [DeepHoleClass(MONOMIAL, canonical_form(code, xk))]
    for delta in default_order(p):
        if delta not in code.evalset:
            cs = canonical_form(code, code.inverse_shift_word(delta))
            out.append(DeepHoleClass(INVERSE_SHIFT, cs, delta))
    return out


def classified_deep_holes(code: GrsCode) -> list:
    if not hypothesis_holds(code.p, code.k):
        raise HypothesisViolated(f"k={code.k} < (p-1)/2 for p={code.p}")
    return expected_classes(code)


def _minor_forms(code: GrsCode) -> tuple:
    """For each (k+1)-subset T of columns, the cofactors turning u|T into det([G_T; u_T])."""
    p, k, xs = code.p, code.k, code.evalset
    subsets = list(itertools.combinations(range(code.n), k + 1))
    weights = np.empty((len(subsets), k + 1), dtype=np.int64)
    for s, cols in enumerate(subsets):
        for j in range(k + 1):
            rest = [xs[c] for i, c in enumerate(cols) if i != j]
            minor = [[pow(a, r, p) for a in rest] for r in range(k)]
            weights[s, j] = (-1) ** (k + j) * det_mod_p(minor, p) % p
    return np.array(subsets, dtype=np.intp), weights


def _newton_basis(code: GrsCode) -> np.ndarray:
    """Row i holds prod_{j < k+i}(x - alpha_j) evaluated on the evaluation set."""
    p, k, xs = code.p, code.k, code.evalset
    rows = []
    for i in range(code.n - k):
        rows.append([int(np.prod([(x - a) % p for a in xs[: k + i]], dtype=object)) % p for x in xs])
    return np.array(rows, dtype=np.int64)


def _canonical_candidates(m: int, p: int, chunk: int):
    """All vectors in GF(p)^m whose first nonzero entry is 1, lexicographically."""
    for lead in range(m):
        tail = m - lead - 1
        total = p**tail
        for start in range(0, total, chunk):
            t = _base_p_digits(start, min(total, start + chunk), tail, p)
            block = np.zeros((len(t), m), dtype=np.int64)
            block[:, lead] = 1
            block[:, lead + 1 :] = t
            yield block


def enumerate_deep_holes(code: GrsCode, budget: int | None = None, chunk: int = 1 << 16) -> list:
    """Exhaustive list of canonical coefficient vectors whose word is a deep hole.

    Every candidate word is tested against every (k+1)-minor of G stacked with
    the word. Minors are linear in the word, so a block of subsets is evaluated
    with one matrix product; candidates leave the block as soon as a minor
    vanishes.
    """
    p, k, n = code.p, code.k, code.n
    m = n - k
    if p**m > enumeration_budget(budget):
        raise BudgetExceeded(f"p^(n-k) = {p}^{m} exceeds the enumeration budget")
    if n * (p - 1) ** 2 >= 2**53:
        # the float64 products below would stop being exact
        raise BudgetExceeded(f"p={p} is too large for the vectorised search")
    subsets, weights = _minor_forms(code)
    # dense (subset x column) form so blocks of minors are one matmul
    dense = np.zeros((len(subsets), n), dtype=np.float64)
    np.put_along_axis(dense, subsets, weights.astype(np.float64), axis=1)
    basis = _newton_basis(code).astype(np.float64)
    group = 64
    found = []
    for cands in _canonical_candidates(m, p, chunk):
        words = np.mod(cands.astype(np.float64) @ basis, p)
        alive = np.arange(len(words))
        for g in range(0, len(dense), group):
            if not alive.size:
                break
            vals = np.mod(words[alive] @ dense[g : g + group].T, p)
            alive = alive[(vals != 0).all(axis=1)]
        found.extend(map(tuple, cands[alive].tolist()))
    return sorted(found)


@dataclass
class LengthCheck:
    p: int
    k: int
    n: int
    expected: list
    found: list
    tree_match: bool | None = None

    @property
    def classes_expected(self) -> int:
        return len(self.expected)

    @property
    def classes_found(self) -> int:
        return len(self.found)

    @property
    def match(self) -> bool:
        return self.expected == self.found

    @property
    def extra(self) -> list:
        return sorted(set(self.found) - set(self.expected))

    @property
    def missing(self) -> list:
        return sorted(set(self.expected) - set(self.found))

    @property
    def passed(self) -> bool:
        return self.match and self.tree_match is not False


@dataclass
class VerificationReport:
    p: int
    k: int
    order: tuple
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "k", "n", "classes_expected", "classes_found", "match"])
        for r in self.rows:
            w.writerow([r.p, r.k, r.n, r.classes_expected, r.classes_found, str(r.match).lower()])
        return buf.getvalue()


def verify_classification(
    p: int, k: int, order=None, n_range=None, budget: int | None = None, trees: bool = True
) -> VerificationReport:
    """Compare brute-force deep holes with the predicted classes for D = first n of ``order``.

    Set agreement and full-vs-expected tree agreement (up to depth n - k) are
    reported separately per n.
    """
    order = default_order(p) if order is None else tuple(int(a) % p for a in order)
    ns = list(range(k + 1, p + 1)) if n_range is None else list(n_range)
    report = VerificationReport(p, k, order)
    if trees and ns:
        depth = max(ns) - k
        exp_paths = truncate(expected_tree(p, k, order), depth).paths()
        full_paths = full_tree(p, k, order, max_depth=depth).paths()
    for n in ns:
        code = GrsCode(p, k, order[:n])
        expected = sorted({c.canonical_cs for c in expected_classes(code)})
        row = LengthCheck(p, k, n, expected, enumerate_deep_holes(code, budget))
        if trees:
            row.tree_match = {q for q in exp_paths if len(q) <= n - k} == {
                q for q in full_paths if len(q) <= n - k
            }
        report.rows.append(row)
    return report


def conjecture_check(p: int, k: int, which: int, budget: int | None = None) -> LengthCheck:
    """Brute-force the deep holes of RS_p(GF(p), k) (which=1) or RS_p(GF(p)*, k) (which=2).

    The predicted classes are x^k alone, or x^k together with x^(p-2).
    """
    if which == 1:
        code = GrsCode(p, k, default_order(p))
        predicted = [Poly.monomial(k, p)]
    elif which == 2:
        code = GrsCode(p, k, tuple(range(1, p)))
        predicted = [Poly.monomial(k, p), Poly.monomial(p - 2, p)]
    else:
        raise ValueError(f"conjecture must be 1 or 2, got {which}")
    expected = sorted({canonical_form(code, code.word_of(f)) for f in predicted})
    return LengthCheck(p, k, code.n, expected, enumerate_deep_holes(code, budget))

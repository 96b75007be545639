"""Slow, obviously-correct reference computations used only by the tests."""

import itertools


def leibniz_det(m, p):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= m[i][j]
        total += term
    return total % p


def eval_coeffs(coeffs, x, p):
    return sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p


def naive_error_distance(p, k, evalset, u):
    best = len(evalset)
    for msg in itertools.product(range(p), repeat=k):
        cw = [eval_coeffs(msg, a, p) for a in evalset]
        best = min(best, sum(x != y for x, y in zip(cw, u)))
    return best


def product_poly_value(x, roots, p):
    out = 1
    for r in roots:
        out = out * (x - r) % p
    return out


def mixed_basis_value(x, low_coeffs, cs, nodes, k, p):
    """low(x) + sum_i cs[i] * prod_{j < k+i} (x - nodes[j]) by direct evaluation."""
    total = eval_coeffs(low_coeffs, x, p)
    for i, c in enumerate(cs):
        total += c * product_poly_value(x, nodes[: k + i], p)
    return total % p


def bitmask_sumset(n, members, modulus):
    """n^S by dynamic programming over reachable sums, one bitmask per element count."""
    full = (1 << modulus) - 1
    reach = [0] * (n + 1)
    reach[0] = 1
    for x in members:
        for j in range(n, 0, -1):
            r = reach[j - 1]
            rot = ((r << x) | (r >> (modulus - x))) & full if x else r
            reach[j] |= rot
    return {s for s in range(modulus) if reach[n] >> s & 1}

"""Deep hole trees over an ordered listing alpha_1, ..., alpha_p of GF(p).

A node at depth i is a coefficient prefix (c_1, ..., c_i). It stands for the
function ``c_1 N_k + ... + c_i N_{k+i-1}`` with ``N_j = prod_{m<=j}(x - alpha_m)``,
and it is in the tree when that function gives a deep hole of RS_p(D_i, k),
where D_i = {alpha_1, ..., alpha_{k+i}}. The root is always c_1 = 1.

``expected_tree`` grows only the branches coming from x^k and from
1/(x - delta). ``full_tree`` searches every child residue, keeping the ones
that pass the MDS criterion.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from deephole.algebra import NewtonForm, Poly, check_modulus, inv_mod, newton_compose, newton_decompose
from deephole.errors import InvalidDimension, ParameterMismatch
from deephole.grs import GrsCode, default_order, is_deep_hole

ROOT = "Root"
X_TO_K = "XtoK"
UNEXPECTED = "Unexpected"


def inverse_shift_label(delta: int) -> str:
    return f"InverseShift({delta})"


@dataclass(frozen=True)
class TreeNode:
    coeff: int
    depth: int
    label: str
    children: tuple = ()

    def to_dict(self) -> dict:
        return {
            "coeff": self.coeff,
            "depth": self.depth,
            "label": self.label,
            "children": [c.to_dict() for c in self.children],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TreeNode":
        return cls(d["coeff"], d["depth"], d["label"], tuple(cls.from_dict(c) for c in d["children"]))


@dataclass(frozen=True)
class DeepHoleTree:
    p: int
    k: int
    order: tuple
    mode: str
    root: TreeNode
    max_depth: int = field(default=0, compare=False)

    def walk(self) -> Iterator[tuple]:
        """Yield ``(path, node)`` depth-first, children in ascending order."""
        stack = [((self.root.coeff,), self.root)]
        while stack:
            path, node = stack.pop()
            yield path, node
            for child in reversed(node.children):
                stack.append((path + (child.coeff,), child))

    def paths(self) -> set:
        return {path for path, _ in self.walk()}

    def labels(self) -> dict:
        return {path: node.label for path, node in self.walk()}

    def nodes_per_depth(self) -> dict:
        return dict(sorted(Counter(len(path) for path in self.paths()).items()))

    def children_of(self, path: tuple) -> tuple:
        node = self.root
        if path[:1] != (node.coeff,):
            raise KeyError(path)
        for c in path[1:]:
            node = next(ch for ch in node.children if ch.coeff == c)
        return tuple(ch.coeff for ch in node.children)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "order": list(self.order),
            "mode": self.mode,
            "root": self.root.to_dict(),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "DeepHoleTree":
        root = TreeNode.from_dict(d["root"])
        tree = cls(d["p"], d["k"], tuple(d["order"]), d["mode"], root)
        depth = max(len(path) for path in tree.paths())
        object.__setattr__(tree, "max_depth", depth)
        return tree

    def to_dot(self) -> str:
        """Graphviz digraph: one node per path, edges labelled by the child coefficient."""
        lines = [
            f'digraph "deephole_p{self.p}_k{self.k}_{self.mode}" {{',
            "  node [shape=circle];",
        ]
        for path, node in self.walk():
            name = "n_" + "_".join(map(str, path))
            text = str(node.coeff)
            if not node.children or path == (self.root.coeff,):
                text += f"\\n{node.label}"
            lines.append(f'  {name} [label="{text}"];')
        for path, node in self.walk():
            name = "n_" + "_".join(map(str, path))
            for child in node.children:
                lines.append(f'  {name} -> {name}_{child.coeff} [label="{child.coeff}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _freeze(trie: dict, coeff: int, depth: int, label: str) -> TreeNode:
    kids = tuple(_freeze(sub, c, depth + 1, lab) for c, (lab, sub) in sorted(trie.items()))
    return TreeNode(coeff, depth, label, kids)


def _from_paths(labelled: dict) -> TreeNode:
    """Build the node hierarchy from ``{path: label}``; every path starts at the root."""
    trie: dict = {}
    for path in sorted(labelled, key=lambda t: (len(t), t)):
        level = trie
        for c in path[1:-1]:
            level = level[c][1]
        if len(path) > 1:
            level.setdefault(path[-1], (labelled[path], {}))
    return _freeze(trie, 1, 1, ROOT)


def _check_params(p: int, k: int, order) -> tuple:
    check_modulus(p)
    order = default_order(p) if order is None else tuple(int(a) % p for a in order)
    if sorted(order) != list(range(p)):
        raise InvalidDimension(f"order must be a permutation of GF({p}), got {order}")
    if not 1 <= k < p - 1:
        raise InvalidDimension(f"need 1 <= k < p - 1, got k={k}, p={p}")
    return order


def inverse_shift_branch(p: int, k: int, order: tuple, length: int) -> tuple:
    """Coefficients (c_1..c_l), scaled to c_1 = 1, of 1/(x - alpha_{k+l+1}) on D_l."""
    delta = order[k + length]
    nodes = order[: k + length]
    word = [inv_mod(a - delta, p) for a in nodes]
    cs = newton_decompose(word, nodes, k, p).cs
    scale = inv_mod(cs[0], p)
    return tuple(c * scale % p for c in cs)


def expected_tree(p: int, k: int, order=None) -> DeepHoleTree:
    order = _check_params(p, k, order)
    labelled = {(1,): ROOT}
    for length in range(2, p - k):
        branch = inverse_shift_branch(p, k, order, length)
        lab = inverse_shift_label(order[k + length])
        for i in range(2, length + 1):
            labelled.setdefault(branch[:i], lab)
    zero_chain = (1,) + (0,) * (p - k - 1)
    for i in range(2, p - k + 1):
        labelled.setdefault(zero_chain[:i], X_TO_K)
    return DeepHoleTree(p, k, order, "expected", _from_paths(labelled), p - k)


def prefix_word(p: int, k: int, order: tuple, cs: tuple) -> tuple:
    """Word on D_i = alpha_1..alpha_{k+i} of the function with coefficients ``cs``."""
    nodes = order[: k + len(cs)]
    return newton_compose(NewtonForm(Poly.zero(p), tuple(cs), nodes, k))


def prefix_is_deep_hole(p: int, k: int, order: tuple, cs: tuple) -> bool:
    code = GrsCode(p, k, order[: k + len(cs)])
    return is_deep_hole(code, prefix_word(p, k, order, cs), method="mds")


def full_tree(p: int, k: int, order=None, max_depth: int | None = None) -> DeepHoleTree:
    order = _check_params(p, k, order)
    max_depth = p - k if max_depth is None else max_depth
    if not 1 <= max_depth <= p - k:
        raise InvalidDimension(f"max_depth must lie in [1, {p - k}], got {max_depth}")
    expected = expected_tree(p, k, order).labels()

    def grow(path: tuple) -> TreeNode:
        kids = []
        if len(path) < max_depth:
            for gamma in range(p):
                child = path + (gamma,)
                if prefix_is_deep_hole(p, k, order, child):
                    kids.append(grow(child))
        return TreeNode(path[-1], len(path), expected.get(path, UNEXPECTED), tuple(kids))

    return DeepHoleTree(p, k, order, "full", grow((1,)), max_depth)


def truncate(tree: DeepHoleTree, depth: int) -> DeepHoleTree:
    labels = {path: lab for path, lab in tree.labels().items() if len(path) <= depth}
    root = _from_paths(labels)
    # _from_paths labels the root generically; keep the original one
    root = TreeNode(tree.root.coeff, 1, tree.root.label, root.children)
    return DeepHoleTree(tree.p, tree.k, tree.order, tree.mode, root, min(depth, tree.max_depth))


def tree_diff(a: DeepHoleTree, b: DeepHoleTree) -> list:
    """Paths present in exactly one tree, as ``(path, "only_a" | "only_b")``, sorted."""
    if (a.p, a.k, tuple(a.order)) != (b.p, b.k, tuple(b.order)):
        raise ParameterMismatch("trees differ in p, k or evaluation order")
    pa, pb = a.paths(), b.paths()
    out = [(path, "only_a") for path in pa - pb] + [(path, "only_b") for path in pb - pa]
    return sorted(out, key=lambda t: (len(t[0]), t[0]))

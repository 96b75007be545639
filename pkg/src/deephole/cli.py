"""Command-line front end.

Exit codes: 0 when everything checked holds, 1 when a mathematical check fails
(a witness is printed), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from deephole import addcomb, classify, identities, tree
from deephole.algebra import is_prime
from deephole.errors import DeepHoleError
from deephole.grs import (
    DEFAULT_BUDGET,
    GrsCode,
    default_order,
    degree_bounds,
    error_distance,
    interpolant,
    is_deep_hole,
)

DEFAULT_SEED = 12345
ORDER_HELP = 'comma list; "default" (the default) means 1,...,p-1,0'


class UsageError(Exception):
    pass


class _HelpFormatter(argparse.ArgumentDefaultsHelpFormatter):
    def _get_help_string(self, action):
        if action.default in (None, False) or "default" in (action.help or ""):
            return action.help
        return super()._get_help_string(action)


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if p < 3 or p >= 2**31 or not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not an odd prime below 2^31")
    return p


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers: {text!r}") from None


def _order(text: str | None, p: int) -> tuple:
    if text is None or text == "default":
        return default_order(p)
    return tuple(x % p for x in _int_list(text))


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_tree(args) -> int:
    order = _order(args.order, args.p)
    if args.mode == "expected":
        t = tree.expected_tree(args.p, args.k, order)
        if args.max_depth is not None:
            t = tree.truncate(t, args.max_depth)
    else:
        t = tree.full_tree(args.p, args.k, order, args.max_depth)
    info = sys.stdout if args.out else sys.stderr
    _emit(t.to_json() + "\n", args.out)
    if args.dot:
        Path(args.dot).write_text(t.to_dot(), encoding="utf-8")
    for depth, count in t.nodes_per_depth().items():
        print(f"depth {depth}: {count} node(s)", file=info)
    return 0


def _code(args) -> GrsCode:
    evalset = default_order(args.p) if args.eval in (None, "default") else _int_list(args.eval)
    return GrsCode(args.p, args.k, tuple(evalset))


def cmd_classify(args) -> int:
    code = _code(args)
    if not classify.hypothesis_holds(code.p, code.k):
        if not args.brute:
            raise UsageError(
                f"k={code.k} < (p-1)/2: the classification is not proved here; rerun with --brute"
            )
        print(f"warning: k={code.k} < (p-1)/2, listing the expected families only")
        classes = classify.expected_classes(code)
    else:
        classes = classify.classified_deep_holes(code)
    print(f"RS_{code.p}(D, {code.k}), D = {list(code.evalset)}, n = {code.n}")
    for c in classes:
        print(f"  {c.describe(code.k):<12} {c.canonical_cs}")
    if not args.brute:
        return 0
    expected = sorted({c.canonical_cs for c in classes})
    found = classify.enumerate_deep_holes(code, args.budget)
    print(f"brute force: {len(found)} class(es), predicted {len(expected)}")
    extra = sorted(set(found) - set(expected))
    missing = sorted(set(expected) - set(found))
    for cs in extra:
        print(f"  unexpected deep hole: {cs}")
    for cs in missing:
        print(f"  predicted but not a deep hole: {cs}")
    ok = not extra and not missing
    print("match" if ok else "MISMATCH")
    return 0 if ok else 1


def cmd_verify(args) -> int:
    if args.conjecture:
        row = classify.conjecture_check(args.p, args.k, args.conjecture, args.budget)
        print(f"conjecture {args.conjecture}: p={args.p} k={args.k} n={row.n}")
        print(f"  predicted {row.expected}")
        print(f"  found     {row.found}")
        print("PASS" if row.match else "FAIL")
        return 0 if row.match else 1
    if not classify.hypothesis_holds(args.p, args.k):
        print(f"note: k={args.k} < (p-1)/2, outside the proved range; failures are expected")
    lo = args.n_min if args.n_min is not None else args.k + 1
    hi = args.n_max if args.n_max is not None else args.p
    if not args.k < lo <= hi <= args.p:
        raise UsageError(f"need k < n_min <= n_max <= p, got [{lo}, {hi}]")
    report = classify.verify_classification(
        args.p, args.k, _order(args.order, args.p), range(lo, hi + 1), args.budget
    )
    for r in report.rows:
        print(
            f"n={r.n}: expected={r.classes_expected} found={r.classes_found} "
            f"classes={'ok' if r.match else 'FAIL'} tree={'ok' if r.tree_match else 'FAIL'}"
        )
        for cs in r.extra:
            print(f"  witness (unexpected deep hole): {cs}")
        for cs in r.missing:
            print(f"  witness (missing class): {cs}")
    if args.out:
        Path(args.out).write_text(report.to_csv(), encoding="utf-8")
    else:
        sys.stdout.write(report.to_csv())
    print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def _fmt(s) -> str:
    return "{" + ",".join(map(str, s)) + "}"


def cmd_addcomb(args) -> int:
    op = args.op
    if op == "sumset":
        s = addcomb.ResidueSet.of(args.mod, args.set)
        print(_fmt(addcomb.restricted_sumset(args.n, s)))
        return 0
    if op == "dsh":
        if args.all:
            bad = 0
            for s in addcomb.subsets_of(args.p):
                for n in range(1, len(s) + 1):
                    lhs, rhs, ok = addcomb.check_dsh_bound(n, s)
                    if not ok:
                        bad += 1
                        print(f"violation: n={n} S={_fmt(s)} |n^S|={lhs} < {rhs}")
            print(f"p={args.p}: {'all bounds hold' if not bad else f'{bad} violation(s)'}")
            return 0 if not bad else 1
        if args.set is None or args.n is None:
            raise UsageError("dsh needs --set and --n, or --all")
        lhs, rhs, ok = addcomb.check_dsh_bound(args.n, addcomb.ResidueSet.of(args.p, args.set))
        print(f"|{args.n}^S| = {lhs} >= {rhs}: {ok}")
        return 0 if ok else 1
    if op == "two-sum":
        if args.all:
            bad = 0
            for n in range(2, args.max_n + 1):
                for mask in addcomb.two_sum_sweep(n):
                    bad += 1
                    print(f"violation: n={n} S={_fmt(addcomb.mask_to_set(n, int(mask)))}")
            print(f"n in [2, {args.max_n}]: {'all complete' if not bad else f'{bad} violation(s)'}")
            return 0 if not bad else 1
        if args.set is None or args.mod is None:
            raise UsageError("two-sum needs --mod and --set, or --all")
        s = addcomb.ResidueSet.of(args.mod, args.set)
        ok = addcomb.check_two_sum_complete(s)
        print(f"2^S = Z/{args.mod}Z: {ok}")
        return 0 if ok or not addcomb.two_sum_hypothesis(s) else 1
    # two-product
    if args.all:
        bad = 0
        for s in addcomb.subsets_of(args.p, range(1, args.p)):
            if not addcomb.two_product_hypothesis(s):
                continue
            for t in range(1, args.p):
                if addcomb.find_two_product(s, t) is None:
                    bad += 1
                    print(f"violation: S={_fmt(s)} target={t}")
        print(f"p={args.p}: {'every target reached' if not bad else f'{bad} violation(s)'}")
        return 0 if not bad else 1
    if args.set is None or args.target is None:
        raise UsageError("two-product needs --set and --target, or --all")
    s = addcomb.ResidueSet.of(args.p, args.set)
    pair = addcomb.find_two_product(s, args.target)
    print("NotFound" if pair is None else f"({pair[0]},{pair[1]})")
    return 0 if pair is not None or not addcomb.two_product_hypothesis(s) else 1


def cmd_identities(args) -> int:
    rng = random.Random(args.seed)
    rep = identities.random_sweep(args.p, args.k, args.trials, rng)
    print(f"random: {sum(rep.checked.values())} comparisons over {args.trials} instances")
    if args.exhaustive:
        ex = identities.exhaustive_sweep(args.p, args.k)
        print(f"exhaustive: {sum(ex.checked.values())} comparisons")
        rep.merge(ex)
    for m in rep.mismatches[:20]:
        print(f"mismatch: {m}")
    ok = rep.passed
    if args.coverage:
        fails = identities.coverage_failures(args.p, args.k)
        for f in fails[:20]:
            print(f"no singular subset: {f}")
        print(f"coverage: {'every gamma reached' if not fails else f'{len(fails)} failure(s)'}")
        ok = ok and not fails
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_distance(args) -> int:
    code = _code(args)
    u = [x % code.p for x in args.word]
    d = error_distance(code, u, args.budget)
    deg = interpolant(code, u).degree
    print(f"error distance: {d} (covering radius {code.covering_radius})")
    print(f"deg u(x): {deg}")
    if deg >= code.k:
        lo, hi = degree_bounds(code, u)
        print(f"degree bounds: [{lo}, {hi}]")
    brute = d == code.covering_radius
    mds = is_deep_hole(code, u, "mds")
    print(f"deep hole: bruteforce={brute} mds={mds}")
    return 0 if brute == mds else 1


def build_parser() -> argparse.ArgumentParser:
    fmt = _HelpFormatter
    parser = argparse.ArgumentParser(
        prog="deephole",
        description="Deep holes of Reed-Solomon codes over prime fields.",
        epilog=(
            "The evaluation ordering changes the shape of a deep hole tree but not "
            "the deep-hole classification of a given evaluation set."
        ),
        formatter_class=fmt,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def code_args(sp, need_k=True):
        sp.add_argument("--p", type=_prime, required=True, help="odd prime field size")
        if need_k:
            sp.add_argument("--k", type=int, required=True, help="code dimension")

    def budget_arg(sp):
        sp.add_argument(
            "--budget",
            type=int,
            default=None,
            help=f"enumeration cap (default: $DEEPHOLE_BUDGET, else {DEFAULT_BUDGET:.0e})",
        )

    sp = sub.add_parser("tree", help="build an expected or full deep hole tree", formatter_class=fmt)
    code_args(sp)
    sp.add_argument("--mode", choices=["expected", "full"], default="expected", help="which tree to build")
    sp.add_argument("--order", default="default", help=ORDER_HELP)
    sp.add_argument("--max-depth", type=int, default=None, help="depth cap (default: p-k)")
    sp.add_argument("--out", default=None, help="JSON output path (default: stdout)")
    sp.add_argument("--dot", default=None, help="optional Graphviz output path")
    sp.set_defaults(func=cmd_tree)

    sp = sub.add_parser("classify", help="list deep-hole classes of RS_p(D,k)", formatter_class=fmt)
    code_args(sp)
    sp.add_argument("--eval", default="default", help="evaluation set D: " + ORDER_HELP)
    sp.add_argument("--brute", action="store_true", help="cross-check by exhaustive enumeration")
    budget_arg(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="check the classification for a range of n", formatter_class=fmt)
    code_args(sp)
    sp.add_argument("--order", default="default", help=ORDER_HELP)
    sp.add_argument("--n-min", type=int, default=None, help="smallest n (default: k+1)")
    sp.add_argument("--n-max", type=int, default=None, help="largest n (default: p)")
    sp.add_argument(
        "--conjecture",
        type=int,
        choices=[1, 2],
        default=None,
        help="1: D = GF(p), only x^k; 2: D = GF(p)*, x^k and x^(p-2)",
    )
    sp.add_argument("--out", default=None, help="CSV report path (default: stdout)")
    budget_arg(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("addcomb", help="restricted sumset checks", formatter_class=fmt)
    ops = sp.add_subparsers(dest="op", required=True)
    o = ops.add_parser("sumset", help="print n^S", formatter_class=fmt)
    o.add_argument("--mod", type=int, required=True)
    o.add_argument("--set", type=_int_list, required=True)
    o.add_argument("--n", type=int, required=True)
    o = ops.add_parser("dsh", help="|n^S| >= min(p, n|S| - n^2 + 1)", formatter_class=fmt)
    o.add_argument("--p", type=_prime, required=True)
    o.add_argument("--set", type=_int_list, default=None)
    o.add_argument("--n", type=int, default=None)
    o.add_argument("--all", action="store_true", help="every S and every n")
    o = ops.add_parser("two-sum", help="2^S = Z/nZ when |S| > n/2 + 1", formatter_class=fmt)
    o.add_argument("--mod", type=int, default=None)
    o.add_argument("--set", type=_int_list, default=None)
    o.add_argument("--all", action="store_true", help="every modulus 2..max-n and every large S")
    o.add_argument("--max-n", type=int, default=24, help="largest modulus for --all")
    o = ops.add_parser("two-product", help="target = x*y with x != y in S", formatter_class=fmt)
    o.add_argument("--p", type=_prime, required=True)
    o.add_argument("--set", type=_int_list, default=None)
    o.add_argument("--target", type=int, default=None)
    o.add_argument("--all", action="store_true", help="every S with |S| > (p+1)/2 and every target")
    sp.set_defaults(func=cmd_addcomb)

    sp = sub.add_parser("identities", help="closed forms vs determinants", formatter_class=fmt)
    code_args(sp)
    sp.add_argument("--trials", type=int, default=1000, help="random instances per run")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for the random sweep")
    sp.add_argument("--exhaustive", action="store_true", help="also sweep every parameter choice")
    sp.add_argument("--coverage", action="store_true", help="check every admissible gamma is reached")
    sp.set_defaults(func=cmd_identities)

    sp = sub.add_parser("distance", help="error distance of one word", formatter_class=fmt)
    code_args(sp)
    sp.add_argument("--eval", default="default", help="evaluation set D: " + ORDER_HELP)
    sp.add_argument("--word", type=_int_list, required=True)
    budget_arg(sp)
    sp.set_defaults(func=cmd_distance)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, DeepHoleError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

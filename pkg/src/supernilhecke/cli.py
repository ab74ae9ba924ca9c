"""
Command-line front end.

Commands: nf, mul, act, schur, grdim, ses-check, shapovalov, homology,
cyclotomic, verify.  Exit codes: 0 success, 1 verification failure, 2 usage
error.  --format json prints machine-readable output (deterministic for a
fixed --seed); text mode prints human-readable monomials.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .algebra import (
    act, basis_counts, cyclotomic_grdim, random_element, verify_relations,
)
from .dgstructure import DgParams, homology_ranks, nilhecke_cyclotomic_oracle, verify_d_squared
from .exprparse import ParseError, evaluate_algebra, evaluate_ring, parse
from .gradedseries import (
    GradedDim, grdim_An, sdim_An, ses_dimension_check, shapovalov_unit,
    verma_shapovalov,
)
from .induction import recombine_ses, ses_split
from .invariants import (
    Superpartition, eps_sign, is_invariant, schur_super, schur_zero,
    schur_zero_product, strict_partitions,
)
from .superring import SuperPolynomial


class UsageError(ValueError):
    pass


def _series_json(g: GradedDim) -> list[dict]:
    return [{"q": q, "lambda": l, "pi": p, "coeff": c}
            for (q, l, p), c in g.sorted_items()]


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_nf(args) -> int:
    elt = evaluate_algebra(parse(args.expr), args.n, args.m)
    _emit(args, {"terms": elt.to_json_terms()}, repr(elt))
    return 0


def cmd_mul(args) -> int:
    lhs = evaluate_algebra(parse(args.left), args.n, args.m)
    rhs = evaluate_algebra(parse(args.right), args.n, args.m)
    prod = lhs * rhs
    _emit(args, {"terms": prod.to_json_terms()}, repr(prod))
    return 0


def cmd_act(args) -> int:
    op = evaluate_algebra(parse(args.expr), args.n, args.m)
    arg = evaluate_ring(parse(args.ring_expr), args.n, args.m)
    res = act(op, arg)
    _emit(args, {"terms": res.to_json_terms()}, repr(res))
    return 0


def cmd_schur(args) -> int:
    try:
        alpha = tuple(json.loads(args.alpha))
        beta = tuple(json.loads(args.beta))
    except json.JSONDecodeError as exc:
        raise UsageError(f"superpartition parts must be JSON arrays: {exc}")
    sp = Superpartition(alpha, beta)
    res = schur_super(args.n, args.m, sp)
    _emit(args, {"terms": res.to_json_terms()}, repr(res))
    return 0


def cmd_grdim(args) -> int:
    g = grdim_An(args.n, args.m, args.qcut)
    _emit(args, {"series": _series_json(g), "qcut": args.qcut}, repr(g))
    return 0


def cmd_ses_check(args) -> int:
    ok = ses_dimension_check(args.n, args.m, args.qcut)
    _emit(args, {"passed": ok}, "pass" if ok else "FAIL")
    return 0 if ok else 1


def cmd_shapovalov(args) -> int:
    sh = verma_shapovalov(args.n, args.m, args.qcut)
    sd = sdim_An(args.n, args.m, args.qcut)
    normalized = shapovalov_unit(args.n, args.m) * sd
    ok = sh == normalized.truncate(args.qcut)
    payload = {"shapovalov": _series_json(sh),
               "sdim_match_after_unit": ok}
    _emit(args, payload, f"{sh!r}\nmatches unit . sdim: {ok}")
    return 0 if ok else 1


def cmd_homology(args) -> int:
    params = DgParams(args.n, args.m, args.N)
    table = homology_ranks(params, args.qcut)
    rows = [{"q": q, "h": h, "dim": d} for (q, h), d in sorted(table.items())]
    lines = ["q\th\tdim"] + [f"{r['q']}\t{r['h']}\t{r['dim']}" for r in rows]
    _emit(args, {"table": rows}, "\n".join(lines))
    return 0


def cmd_cyclotomic(args) -> int:
    table = cyclotomic_grdim(args.n, args.N, args.qcut)
    rows = [{"q": q, "lambda": l, "pi": p, "dim": d}
            for (q, l, p), d in sorted(table.items())]
    lines = ["q\tlambda\tdim"] + [f"{r['q']}\t{r['lambda']}\t{r['dim']}" for r in rows]
    _emit(args, {"table": rows}, "\n".join(lines))
    return 0


# ---- verification suites -----------------------------------------------------

def suite_relations(n: int, m: int, qcut: int, seed: int) -> list[str]:
    return [f"relations({n},{m}): {msg}"
            for nn in range(1, n + 1)
            for msg in verify_relations(nn, m)]


def suite_basis(n: int, m: int, qcut: int, seed: int) -> list[str]:
    failures = []
    for nn in range(0, n + 1):
        counts = basis_counts(nn, m, qcut)
        series = grdim_An(nn, m, qcut)
        got = {k: c for k, c in series.coeffs.items() if k[0] <= qcut}
        if got != counts:
            failures.append(f"basis({nn},{m}): enumeration disagrees with the closed form")
    return failures


def suite_schur(n: int, m: int, qcut: int, seed: int) -> list[str]:
    failures = []
    for beta in strict_partitions(n):
        s = schur_zero(n, m, beta)
        if not is_invariant(s):
            failures.append(f"schur({n},{m}): S_0,{beta} is not invariant")
    for beta in strict_partitions(n):
        for betap in strict_partitions(n):
            prod = schur_zero_product(n, m, beta, betap)
            sign, merged = eps_sign(beta, betap)
            want = (schur_zero(n, m, merged).scale(sign) if sign
                    else SuperPolynomial.zero(n, m))
            if prod != want:
                failures.append(f"schur({n},{m}): product rule fails at {beta},{betap}")
    return failures


def suite_dg(n: int, m: int, N: int, qcut: int, seed: int) -> list[str]:
    failures = []
    params = DgParams(n, m, N)
    if not verify_d_squared(params, qcut, seed=seed):
        failures.append(f"dg({n},{m},{N}): d^2 or Leibniz fails")
    table = homology_ranks(params, qcut)
    if any(h != 0 for (_, h) in table):
        failures.append(f"dg({n},{m},{N}): homology outside degree 0")
    oracle = nilhecke_cyclotomic_oracle(n, m + N, qcut)
    if {q: d for (q, h), d in table.items()} != oracle:
        failures.append(f"dg({n},{m},{N}): homology disagrees with the cyclotomic oracle")
    return failures


def suite_ses(n: int, m: int, qcut: int, seed: int, count: int = 20) -> list[str]:
    failures = []
    rng = random.Random(seed)
    for nn in range(1, n + 1):
        if not ses_dimension_check(nn, m, qcut):
            failures.append(f"ses({nn},{m}): dimension identity fails")
    for _ in range(count):
        w = random_element(n + 1, m, rng, nterms=3, maxexp=1)
        pairs, coker = ses_split(w)
        if recombine_ses(n + 1, m, pairs, coker) != w:
            failures.append(f"ses({n},{m}): splitting failed to recombine")
            break
    return failures


def cmd_verify(args) -> int:
    n, m, qcut, seed = args.n, args.m, args.qcut, args.seed
    suites = {
        "relations": lambda: suite_relations(n, m, qcut, seed),
        "basis": lambda: suite_basis(n, m, qcut, seed),
        "schur": lambda: suite_schur(n, m, qcut, seed),
        "dg": lambda: suite_dg(n, m, args.N, qcut, seed),
        "ses": lambda: suite_ses(n, m, qcut, seed),
    }
    if args.suite == "all":
        names = list(suites)
    elif args.suite in suites:
        names = [args.suite]
    else:
        raise UsageError(f"unknown suite {args.suite!r}")
    results = {}
    if args.jobs > 1 and len(names) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = {name: pool.submit(_run_suite_entry, name, n, m, args.N, qcut, seed)
                       for name in names}
            for name in names:
                results[name] = futures[name].result()
    else:
        for name in names:
            results[name] = suites[name]()
    failures = [msg for name in names for msg in results[name]]
    payload = {"suites": {name: {"passed": not results[name],
                                 "failures": results[name]} for name in names}}
    text = "\n".join(f"{name}: {'pass' if not results[name] else 'FAIL'}"
                     for name in names)
    if failures:
        text += "\n" + "\n".join(failures)
    _emit(args, payload, text)
    return 0 if not failures else 1


def _run_suite_entry(name, n, m, N, qcut, seed):
    table = {
        "relations": lambda: suite_relations(n, m, qcut, seed),
        "basis": lambda: suite_basis(n, m, qcut, seed),
        "schur": lambda: suite_schur(n, m, qcut, seed),
        "dg": lambda: suite_dg(n, m, N, qcut, seed),
        "ses": lambda: suite_ses(n, m, qcut, seed),
    }
    return table[name]()


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--n", type=int, default=2, help="number of strands")
    shared.add_argument("--m", type=int, default=-1,
                        help="minimal-label parameter (default -1)")
    shared.add_argument("--N", type=int, default=2, help="differential index")
    shared.add_argument("--qcut", type=int, default=10, help="q-degree cutoff")
    shared.add_argument("--seed", type=int, default=2024,
                        help="seed for randomized suites")
    shared.add_argument("--format", choices=("json", "text"), default="json")
    shared.add_argument("--jobs", type=int, default=1,
                        help="parallel workers for verify all")

    parser = argparse.ArgumentParser(
        prog="supernilhecke",
        description="Exact computations in the enlarged nilHecke superalgebra")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[shared], help="normal form of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("mul", parents=[shared], help="product of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("act", parents=[shared],
                       help="act by an operator on a ring element")
    p.add_argument("expr")
    p.add_argument("ring_expr")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("schur", parents=[shared],
                       help="Schur superpolynomial from alpha, beta")
    p.add_argument("alpha", help="JSON array, weakly decreasing")
    p.add_argument("beta", help="JSON array, strictly increasing")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("grdim", parents=[shared], help="closed-form graded rank")
    p.set_defaults(func=cmd_grdim)

    p = sub.add_parser("ses-check", parents=[shared],
                       help="graded-dimension identity of the SES")
    p.set_defaults(func=cmd_ses_check)

    p = sub.add_parser("shapovalov", parents=[shared],
                       help="Verma pairing vs graded superdimension")
    p.set_defaults(func=cmd_shapovalov)

    p = sub.add_parser("homology", parents=[shared], help="dg-homology table")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("cyclotomic", parents=[shared],
                       help="graded dimension of the quotient by x_1^N")
    p.set_defaults(func=cmd_cyclotomic)

    p = sub.add_parser("verify", parents=[shared], help="run a verification suite")
    p.add_argument("suite", choices=("relations", "basis", "schur", "dg", "ses", "all"))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (ParseError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 a verification found a counterexample, 2 usage or
input error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import discrete as dl
from .constructions import FAMILIES as CONSTRUCTIONS
from .intervals import (
    SetFileError,
    as_rational,
    minkowski_sum,
    load_set,
    torus_project,
    torus_sum,
    union_to_json,
)
from .search import FAMILIES as SEARCH_FAMILIES, SearchConfig, run_search_report
from .semigroup import DEFAULT_MAX_CELLS, gap, h_fold
from .verify import (
    SUITES,
    THEOREM_SUITES,
    default_workers,
    discrete_exhaustive,
    discrete_random,
    probe_survey,
    run_verify,
)

EXHAUSTIVE_THEOREMS = ("3n3", "lev", "lint", "chA", "cd", "cdcor")
DISCRETE_THEOREMS = EXHAUSTIVE_THEOREMS + ("freiman",)


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise UsageError(f"expected comma separated integers, got {text!r}") from exc


def cmd_gap(args) -> int:
    A = load_set(args.set)
    _emit(gap(A, max_cells=args.max_grid_cells).to_json())
    return 0


def cmd_sumset(args) -> int:
    U = load_set(args.set)
    V = load_set(args.other) if args.other else U
    if args.torus:
        T = torus_sum(torus_project(U), torus_project(V))
        _emit({"intervals": T.parts.to_pairs(), "covers_zero": T.covers_zero, "measure": str(T.measure())})
        return 0
    if args.h is not None:
        if args.other:
            raise UsageError("--h folds a single set; drop --other")
        S = h_fold(U, args.h)
    else:
        S = minkowski_sum(U, V)
    out = union_to_json(S)
    out["measure"] = str(S.measure())
    _emit(out)
    return 0


def cmd_construct(args) -> int:
    report = CONSTRUCTIONS[args.family](as_rational(args.alpha))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(union_to_json(report.set), fh)
            fh.write("\n")
    _emit(report.to_json())
    return 0


def cmd_verify(args) -> int:
    suites = args.suite or THEOREM_SUITES
    report = run_verify(suites, args.trials, args.seed, args.workers)
    _emit(report)
    return 0 if report["passed"] else 1


def cmd_discrete(args) -> int:
    if args.action == "frobenius":
        A = _int_list(args.set)
        _emit({"set": A, "frobenius": dl.frobenius_number(A)})
        return 0
    if args.action == "hfold":
        A = _int_list(args.set)
        _emit({"set": A, "h": args.h, "sumset": sorted(dl.int_hfold(A, args.h))})
        return 0
    if args.action == "probe":
        _emit(probe_survey(args.seed, args.trials, tuple(_int_list(args.k)), args.p_max))
        return 0
    theorem = args.theorem
    if args.exhaustive and theorem != "freiman":
        primes = tuple(_int_list(args.primes))
        res = discrete_exhaustive(theorem, args.max_elem, args.max_size, primes, args.h_max)
    else:
        res = discrete_random(theorem, args.trials, args.seed)
    _emit(res)
    return 0 if res["failed"] == 0 else 1


def cmd_search(args) -> int:
    pin = {}
    if args.pin_k is not None:
        pin["k"] = args.pin_k
    if args.pin_x is not None:
        pin["x"] = as_rational(args.pin_x)
    cfg = SearchConfig(
        alpha=as_rational(args.alpha),
        family=args.family,
        budget=args.budget,
        seed=args.seed,
        grid_denominator=args.grid,
        keep=args.keep,
        max_grid_cells=args.max_grid_cells,
        pin=pin,
    )
    report = run_search_report(cfg, args.workers)
    for rec in report["records"]:
        _emit(rec.to_json())
    print(f"evaluated {report['evaluated']}, discarded {report['discarded']}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="contfrob",
        description="Exact gap values G(A) of semigroups generated by open rational interval unions.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gap", help="compute G(A) for a set file")
    g.add_argument("--set", required=True, help='set file: {"intervals": [["lo","hi"], ...]}')
    g.add_argument("--max-grid-cells", type=int, default=DEFAULT_MAX_CELLS,
                   help="refuse inputs whose bound times grid denominator exceeds this")
    g.set_defaults(func=cmd_gap)

    s = sub.add_parser("sumset", help="sumset of set files")
    s.add_argument("--set", required=True, help="first operand")
    s.add_argument("--other", help="second operand (defaults to the first)")
    s.add_argument("--h", type=int, help="h-fold sum of --set instead of a two-set sum")
    s.add_argument("--torus", action="store_true", help="sum the images in R/Z")
    s.set_defaults(func=cmd_sumset)

    c = sub.add_parser("construct", help="build one of the extremal sets")
    c.add_argument("--family", choices=sorted(CONSTRUCTIONS), required=True)
    c.add_argument("--alpha", required=True, help="target measure, e.g. 5/12")
    c.add_argument("--out", help="also write the bare set file here")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="run falsification suites")
    v.add_argument("--suite", action="append", choices=sorted(SUITES),
                   help="suite to run (repeatable; default: all theorem suites)")
    v.add_argument("--trials", type=int, default=1000, help="trials per suite")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--workers", type=int, default=default_workers())
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("discrete", help="integer and modular side")
    dsub = d.add_subparsers(dest="action", required=True)
    fr = dsub.add_parser("frobenius", help="Frobenius number of a coprime set")
    fr.add_argument("--set", required=True, help="comma separated positive integers")
    hf = dsub.add_parser("hfold", help="h-fold sumset of an integer set")
    hf.add_argument("--set", required=True, help="comma separated integers")
    hf.add_argument("--h", type=int, required=True)
    pr = dsub.add_parser("probe", help="log the progression conclusion at small primes (never fails)")
    pr.add_argument("--k", default="8,9,10", help="comma separated fold counts, each >= 8")
    pr.add_argument("--p-max", type=int, default=101)
    pr.add_argument("--trials", type=int, default=20, help="instances per (k, p)")
    pr.add_argument("--seed", type=int, default=0)
    ck = dsub.add_parser("check", help="check an additive statement")
    ck.add_argument("--theorem", choices=DISCRETE_THEOREMS, required=True)
    ck.add_argument("--exhaustive", action="store_true", help="every instance of a small domain")
    ck.add_argument("--max-elem", type=int, default=12, help="exhaustive: sets inside [0, MAX_ELEM]")
    ck.add_argument("--max-size", type=int, default=7, help="exhaustive: at most this many elements")
    ck.add_argument("--h-max", type=int, default=6, help="exhaustive: largest h for lev and chA")
    ck.add_argument("--primes", default="3,5,7", help="exhaustive: moduli for cd and cdcor")
    ck.add_argument("--trials", type=int, default=1000, help="random mode: number of instances")
    ck.add_argument("--seed", type=int, default=0)
    d.set_defaults(func=cmd_discrete)

    se = sub.add_parser("search", help="look for sets beating the first-case formula")
    se.add_argument("--alpha", required=True, help="measure of every candidate")
    se.add_argument("--family", choices=SEARCH_FAMILIES, required=True)
    se.add_argument("--budget", type=int, default=200, help="number of candidates")
    se.add_argument("--seed", type=int, default=0)
    se.add_argument("--grid", type=int, default=24, help="grid denominator for random choices")
    se.add_argument("--keep", type=int, default=10, help="records to print, best first")
    se.add_argument("--pin-k", type=int, help="scaled-chain: fix k")
    se.add_argument("--pin-x", help="scaled-chain: fix x")
    se.add_argument("--workers", type=int, default=default_workers())
    se.add_argument("--max-grid-cells", type=int, default=DEFAULT_MAX_CELLS)
    se.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SetFileError, OSError, ValueError) as exc:
        print(f"contfrob: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

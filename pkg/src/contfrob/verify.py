"""Falsification suites for the bounds and auxiliary statements.

Each suite is a function ``trial(seed, index) -> dict`` that draws its own
input from :func:`contfrob.sampling.trial_rng`.  Results are collected in
index order, so a report depends only on (suite, seed, trials).
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from math import floor
from typing import Callable

from . import discrete as dl
from .bounds import bound_main, bound_strengthened, check_macbeath, clint_predicted, sparse_formula
from .intervals import IntervalUnion, minkowski_sum, torus_sum, union_to_json
from .sampling import (
    random_boxing_instance,
    random_circle_points,
    random_grid_set,
    random_int_set,
    random_torus_union,
    trial_rng,
)
from .semigroup import gap, h_fold, truncated_semigroup

MAX_COUNTEREXAMPLES = 10

# main-bound and strengthened draw from one shared corpus
GRID_CORPUS = "grid-corpus"


def _ok():
    return {"ok": True}


def _skip():
    return {"skipped": True}


def _fail(**payload):
    return {"ok": False, "counterexample": payload}


def grid_corpus_set(seed: int, index: int) -> IntervalUnion:
    return random_grid_set(trial_rng(seed, GRID_CORPUS, index))


def trial_main_bound(seed, index):
    A = grid_corpus_set(seed, index)
    g, b = gap(A).gap, bound_main(A.measure()).value
    if g <= b:
        return _ok()
    return _fail(**union_to_json(A), gap=str(g), bound=str(b))


def trial_strengthened(seed, index):
    A = grid_corpus_set(seed, index)
    alpha = A.measure()
    if alpha > Fraction(1, 2):
        return _skip()
    g, b = gap(A).gap, bound_strengthened(alpha)
    if g <= b:
        return _ok()
    return _fail(**union_to_json(A), gap=str(g), bound=str(b))


def trial_first_case_conjecture(seed, index):
    A = random_grid_set(trial_rng(seed, "conjecture-corpus", index), max_parts=4)
    alpha = A.measure()
    if not Fraction(1, 10) < alpha <= Fraction(1, 3):
        return _skip()
    g, b = gap(A).gap, sparse_formula(alpha)
    if g <= b:
        return _ok()
    return _fail(**union_to_json(A), gap=str(g), bound=str(b))


def trial_clint(seed, index):
    A = random_grid_set(trial_rng(seed, "clint-corpus", index))
    # span >= measure, so kappa >= 1
    kappa = floor((A.sup - A.inf) / A.measure())
    h = 2 * kappa
    fold = h_fold(A, h)
    while h <= 2 * kappa + 4:
        pred = clint_predicted(A, h)
        if pred is not None and not IntervalUnion([pred]).issubset(fold):
            return _fail(**union_to_json(A), h=h, predicted=[str(pred.lo), str(pred.hi)])
        fold = minkowski_sum(fold, A)
        h += 1
    return _ok()


def trial_macbeath(seed, index):
    rng = trial_rng(seed, "macbeath", index)
    U, V = random_torus_union(rng), random_torus_union(rng)
    if check_macbeath(U, V):
        return _ok()
    return _fail(U=U.parts.to_pairs(), V=V.parts.to_pairs(), sum=torus_sum(U, V).parts.to_pairs())


def trial_mes_sj(seed, index):
    A = random_grid_set(trial_rng(seed, "mesSj", index), sup_one=True)
    alpha = A.measure()
    top = floor(1 / alpha) + 2
    S = truncated_semigroup(A, top)
    for j in range(1, top + 1):
        m = S.clip(j - 1, j).measure()
        if m < min(j * alpha, 1):
            return _fail(**union_to_json(A), j=j, slice_measure=str(m))
    return _ok()


def trial_boxing(seed, index):
    v, U = random_boxing_instance(trial_rng(seed, "boxing", index))
    if v in minkowski_sum(U, U):
        return _ok()
    return _fail(v=str(v), **union_to_json(U))


def trial_discrete(seed, index):
    rng = trial_rng(seed, "discrete", index)
    A = random_int_set(rng)
    n, l = len(A), A[-1]
    kappa = dl.lev_kappa(n, l)
    if not dl.check_3n3(A):
        return _fail(theorem="3n3", A=list(A))
    for h in range(1, 7):
        if not dl.check_lev_hA(A, h):
            return _fail(theorem="lev", A=list(A), h=h)
        if l <= 2 * n - 4 and not dl.check_corollary_hA(A, h):
            return _fail(theorem="chA", A=list(A), h=h)
    for h in range(2 * kappa, 2 * kappa + 3):
        if h >= 1 and not dl.check_lint_block(A, h):
            return _fail(theorem="lint", A=list(A), h=h)
    p = rng.choice((3, 5, 7, 11, 13))
    sets = [dl.ModSet(p, rng.sample(range(p), rng.randint(1, p))) for _ in range(rng.randint(2, 4))]
    if not dl.check_cd(sets[0], sets[1]):
        return _fail(theorem="cd", p=p, U=sets[0].elements, V=sets[1].elements)
    if not dl.check_cd_corollary(sets):
        return _fail(theorem="cdcor", p=p, sets=[s.elements for s in sets])
    pts = random_circle_points(rng)
    if not dl.check_freiman(pts):
        return _fail(theorem="freiman", points=[str(z) for z in pts])
    return _ok()


SUITES: dict[str, tuple[Callable, str]] = {
    "main-bound": (trial_main_bound, "theorem"),
    "strengthened": (trial_strengthened, "theorem"),
    "clint": (trial_clint, "theorem"),
    "macbeath": (trial_macbeath, "theorem"),
    "mesSj": (trial_mes_sj, "theorem"),
    "boxing": (trial_boxing, "theorem"),
    "discrete": (trial_discrete, "theorem"),
    "first-case-conjecture": (trial_first_case_conjecture, "conjecture"),
}
THEOREM_SUITES = [name for name, (_, kind) in SUITES.items() if kind == "theorem"]


def default_workers() -> int:
    return os.cpu_count() or 1


def map_trials(fn: Callable, seed: int, trials: int, workers: int = 1) -> list:
    """fn(seed, i) for i in range(trials), in index order."""
    job = partial(fn, seed)
    if workers <= 1 or trials < 2:
        return [job(i) for i in range(trials)]
    chunk = max(1, trials // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(job, range(trials), chunksize=chunk))


def summarize(name: str, kind: str, results: list) -> dict:
    failed = [r for r in results if r.get("ok") is False]
    skipped = sum(1 for r in results if r.get("skipped"))
    return {
        "kind": kind,
        "trials": len(results),
        "checked": len(results) - skipped,
        "skipped": skipped,
        "failed": len(failed),
        "counterexamples": [r["counterexample"] for r in failed[:MAX_COUNTEREXAMPLES]],
    }


def run_suite(name: str, trials: int, seed: int, workers: int = 1) -> dict:
    fn, kind = SUITES[name]
    return summarize(name, kind, map_trials(fn, seed, trials, workers))


def run_verify(suites, trials: int, seed: int, workers: int = 1) -> dict:
    """Run the named suites; ``passed`` ignores conjecture suites."""
    report = {"seed": seed, "trials": trials, "suites": {}}
    for name in suites:
        report["suites"][name] = run_suite(name, trials, seed, workers)
    report["passed"] = all(
        s["failed"] == 0 for s in report["suites"].values() if s["kind"] == "theorem"
    )
    return report


# -- exhaustive discrete harness ----------------------------------------------

def _all_modsets(p: int):
    return [dl.ModSet._raw(p, m) for m in range(1, 1 << p)]


def discrete_exhaustive(theorem: str, max_elem: int = 12, max_size: int = 7,
                        primes=(3, 5, 7), h_max: int = 6) -> dict:
    """Check one statement on every instance of a small domain."""
    checked = failed = 0
    failures = []

    def record(ok, **payload):
        nonlocal checked, failed
        checked += 1
        if not ok:
            failed += 1
            if len(failures) < MAX_COUNTEREXAMPLES:
                failures.append(payload)

    if theorem == "3n3":
        for A in dl.valid_sets(max_elem, max_size, 2):
            record(dl.check_3n3(A), A=list(A))
    elif theorem == "lev":
        for A in dl.valid_sets(max_elem, max_size, 3):
            for h in range(1, h_max + 1):
                record(dl.check_lev_hA(A, h), A=list(A), h=h)
    elif theorem == "lint":
        for A in dl.valid_sets(max_elem, max_size, 3):
            kappa = dl.lev_kappa(len(A), A[-1])
            for h in range(max(2 * kappa, 1), 2 * kappa + 3):
                record(dl.check_lint_block(A, h), A=list(A), h=h)
    elif theorem == "chA":
        for A in dl.valid_sets(max_elem, max_size, 3):
            if A[-1] <= 2 * len(A) - 4:
                for h in range(1, h_max + 1):
                    record(dl.check_corollary_hA(A, h), A=list(A), h=h)
    elif theorem == "cd":
        for p in primes:
            sets = _all_modsets(p)
            for U in sets:
                for V in sets:
                    record(dl.check_cd(U, V), p=p, U=U.elements, V=V.elements)
    elif theorem == "cdcor":
        for p in primes:
            sets = _all_modsets(p)
            if p <= 5:
                for U in sets:
                    for V in sets:
                        for W in sets:
                            record(dl.check_cd_corollary([U, V, W]),
                                   p=p, sets=[U.elements, V.elements, W.elements])
            else:
                for U in sets:
                    for V in sets:
                        record(dl.check_cd_corollary([U, V]), p=p, sets=[U.elements, V.elements])
    else:
        raise ValueError(f"no exhaustive domain for theorem {theorem!r}")
    return {"theorem": theorem, "checked": checked, "failed": failed, "counterexamples": failures}


def discrete_random(theorem: str, trials: int, seed: int) -> dict:
    """Seeded random instances; the only mode for the half-arc lemma."""
    results = []
    for i in range(trials):
        rng = trial_rng(seed, f"discrete-{theorem}", i)
        if theorem == "freiman":
            pts = random_circle_points(rng)
            ok = dl.check_freiman(pts)
            results.append({"ok": ok, "counterexample": {"points": [str(z) for z in pts]}})
            continue
        if theorem in ("cd", "cdcor"):
            p = rng.choice((3, 5, 7, 11, 13, 17))
            sets = [dl.ModSet(p, rng.sample(range(p), rng.randint(1, p))) for _ in range(rng.randint(2, 4))]
            ok = dl.check_cd(*sets[:2]) if theorem == "cd" else dl.check_cd_corollary(sets)
            results.append({"ok": ok, "counterexample": {"p": p, "sets": [s.elements for s in sets]}})
            continue
        A = random_int_set(rng)
        kappa = dl.lev_kappa(len(A), A[-1])
        if theorem == "3n3":
            ok = dl.check_3n3(A)
        elif theorem == "lev":
            ok = all(dl.check_lev_hA(A, h) for h in range(1, 7))
        elif theorem == "lint":
            ok = all(dl.check_lint_block(A, h) for h in range(max(2 * kappa, 1), 2 * kappa + 3))
        elif theorem == "chA":
            if A[-1] > 2 * len(A) - 4:
                results.append({"skipped": True})
                continue
            ok = all(dl.check_corollary_hA(A, h) for h in range(1, 7))
        else:
            raise ValueError(f"unknown theorem {theorem!r}")
        results.append({"ok": ok, "counterexample": {"A": list(A)}})
    out = summarize(theorem, "theorem", results)
    out["theorem"] = theorem
    return out


# -- exploratory probe log ----------------------------------------------------

def _probe_instance(rng, p: int, k: int):
    """Random subset of a dilated progression short enough that kA misses a residue."""
    length = (p - 2) // k + 1
    n_min = p // (k + 1) + 1
    if n_min > length:
        return None
    d = rng.randint(1, p - 1)
    start = rng.randrange(p)
    prog = [(start + i * d) % p for i in range(length)]
    return dl.ModSet(p, rng.sample(prog, rng.randint(n_min, length)))


def probe_survey(seed: int, trials: int = 20, ks=(8, 9, 10), p_max: int = 101) -> dict:
    """Log how often the progression conclusion holds at small primes.

    Nothing is asserted: a False here says nothing about large primes.  For
    each k the record lists per-prime counts and the smallest prime from
    which every sampled instance came out True.
    """
    out = {}
    for k in ks:
        per_prime = {}
        for p in range(k + 2, p_max + 1):
            if not dl.is_prime(p):
                continue
            yes = no = 0
            for i in range(trials):
                A = _probe_instance(trial_rng(seed, f"probe-{k}-{p}", i), p, k)
                if A is None:
                    continue
                try:
                    ok = dl.probe_kp_conclusion(A, k)
                except dl.PreconditionError:
                    continue
                yes, no = yes + ok, no + (not ok)
            if yes or no:
                per_prime[p] = {"true": yes, "false": no}
        first_all_true = None
        for p in sorted(per_prime, reverse=True):
            if per_prime[p]["false"]:
                break
            first_all_true = p
        out[str(k)] = {
            "primes": {str(p): c for p, c in per_prime.items()},
            "smallest_prime_all_true": first_all_true,
        }
    return {"seed": seed, "trials_per_prime": trials, "k": out}

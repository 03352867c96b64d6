"""Exit criteria, one test per criterion, each printing a PASS/FAIL line."""
import json
import random
import subprocess
import sys
import time
from fractions import Fraction
from itertools import combinations
from math import floor, gcd

import pytest

from contfrob import discrete as dl
from contfrob.constructions import example1, example2, example3
from contfrob.semigroup import gap
from contfrob.verify import discrete_exhaustive, discrete_random, run_suite

from oracles import brute_gap, frobenius_brute

pytestmark = pytest.mark.acceptance


class Clock:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def verdict(report_criterion, number, title, mismatches, elapsed, limit, extra=""):
    ok = not mismatches and elapsed < limit
    detail = f"{elapsed:.2f}s of {limit}s"
    if extra:
        detail = f"{extra}, {detail}"
    if mismatches:
        detail += f", first mismatch {mismatches[0]}"
    report_criterion(number, title, ok, detail)
    assert not mismatches, mismatches[:5]
    assert elapsed < limit


def test_criterion_01_example1_sharp(report_criterion):
    alphas = [Fraction(1, k) for k in range(10, 21)] + [Fraction(1, 20), Fraction(3, 40)]
    bad = []
    with Clock() as c:
        for a in alphas:
            g = gap(example1(a).set).gap
            if g != (1 - a) * floor(1 / a):
                bad.append((str(a), str(g)))
    verdict(report_criterion, 1, "example 1 attains (1-a)floor(1/a)", bad, c.elapsed, 10,
            f"{len(alphas)} values")


def test_criterion_02_example2_sharp(report_criterion):
    alphas = sorted({Fraction(n, d) for d in range(3, 30) for n in range(d // 2 + 1, d)})
    rng = random.Random(2)
    alphas = sorted(rng.sample(alphas, 20))
    bad = []
    with Clock() as c:
        for a in alphas:
            A = example2(a).set
            g = gap(A).gap
            if g != 2 * (1 - a):
                bad.append((str(a), str(g)))
    # independent confirmation on the smaller ones
    for a in alphas[:3]:
        pairs = [(p.lo, p.hi) for p in example2(a).set.parts]
        if brute_gap(pairs) != 2 * (1 - a):
            bad.append(("brute", str(a)))
    verdict(report_criterion, 2, "example 2 attains 2(1-a)", bad, c.elapsed, 10, "20 values")


def test_criterion_03_example3_beats_case1(report_criterion):
    alphas = [Fraction(n, d) for n, d in
              [(7, 20), (3, 8), (2, 5), (5, 12), (3, 7), (7, 16), (4, 9), (9, 20), (11, 24), (24, 49)]]
    bad = []
    with Clock() as c:
        for a in alphas:
            r = example3(a)
            k = r.params["k"]
            closed = 2 * (1 + Fraction(2, k * (k + 3))) * (1 - a)
            g = gap(r.set).gap
            if g != closed or not g > (1 - a) * floor(1 / a):
                bad.append((str(a), str(g), str(closed)))
    verdict(report_criterion, 3, "example 3 exceeds (1-a)floor(1/a)", bad, c.elapsed, 30, "10 values")


def _suite(report_criterion, number, title, name, trials, limit, seed=2024):
    with Clock() as c:
        rep = run_suite(name, trials, seed)
    bad = rep["counterexamples"] if rep["failed"] else []
    verdict(report_criterion, number, title, bad, c.elapsed, limit,
            f"{rep['checked']} checked, {rep['skipped']} skipped")
    return rep


def test_criterion_04_main_bound(report_criterion):
    _suite(report_criterion, 4, "gap(A) <= bound_main(mes A)", "main-bound", 1000, 300)


def test_criterion_05_strengthened(report_criterion):
    rep = _suite(report_criterion, 5, "strengthened bound for a <= 1/2", "strengthened", 1000, 300)
    assert rep["checked"] > 0


def test_criterion_06_clint(report_criterion):
    _suite(report_criterion, 6, "predicted interval inside hA", "clint", 300, 300)


def test_criterion_07_macbeath(report_criterion):
    _suite(report_criterion, 7, "mes(U+V) >= min(mes U + mes V, 1)", "macbeath", 1000, 60)


def test_criterion_08_mes_sj(report_criterion):
    _suite(report_criterion, 8, "mes S_j >= min(j a, 1)", "mesSj", 200, 300)


def test_criterion_09_discrete_exhaustive(report_criterion):
    bad, counts = [], []
    with Clock() as c:
        for theorem in ("3n3", "lev", "lint", "chA"):
            rep = discrete_exhaustive(theorem, max_elem=12, max_size=7, h_max=6)
            counts.append(f"{theorem}:{rep['checked']}")
            bad += rep["counterexamples"]
        rep = discrete_exhaustive("cd", primes=(3, 5, 7))
        counts.append(f"cd:{rep['checked']}")
        bad += rep["counterexamples"]
    verdict(report_criterion, 9, "discrete statements on every small instance", bad, c.elapsed, 600,
            " ".join(counts))


def test_criterion_10_frobenius(report_criterion):
    bad = []
    n = 0
    with Clock() as c:
        for a in (1, 2, 3, 4, 5, 6, 7, 8):
            for size in (1, 2, 3):
                for rest in combinations(range(a + 1, 41), size - 1):
                    A = (a,) + rest
                    if gcd(*A) != 1:
                        continue
                    n += 1
                    if dl.frobenius_number(A) != dl.frobenius_residue(A):
                        bad.append(A)
        rng = random.Random(10)
        for _ in range(3000):
            A = sorted(set([rng.randint(1, 8)] + [rng.randint(2, 40) for _ in range(rng.randint(3, 9))]))
            if gcd(*A) != 1:
                continue
            n += 1
            if dl.frobenius_number(A) != dl.frobenius_residue(A):
                bad.append(tuple(A))
        for A, g in (((3, 5), 7), ((2, 3), 1)):
            if not dl.frobenius_number(A) == dl.frobenius_residue(A) == frobenius_brute(A, 100) == g:
                bad.append(("spot", A))
    verdict(report_criterion, 10, "sieve and residue Frobenius agree", bad, c.elapsed, 600,
            f"{n} sets")


def test_criterion_11_freiman(report_criterion):
    with Clock() as c:
        rep = discrete_random("freiman", 200, 11)
    bad = rep["counterexamples"] if rep["failed"] else []
    verdict(report_criterion, 11, "half-arc count >= (n+|S|)/2", bad, c.elapsed, 300,
            f"{rep['checked']} point sets")


def _cli(*args):
    proc = subprocess.run([sys.executable, "-m", "contfrob", *args], capture_output=True, check=False)
    return proc.returncode, proc.stdout


def test_criterion_12_determinism(report_criterion):
    bad = []
    with Clock() as c:
        verify_runs = [_cli("verify", "--seed", "7", "--workers", w) for w in ("1", "1", "4")]
        search_args = ("search", "--seed", "42", "--alpha", "1/5", "--family", "random-grid", "--budget", "500")
        search_runs = [_cli(*search_args, "--workers", w) for w in ("1", "1", "4")]
        for label, runs in (("verify", verify_runs), ("search", search_runs)):
            codes = {code for code, _ in runs}
            outs = {out for _, out in runs}
            if codes != {0} or len(outs) != 1:
                bad.append((label, sorted(codes), len(outs)))
            else:
                for line in next(iter(outs)).splitlines():
                    json.loads(line)
    verdict(report_criterion, 12, "byte-identical verify and search output", bad, c.elapsed, 600,
            "2 runs at 1 worker and 1 at 4 each")

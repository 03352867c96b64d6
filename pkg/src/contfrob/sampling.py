"""Seeded random inputs for the property harness and the search.

Every trial gets its own generator derived from (seed, stream, index).  A
string seed goes through SHA-512 inside :class:`random.Random`, so the stream
is the same in every process and on every run, whatever the worker layout.
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import gcd
from functools import reduce

from .intervals import IntervalUnion, OpenInterval, TorusUnion, normalize, torus_project

GRID_DENOMINATORS = (12, 24, 48)


def trial_rng(seed: int, stream: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{stream}:{index}")


def random_grid_set(
    rng: random.Random,
    denominators=GRID_DENOMINATORS,
    max_parts: int = 6,
    sup_one: bool = False,
) -> IntervalUnion:
    """Union of 1..max_parts random intervals on a grid 1/q inside (0, 1).

    Widths are drawn at a few scales so that sparse, middle and dense sets
    all turn up.
    """
    q = rng.choice(denominators)
    parts = []
    for _ in range(rng.randint(1, max_parts)):
        a = rng.randint(0, q - 1)
        cap = max(1, (q - a) // rng.choice((1, 3, 8, 24)))
        b = a + rng.randint(1, cap)
        parts.append(OpenInterval(Fraction(a, q), Fraction(min(b, q), q)))
    if sup_one:
        w = rng.randint(1, max(1, q // rng.choice((2, 6, 16))))
        parts.append(OpenInterval(Fraction(q - w, q), Fraction(1)))
    return normalize(parts)


def random_torus_union(rng: random.Random, denominators=(8, 12, 16, 24), max_arcs: int = 3) -> TorusUnion:
    q = rng.choice(denominators)
    arcs = []
    for _ in range(rng.randint(1, max_arcs)):
        a = rng.randint(0, q - 1)
        w = rng.randint(1, max(1, q // rng.choice((1, 2, 4, 8))))
        arcs.append(OpenInterval(Fraction(a, q), Fraction(a + w, q)))
    return torus_project(normalize(arcs))


def random_boxing_instance(rng: random.Random) -> tuple[Fraction, IntervalUnion]:
    """A length v and an open U inside (0, v) with mes U > v/2."""
    v = Fraction(rng.randint(1, 40), rng.randint(1, 12))
    q = rng.choice((6, 12, 24))
    step = v / q
    parts: list[OpenInterval] = []
    U = IntervalUnion()
    while U.measure() <= v / 2:
        a = rng.randint(0, q - 1)
        b = rng.randint(a + 1, q)
        parts.append(OpenInterval(a * step, b * step))
        U = normalize(parts)
    return v, U


def random_int_set(rng: random.Random, max_elem: int = 20, max_size: int = 8) -> tuple[int, ...]:
    """Random A with min A = 0, gcd A = 1 and |A| >= 3."""
    while True:
        l = rng.randint(2, max_elem)
        n = rng.randint(3, min(max_size, l + 1))
        rest = rng.sample(range(1, l), n - 2) + [l]
        if reduce(gcd, rest) == 1:
            return tuple(sorted({0, *rest}))


def random_circle_points(rng: random.Random, max_n: int = 50) -> list[Fraction]:
    n = rng.randint(1, max_n)
    d = rng.randint(2, 60)
    if rng.random() < 0.3:  # clustered multisets stress large |S|
        centre = rng.randint(0, d - 1)
        return [Fraction((centre + rng.randint(-2, 2)) % d, d) for _ in range(n)]
    return [Fraction(rng.randint(0, d - 1), d) for _ in range(n)]

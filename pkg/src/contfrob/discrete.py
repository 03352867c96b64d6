"""Integer and modular companions: Frobenius numbers and small-set sumset checks.

Finite integer sets are handled as Python bitmasks internally (bit k set iff
k is in the set), which makes h-fold sums a handful of shifts.
"""
from __future__ import annotations

import heapq
import math
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence


class PreconditionError(ValueError):
    """The inputs do not satisfy the hypotheses of the statement being checked."""


# -- integer sets --------------------------------------------------------------

def _mask(A: Iterable[int]) -> int:
    m = 0
    for a in A:
        if a < 0:
            raise ValueError("integer sets here hold nonnegative integers")
        m |= 1 << a
    return m


def _members(m: int) -> list[int]:
    out, k = [], 0
    while m:
        if m & 1:
            out.append(k)
        m >>= 1
        k += 1
    return out


def _mask_sum(m1: int, m2: int) -> int:
    acc, k = 0, 0
    while m1:
        if m1 & 1:
            acc |= m2 << k
        m1 >>= 1
        k += 1
    return acc


def int_hfold(A: Iterable[int], h: int) -> frozenset[int]:
    if h < 1:
        raise ValueError("h must be a positive integer")
    base = _mask(A)
    if not base:
        raise ValueError("A must be non-empty")
    out = base
    for _ in range(h - 1):
        out = _mask_sum(out, base)
    return frozenset(_members(out))


def int_sumset(A: Iterable[int], B: Iterable[int]) -> frozenset[int]:
    return frozenset(_members(_mask_sum(_mask(A), _mask(B))))


def _hfold_size(base: int, h: int) -> int:
    out = base
    for _ in range(h - 1):
        out = _mask_sum(out, base)
    return out.bit_count()


def _normalized(A: Iterable[int], min_size: int) -> tuple[int, int, int]:
    """Return (mask, n, l) after checking min A = 0 and gcd A = 1."""
    A = sorted(set(A))
    if len(A) < min_size:
        raise PreconditionError(f"need |A| >= {min_size}, got {len(A)}")
    if A[0] != 0:
        raise PreconditionError("need min A = 0")
    if reduce(math.gcd, A) != 1:
        raise PreconditionError("need gcd A = 1")
    return _mask(A), len(A), A[-1]


# -- Frobenius numbers ---------------------------------------------------------

def _check_generators(A: Sequence[int]) -> list[int]:
    A = sorted(set(A))
    if not A:
        raise ValueError("A must be non-empty")
    if A[0] < 1:
        raise ValueError("generators must be positive")
    if reduce(math.gcd, A) != 1:
        raise ValueError("generators must have gcd 1")
    return A


def frobenius_number(A: Iterable[int]) -> int:
    """Largest positive integer that is not a sum of elements of A, or 0.

    Sieve up to min(A)*max(A); Schur's bound puts the answer below that.
    """
    A = _check_generators(list(A))
    limit = A[0] * A[-1]
    reach = bytearray(limit + 1)
    reach[0] = 1
    for n in range(1, limit + 1):
        for a in A:
            if a > n:
                break
            if reach[n - a]:
                reach[n] = 1
                break
    for n in range(limit, 0, -1):
        if not reach[n]:
            return n
    return 0


def frobenius_residue(A: Iterable[int]) -> int:
    """Same quantity through shortest paths on residues mod min A."""
    A = _check_generators(list(A))
    m = A[0]
    dist = [math.inf] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for a in A[1:]:
            nd, nr = d + a, (r + a) % m
            if nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return max(max(dist) - m, 0)


# -- theorem checks on integer sets -------------------------------------------

def check_3n3(A: Iterable[int]) -> bool:
    """|2A| >= min(l, 2n - 3) + n."""
    m, n, l = _normalized(A, 2)
    return _hfold_size(m, 2) >= min(l, 2 * n - 3) + n


def lev_kappa(n: int, l: int) -> int:
    return (l - 1) // (n - 2)


def lev_bound(n: int, l: int, h: int) -> int:
    kappa = lev_kappa(n, l)
    if h <= kappa:
        return h * (h + 1) // 2 * (n - 2) + h + 1
    return kappa * (kappa + 1) // 2 * (n - 2) + kappa + 1 + (h - kappa) * l


def check_lev_hA(A: Iterable[int], h: int) -> bool:
    if h < 1:
        raise PreconditionError("h must be positive")
    m, n, l = _normalized(A, 3)
    return _hfold_size(m, h) >= lev_bound(n, l, h)


def lint_block(n: int, l: int, h: int) -> tuple[int, int]:
    kappa = lev_kappa(n, l)
    margin = (2 * l - (kappa + 1) * (n - 2) - 2) * kappa
    return margin, h * l - margin


def check_lint_block(A: Iterable[int], h: int) -> bool:
    """The integer block [margin, hl - margin] lies in hA for h >= 2*kappa."""
    m, n, l = _normalized(A, 3)
    if h < 2 * lev_kappa(n, l):
        raise PreconditionError(f"h = {h} is below 2*kappa = {2 * lev_kappa(n, l)}")
    lo, hi = lint_block(n, l, h)
    if lo > hi:
        return True
    out = m
    for _ in range(h - 1):
        out = _mask_sum(out, m)
    block = ((1 << (hi - lo + 1)) - 1) << lo
    return out & block == block


def check_corollary_hA(A: Iterable[int], h: int) -> bool:
    """|hA| >= n + (h - 1) l when l <= 2n - 4."""
    if h < 1:
        raise PreconditionError("h must be positive")
    m, n, l = _normalized(A, 3)
    if l > 2 * n - 4:
        raise PreconditionError(f"need max A <= 2n - 4, got l = {l}, n = {n}")
    return _hfold_size(m, h) >= n + (h - 1) * l


def valid_sets(max_elem: int, max_size: int, min_size: int = 2):
    """Every A in [0, max_elem] with min A = 0, gcd 1 and min_size <= |A| <= max_size."""
    pool = range(1, max_elem + 1)
    for r in range(max(min_size, 2) - 1, max_size):
        for rest in combinations(pool, r):
            if reduce(math.gcd, rest) == 1:
                yield (0,) + rest


# -- residues mod p ------------------------------------------------------------

def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


class ModSet:
    """A subset of Z/pZ for prime p."""

    __slots__ = ("p", "mask")

    def __init__(self, p: int, elements: Iterable[int]):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        m = 0
        for e in elements:
            m |= 1 << (e % p)
        self.mask = m

    @classmethod
    def _raw(cls, p: int, mask: int) -> "ModSet":
        obj = cls.__new__(cls)
        obj.p, obj.mask = p, mask
        return obj

    @property
    def elements(self) -> list[int]:
        return _members(self.mask)

    def __len__(self):
        return self.mask.bit_count()

    def __eq__(self, other):
        return isinstance(other, ModSet) and (self.p, self.mask) == (other.p, other.mask)

    def __repr__(self):
        return f"ModSet({self.p}, {self.elements})"

    def is_full(self) -> bool:
        return self.mask == (1 << self.p) - 1


def mod_sum(U: ModSet, V: ModSet) -> ModSet:
    if U.p != V.p:
        raise ValueError(f"modulus mismatch: {U.p} vs {V.p}")
    if not U.mask or not V.mask:
        raise ValueError("operands must be non-empty")
    p = U.p
    s = _mask_sum(U.mask, V.mask)
    full = (1 << p) - 1
    return ModSet._raw(p, (s & full) | (s >> p))


def mod_hfold(A: ModSet, h: int) -> ModSet:
    out = A
    for _ in range(h - 1):
        out = mod_sum(out, A)
    return out


def check_cd(U: ModSet, V: ModSet) -> bool:
    """|U + V| >= min(|U| + |V| - 1, p)."""
    return len(mod_sum(U, V)) >= min(len(U) + len(V) - 1, U.p)


def check_cd_corollary(sets: Sequence[ModSet]) -> bool:
    """If A_1 + ... + A_h misses something, then sum |A_i| <= p + h - 2."""
    if not sets:
        raise ValueError("need at least one set")
    total = reduce(mod_sum, sets)
    if total.is_full():
        return True
    return sum(len(s) for s in sets) <= total.p + len(sets) - 2


# -- circle points -------------------------------------------------------------

FREIMAN_SLACK = 1e-9


def exponential_sum_abs(points: Sequence[Fraction]) -> float:
    re = math.fsum(math.cos(2 * math.pi * float(z)) for z in points)
    im = math.fsum(math.sin(2 * math.pi * float(z)) for z in points)
    return abs(complex(re, im))


def half_arc_count(points: Sequence[Fraction], beta: Fraction) -> int:
    """Number of points in [beta, beta + 1/2) mod 1, counted exactly."""
    half = Fraction(1, 2)
    return sum(1 for z in points if (z - beta) % 1 < half)


def freiman_half_arc(points: Sequence) -> tuple[Fraction, int]:
    """A start beta whose half-open half circle holds the most points.

    The count only changes when beta crosses a point or a point minus 1/2, so
    scanning those candidates finds the maximum.
    """
    pts = [Fraction(z) % 1 for z in points]
    if not pts:
        raise ValueError("need at least one point")
    half = Fraction(1, 2)
    candidates = sorted(set(pts) | {(z + half) % 1 for z in pts})
    best = max(candidates, key=lambda b: (half_arc_count(pts, b), -b))
    return best, half_arc_count(pts, best)


def check_freiman(points: Sequence) -> bool:
    pts = [Fraction(z) % 1 for z in points]
    _, count = freiman_half_arc(pts)
    return count >= (len(pts) + exponential_sum_abs(pts)) / 2 - FREIMAN_SLACK


# -- exploratory probe -------------------------------------------------------

def shortest_progression(A: ModSet) -> tuple[int, int]:
    """(terms, difference) of the shortest progression with difference in
    [1, (p-1)/2] that contains A."""
    p = A.p
    elems = A.elements
    best = (p, 1)
    for d in range(1, (p - 1) // 2 + 1):
        inv = pow(d, -1, p)
        ys = sorted(e * inv % p for e in elems)
        gaps = [ys[i + 1] - ys[i] for i in range(len(ys) - 1)] + [ys[0] + p - ys[-1]]
        terms = p - max(gaps) + 1
        if terms < best[0]:
            best = (terms, d)
    return best


def probe_kp_conclusion(A: ModSet, k: int) -> bool:
    """Does A sit in a progression of at most (p - 2n)/(k - 2) + 1 terms?

    Only meaningful for large primes; a False at small p is not evidence of
    anything.
    """
    if k < 8:
        raise PreconditionError("k must be at least 8")
    p, n = A.p, len(A)
    if not n * (k + 1) > p:
        raise PreconditionError(f"need |A| > p/(k+1), got |A| = {n}, p = {p}")
    if mod_hfold(A, k).is_full():
        raise PreconditionError("kA covers Z/pZ")
    terms, _ = shortest_progression(A)
    return Fraction(terms) <= Fraction(p - 2 * n, k - 2) + 1


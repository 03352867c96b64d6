"""The additive semigroup S(A) of an interval union and its gap value.

The heavy lifting happens on an integer grid.  With q the common denominator
of the endpoints, an open set whose endpoints lie on (1/q)Z is determined by
two bitmasks: which open cells (k, k+1) it covers and which grid points k it
covers (a grid point can be missing even when both neighbouring cells are
present).  Sumsets of such sets stay on the grid, so the closure can be
computed with big-integer shifts instead of interval bookkeeping.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, lcm

from .intervals import (
    ClosedRemnant,
    EmptyOperandError,
    IntervalUnion,
    OpenInterval,
    as_rational,
    complement_within,
    minkowski_sum,
)

DEFAULT_MAX_CELLS = 10**7


class GridTooLargeError(ValueError):
    """Bound times grid denominator exceeds the configured cell budget."""


class IterationCapExceeded(RuntimeError):
    """The closure did not stabilise within the iteration cap."""


# -- grid representation -----------------------------------------------------

def _runs(mask: int):
    """Yield (start, length) of each maximal block of set bits."""
    pos = 0
    while mask:
        tz = (mask & -mask).bit_length() - 1
        mask >>= tz
        pos += tz
        length = (~mask & (mask + 1)).bit_length() - 1
        yield pos, length
        mask >>= length
        pos += length


def _smear(m: int, n: int) -> int:
    """m | m<<1 | ... | m<<(n-1)."""
    out, width = m, 1
    while width < n:
        step = min(width, n - width)
        out |= out << step
        width += step
    return out


def _conv(m1: int, m2: int, limit: int) -> int:
    """Bitmask of {i + j : i in m1, j in m2} restricted to bits below limit."""
    if not m1 or not m2:
        return 0
    keep = (1 << limit) - 1
    acc = 0
    cache: dict[int, int] = {}
    for start, length in _runs(m1):
        if start >= limit:
            break
        sm = cache.get(length)
        if sm is None:
            sm = cache[length] = _smear(m2, length) & keep
        acc |= sm << start
    return acc & keep


class _GridSet:
    """Open subset of (0, limit) with endpoints on the integers."""

    __slots__ = ("cells", "points", "limit")

    def __init__(self, cells: int, points: int, limit: int):
        self.cells = cells & ((1 << limit) - 1)
        self.points = points & ((1 << limit) - 1) & ~1
        self.limit = limit

    @classmethod
    def from_union(cls, U: IntervalUnion, q: int, limit: int) -> "_GridSet":
        cells = points = 0
        for p in U.parts:
            a, b = p.lo * q, p.hi * q
            assert a.denominator == 1 and b.denominator == 1, "off-grid endpoint"
            a, b = int(a), min(int(b), limit)
            if a >= b:
                continue
            cells |= ((1 << (b - a)) - 1) << a
            if b - a > 1:
                points |= ((1 << (b - a - 1)) - 1) << (a + 1)
        return cls(cells, points, limit)

    def __eq__(self, other):
        return self.cells == other.cells and self.points == other.points

    def __or__(self, other: "_GridSet") -> "_GridSet":
        return _GridSet(self.cells | other.cells, self.points | other.points, self.limit)

    def __add__(self, other: "_GridSet") -> "_GridSet":
        # cell+cell = (i+j, i+j+2): two cells and the point between them;
        # cell+point = one cell; point+point is already inside a cell+cell sum.
        lim = self.limit
        cc = _conv(self.cells, other.cells, lim)
        cells = cc | (cc << 1) | _conv(self.cells, other.points, lim) | _conv(self.points, other.cells, lim)
        return _GridSet(cells, cc << 1, lim)

    def to_union(self, q: int) -> IntervalUnion:
        parts = []
        holes = ~self.points
        for start, length in _runs(self.cells):
            end = start + length
            inner = (holes >> (start + 1)) & ((1 << (length - 1)) - 1) if length > 1 else 0
            lo = start
            for hs, hl in _runs(inner):
                for k in range(hs, hs + hl):
                    cut = start + 1 + k
                    parts.append(OpenInterval(Fraction(lo, q), Fraction(cut, q)))
                    lo = cut
            parts.append(OpenInterval(Fraction(lo, q), Fraction(end, q)))
        return IntervalUnion(parts)


# -- operations ---------------------------------------------------------------

def _check_unit(A: IntervalUnion) -> None:
    if not A:
        raise EmptyOperandError("A must be non-empty")
    if A.inf < 0 or A.sup > 1:
        raise ValueError(f"A must lie in (0, 1), got {A!r}")


def h_fold(A: IntervalUnion, h: int) -> IntervalUnion:
    """hA, the set of all sums of exactly h elements of A."""
    if h < 1:
        raise ValueError("h must be a positive integer")
    if not A:
        raise EmptyOperandError("A must be non-empty")
    out = A
    for _ in range(h - 1):
        out = minkowski_sum(out, A)
    return out


def safe_bound(A: IntervalUnion) -> Fraction:
    """min over parts (b, c) of floor(c/(c-b))*b, an upper bound for G(A).

    Everything beyond that value is already a sum of elements of the single
    part (b, c), and the semigroup of a part sits inside S(A).
    """
    _check_unit(A)
    return min(floor(p.hi / (p.hi - p.lo)) * p.lo for p in A.parts)


def _closure(A: IntervalUnion, q: int, limit: int, cap: int) -> tuple[_GridSet, int]:
    base = _GridSet.from_union(A, q, limit)
    S, rounds = base, 0
    while True:
        if rounds >= cap:
            raise IterationCapExceeded(f"closure did not stabilise within {cap} rounds")
        rounds += 1
        nxt = S | (S + S)
        if nxt == S:
            return S, rounds
        S = nxt


def _grid_params(A: IntervalUnion, bound: Fraction, max_cells: int) -> tuple[int, int]:
    q = lcm(A.denominator(), bound.denominator)
    limit = bound * q
    if limit > max_cells:
        raise GridTooLargeError(
            f"truncation bound {bound} on grid 1/{q} needs {limit} cells (> {max_cells})"
        )
    return q, int(limit)


def truncated_semigroup(
    A: IntervalUnion,
    B,
    *,
    max_cells: int = DEFAULT_MAX_CELLS,
    iteration_cap: int | None = None,
) -> IntervalUnion:
    """S(A) intersected with the open interval (0, B)."""
    return _truncated(A, as_rational(B), max_cells, iteration_cap)[0]


def _truncated(A, B, max_cells, iteration_cap):
    _check_unit(A)
    if B <= 0:
        raise ValueError("truncation bound must be positive")
    q, limit = _grid_params(A, B, max_cells)
    cap = iteration_cap if iteration_cap is not None else 10 * limit + 10
    S, rounds = _closure(A, q, limit, cap)
    return S.to_union(q), rounds


@dataclass(frozen=True)
class GapResult:
    gap: Fraction
    truncation_bound: Fraction
    remnant: ClosedRemnant
    iterations: int

    def to_json(self) -> dict:
        return {
            "gap": str(self.gap),
            "truncation_bound": str(self.truncation_bound),
            "remnant": self.remnant.to_pairs(),
            "iterations": self.iterations,
        }


def gap(
    A: IntervalUnion,
    *,
    max_cells: int = DEFAULT_MAX_CELLS,
    iteration_cap: int | None = None,
) -> GapResult:
    """Exact G(A) = sup of the reals not in S(A).

    The remnant lists the non-representable points of [0, B], where B is the
    safe bound; 0 itself is never a sum, so a set with nothing else missing
    gets gap 0.
    """
    _check_unit(A)
    B = safe_bound(A)
    if B == 0:
        return GapResult(Fraction(0), B, ClosedRemnant(((B, B),)), 0)
    # one grid step past B so that the closed endpoint B is decided too
    step = Fraction(1, lcm(A.denominator(), B.denominator))
    S, rounds = _truncated(A, B + step, max_cells, iteration_cap)
    rem = complement_within(S, 0, B)
    return GapResult(rem.max, B, rem, rounds)


def is_representable(A: IntervalUnion, u, *, max_cells: int = DEFAULT_MAX_CELLS) -> bool:
    u = as_rational(u)
    if u <= 0:
        raise ValueError("only positive numbers can be sums of elements of A")
    B = safe_bound(A)
    if u > B:
        return True
    step = Fraction(1, lcm(A.denominator(), u.denominator))
    S, _ = _truncated(A, B + step, max_cells, None)
    return u in S


def sj_slice(A: IntervalUnion, j: int, *, max_cells: int = DEFAULT_MAX_CELLS) -> Fraction:
    """Measure of S(A) inside the open unit window (j-1, j); needs sup A = 1."""
    _check_unit(A)
    if A.sup != 1:
        raise ValueError(f"sj_slice needs sup A = 1, got {A.sup}")
    if j < 1:
        raise ValueError("j must be a positive integer")
    S, _ = _truncated(A, Fraction(j), max_cells, None)
    return S.clip(j - 1, j).measure()

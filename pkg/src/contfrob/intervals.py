"""Finite unions of open intervals with rational endpoints.

Everything here is exact: endpoints are :class:`fractions.Fraction` and no
float ever enters the semantics.  A union is stored in canonical form, which
is just the list of its connected components sorted left to right.  Two open
intervals that merely touch, like (1/3, 1/2) and (1/2, 2/3), are *different*
components because the shared endpoint is not in the set.
"""
from __future__ import annotations

import json
from bisect import bisect_right
from fractions import Fraction
from math import floor, lcm
from typing import Iterable, NamedTuple, Sequence


class EmptyOperandError(ValueError):
    """A sumset was requested with an empty operand."""


def as_rational(x) -> Fraction:
    """Parse ``x`` as an exact rational.

    Accepts ints, Fractions and strings such as ``"3/8"`` or ``"2"``.  Floats
    are refused since they would silently smuggle in binary rounding.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {x!r}") from exc
    raise TypeError(f"expected int, Fraction or str, got {type(x).__name__}")


def frac_part(x: Fraction) -> Fraction:
    return x - floor(x)


class OpenInterval(NamedTuple):
    lo: Fraction
    hi: Fraction

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, u) -> bool:
        return self.lo < u < self.hi


def interval(lo, hi) -> OpenInterval:
    lo, hi = as_rational(lo), as_rational(hi)
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    return OpenInterval(lo, hi)


class IntervalUnion:
    """Canonical finite union of disjoint open intervals.

    Build one with :func:`normalize` or :meth:`of`; the constructor trusts its
    input and is meant for code that already produced canonical parts.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[OpenInterval] = ()):
        self.parts: tuple[OpenInterval, ...] = tuple(parts)

    @classmethod
    def of(cls, *pairs) -> "IntervalUnion":
        """``IntervalUnion.of((lo, hi), ...)`` with any order and overlap."""
        return normalize(interval(lo, hi) for lo, hi in pairs)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        if not isinstance(other, IntervalUnion):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        body = ", ".join(f"({p.lo}, {p.hi})" for p in self.parts)
        return f"IntervalUnion[{body}]"

    def __contains__(self, u) -> bool:
        u = Fraction(u)
        i = bisect_right(self.parts, u, key=lambda p: p.lo) - 1
        return i >= 0 and self.parts[i].lo < u < self.parts[i].hi

    @property
    def inf(self) -> Fraction:
        if not self.parts:
            raise EmptyOperandError("empty union has no infimum")
        return self.parts[0].lo

    @property
    def sup(self) -> Fraction:
        if not self.parts:
            raise EmptyOperandError("empty union has no supremum")
        return self.parts[-1].hi

    def measure(self) -> Fraction:
        return measure(self)

    def denominator(self) -> int:
        """Least common denominator of all endpoints (1 for the empty set)."""
        q = 1
        for p in self.parts:
            q = lcm(q, p.lo.denominator, p.hi.denominator)
        return q

    def clip(self, lo, hi) -> "IntervalUnion":
        """Intersection with the open interval (lo, hi)."""
        out = []
        for p in self.parts:
            a, b = max(p.lo, lo), min(p.hi, hi)
            if a < b:
                out.append(OpenInterval(a, b))
        return IntervalUnion(out)

    def union(self, other: "IntervalUnion") -> "IntervalUnion":
        return normalize(self.parts + other.parts)

    def issubset(self, other: "IntervalUnion") -> bool:
        """Exact containment test; every part must sit inside one part of other."""
        for p in self.parts:
            j = bisect_right(other.parts, p.lo, key=lambda q: q.lo) - 1
            if j < 0 or other.parts[j].hi < p.hi:
                return False
        return True

    def to_pairs(self) -> list[list[str]]:
        return [[str(p.lo), str(p.hi)] for p in self.parts]


def normalize(intervals: Iterable[OpenInterval]) -> IntervalUnion:
    """Canonical union of the point set covered by ``intervals``.

    Overlapping intervals merge.  Touching ones do not: if no input covers the
    shared endpoint, it is a hole and both sides stay separate parts.
    """
    items = sorted(intervals)
    out: list[OpenInterval] = []
    cur_lo = cur_hi = None
    for lo, hi in items:
        if cur_hi is not None and lo < cur_hi:
            if hi > cur_hi:
                cur_hi = hi
            continue
        if cur_hi is not None:
            out.append(OpenInterval(cur_lo, cur_hi))
        cur_lo, cur_hi = lo, hi
    if cur_hi is not None:
        out.append(OpenInterval(cur_lo, cur_hi))
    return IntervalUnion(out)


def measure(U: IntervalUnion) -> Fraction:
    return sum((p.hi - p.lo for p in U.parts), Fraction(0))


def minkowski_sum(U: IntervalUnion, V: IntervalUnion) -> IntervalUnion:
    """Exact sumset U + V.  The sum of two open intervals is open, so the
    pairwise endpoint sums describe the sumset exactly."""
    if not U or not V:
        raise EmptyOperandError("minkowski_sum needs two non-empty unions")
    return normalize(
        OpenInterval(u.lo + v.lo, u.hi + v.hi) for u in U.parts for v in V.parts
    )


def scale(U: IntervalUnion, c) -> IntervalUnion:
    c = as_rational(c)
    if c <= 0:
        raise ValueError(f"scale factor must be positive, got {c}")
    return IntervalUnion(OpenInterval(p.lo * c, p.hi * c) for p in U.parts)


def translate(U: IntervalUnion, s) -> IntervalUnion:
    s = as_rational(s)
    return IntervalUnion(OpenInterval(p.lo + s, p.hi + s) for p in U.parts)


class ClosedRemnant(NamedTuple):
    """Maximal closed pieces [a, b] (a == b for isolated points)."""

    pieces: tuple[tuple[Fraction, Fraction], ...]

    @property
    def max(self) -> Fraction | None:
        return self.pieces[-1][1] if self.pieces else None

    def measure(self) -> Fraction:
        return sum((b - a for a, b in self.pieces), Fraction(0))

    def __contains__(self, u) -> bool:
        return any(a <= u <= b for a, b in self.pieces)

    def to_pairs(self) -> list[list[str]]:
        return [[str(a), str(b)] for a, b in self.pieces]


def complement_within(U: IntervalUnion, a, b) -> ClosedRemnant:
    """The closed set [a, b] minus U, as maximal closed pieces."""
    a, b = as_rational(a), as_rational(b)
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    pieces = []
    cursor = a
    for p in U.parts:
        if p.hi <= a:
            continue
        if p.lo >= b:
            break
        if p.lo >= cursor:
            pieces.append((cursor, p.lo))
        cursor = max(cursor, p.hi)
        if cursor > b:
            break
    if cursor <= b:
        pieces.append((cursor, b))
    return ClosedRemnant(tuple(pieces))


# -- torus -------------------------------------------------------------------

class TorusUnion(NamedTuple):
    """Open subset of R/Z.

    ``parts`` is the canonical trace of the set on the open interval (0, 1)
    and ``covers_zero`` records whether the class of 0 belongs to the set.  An
    arc wrapping through 0 shows up as one part touching 1 and one touching 0
    with ``covers_zero`` set.
    """

    parts: IntervalUnion
    covers_zero: bool = False

    def measure(self) -> Fraction:
        return measure(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def arcs(self) -> list[OpenInterval]:
        """One lift per connected component, each of length at most 1."""
        ps = list(self.parts.parts)
        if not ps:
            return []
        if self.covers_zero:
            if len(ps) == 1:  # the whole circle
                return [OpenInterval(Fraction(-1, 2), Fraction(1, 2)), OpenInterval(Fraction(0), Fraction(1))]
            first, last = ps[0], ps[-1]
            ps = ps[1:-1] + [OpenInterval(last.lo, first.hi + 1)]
        return ps


def _project_interval(lo: Fraction, hi: Fraction):
    if hi - lo > 1:
        return [OpenInterval(Fraction(0), Fraction(1))], True
    n = floor(lo)
    lo, hi = lo - n, hi - n
    if hi <= 1:
        return [OpenInterval(lo, hi)], False
    pieces = [OpenInterval(lo, Fraction(1)), OpenInterval(Fraction(0), hi - 1)]
    return pieces, True


def _torus_from_lifts(lifts: Iterable[OpenInterval]) -> TorusUnion:
    pieces: list[OpenInterval] = []
    zero = False
    for p in lifts:
        ps, z = _project_interval(p.lo, p.hi)
        pieces.extend(ps)
        zero = zero or z
    return TorusUnion(normalize(pieces), zero)


def torus_project(U: IntervalUnion) -> TorusUnion:
    """Image of U in R/Z."""
    return _torus_from_lifts(U.parts)


def torus_sum(U: TorusUnion, V: TorusUnion) -> TorusUnion:
    """Exact sumset in R/Z, computed on one lift per component."""
    if not U or not V:
        raise EmptyOperandError("torus_sum needs two non-empty sets")
    return _torus_from_lifts(
        OpenInterval(u.lo + v.lo, u.hi + v.hi) for u in U.arcs() for v in V.arcs()
    )


def torus_contains(T: TorusUnion, u) -> bool:
    u = frac_part(Fraction(u))
    if u == 0:
        return T.covers_zero
    return u in T.parts


# -- set files ---------------------------------------------------------------

class SetFileError(ValueError):
    pass


def union_from_json(obj) -> IntervalUnion:
    """Parse the ``{"intervals": [["lo", "hi"], ...]}`` set-file object."""
    if not isinstance(obj, dict) or "intervals" not in obj:
        raise SetFileError('set file must be an object with an "intervals" list')
    raw = obj["intervals"]
    if not isinstance(raw, list):
        raise SetFileError('"intervals" must be a list')
    parts = []
    for i, item in enumerate(raw):
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise SetFileError(f"interval #{i} {item!r}: expected a [lo, hi] pair")
        try:
            lo, hi = (as_rational(v) for v in item)
        except (TypeError, ValueError) as exc:
            raise SetFileError(f"interval #{i} {item!r}: {exc}") from exc
        if not lo < hi:
            raise SetFileError(f"interval #{i} {item!r}: lo must be < hi")
        parts.append(OpenInterval(lo, hi))
    return normalize(parts)


def union_to_json(U: IntervalUnion) -> dict:
    return {"intervals": U.to_pairs()}


def load_set(path) -> IntervalUnion:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SetFileError(f"{path}: invalid JSON: {exc}") from exc
    return union_from_json(obj)

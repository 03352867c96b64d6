"""Upper bounds for the gap value and the structural predictions behind them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .intervals import (
    EmptyOperandError,
    IntervalUnion,
    OpenInterval,
    TorusUnion,
    as_rational,
    torus_sum,
)
from .semigroup import gap

TENTH = Fraction(1, 10)
HALF = Fraction(1, 2)


def _check_alpha(alpha, top=Fraction(1)) -> Fraction:
    alpha = as_rational(alpha)
    if not 0 < alpha <= top:
        raise ValueError(f"alpha must lie in (0, {top}], got {alpha}")
    return alpha


def sparse_formula(alpha: Fraction) -> Fraction:
    return (1 - alpha) * floor(1 / alpha)


def middle_formula(alpha: Fraction) -> Fraction:
    inv = 1 / alpha
    return (1 - alpha + alpha * (inv - floor(inv))) * floor(inv)


def dense_formula(alpha: Fraction) -> Fraction:
    return 2 * (1 - alpha)


@dataclass(frozen=True)
class BoundReport:
    alpha: Fraction
    regime: str  # "sparse", "middle" or "dense"
    value: Fraction

    def to_json(self) -> dict:
        return {"alpha": str(self.alpha), "regime": self.regime, "value": str(self.value)}


def bound_main(alpha) -> BoundReport:
    """Three-regime upper bound for G(A) in terms of alpha = mes A.

    At the shared endpoints 1/10 and 1/2 both adjacent formulas apply and the
    smaller one is returned (they coincide at both points).
    """
    alpha = _check_alpha(alpha)
    if alpha < TENTH:
        return BoundReport(alpha, "sparse", sparse_formula(alpha))
    if alpha == TENTH:
        return BoundReport(alpha, "sparse", min(sparse_formula(alpha), middle_formula(alpha)))
    if alpha < HALF:
        return BoundReport(alpha, "middle", middle_formula(alpha))
    if alpha == HALF:
        return BoundReport(alpha, "dense", min(middle_formula(alpha), dense_formula(alpha)))
    return BoundReport(alpha, "dense", dense_formula(alpha))


def bound_strengthened(alpha) -> Fraction:
    """The middle formula, which holds on the whole range 0 < alpha <= 1/2."""
    return middle_formula(_check_alpha(alpha, HALF))


def clint_predicted(A: IntervalUnion, h: int) -> OpenInterval | None:
    """Interval guaranteed inside hA once h >= 2*kappa, kappa = floor(span/mes A).

    Returns None when h is below the threshold or the interval is empty.
    """
    if not A:
        raise EmptyOperandError("A must be non-empty")
    v, w = A.inf, A.sup
    lam = w - v
    alpha = A.measure()
    kappa = floor(lam / alpha)
    if h < 2 * kappa:
        return None
    margin = (2 * lam - (kappa + 1) * alpha) * kappa
    lo, hi = v * h + margin, w * h - margin
    if lo >= hi:
        return None
    return OpenInterval(lo, hi)


def check_macbeath(U: TorusUnion, V: TorusUnion) -> bool:
    """mes(U + V) >= min(mes U + mes V, 1) on the circle."""
    return torus_sum(U, V).measure() >= min(U.measure() + V.measure(), 1)


def check_main_bound(A: IntervalUnion) -> bool:
    return gap(A).gap <= bound_main(A.measure()).value

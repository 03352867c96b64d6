"""The three extremal families of open sets and their predicted gap values."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .intervals import IntervalUnion, OpenInterval, as_rational, measure, normalize


class ConstructionError(RuntimeError):
    """A construction violated one of its own identities (a bug, not bad input)."""


@dataclass(frozen=True)
class ConstructionReport:
    set: IntervalUnion
    alpha: Fraction
    predicted_gap: Fraction
    family: str
    params: dict | None = None

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "alpha": str(self.alpha),
            "predicted_gap": str(self.predicted_gap),
            "intervals": self.set.to_pairs(),
        }
        if self.params:
            out["params"] = {k: str(v) for k, v in self.params.items()}
        return out


def first_case_formula(alpha: Fraction) -> Fraction:
    """(1 - alpha) * floor(1/alpha): the gap of (1 - alpha, 1)."""
    return (1 - alpha) * floor(1 / alpha)


def example1(alpha) -> ConstructionReport:
    alpha = as_rational(alpha)
    if not 0 < alpha <= 1:
        raise ValueError(f"example1 needs 0 < alpha <= 1, got {alpha}")
    A = normalize([OpenInterval(1 - alpha, Fraction(1))])
    return ConstructionReport(A, alpha, first_case_formula(alpha), "ex1")


def example2(alpha) -> ConstructionReport:
    """(1 - alpha, 1) with the point 2(1 - alpha) removed.

    Only 1/2 < alpha < 1 is accepted; at alpha = 1 the removed point is 0 and
    the set is just example1(1).
    """
    alpha = as_rational(alpha)
    if not Fraction(1, 2) < alpha < 1:
        raise ValueError(f"example2 needs 1/2 < alpha < 1, got {alpha} (use example1 for alpha = 1)")
    hole = 2 * (1 - alpha)
    A = normalize([OpenInterval(1 - alpha, hole), OpenInterval(hole, Fraction(1))])
    return ConstructionReport(A, alpha, hole, "ex2")


def example3_params(alpha: Fraction) -> tuple[int, Fraction, Fraction]:
    k = ceil(1 / (1 - 2 * alpha)) - 2
    x = 1 - Fraction(1, k + 2)
    t = 2 * (1 - Fraction(1, k + 3)) * (1 - alpha)
    return k, x, t


def chain_set(k: int, x: Fraction, t: Fraction) -> IntervalUnion:
    """(itx/k, it/k) for i = 1..k-1 together with (tx, 1)."""
    parts = [OpenInterval(i * t * x / k, i * t / k) for i in range(1, k)]
    parts.append(OpenInterval(t * x, Fraction(1)))
    return normalize(parts)


def example3(alpha) -> ConstructionReport:
    alpha = as_rational(alpha)
    if not Fraction(1, 3) < alpha < Fraction(1, 2):
        raise ValueError(f"example3 needs 1/3 < alpha < 1/2, got {alpha}")
    k, x, t = example3_params(alpha)
    if k < 2:
        raise ConstructionError(f"k = {k} < 2 at alpha = {alpha}")
    if not Fraction(1, 2) * (1 - Fraction(1, k + 1)) < alpha <= Fraction(1, 2) * (1 - Fraction(1, k + 2)):
        raise ConstructionError(f"alpha = {alpha} outside the range implied by k = {k}")
    if not (1 - Fraction(1, k) < x < 1 / t <= 1):
        raise ConstructionError(f"ordering 1-1/k < x < 1/t <= 1 fails: k={k}, x={x}, t={t}")
    A = chain_set(k, x, t)
    if measure(A) != alpha:
        raise ConstructionError(f"measure {measure(A)} != alpha {alpha}")
    predicted = 2 * (1 + Fraction(2, k * (k + 3))) * (1 - alpha)
    if predicted != Fraction(k + 1, k) * t:
        raise ConstructionError("closed forms for the gap disagree")
    return ConstructionReport(A, alpha, predicted, "ex3", {"k": k, "x": x, "t": t})


FAMILIES = {"ex1": example1, "ex2": example2, "ex3": example3}

"""Randomised search for sets whose gap beats (1 - alpha) * floor(1/alpha).

Candidates always have measure exactly alpha.  The score of a set is its
gap divided by that first-case formula, so a ratio above 1 in the range
alpha <= 1/3 would be a set the known constructions do not explain.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

from .bounds import bound_main, sparse_formula
from .constructions import chain_set
from .intervals import IntervalUnion, OpenInterval, as_rational, normalize
from .sampling import random_grid_set, trial_rng
from .semigroup import DEFAULT_MAX_CELLS, GridTooLargeError, gap
from .verify import map_trials

FAMILIES = ("scaled-chain", "punctured", "random-grid")


@dataclass(frozen=True)
class SearchConfig:
    alpha: Fraction
    family: str
    budget: int = 200
    seed: int = 0
    grid_denominator: int = 24
    keep: int = 10
    max_grid_cells: int = DEFAULT_MAX_CELLS
    pin: dict = field(default_factory=dict)  # scaled-chain only: fixed "k" and/or "x"

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        if not 0 < self.alpha < 1:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.budget < 1:
            raise ValueError("budget must be at least 1")
        if not 1 <= self.grid_denominator <= self.max_grid_cells:
            raise ValueError("grid denominator out of range")


@dataclass(frozen=True)
class SearchRecord:
    set: IntervalUnion
    alpha: Fraction
    gap: Fraction
    ratio: Fraction
    family: str
    params: dict

    def sort_key(self):
        return (-self.ratio, self.set.parts)

    def to_json(self) -> dict:
        return {
            "intervals": self.set.to_pairs(),
            "alpha": str(self.alpha),
            "gap": str(self.gap),
            "ratio": str(self.ratio),
            "bound_main": str(bound_main(self.alpha).value),
            "family": self.family,
            "params": {k: str(v) for k, v in self.params.items()},
        }


class Infeasible(Exception):
    pass


def _scaled_chain(rng, cfg: SearchConfig):
    alpha, D = cfg.alpha, cfg.grid_denominator
    k = int(cfg.pin["k"]) if "k" in cfg.pin else rng.randint(2, 12)
    if "x" in cfg.pin:
        x = as_rational(cfg.pin["x"])
    else:
        # x in [1 - 1/k, 1) keeps the chain parts disjoint
        x = 1 - Fraction(rng.randint(1, D), k * D)
    # measure t(1-x)(k-1)/2 + (1 - tx) = alpha fixes t
    denom = x - (1 - x) * (k - 1) / 2
    if k < 2 or not (1 - Fraction(1, k) <= x < 1) or denom <= 0:
        raise Infeasible
    t = (1 - alpha) / denom
    if not (0 < t and t * x < 1):
        raise Infeasible
    return chain_set(k, x, t), {"k": k, "x": x, "t": t}


def _remove(parts: list[OpenInterval], a: Fraction, b: Fraction) -> list[OpenInterval]:
    """Delete the closed interval [a, b] (a == b removes a point)."""
    out = []
    for p in parts:
        if p.lo < min(p.hi, a):
            out.append(OpenInterval(p.lo, min(p.hi, a)))
        if max(p.lo, b) < p.hi:
            out.append(OpenInterval(max(p.lo, b), p.hi))
    return out


def _punctured(rng, cfg: SearchConfig):
    alpha, D = cfg.alpha, cfg.grid_denominator
    holes = []
    width = Fraction(0)
    for _ in range(rng.randint(1, 3)):
        w = Fraction(rng.choice((0, 0, 0, 1)), D)
        holes.append(w)
        width += w
    lo = 1 - alpha - width
    if lo < 0:
        raise Infeasible
    parts = [OpenInterval(lo, Fraction(1))]
    cuts = []
    for w in holes:
        c = Fraction(rng.randint(1, D - 1), D)
        if not (lo < c and c + w < 1):
            raise Infeasible
        cuts.append((c, c + w))
        parts = _remove(parts, c, c + w)
    A = normalize(parts)
    if A.measure() != alpha:
        raise Infeasible
    return A, {"cuts": ";".join(f"[{a},{b}]" for a, b in sorted(cuts))}


def _random_grid(rng, cfg: SearchConfig):
    alpha = cfg.alpha
    A = random_grid_set(rng, denominators=(cfg.grid_denominator,))
    parts = list(A.parts)
    excess = A.measure() - alpha
    last = parts[-1]
    new_lo = last.lo + excess
    floor_ = parts[-2].hi if len(parts) > 1 else Fraction(0)
    if not (floor_ <= new_lo < last.hi):
        raise Infeasible
    parts[-1] = OpenInterval(new_lo, last.hi)
    A = IntervalUnion(parts)
    assert A.measure() == alpha
    return A, {"parts": len(parts)}


_GENERATORS = {"scaled-chain": _scaled_chain, "punctured": _punctured, "random-grid": _random_grid}


def search_trial(cfg: SearchConfig, index: int):
    rng = trial_rng(cfg.seed, f"search-{cfg.family}", index)
    try:
        A, params = _GENERATORS[cfg.family](rng, cfg)
    except Infeasible:
        return None
    try:
        g = gap(A, max_cells=cfg.max_grid_cells).gap
    except GridTooLargeError:
        return None
    return SearchRecord(A, cfg.alpha, g, g / sparse_formula(cfg.alpha), cfg.family, params)


def run_search_report(cfg: SearchConfig, workers: int = 1) -> dict:
    """Best records plus the number of evaluated and discarded candidates."""
    results = map_trials(partial(_trial_adapter, cfg), 0, cfg.budget, workers)
    found = [r for r in results if r is not None]
    best: dict = {}
    for rec in sorted(found, key=SearchRecord.sort_key):
        best.setdefault(rec.set, rec)
    records = sorted(best.values(), key=SearchRecord.sort_key)[: cfg.keep]
    return {"evaluated": len(found), "discarded": cfg.budget - len(found), "records": records}


def _trial_adapter(cfg, _seed, index):
    return search_trial(cfg, index)


def run_search(cfg: SearchConfig, workers: int = 1) -> list[SearchRecord]:
    return run_search_report(cfg, workers)["records"]

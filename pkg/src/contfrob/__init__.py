"""Exact gap values for semigroups generated by unions of open rational intervals."""
from .intervals import (
    ClosedRemnant,
    EmptyOperandError,
    IntervalUnion,
    OpenInterval,
    TorusUnion,
    complement_within,
    measure,
    minkowski_sum,
    normalize,
    scale,
    torus_project,
    torus_sum,
)
from .semigroup import GapResult, gap, h_fold, is_representable, safe_bound, sj_slice, truncated_semigroup
from .constructions import ConstructionReport, example1, example2, example3
from .bounds import BoundReport, bound_main, bound_strengthened, clint_predicted

__version__ = "0.1.0"

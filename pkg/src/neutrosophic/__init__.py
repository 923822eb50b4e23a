"""Neutrosophic sets with non-standard unit-interval components."""

from .hyperreal import ONE, ONE_PLUS, ZERO, ZERO_MINUS, NonStdValue, ns
from .ndset import IntervalUnion, NsInterval
from .neutroset import (
    CartesianPair,
    NeutroRelation,
    NeutroSet,
    NeutroTriple,
    complement,
    difference,
    intersect,
    is_subset,
    n_bounds,
    triple,
    union,
)

__version__ = "0.1.0"

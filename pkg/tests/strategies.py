"""Hypothesis strategies and seeded generators for values of every type."""

from __future__ import annotations

import random
from decimal import Decimal

from hypothesis import strategies as st

from neutrosophic.hyperreal import ONE_PLUS, ZERO_MINUS, NonStdValue, ns_clamp_unit
from neutrosophic.ndset import IntervalUnion, NsInterval
from neutrosophic.neutroset import NeutroTriple

COEFFS = [Decimal(c) for c in ("-2", "-1", "-0.5", "0", "0.5", "1", "2")]


def hundredths(lo: int = 0, hi: int = 100):
    return st.integers(lo, hi).map(lambda n: Decimal(n) / 100)


def nonstd(lo: int = -200, hi: int = 200):
    return st.builds(NonStdValue, hundredths(lo, hi), st.sampled_from(COEFFS))


unit_values = nonstd(0, 100).map(ns_clamp_unit)
standard_unit = hundredths().map(lambda d: NonStdValue(d, 0))


@st.composite
def unions(draw, values=unit_values, max_parts: int = 3):
    pts = draw(st.lists(values, min_size=1, max_size=2 * max_parts))
    pts.sort()
    if len(pts) % 2:
        pts.append(pts[-1])
    return IntervalUnion(NsInterval(pts[i], pts[i + 1]) for i in range(0, len(pts), 2))


triples = st.builds(NeutroTriple, unions(), unions(), unions())
standard_triples = st.builds(
    NeutroTriple, unions(standard_unit), unions(standard_unit), unions(standard_unit)
)
point_triples = st.builds(
    lambda t, i, f: NeutroTriple(IntervalUnion.point(t), IntervalUnion.point(i), IntervalUnion.point(f)),
    standard_unit,
    standard_unit,
    standard_unit,
)


# seeded generators for the fixed-count acceptance sweeps


def random_decimal(rng: random.Random, lo: int = 0, hi: int = 100, scale: int = 100) -> Decimal:
    return Decimal(rng.randint(lo, hi)) / scale


def random_union(
    rng: random.Random, max_parts: int = 3, coeff: bool = False, scale: int = 100
) -> IntervalUnion:
    n = rng.randint(1, max_parts)
    cuts = sorted(random_decimal(rng, 0, scale, scale) for _ in range(2 * n))
    parts = []
    for k in range(n):
        lo, hi = cuts[2 * k], cuts[2 * k + 1]
        if rng.random() < 0.25:
            hi = lo
        lo_v = NonStdValue(lo, rng.choice(COEFFS) if coeff else 0)
        hi_v = NonStdValue(hi, rng.choice(COEFFS) if coeff else 0)
        if hi_v < lo_v:
            lo_v, hi_v = hi_v, lo_v
        parts.append(NsInterval(ns_clamp_unit(lo_v), ns_clamp_unit(hi_v)))
    return IntervalUnion(parts)


def random_triple(rng: random.Random, coeff: bool = False) -> NeutroTriple:
    return NeutroTriple(*(random_union(rng, coeff=coeff) for _ in range(3)))


def random_point_triple(rng: random.Random) -> NeutroTriple:
    return NeutroTriple(*(IntervalUnion.point(random_decimal(rng)) for _ in range(3)))


def endpoints_in_unit(x: NeutroTriple) -> bool:
    return all(ZERO_MINUS <= v <= ONE_PLUS for c in x.components for v in c.endpoints())

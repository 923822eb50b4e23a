"""Finite unions of closed intervals over non-standard scalars.

An :class:`IntervalUnion` is the representation of one neutrosophic
component (T, I or F). Arithmetic on unions is Minkowski-style: the image of
every pair of points, computed part-by-part and then re-canonicalized.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

from .hyperreal import (
    NonStdValue,
    Real,
    as_decimal,
    ns,
    ns_add,
    ns_clamp_unit,
    ns_div_scalar,
    ns_mul,
    ns_sub,
)

__all__ = [
    "NsInterval",
    "IntervalUnion",
    "canonicalize",
    "bounds",
    "mk_add",
    "mk_sub",
    "mk_mul",
    "mk_div_scalar",
    "clamp_unit_set",
    "contains",
]

Endpoint = Union[Real, NonStdValue]

_set = object.__setattr__


class NsInterval:
    """Closed interval ``[lo, hi]``; ``lo == hi`` is a singleton."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Endpoint, hi: Endpoint) -> None:
        lo, hi = ns(lo), ns(hi)
        if hi < lo:
            raise ValueError(f"inverted interval: [{lo}, {hi}]")
        _set(self, "lo", lo)
        _set(self, "hi", hi)

    @classmethod
    def _make(cls, lo: NonStdValue, hi: NonStdValue) -> NsInterval:
        iv = object.__new__(cls)
        _set(iv, "lo", lo)
        _set(iv, "hi", hi)
        return iv

    def __setattr__(self, name, value):
        raise AttributeError("NsInterval is immutable")

    def __reduce__(self):
        return (NsInterval, (self.lo, self.hi))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NsInterval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"NsInterval({self.lo!r}, {self.hi!r})"

    @property
    def is_singleton(self) -> bool:
        return self.lo == self.hi

    def __str__(self) -> str:
        if self.is_singleton:
            return str(self.lo)
        return f"[{self.lo},{self.hi}]"


class IntervalUnion:
    """Canonical union of closed intervals: sorted, disjoint, non-empty.

    Build one from raw parts with :func:`canonicalize` or
    :meth:`IntervalUnion.of`; the constructor canonicalizes as well.
    """

    __slots__ = ("parts", "_hash")

    parts: tuple[NsInterval, ...]

    def __init__(self, parts: Iterable[NsInterval]) -> None:
        _set(self, "parts", _merge(list(parts)))
        _set(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("IntervalUnion is immutable")

    def __reduce__(self):
        return (IntervalUnion, (self.parts,))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalUnion):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        if self._hash is None:
            _set(self, "_hash", hash(self.parts))
        return self._hash

    @classmethod
    def of(cls, *items: Endpoint | tuple[Endpoint, Endpoint] | NsInterval) -> IntervalUnion:
        """Convenience constructor.

        ``IntervalUnion.of((0.4, 0.45), (0.5, 0.51))`` or
        ``IntervalUnion.of(0.2, 0.24, 0.28)`` for a set of points.
        """
        raw = []
        for item in items:
            if isinstance(item, NsInterval):
                raw.append(item)
            elif isinstance(item, tuple):
                lo, hi = item
                raw.append(NsInterval(ns(lo), ns(hi)))
            else:
                v = ns(item)
                raw.append(NsInterval(v, v))
        return cls(raw)

    @classmethod
    def point(cls, v: Endpoint) -> IntervalUnion:
        v = ns(v)
        return cls((NsInterval(v, v),))

    @property
    def inf(self) -> NonStdValue:
        return self.parts[0].lo

    @property
    def sup(self) -> NonStdValue:
        return self.parts[-1].hi

    @property
    def is_singleton(self) -> bool:
        return len(self.parts) == 1 and self.parts[0].is_singleton

    @property
    def is_points(self) -> bool:
        """True when every part is a singleton."""
        return all(p.is_singleton for p in self.parts)

    def endpoints(self) -> list[NonStdValue]:
        out = []
        for p in self.parts:
            out.append(p.lo)
            if not p.is_singleton:
                out.append(p.hi)
        return out

    def __contains__(self, v: Endpoint) -> bool:
        return contains(self, ns(v))

    def __add__(self, other: IntervalUnion) -> IntervalUnion:
        return mk_add(self, other)

    def __sub__(self, other: IntervalUnion) -> IntervalUnion:
        return mk_sub(self, other)

    def __mul__(self, other: IntervalUnion) -> IntervalUnion:
        return mk_mul(self, other)

    def __truediv__(self, k: Real) -> IntervalUnion:
        return mk_div_scalar(self, k)

    def __str__(self) -> str:
        if self.is_points and len(self.parts) > 1:
            return "{" + ",".join(str(p.lo) for p in self.parts) + "}"
        return "|".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"IntervalUnion({self})"


_interval = NsInterval._make


def _merge(raw: list[NsInterval]) -> tuple[NsInterval, ...]:
    if not raw:
        raise ValueError("empty component")
    for iv in raw:
        if not isinstance(iv, NsInterval):
            raise TypeError(f"expected NsInterval, got {type(iv).__name__}")
    if len(raw) == 1:
        return (raw[0],)
    raw.sort(key=lambda iv: (iv.lo._key, iv.hi._key))
    out = [raw[0]]
    for iv in raw[1:]:
        last = out[-1]
        # closed intervals that touch share a point and merge
        if iv.lo <= last.hi:
            if iv.hi > last.hi:
                out[-1] = _interval(last.lo, iv.hi)
        else:
            out.append(iv)
    return tuple(out)


def canonicalize(raw: Sequence[NsInterval]) -> IntervalUnion:
    return IntervalUnion(raw)


def bounds(s: IntervalUnion) -> tuple[NonStdValue, NonStdValue]:
    return s.parts[0].lo, s.parts[-1].hi


def mk_add(s1: IntervalUnion, s2: IntervalUnion) -> IntervalUnion:
    return IntervalUnion(
        _interval(ns_add(a.lo, b.lo), ns_add(a.hi, b.hi))
        for a in s1.parts
        for b in s2.parts
    )


def mk_sub(s1: IntervalUnion, s2: IntervalUnion) -> IntervalUnion:
    return IntervalUnion(
        _interval(ns_sub(a.lo, b.hi), ns_sub(a.hi, b.lo))
        for a in s1.parts
        for b in s2.parts
    )


def mk_mul(s1: IntervalUnion, s2: IntervalUnion) -> IntervalUnion:
    # min/max over the four corner products keeps sign-mixed parts correct
    out = []
    for a in s1.parts:
        for b in s2.parts:
            corners = (
                ns_mul(a.lo, b.lo),
                ns_mul(a.lo, b.hi),
                ns_mul(a.hi, b.lo),
                ns_mul(a.hi, b.hi),
            )
            out.append(_interval(min(corners), max(corners)))
    return IntervalUnion(out)


def mk_div_scalar(s: IntervalUnion, k: Real) -> IntervalUnion:
    k = as_decimal(k)
    if k.is_zero():
        raise ZeroDivisionError("division by zero scalar")
    out = []
    for p in s.parts:
        lo, hi = ns_div_scalar(p.lo, k), ns_div_scalar(p.hi, k)
        out.append(NsInterval(hi, lo) if k < 0 else NsInterval(lo, hi))
    return IntervalUnion(out)


def clamp_unit_set(s: IntervalUnion) -> IntervalUnion:
    return IntervalUnion(
        _interval(ns_clamp_unit(p.lo), ns_clamp_unit(p.hi)) for p in s.parts
    )


def contains(s: IntervalUnion, v: NonStdValue) -> bool:
    return any(p.lo <= v <= p.hi for p in s.parts)

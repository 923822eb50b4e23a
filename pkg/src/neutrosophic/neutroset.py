"""Neutrosophic triples, sets over a universe, and their operations.

Every operation is evaluated compositionally on whole components (two
occurrences of the same component are treated as independent), and only the
final component of each operation is clamped into ``[0^-, 1^+]``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .hyperreal import ONE_PLUS, ZERO_MINUS, NonStdValue, ns_add
from .ndset import IntervalUnion, clamp_unit_set, mk_add, mk_mul, mk_sub

__all__ = [
    "NeutroTriple",
    "NeutroSet",
    "NeutroRelation",
    "CartesianPair",
    "NeutroProduct",
    "set_product",
    "DEFAULT_TRIPLE",
    "UNIVERSAL_TRIPLE",
    "triple",
    "n_bounds",
    "complement",
    "intersect",
    "union",
    "difference",
    "cartesian",
    "is_subset",
    "set_apply",
    "relation_get",
    "UniverseMismatch",
    "SignatureError",
]

ComponentLike = Union[IntervalUnion, int, float, str, NonStdValue]


class UniverseMismatch(ValueError):
    pass


class SignatureError(KeyError):
    pass


def _component(c: ComponentLike) -> IntervalUnion:
    if isinstance(c, IntervalUnion):
        return c
    return IntervalUnion.point(c)


def _in_unit(c: IntervalUnion) -> bool:
    return ZERO_MINUS <= c.inf and c.sup <= ONE_PLUS


@dataclass(frozen=True)
class NeutroTriple:
    """Appurtenance record ``(T, I, F)`` of one element.

    Constructing directly is strict: every endpoint must already lie in
    ``[0^-, 1^+]``. Use :meth:`clamped` to apply the replacement rule instead.
    """

    T: IntervalUnion
    I: IntervalUnion  # noqa: E741
    F: IntervalUnion

    def __post_init__(self) -> None:
        for name in ("T", "I", "F"):
            c = getattr(self, name)
            if not isinstance(c, IntervalUnion):
                c = _component(c)
                object.__setattr__(self, name, c)
            if not _in_unit(c):
                raise ValueError(f"component {name}={c} leaves [0^-, 1^+]")

    @classmethod
    def clamped(cls, T: ComponentLike, I: ComponentLike, F: ComponentLike) -> NeutroTriple:  # noqa: E741
        return cls(
            clamp_unit_set(_component(T)),
            clamp_unit_set(_component(I)),
            clamp_unit_set(_component(F)),
        )

    @property
    def components(self) -> tuple[IntervalUnion, IntervalUnion, IntervalUnion]:
        return (self.T, self.I, self.F)

    @property
    def is_point(self) -> bool:
        return all(c.is_singleton for c in self.components)

    def __str__(self) -> str:
        return f"({self.T}, {self.I}, {self.F})"


def triple(t: ComponentLike, i: ComponentLike, f: ComponentLike) -> NeutroTriple:
    """Strict shorthand: ``triple(0.5, 0.2, 0.3)``."""
    return NeutroTriple(_component(t), _component(i), _component(f))


DEFAULT_TRIPLE = triple(0, 0, 1)
UNIVERSAL_TRIPLE = triple(1, 1, 1)


def n_bounds(x: NeutroTriple) -> tuple[NonStdValue, NonStdValue]:
    """Return ``(n_inf, n_sup)``: sums of the component infima and suprema."""
    n_inf = ns_add(ns_add(x.T.inf, x.I.inf), x.F.inf)
    n_sup = ns_add(ns_add(x.T.sup, x.I.sup), x.F.sup)
    return n_inf, n_sup


_ONE_PLUS_SET = IntervalUnion.point(ONE_PLUS)
# component operations are pure functions of immutable values
_memo = functools.lru_cache(maxsize=1 << 16)


@_memo
def _complement_c(c: IntervalUnion) -> IntervalUnion:
    return clamp_unit_set(mk_sub(_ONE_PLUS_SET, c))


@_memo
def _intersect_c(a: IntervalUnion, b: IntervalUnion) -> IntervalUnion:
    return clamp_unit_set(mk_mul(a, b))


@_memo
def _union_c(a: IntervalUnion, b: IntervalUnion) -> IntervalUnion:
    return clamp_unit_set(mk_sub(mk_add(a, b), mk_mul(a, b)))


@_memo
def _difference_c(a: IntervalUnion, b: IntervalUnion) -> IntervalUnion:
    return clamp_unit_set(mk_sub(a, mk_mul(a, b)))


def complement(x: NeutroTriple) -> NeutroTriple:
    return NeutroTriple(_complement_c(x.T), _complement_c(x.I), _complement_c(x.F))


def intersect(x: NeutroTriple, y: NeutroTriple) -> NeutroTriple:
    return NeutroTriple(_intersect_c(x.T, y.T), _intersect_c(x.I, y.I), _intersect_c(x.F, y.F))


def union(x: NeutroTriple, y: NeutroTriple) -> NeutroTriple:
    return NeutroTriple(_union_c(x.T, y.T), _union_c(x.I, y.I), _union_c(x.F, y.F))


def difference(x: NeutroTriple, y: NeutroTriple) -> NeutroTriple:
    return NeutroTriple(_difference_c(x.T, y.T), _difference_c(x.I, y.I), _difference_c(x.F, y.F))


def is_subset(x: NeutroTriple, y: NeutroTriple) -> bool:
    """Inclusion test on T and F bounds; I is left unconstrained."""
    return (
        x.T.inf <= y.T.inf
        and x.T.sup <= y.T.sup
        and x.F.inf >= y.F.inf
        and x.F.sup >= y.F.sup
    )


@dataclass(frozen=True)
class CartesianPair:
    """Ordered tuple of tagged elements; each slot keeps its own triple.

    No combining formula is applied to the triples.
    """

    elements: tuple[str, ...]
    triples: tuple[NeutroTriple, ...]

    def __post_init__(self) -> None:
        if len(self.elements) != len(self.triples):
            raise ValueError("elements and triples differ in length")

    def project(self, slot: int) -> tuple[str, NeutroTriple]:
        return self.elements[slot], self.triples[slot]

    def __str__(self) -> str:
        inner = ", ".join(f"{e}{t}" for e, t in zip(self.elements, self.triples))
        return f"({inner})"


def cartesian(x: tuple[str, NeutroTriple], y: tuple[str, NeutroTriple]) -> CartesianPair:
    (xn, xt), (yn, yt) = x, y
    return CartesianPair((xn, yn), (xt, yt))


@dataclass(frozen=True)
class NeutroSet:
    """A neutrosophic set: a universe plus triples for (some of) its elements.

    Elements without an explicit triple are read as ``({0}, {0}, {1})``.
    """

    universe: tuple[str, ...]
    membership: Mapping[str, NeutroTriple] = field(default_factory=dict)

    def __post_init__(self) -> None:
        universe = tuple(self.universe)
        if len(set(universe)) != len(universe):
            raise ValueError("duplicate names in universe")
        object.__setattr__(self, "universe", universe)
        unknown = [name for name in self.membership if name not in universe]
        if unknown:
            raise ValueError(f"elements not in universe: {', '.join(unknown)}")
        # freeze in universe order so equality and rendering are stable
        ordered = {n: self.membership[n] for n in universe if n in self.membership}
        object.__setattr__(self, "membership", _FrozenDict(ordered))

    def __getitem__(self, name: str) -> NeutroTriple:
        if name not in self.universe:
            raise KeyError(name)
        return self.membership.get(name, DEFAULT_TRIPLE)

    def items(self) -> Iterable[tuple[str, NeutroTriple]]:
        """Every universe element with its (possibly default) triple."""
        for name in self.universe:
            yield name, self[name]


class _FrozenDict(dict):
    def __hash__(self) -> int:  # type: ignore[override]
        return hash(tuple(self.items()))

    def _immutable(self, *args, **kwargs):
        raise TypeError("membership is immutable")

    __setitem__ = __delitem__ = clear = pop = popitem = setdefault = update = _immutable


_BINARY: dict[str, Callable[[NeutroTriple, NeutroTriple], NeutroTriple]] = {
    "intersect": intersect,
    "union": union,
    "difference": difference,
}


def set_apply(op: str, A: NeutroSet, B: Optional[NeutroSet] = None) -> NeutroSet:
    """Lift a triple operation elementwise over a universe.

    ``op`` is one of ``complement``, ``intersect``, ``union``, ``difference``.
    """
    if op == "complement":
        if B is not None:
            raise TypeError("complement takes one set")
        return NeutroSet(A.universe, {n: complement(t) for n, t in A.items()})
    try:
        fn = _BINARY[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if B is None:
        raise TypeError(f"{op} takes two sets")
    if A.universe != B.universe:
        raise UniverseMismatch("universe mismatch")
    return NeutroSet(A.universe, {n: fn(A[n], B[n]) for n in A.universe})


@dataclass(frozen=True)
class NeutroRelation:
    """Triples attached to ordered tuples drawn from ``domains``."""

    domains: tuple[tuple[str, ...], ...]
    tuples: Mapping[tuple[str, ...], NeutroTriple] = field(default_factory=dict)

    def __post_init__(self) -> None:
        domains = tuple(tuple(d) for d in self.domains)
        if not domains:
            raise ValueError("relation needs at least one domain")
        object.__setattr__(self, "domains", domains)
        frozen = {}
        for key, value in self.tuples.items():
            key = tuple(key)
            self.check_signature(key)
            frozen[key] = value
        object.__setattr__(self, "tuples", _FrozenDict(frozen))

    @property
    def arity(self) -> int:
        return len(self.domains)

    def check_signature(self, key: Sequence[str]) -> None:
        if len(key) != self.arity or any(n not in d for n, d in zip(key, self.domains)):
            raise SignatureError("tuple outside relation signature")


def relation_get(R: NeutroRelation, key: Sequence[str]) -> NeutroTriple:
    key = tuple(key)
    R.check_signature(key)
    return R.tuples.get(key, DEFAULT_TRIPLE)


@dataclass(frozen=True)
class NeutroProduct:
    """Cartesian product of sets; each tuple keeps its constituents' triples."""

    factors: tuple[NeutroSet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        if len(self.factors) < 2:
            raise ValueError("a product needs at least two factors")

    def tuples(self) -> Iterable[CartesianPair]:
        for combo in itertools.product(*(list(s.items()) for s in self.factors)):
            names = tuple(name for name, _ in combo)
            triples = tuple(t for _, t in combo)
            yield CartesianPair(names, triples)


def set_product(*sets: NeutroSet | NeutroProduct) -> NeutroProduct:
    """Flattening product: ``set_product(set_product(A, B), C)`` has three factors."""
    factors: list[NeutroSet] = []
    for s in sets:
        factors.extend(s.factors if isinstance(s, NeutroProduct) else (s,))
    return NeutroProduct(tuple(factors))

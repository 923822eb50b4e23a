"""Classification of triples into the neutrosophic generalization lattice.

Labels are not mutually exclusive; a triple may be, for instance, both
paraconsistent and dialetheist. Flags mark components that overflow 1 or
fall below 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal

from .hyperreal import CTX, NonStdValue, ns_add
from .neutroset import NeutroTriple, n_bounds

__all__ = [
    "LABELS",
    "FLAGS",
    "Classification",
    "classify_point",
    "classify_triple",
    "is_ifs_representable",
]

LABELS = (
    "classical",
    "fuzzy",
    "ifs_consistent",
    "intuitionistic_incomplete",
    "paraconsistent",
    "faillibilist",
    "dialetheist",
    "paradoxist",
    "pseudoparadoxist",
    "tautological",
)

FLAGS = (
    "overincluded",
    "overindeterminate",
    "overexcluded",
    "undertrue",
    "underindeterminate",
    "underfalse",
)

_QUANTUM = Decimal("1e-12")


@dataclass(frozen=True)
class Classification:
    labels: frozenset[str]
    flags: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", frozenset(self.labels))
        object.__setattr__(self, "flags", frozenset(self.flags))
        if not self.labels <= set(LABELS) or not self.flags <= set(FLAGS):
            raise ValueError("unknown label or flag")

    @property
    def sorted_labels(self) -> list[str]:
        return [name for name in LABELS if name in self.labels]

    @property
    def sorted_flags(self) -> list[str]:
        return [name for name in FLAGS if name in self.flags]

    def __str__(self) -> str:
        text = ", ".join(self.sorted_labels)
        if self.flags:
            flags = "[" + ", ".join(self.sorted_flags) + "]"
            text = f"{text} {flags}" if text else flags
        return text


def _round(v: NonStdValue) -> tuple[Decimal, Decimal]:
    return (v.std.quantize(_QUANTUM, context=CTX), v.coeff)


def _cmp(v: NonStdValue, ref: int) -> int:
    """Three-way compare of ``v`` (std part rounded to 1e-12) against a plain integer."""
    key = _round(v)
    ref_key = (Decimal(ref), Decimal(0))
    return (key > ref_key) - (key < ref_key)


def _std_cmp(v: NonStdValue, ref: int) -> int:
    s = v.std.quantize(_QUANTUM, context=CTX)
    return (s > ref) - (s < ref)


def _flags(t_hi: NonStdValue, i_hi: NonStdValue, f_hi: NonStdValue,
           t_lo: NonStdValue, i_lo: NonStdValue, f_lo: NonStdValue) -> set[str]:
    flags = set()
    if _cmp(t_hi, 1) > 0:
        flags.add("overincluded")
    if _cmp(i_hi, 1) > 0:
        flags.add("overindeterminate")
    if _cmp(f_hi, 1) > 0:
        flags.add("overexcluded")
    if _cmp(t_lo, 0) < 0:
        flags.add("undertrue")
    if _cmp(i_lo, 0) < 0:
        flags.add("underindeterminate")
    if _cmp(f_lo, 0) < 0:
        flags.add("underfalse")
    return flags


def classify_point(t: NonStdValue, i: NonStdValue, f: NonStdValue) -> Classification:
    """Classify a point-valued element ``(t, i, f)``.

    The sum ``n = t + i + f`` is judged on standard parts only; individual
    components are compared with their infinitesimal part, so ``1^+`` is
    strictly above 1 and ``0^-`` strictly below 0.
    """
    n = _std_cmp(ns_add(ns_add(t, i), f), 1)
    t0, t1 = _cmp(t, 0), _cmp(t, 1)
    i0, i1 = _cmp(i, 0), _cmp(i, 1)
    f0, f1 = _cmp(f, 0), _cmp(f, 1)
    tf = _std_cmp(ns_add(t, f), 1)

    labels = set()
    if n == 0 and i0 == 0:
        labels.add("fuzzy")
        if (t0 == 0 or t1 == 0) and (f0 == 0 or f1 == 0):
            labels.add("classical")
    if n == 0 and i0 >= 0 and i1 < 0:
        labels.add("ifs_consistent")
    if n < 0:
        labels.add("intuitionistic_incomplete")
    if n > 0:
        labels.add("paraconsistent")
    if i0 > 0:
        labels.add("faillibilist")
    if t1 == 0 and f1 == 0:
        labels.add("paradoxist")
        if i0 == 0:
            labels.add("dialetheist")
    if i0 > 0 and i1 < 0 and tf > 0:
        labels.add("pseudoparadoxist")
    if i0 < 0 or t1 > 0:
        labels.add("tautological")
    return Classification(frozenset(labels), frozenset(_flags(t, i, f, t, i, f)))


def _within_standard_unit(x: NeutroTriple) -> bool:
    return all(_cmp(c.inf, 0) >= 0 and _cmp(c.sup, 1) <= 0 for c in x.components)


def classify_triple(x: NeutroTriple) -> Classification:
    """Classify an element whose components may be interval unions.

    Point-valued triples are delegated to :func:`classify_point`; otherwise
    only the sum-based kinds and indeterminacy are decided, from ``n_sup``.
    """
    if x.is_point:
        return classify_point(x.T.inf, x.I.inf, x.F.inf)
    _, n_sup = n_bounds(x)
    n = _std_cmp(n_sup, 1)
    labels = set()
    if n > 0:
        labels.add("paraconsistent")
    elif n < 0:
        labels.add("intuitionistic_incomplete")
    elif _within_standard_unit(x):
        labels.add("ifs_consistent")
    if _cmp(x.I.sup, 0) > 0:
        labels.add("faillibilist")
    flags = _flags(x.T.sup, x.I.sup, x.F.sup, x.T.inf, x.I.inf, x.F.inf)
    return Classification(frozenset(labels), frozenset(flags))


def is_ifs_representable(x: NeutroTriple) -> bool:
    """Whether ``x`` is expressible as an intuitionistic fuzzy element.

    Requires standard endpoints inside ``[0, 1]``, ``sup T + sup I + sup F = 1``
    and ``sup I < 1`` (total indeterminacy is not an IFS state).
    """
    for c in x.components:
        if any(not v.is_standard for v in c.endpoints()):
            return False
    if not _within_standard_unit(x) or _cmp(x.I.sup, 1) >= 0:
        return False
    _, n_sup = n_bounds(x)
    return _std_cmp(n_sup, 1) == 0

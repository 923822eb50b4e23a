"""Non-standard scalars of the form ``r + k*eps``.

Values are kept to first infinitesimal order: a standard part ``std`` and the
coefficient ``coeff`` of a single positive infinitesimal. Both parts are
stored as :class:`decimal.Decimal` so that decimal literals such as ``0.15``
survive chains of additions and subtractions without binary rounding.
"""

from __future__ import annotations

import enum
from decimal import (
    Context,
    Decimal,
    DivisionByZero,
    InvalidOperation,
    Overflow,
    ROUND_HALF_EVEN,
)
from typing import Union

__all__ = [
    "CTX",
    "NonStdValue",
    "Ordering",
    "ZERO",
    "ONE",
    "ZERO_MINUS",
    "ONE_PLUS",
    "as_decimal",
    "format_decimal",
    "ns",
    "ns_add",
    "ns_sub",
    "ns_mul",
    "ns_div_scalar",
    "ns_cmp",
    "ns_clamp_unit",
]

# 34 significant digits (decimal128); enough headroom for every chain the
# set operations produce from short decimal literals.
CTX = Context(
    prec=34,
    rounding=ROUND_HALF_EVEN,
    traps=[InvalidOperation, DivisionByZero, Overflow],
)

Real = Union[int, float, str, Decimal]

_D0 = Decimal(0)


def as_decimal(x: Real) -> Decimal:
    """Convert ``x`` to a finite Decimal.

    Floats go through their shortest ``repr`` so ``0.1`` becomes
    ``Decimal('0.1')`` rather than its 55-digit binary expansion.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, Decimal):
        d = x
    elif isinstance(x, int):
        d = Decimal(x)
    elif isinstance(x, float):
        d = Decimal(repr(x))
    elif isinstance(x, str):
        try:
            d = Decimal(x.strip())
        except InvalidOperation:
            raise ValueError(f"not a number: {x!r}") from None
    else:
        raise TypeError(f"cannot convert {type(x).__name__} to a real")
    if not d.is_finite():
        raise ValueError(f"non-finite value: {x!r}")
    if d.is_zero():
        return _D0
    return d


def format_decimal(d: Decimal) -> str:
    """Plain positional text for ``d`` with trailing zeros stripped."""
    if d.is_zero():
        return "0"
    return format(d.normalize(CTX), "f")


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class NonStdValue:
    """A value ``std + coeff*eps`` with ``eps`` a positive infinitesimal.

    Ordering is lexicographic on ``(std, coeff)``; the standard part
    dominates and the coefficient breaks ties. Instances are immutable.
    """

    __slots__ = ("std", "coeff", "_key")

    std: Decimal
    coeff: Decimal

    def __init__(self, std: Real = 0, coeff: Real = 0) -> None:
        _set(self, "std", as_decimal(std))
        _set(self, "coeff", as_decimal(coeff))
        _set(self, "_key", (self.std, self.coeff))

    @classmethod
    def _make(cls, std: Decimal, coeff: Decimal) -> NonStdValue:
        # trusted internal path: both parts already finite Decimals
        v = object.__new__(cls)
        _set(v, "std", std)
        _set(v, "coeff", coeff)
        _set(v, "_key", (std, coeff))
        return v

    def __setattr__(self, name, value):
        raise AttributeError("NonStdValue is immutable")

    def __reduce__(self):
        return (NonStdValue, (self.std, self.coeff))

    @property
    def is_standard(self) -> bool:
        return self.coeff.is_zero()

    def key(self) -> tuple[Decimal, Decimal]:
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NonStdValue):
            return NotImplemented
        return self._key == other._key

    def __lt__(self, other: NonStdValue) -> bool:
        if not isinstance(other, NonStdValue):
            return NotImplemented
        return self._key < other._key

    def __le__(self, other: NonStdValue) -> bool:
        if not isinstance(other, NonStdValue):
            return NotImplemented
        return self._key <= other._key

    def __gt__(self, other: NonStdValue) -> bool:
        if not isinstance(other, NonStdValue):
            return NotImplemented
        return self._key > other._key

    def __ge__(self, other: NonStdValue) -> bool:
        if not isinstance(other, NonStdValue):
            return NotImplemented
        return self._key >= other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __add__(self, other: NonStdValue) -> NonStdValue:
        return ns_add(self, other)

    def __sub__(self, other: NonStdValue) -> NonStdValue:
        return ns_sub(self, other)

    def __mul__(self, other: NonStdValue) -> NonStdValue:
        return ns_mul(self, other)

    def __neg__(self) -> NonStdValue:
        return NonStdValue(CTX.minus(self.std), CTX.minus(self.coeff))

    def __repr__(self) -> str:
        return f"NonStdValue({format_decimal(self.std)}, {format_decimal(self.coeff)})"

    def __str__(self) -> str:
        text = format_decimal(self.std)
        c = self.coeff
        if c.is_zero():
            return text
        sign = "+" if c > 0 else "-"
        mag = abs(c)
        if mag == 1:
            return f"{text}^{sign}"
        return f"{text}^{sign}{format_decimal(mag)}"

    def debug(self) -> str:
        """Long form ``(std)^+k`` showing the coefficient explicitly."""
        sign = "+" if self.coeff >= 0 else "-"
        return f"({format_decimal(self.std)})^{sign}{format_decimal(abs(self.coeff))}"


_set = object.__setattr__
_make = NonStdValue._make
_add, _subtract, _multiply = CTX.add, CTX.subtract, CTX.multiply

ZERO = NonStdValue(0, 0)
ONE = NonStdValue(1, 0)
ZERO_MINUS = NonStdValue(0, -1)
ONE_PLUS = NonStdValue(1, 1)


def ns(x: Real | NonStdValue, coeff: Real = 0) -> NonStdValue:
    """Coerce a plain real (or an existing value) to :class:`NonStdValue`."""
    if isinstance(x, NonStdValue):
        return x
    return NonStdValue(x, coeff)


def ns_add(a: NonStdValue, b: NonStdValue) -> NonStdValue:
    return _make(_add(a.std, b.std), _add(a.coeff, b.coeff))


def ns_sub(a: NonStdValue, b: NonStdValue) -> NonStdValue:
    return _make(_subtract(a.std, b.std), _subtract(a.coeff, b.coeff))


def ns_mul(a: NonStdValue, b: NonStdValue) -> NonStdValue:
    """Product truncated to first order.

    ``(r + k eps)(s + m eps) = rs + (rm + sk) eps + km eps^2``. When the
    first-order term cancels but ``km`` does not, ``km`` is moved into the
    eps slot so that the sign of the true product survives (``0^- * 0^-`` is
    strictly positive).
    """
    std = _multiply(a.std, b.std)
    first = _add(_multiply(a.std, b.coeff), _multiply(b.std, a.coeff))
    if first.is_zero():
        second = _multiply(a.coeff, b.coeff)
        if not second.is_zero():
            return _make(std, second)
    return _make(std, first)


def ns_div_scalar(a: NonStdValue, k: Real) -> NonStdValue:
    k = as_decimal(k)
    if k.is_zero():
        raise ZeroDivisionError("division by zero scalar")
    return NonStdValue(CTX.divide(a.std, k), CTX.divide(a.coeff, k))


def ns_cmp(a: NonStdValue, b: NonStdValue) -> Ordering:
    ka, kb = a._key, b._key
    if ka < kb:
        return Ordering.LESS
    if ka > kb:
        return Ordering.GREATER
    return Ordering.EQUAL


def ns_clamp_unit(a: NonStdValue) -> NonStdValue:
    """Replace anything below ``0^-`` by ``0^-`` and above ``1^+`` by ``1^+``."""
    if a < ZERO_MINUS:
        return ZERO_MINUS
    if a > ONE_PLUS:
        return ONE_PLUS
    return a

"""Independent reference computations used to freeze expected values.

Nothing here imports the arithmetic under test: the sampling oracle works on
plain floats with numpy and the expansion oracle uses sympy.
"""

from __future__ import annotations

import numpy as np
import sympy

GRID_STEP = 1e-3


def sample_union(parts: list[tuple[float, float]], step: float = GRID_STEP) -> np.ndarray:
    """Grid points (step ``step``) inside a union of closed intervals, endpoints included."""
    pts = []
    for lo, hi in parts:
        n = int(round((hi - lo) / step))
        pts.append(lo + step * np.arange(n + 1))
        pts.append(np.array([hi]))
    return np.unique(np.concatenate(pts))


def dense_image(op: str, s1, s2, step: float = GRID_STEP) -> np.ndarray:
    """Sorted image of ``s1 (op) s2`` over all pairs of grid samples."""
    a, b = sample_union(s1, step), sample_union(s2, step)
    if op == "add":
        img = a[:, None] + b[None, :]
    elif op == "sub":
        img = a[:, None] - b[None, :]
    elif op == "mul":
        img = a[:, None] * b[None, :]
    else:
        raise ValueError(op)
    return np.unique(img.ravel())


def runs(points: np.ndarray, gap: float) -> list[tuple[float, float]]:
    """Split sorted sample points into maximal runs with spacing <= ``gap``."""
    out = []
    start = prev = points[0]
    for p in points[1:]:
        if p - prev > gap:
            out.append((start, prev))
            start = p
        prev = p
    out.append((start, prev))
    return out


_EPS = sympy.Symbol("eps", positive=True)


def expand_product(r, k, s, m):
    """Exact ``(r + k eps)(s + m eps)`` as coefficients ``(c0, c1, c2)``."""
    r, k, s, m = (sympy.Rational(str(v)) for v in (r, k, s, m))
    poly = sympy.Poly(sympy.expand((r + k * _EPS) * (s + m * _EPS)), _EPS)
    c = poly.all_coeffs()[::-1] + [0, 0, 0]
    return tuple(sympy.Rational(v) for v in c[:3])


def sign_of_product(r, k, s, m) -> int:
    """Sign of the product for an infinitesimal eps: first nonzero coefficient wins."""
    for c in expand_product(r, k, s, m):
        if c != 0:
            return 1 if c > 0 else -1
    return 0

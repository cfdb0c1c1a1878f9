"""Bounded enumeration of integer solutions of ``F(x) = g(y)``.

For each integer ``x`` in the box the left-hand side is evaluated exactly, then
``y`` is recovered either from a perfect-square discriminant (quadratic
``g``) or an exact integer root (``g = c*y^ell + d``). No floating point.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ParameterError
from .poly import Poly, poly_eval
from .power_sums import PowerSumFamily, ProgressionParams, family_poly
from .reduction import PowerRHS, QuadraticRHS

CHUNK_SIZE = 4096


def integer_nth_root(v: int, n: int) -> tuple[int, bool]:
    """Return ``(floor(v ** (1/n)), exact)`` for ``v >= 0``, ``n >= 1``."""
    if v < 0 or n < 1:
        raise ValueError("integer_nth_root needs v >= 0 and n >= 1")
    if v < 2 or n == 1:
        return v, True
    if n == 2:
        r = math.isqrt(v)
        return r, r * r == v
    # Newton from above; the start is a power of two >= the true root.
    x = 1 << -(-v.bit_length() // n)
    while True:
        y = ((n - 1) * x + v // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    return x, x**n == v


@dataclass(frozen=True)
class SearchBox:
    x_min: int
    x_max: int
    ell_max: int = 2
    require_y_gt_1: Optional[bool] = None  # None: per-solver default

    def __post_init__(self):
        if self.x_min > self.x_max:
            raise ParameterError("search box needs x_min <= x_max")
        if self.ell_max < 2:
            raise ParameterError("search box needs ell_max >= 2")


@dataclass(frozen=True)
class Solution:
    x: int
    y: int
    family: PowerSumFamily
    lhs_value: Fraction
    ell: Optional[int] = None

    def to_json(self) -> dict:
        out = {"x": self.x, "y": self.y}
        if self.ell is not None:
            out["ell"] = self.ell
        out["family"] = self.family.value
        out["lhs_value"] = str(self.lhs_value)
        # index of the last summand: (1, 0, 2) at x = 25 is 1^2 + ... + 24^2
        out["last_index"] = self.x - 1
        return out


def _quadratic_ys(rhs: QuadraticRHS, v: Fraction) -> list[int]:
    # A y^2 + B y + (C - v) = 0, cleared to integers.
    coeffs = (rhs.A, rhs.B, rhs.C - v)
    den = math.lcm(*(c.denominator for c in coeffs))
    a, b, c = (int(t * den) for t in coeffs)
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    r = math.isqrt(disc)
    if r * r != disc:
        return []
    ys = set()
    for num in (-b - r, -b + r):
        if num % (2 * a) == 0:
            ys.add(num // (2 * a))
    return sorted(ys)


def _power_ys(v: int, ell: int) -> list[int]:
    if v == 0:
        return [0]
    if v < 0:
        if ell % 2 == 0:
            return []
        r, exact = integer_nth_root(-v, ell)
        return [-r] if exact else []
    r, exact = integer_nth_root(v, ell)
    if not exact:
        return []
    return [-r, r] if ell % 2 == 0 else [r]


def _scan_quadratic(poly: Poly, family, rhs, lo, hi, small_y) -> list[Solution]:
    out = []
    for x in range(lo, hi + 1):
        v = poly_eval(poly, x)
        for y in _quadratic_ys(rhs, v):
            if small_y or abs(y) > 1:
                out.append(Solution(x, y, family, v))
    return out


def _scan_power(poly: Poly, family, rhs, ells, lo, hi, small_y) -> list[Solution]:
    out = []
    for x in range(lo, hi + 1):
        lhs = poly_eval(poly, x)
        w = (lhs - rhs.d) / rhs.c
        if w.denominator != 1:
            continue
        for ell in ells:
            for y in _power_ys(w.numerator, ell):
                if small_y or abs(y) > 1:
                    out.append(Solution(x, y, family, lhs, ell))
    return out


def _chunks(box: SearchBox, size: int):
    lo = box.x_min
    while lo <= box.x_max:
        hi = min(lo + size - 1, box.x_max)
        yield lo, hi
        lo = hi + 1


def _run(scan, args, box: SearchBox, workers: int, chunk_size: int) -> list[Solution]:
    chunks = list(_chunks(box, chunk_size))
    if workers <= 1 or len(chunks) == 1:
        parts = [scan(*args[:-1], lo, hi, args[-1]) for lo, hi in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(scan, *args[:-1], lo, hi, args[-1]) for lo, hi in chunks]
            parts = [f.result() for f in futures]
    # chunks are contiguous and ascending, so concatenation keeps x order
    return [s for part in parts for s in part]


def solve_quadratic_rhs(
    family: PowerSumFamily,
    params: ProgressionParams,
    rhs: QuadraticRHS,
    box: SearchBox,
    workers: int = 1,
    chunk_size: int = CHUNK_SIZE,
) -> list[Solution]:
    """All ``(x, y)`` with ``x`` in the box and ``F(x) = A y^2 + B y + C``.

    Small ``|y|`` is kept unless ``box.require_y_gt_1`` is True.
    """
    small_y = not box.require_y_gt_1
    poly = family_poly(family, params)
    sols = _run(_scan_quadratic, (poly, family, rhs, small_y), box, workers, chunk_size)
    return sorted(sols, key=lambda s: (s.x, s.y))


def solve_power_rhs(
    family: PowerSumFamily,
    params: ProgressionParams,
    rhs: PowerRHS,
    box: SearchBox,
    workers: int = 1,
    chunk_size: int = CHUNK_SIZE,
) -> list[Solution]:
    """All ``(x, y, ell)`` with ``F(x) = c y^ell + d``.

    ``rhs.ell=None`` tries every exponent ``2..box.ell_max``. ``|y| > 1`` is
    required unless ``box.require_y_gt_1`` is explicitly False.
    """
    small_y = box.require_y_gt_1 is False
    ells = [rhs.ell] if rhs.ell is not None else list(range(2, box.ell_max + 1))
    poly = family_poly(family, params)
    sols = _run(_scan_power, (poly, family, rhs, ells, small_y), box, workers, chunk_size)
    return sorted(sols, key=lambda s: (s.x, s.ell, s.y))

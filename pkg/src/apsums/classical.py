"""Bernoulli numbers, Bernoulli polynomials and Euler polynomials.

Everything is exact. Tables are built once per size and cached; lookups past
the default size transparently build a larger table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .poly import Poly

DEFAULT_MAX_K = 64


@dataclass(frozen=True)
class BernoulliTable:
    max_k: int
    numbers: tuple[Fraction, ...]
    polys: tuple[Poly, ...]

    @classmethod
    def build(cls, max_k: int = DEFAULT_MAX_K) -> BernoulliTable:
        # sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1, B_0 = 1 (so B_1 = -1/2)
        nums = [Fraction(1)]
        for n in range(1, max_k + 1):
            s = sum(comb(n + 1, j) * nums[j] for j in range(n))
            nums.append(-s / (n + 1))
        polys = tuple(
            Poly(comb(n, j) * nums[n - j] for j in range(n + 1))
            for n in range(max_k + 1)
        )
        return cls(max_k, tuple(nums), polys)


@dataclass(frozen=True)
class EulerTable:
    max_k: int
    polys: tuple[Poly, ...]

    @classmethod
    def build(cls, max_k: int = DEFAULT_MAX_K) -> EulerTable:
        # E_n(x) = x^n - 1/2 * sum_{j<n} C(n, j) E_j(x)
        polys: list[Poly] = []
        for n in range(max_k + 1):
            acc = Poly.monomial(n)
            for j in range(n):
                acc = acc - polys[j] * Fraction(comb(n, j), 2)
            polys.append(acc)
        return cls(max_k, tuple(polys))


def _size_for(k: int) -> int:
    size = DEFAULT_MAX_K
    while size < k:
        size *= 2
    return size


@lru_cache(maxsize=None)
def bernoulli_table(max_k: int = DEFAULT_MAX_K) -> BernoulliTable:
    return BernoulliTable.build(max_k)


@lru_cache(maxsize=None)
def euler_table(max_k: int = DEFAULT_MAX_K) -> EulerTable:
    return EulerTable.build(max_k)


def _check_k(k: int) -> None:
    if k < 0:
        raise ValueError(f"index must be non-negative, got {k}")


def bernoulli_number(k: int) -> Fraction:
    """B_k = B_k(0); note B_1 = -1/2 in this convention."""
    _check_k(k)
    return bernoulli_table(_size_for(k)).numbers[k]


def bernoulli_poly(k: int) -> Poly:
    _check_k(k)
    return bernoulli_table(_size_for(k)).polys[k]


def euler_poly(k: int) -> Poly:
    _check_k(k)
    return euler_table(_size_for(k)).polys[k]

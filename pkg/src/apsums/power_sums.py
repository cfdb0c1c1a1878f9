"""Power sums of arithmetic progressions and their polynomial extensions.

For coprime integers ``a != 0`` and ``b``::

    S(n) = b^k + (a+b)^k + ... + (a(n-1)+b)^k
    T(n) = b^k - (a+b)^k + ... + (-1)^(n-1) (a(n-1)+b)^k

``build_S`` and ``build_T`` return the closed-form polynomials in ``x`` built from
Bernoulli and Euler polynomials; ``direct_power_sum`` and
``direct_alt_power_sum`` are the literal sums, used as oracles.

``T_PLUS`` agrees with ``T(n)`` at odd ``n``; ``T_MINUS`` at even ``n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .classical import bernoulli_poly, euler_poly
from .errors import ParameterError
from .poly import Poly, poly_eval


class PowerSumFamily(enum.Enum):
    S = "S"
    T_PLUS = "T+"
    T_MINUS = "T-"

    @classmethod
    def parse(cls, text: str) -> PowerSumFamily:
        for member in cls:
            if text in (member.value, member.name):
                return member
        raise ParameterError(f"unknown family {text!r}; expected S, T+ or T-")


@dataclass(frozen=True)
class ProgressionParams:
    a: int
    b: int
    k: int

    def __post_init__(self):
        if self.a == 0:
            raise ParameterError("a must be nonzero")
        if gcd(self.a, self.b) != 1:
            raise ParameterError(f"gcd(a, b) must be 1, got gcd({self.a}, {self.b})")
        if self.k < 0:
            raise ParameterError("k must be non-negative")

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.b, self.a)


def build_S(params: ProgressionParams) -> Poly:
    """``a^k/(k+1) * (B_{k+1}(x + b/a) - B_{k+1}(b/a))``."""
    a, k = params.a, params.k
    bk1 = bernoulli_poly(k + 1)
    r = params.ratio
    shifted = bk1.compose_linear(1, r) - poly_eval(bk1, r)
    return shifted * Fraction(a**k, k + 1)


def build_T(params: ProgressionParams, sign: PowerSumFamily) -> Poly:
    """``a^k/2 * (E_k(b/a) +/- E_k(x + b/a))``, ``+`` for ``T_PLUS``."""
    if sign is PowerSumFamily.S:
        raise ParameterError("build_T takes T_PLUS or T_MINUS")
    a, k = params.a, params.k
    ek = euler_poly(k)
    r = params.ratio
    shifted = ek.compose_linear(1, r)
    if sign is PowerSumFamily.T_MINUS:
        shifted = -shifted
    return (shifted + poly_eval(ek, r)) * Fraction(a**k, 2)


def family_poly(family: PowerSumFamily, params: ProgressionParams) -> Poly:
    if family is PowerSumFamily.S:
        return build_S(params)
    return build_T(params, family)


def direct_power_sum(params: ProgressionParams, n: int) -> Fraction:
    if n < 1:
        raise ParameterError("n must be >= 1")
    a, b, k = params.a, params.b, params.k
    return Fraction(sum((a * i + b) ** k for i in range(n)))


def direct_alt_power_sum(params: ProgressionParams, n: int) -> Fraction:
    if n < 1:
        raise ParameterError("n must be >= 1")
    a, b, k = params.a, params.b, params.k
    return Fraction(sum((-1) ** i * (a * i + b) ** k for i in range(n)))


def oracle_value(family: PowerSumFamily, params: ProgressionParams, n: int) -> Fraction:
    """Literal sum matching ``family`` at ``n`` (parity is not checked here)."""
    if family is PowerSumFamily.S:
        return direct_power_sum(params, n)
    return direct_alt_power_sum(params, n)


def parity_branch(n: int) -> PowerSumFamily:
    """The T-extension that reproduces the alternating sum at ``n``."""
    return PowerSumFamily.T_PLUS if n % 2 else PowerSumFamily.T_MINUS

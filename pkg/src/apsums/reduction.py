"""Finiteness certificates for the power-sum Diophantine equations.

Each equation ``F(x) = g(y)`` with ``F`` one of ``S``, ``T+``, ``T-`` is reduced
to a hyper- or superelliptic equation ``P(x) = alpha * Y^N`` and the root
structure of ``P`` is checked against what the effective finiteness results
need. A certificate records those checks; it never carries a numeric bound.

Theorem numbering::

    quadratic g:      S -> 1, T+ -> 2, T- -> 3
    g = c*y^l + d:    S -> 4, T+ -> 5, T- -> 6
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .classical import bernoulli_poly, euler_poly
from .errors import HypothesisError, ParameterError
from .power_sums import PowerSumFamily, ProgressionParams, family_poly
from .poly import Poly, poly_eval, rational_roots
from .roots import GOLDEN_QUADRATIC, analyze_roots

QUADRATIC_THEOREM = {PowerSumFamily.S: 1, PowerSumFamily.T_PLUS: 2, PowerSumFamily.T_MINUS: 3}
POWER_THEOREM = {PowerSumFamily.S: 4, PowerSumFamily.T_PLUS: 5, PowerSumFamily.T_MINUS: 6}
THEOREM_FAMILY = {
    **{t: f for f, t in QUADRATIC_THEOREM.items()},
    **{t: f for f, t in POWER_THEOREM.items()},
}


class Verdict(enum.Enum):
    CERTIFIED = "CERTIFIED"
    HYPOTHESIS_VIOLATED = "HYPOTHESIS_VIOLATED"
    OUT_OF_THEOREM_RANGE = "OUT_OF_THEOREM_RANGE"


@dataclass(frozen=True)
class QuadraticRHS:
    """``g(y) = A*y^2 + B*y + C``."""

    A: Fraction
    B: Fraction
    C: Fraction

    def __post_init__(self):
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.A == 0:
            raise ParameterError("quadratic right-hand side needs A != 0")

    @property
    def mu(self) -> Fraction:
        return self.B / (2 * self.A)

    @property
    def nu(self) -> Fraction:
        return (self.B**2 - 4 * self.A * self.C) / (4 * self.A)

    def __call__(self, y) -> Fraction:
        return self.A * y * y + self.B * y + self.C

    def to_json(self) -> dict:
        return {"A": str(self.A), "B": str(self.B), "C": str(self.C)}


@dataclass(frozen=True)
class PowerRHS:
    """``g(y) = c*y^ell + d``; ``ell=None`` means the exponent is unknown."""

    c: Fraction
    d: Fraction
    ell: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "d", Fraction(self.d))
        if self.c == 0:
            raise ParameterError("power right-hand side needs c != 0")
        if self.ell is not None and self.ell < 2:
            raise ParameterError(f"exponent must be >= 2, got {self.ell}")

    def to_json(self) -> dict:
        return {"c": str(self.c), "d": str(self.d), "ell": "unknown" if self.ell is None else self.ell}


RHS = Union[QuadraticRHS, PowerRHS]


@dataclass(frozen=True)
class HypothesisCheck:
    lemma_id: int
    claim: str
    witness: dict
    passed: bool

    def to_json(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "claim": self.claim,
            "witness": self.witness,
            "result": "PASS" if self.passed else "FAIL",
        }


@dataclass(frozen=True)
class FinitenessCertificate:
    theorem_id: int
    family: PowerSumFamily
    params: ProgressionParams
    rhs: RHS
    reduced_poly: Poly
    shift_constants: dict
    hypothesis_checks: tuple[HypothesisCheck, ...]
    verdict: Verdict

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "family": self.family.value,
            "params": {"a": self.params.a, "b": self.params.b, "k": self.params.k},
            "rhs": self.rhs.to_json(),
            "reduced_poly": self.reduced_poly.to_text(),
            "shift_constants": {
                key: None if val is None else str(val) for key, val in self.shift_constants.items()
            },
            "hypothesis_checks": [h.to_json() for h in self.hypothesis_checks],
            "verdict": self.verdict.value,
        }


def in_theorem_range(theorem_id: int, k: int) -> bool:
    if theorem_id in (1, 4):
        return k >= 2 and k not in (3, 5)
    if theorem_id in (2, 3, 5, 6):
        return k >= 7
    raise ParameterError(f"unknown theorem {theorem_id}")


def shift_s(family: PowerSumFamily, params: ProgressionParams, nu: Fraction) -> Fraction:
    """The constant ``s`` with ``F(x) + nu`` proportional to ``Q(x + b/a) + s``.

    ``Q`` is ``B_{k+1}`` for ``S`` and ``E_k`` for the alternating families. For
    ``T-`` the proportionality constant is ``-a^k/2``, hence the sign flip.
    """
    a, k, r = params.a, params.k, params.ratio
    if family is PowerSumFamily.S:
        return -poly_eval(bernoulli_poly(k + 1), r) + (k + 1) * nu / a**k
    s = poly_eval(euler_poly(k), r) + 2 * nu / a**k
    return s if family is PowerSumFamily.T_PLUS else -s


def normalized_core(family: PowerSumFamily, params: ProgressionParams, s: Fraction) -> tuple[Fraction, Poly]:
    """``(scale, Q(x + b/a) + s)`` so that ``F(x) + nu == scale * core``."""
    a, k, r = params.a, params.k, params.ratio
    if family is PowerSumFamily.S:
        return Fraction(a**k, k + 1), bernoulli_poly(k + 1).compose_linear(1, r) + s
    scale = Fraction(a**k, 2)
    if family is PowerSumFamily.T_MINUS:
        scale = -scale
    return scale, euler_poly(k).compose_linear(1, r) + s


def _odd_check(p: Poly, lemma_id: int = 2) -> HypothesisCheck:
    rep = analyze_roots(p)
    return HypothesisCheck(
        lemma_id,
        "N = 2: at least three roots of odd multiplicity",
        rep.counts(),
        rep.odd_multiplicity_roots >= 3,
    )


def _certify(theorem_id, family, params, rhs, poly, shifts, checks) -> FinitenessCertificate:
    if not in_theorem_range(theorem_id, params.k):
        verdict = Verdict.OUT_OF_THEOREM_RANGE
    elif all(c.passed for c in checks):
        verdict = Verdict.CERTIFIED
    else:
        verdict = Verdict.HYPOTHESIS_VIOLATED
    return FinitenessCertificate(theorem_id, family, params, rhs, poly, shifts, tuple(checks), verdict)


def reduce_quadratic(family: PowerSumFamily, params: ProgressionParams, rhs: QuadraticRHS) -> FinitenessCertificate:
    """Certificate for ``F(x) = A y^2 + B y + C`` via ``F(x) + nu = A (y + mu)^2``."""
    theorem_id = QUADRATIC_THEOREM[family]
    mu, nu = rhs.mu, rhs.nu
    poly = family_poly(family, params) + nu
    s = shift_s(family, params, nu)
    checks: list[HypothesisCheck] = []
    if not poly.is_constant():
        _, core = normalized_core(family, params, s)
        checks.append(_odd_check(poly))
        rep = analyze_roots(core)
        if family is PowerSumFamily.S:
            checks.append(
                HypothesisCheck(
                    4,
                    f"B_{params.k + 1}(x) + s has at least three roots of odd multiplicity",
                    rep.counts(),
                    rep.odd_multiplicity_roots >= 3,
                )
            )
        else:
            checks.append(
                HypothesisCheck(
                    5,
                    f"E_{params.k}(x) + s has at least three simple zeros",
                    rep.counts(),
                    rep.simple_roots >= 3,
                )
            )
    return _certify(theorem_id, family, params, rhs, poly, {"mu": mu, "nu": nu, "s": s}, checks)


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def reduce_power(family: PowerSumFamily, params: ProgressionParams, rhs: PowerRHS) -> FinitenessCertificate:
    """Certificate for ``F(x) = c y^ell + d`` via ``F(x) - d = c y^ell``.

    Checks two distinct roots (bounds the exponent) and, for a given exponent,
    the multiplicity condition for each prime divisor of it.
    """
    theorem_id = POWER_THEOREM[family]
    nu = -rhs.d
    poly = family_poly(family, params) + nu
    s = shift_s(family, params, nu)
    checks: list[HypothesisCheck] = []
    if not poly.is_constant():
        primes = _prime_factors(rhs.ell) if rhs.ell is not None else []
        rep = analyze_roots(poly, primes=sorted(set(primes) | {2, 3}))
        checks.append(
            HypothesisCheck(1, "at least two distinct roots", rep.counts(), rep.distinct_roots >= 2)
        )
        for p in primes:
            if p == 2:
                checks.append(_odd_check(poly))
            else:
                checks.append(
                    HypothesisCheck(
                        2,
                        f"N = {p}: at least two roots of multiplicity coprime to {p}",
                        rep.counts(),
                        rep.coprime_counts[p] >= 2,
                    )
                )
    return _certify(theorem_id, family, params, rhs, poly, {"mu": None, "nu": nu, "s": s}, checks)


def certify(theorem_id: int, params: ProgressionParams, rhs: RHS) -> FinitenessCertificate:
    if theorem_id not in THEOREM_FAMILY:
        raise ParameterError(f"theorem must be 1..6, got {theorem_id}")
    family = THEOREM_FAMILY[theorem_id]
    if theorem_id <= 3:
        if not isinstance(rhs, QuadraticRHS):
            raise ParameterError(f"theorem {theorem_id} takes a quadratic right-hand side")
        return reduce_quadratic(family, params, rhs)
    if not isinstance(rhs, PowerRHS):
        raise ParameterError(f"theorem {theorem_id} takes a right-hand side c*y^l + d")
    return reduce_power(family, params, rhs)


# ---------------------------------------------------------------------------
# Contradiction probes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProbeReport:
    family: PowerSumFamily
    params: ProgressionParams
    d: Fraction
    derivative: Poly
    identity_holds: bool
    roots: tuple[tuple[Fraction, int], ...]
    multiple_factor: Optional[Poly]
    shifted_multiple_factor: Optional[Poly]
    max_multiplicity: int
    passed: bool

    @property
    def max_rational_multiplicity(self) -> int:
        return max((m for _, m in self.roots), default=0)

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "params": {"a": self.params.a, "b": self.params.b, "k": self.params.k},
            "d": str(self.d),
            "derivative": self.derivative.to_text(),
            "identity_holds": self.identity_holds,
            "rational_roots": [{"root": str(r), "multiplicity": m} for r, m in self.roots],
            "multiple_factor": None if self.multiple_factor is None else self.multiple_factor.to_text(),
            "shifted_multiple_factor": (
                None if self.shifted_multiple_factor is None else self.shifted_multiple_factor.to_text()
            ),
            "max_multiplicity": self.max_multiplicity,
            "verdict": "PASS" if self.passed else "FAIL",
        }


def _probe(family, params, d, expected, ok) -> ProbeReport:
    deriv = (family_poly(family, params) - d).derivative()
    rep = analyze_roots(deriv)
    roots = tuple(rational_roots(deriv))
    mf = rep.multiple_factor
    # Back to the coordinate t = x + b/a in which the classical polynomial lives.
    shifted = None if mf is None else mf.compose_linear(1, -params.ratio)
    identity = deriv == expected
    return ProbeReport(
        family, params, Fraction(d), deriv, identity, roots, mf, shifted, rep.max_multiplicity,
        identity and ok(roots, rep, shifted),
    )


def contradiction_probe_S(params: ProgressionParams, d) -> ProbeReport:
    """Show ``S(x) - d`` is not ``R (Ux + V)^(k+1)``.

    Its derivative ``a^k B_k(x + b/a)`` would need a rational root of
    multiplicity ``k``.
    """
    a, k = params.a, params.k
    if k < 2:
        raise HypothesisError("the S probe needs k >= 2")
    expected = bernoulli_poly(k).compose_linear(1, params.ratio) * a**k

    def ok(roots, rep, shifted):
        return all(m < k for _, m in roots)

    return _probe(PowerSumFamily.S, params, d, expected, ok)


def contradiction_probe_T(params: ProgressionParams, d, sign: PowerSumFamily) -> ProbeReport:
    """Derivative ``+/- (k a^k / 2) E_{k-1}(x + b/a)`` has no rational root of multiplicity >= 6.

    Also checks its only possible multiple factor is ``x^2 - x - 1`` (in the
    shifted coordinate), squared at most.
    """
    a, k = params.a, params.k
    if sign is PowerSumFamily.S:
        raise ParameterError("the T probe takes T_PLUS or T_MINUS")
    if k < 7:
        raise HypothesisError("the T probe needs k >= 7")
    expected = euler_poly(k - 1).compose_linear(1, params.ratio) * Fraction(k * a**k, 2)
    if sign is PowerSumFamily.T_MINUS:
        expected = -expected

    def ok(roots, rep, shifted):
        return (
            all(m < 6 for _, m in roots)
            and rep.max_multiplicity <= 2
            and (shifted is None or shifted == GOLDEN_QUADRATIC)
        )

    return _probe(sign, params, d, expected, ok)

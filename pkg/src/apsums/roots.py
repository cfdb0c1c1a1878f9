"""Root-multiplicity analytics and desk-scale checks of the Bernoulli/Euler root lemmas.

All counts are over C and come from degree sums in the squarefree
decomposition, so nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .classical import bernoulli_poly, euler_poly
from .errors import DomainError, HypothesisError
from .poly import Poly, poly_eval, poly_gcd, rational_roots, squarefree_decompose

DEFAULT_PRIMES = (2, 3, 5, 7)
PROBE_POINTS = (Fraction(0), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2))
BASE_SHIFTS = (
    Fraction(0),
    Fraction(1, 2),
    Fraction(-1, 2),
    Fraction(1),
    Fraction(-1),
    Fraction(1, 3),
    Fraction(-1, 3),
)
GOLDEN_QUADRATIC = Poly((-1, -1, 1))  # x^2 - x - 1

PASS = "PASS"
FAIL = "FAIL"


@dataclass(frozen=True)
class RootStructureReport:
    distinct_roots: int
    odd_multiplicity_roots: int
    simple_roots: int
    coprime_counts: dict[int, int]
    multiple_factor: Optional[Poly]
    multiplicities: dict[int, int] = field(default_factory=dict)

    @property
    def max_multiplicity(self) -> int:
        return max(self.multiplicities, default=0)

    def counts(self) -> dict:
        return {
            "distinct": self.distinct_roots,
            "odd": self.odd_multiplicity_roots,
            "simple": self.simple_roots,
            "coprime": {str(p): c for p, c in sorted(self.coprime_counts.items())},
        }


def analyze_roots(p: Poly, primes: Iterable[int] = DEFAULT_PRIMES) -> RootStructureReport:
    if p.is_zero() or p.is_constant():
        raise DomainError("root structure needs a polynomial of degree >= 1")
    dec = squarefree_decompose(p)
    by_mult = dec.degree_by_multiplicity()
    distinct = sum(by_mult.values())
    odd = sum(d for m, d in by_mult.items() if m % 2)
    simple = by_mult.get(1, 0)
    coprime = {ell: sum(d for m, d in by_mult.items() if gcd(m, ell) == 1) for ell in primes}
    mf = poly_gcd(p, p.derivative())
    return RootStructureReport(
        distinct_roots=distinct,
        odd_multiplicity_roots=odd,
        simple_roots=simple,
        coprime_counts=coprime,
        multiple_factor=None if mf.is_constant() else mf,
        multiplicities=by_mult,
    )


@dataclass(frozen=True)
class LemmaRecord:
    """One row of a lemma sweep."""

    lemma: int
    k: int
    verdict: str
    counts: dict
    s: Optional[Fraction] = None
    multiple_factor: Optional[Poly] = None

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> dict:
        out = {"lemma": self.lemma, "k": self.k}
        if self.s is not None:
            out["s"] = str(self.s)
        out["counts"] = self.counts
        out["verdict"] = self.verdict
        if self.multiple_factor is not None:
            out["multiple_factor"] = self.multiple_factor.to_text()
        return out


def as_poly_in_x2_minus_x(m: Poly) -> Optional[Poly]:
    """Return ``h`` with ``m(x) == h(x^2 - x)``, or None if no such ``h`` exists."""
    base = Poly((0, -1, 1))
    digits = []
    rest = m
    while not rest.is_zero():
        rest, r = divmod(rest, base)
        if not r.is_constant():
            return None
        digits.append(r[0])
    return Poly(digits)


def admissible_bernoulli_factor(m: Poly) -> bool:
    # m must be a product of quadratics x^2 - x - beta, beta odd positive integer.
    if m.degree % 2:
        return False
    h = as_poly_in_x2_minus_x(m)
    if h is None:
        return False
    roots = rational_roots(h)
    if sum(mult for _, mult in roots) != h.degree:
        return False
    return all(r.denominator == 1 and r > 0 and r.numerator % 2 == 1 for r, _ in roots)


def _gcd_record(lemma: int, k: int, p: Poly, admissible) -> LemmaRecord:
    rep = analyze_roots(p)
    m = rep.multiple_factor
    if m is None:
        ok = True
    else:
        ok = admissible(k, m) and rep.max_multiplicity <= 2
    return LemmaRecord(lemma, k, PASS if ok else FAIL, rep.counts(), multiple_factor=m)


def check_lemma3(k_max: int) -> list[LemmaRecord]:
    """Multiple factors of B_k: none for odd k; only x^2 - x - beta (beta odd > 0) for even k."""
    if k_max < 1:
        raise HypothesisError("k_max must be >= 1")

    def admissible(k, m):
        return k % 2 == 0 and admissible_bernoulli_factor(m)

    return [_gcd_record(3, k, bernoulli_poly(k), admissible) for k in range(1, k_max + 1)]


def check_lemma6(k_max: int) -> list[LemmaRecord]:
    """Multiple factors of E_k: none for even k; only x^2 - x - 1 for odd k."""
    if k_max < 1:
        raise HypothesisError("k_max must be >= 1")

    def admissible(k, m):
        return k % 2 == 1 and m == GOLDEN_QUADRATIC

    return [_gcd_record(6, k, euler_poly(k), admissible) for k in range(1, k_max + 1)]


def default_bernoulli_shifts(k: int) -> list[Fraction]:
    b = bernoulli_poly(k)
    return _dedupe(list(BASE_SHIFTS) + [-poly_eval(b, q) for q in PROBE_POINTS])


def default_euler_shifts(k: int) -> list[Fraction]:
    e = euler_poly(k)
    return _dedupe(list(BASE_SHIFTS) + [-poly_eval(e, q) for q in PROBE_POINTS])


def _dedupe(values: Sequence[Fraction]) -> list[Fraction]:
    return list(dict.fromkeys(Fraction(v) for v in values))


def check_lemma4(k: int, shifts: Optional[Iterable[Fraction]] = None) -> list[LemmaRecord]:
    """B_k(x) + s has at least three roots of odd multiplicity."""
    if k < 3 or k in (4, 6):
        raise HypothesisError(f"the odd-multiplicity lemma needs k >= 3, k not in {{4, 6}}; got k={k}")
    b = bernoulli_poly(k)
    rows = []
    for s in default_bernoulli_shifts(k) if shifts is None else _dedupe(list(shifts)):
        rep = analyze_roots(b + s)
        verdict = PASS if rep.odd_multiplicity_roots >= 3 else FAIL
        rows.append(LemmaRecord(4, k, verdict, rep.counts(), s=s, multiple_factor=rep.multiple_factor))
    return rows


def check_lemma5_rational(k: int, shifts: Optional[Iterable[Fraction]] = None) -> list[LemmaRecord]:
    """E_k(x) + z has at least three simple zeros, for rational z only."""
    if k < 7:
        raise HypothesisError(f"the simple-zero lemma needs k >= 7; got k={k}")
    e = euler_poly(k)
    rows = []
    for z in default_euler_shifts(k) if shifts is None else _dedupe(list(shifts)):
        rep = analyze_roots(e + z)
        verdict = PASS if rep.simple_roots >= 3 else FAIL
        rows.append(LemmaRecord(5, k, verdict, rep.counts(), s=z, multiple_factor=rep.multiple_factor))
    return rows

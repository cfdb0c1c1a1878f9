"""Dense univariate polynomials over the rationals.

Coefficients are stored low degree first as a tuple of ``Fraction``; index ``i``
holds the coefficient of ``x**i``. Instances are immutable and hashable.

The module also carries the exact algorithms the rest of the package leans on:
primitive-PRS gcd, Yun's squarefree decomposition and rational root finding.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DomainError, ParameterError

Rational = Fraction
Scalar = Union[int, Fraction]

#: Degree of the zero polynomial. Keeps ``deg(p*q) == deg(p) + deg(q)`` honest.
ZERO_DEGREE = -math.inf


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> Poly:
        return cls([0] * n + [c])

    @property
    def degree(self):
        """Degree as an int; ``ZERO_DEGREE`` (-inf) for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return Poly(res)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        res = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    res[i + j] += a * b
        return Poly(res)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative polynomial power")
        result, base = Poly.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, c: Scalar):
        c = Fraction(c)
        if c == 0:
            raise ZeroDivisionError("polynomial division by zero scalar")
        return Poly(a / c for a in self.coeffs)

    def __divmod__(self, other: Poly):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for shift in range(len(rem) - dq - 1, -1, -1):
            q = rem[shift + dq] / lc
            quot[shift] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[shift + j] -= q * c
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other: Poly):
        return divmod(self, other)[0]

    def __mod__(self, other: Poly):
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise DomainError(f"{other} does not divide {self}")
        return q

    # -- calculus and substitution ---------------------------------------

    def __call__(self, t: Scalar) -> Fraction:
        return poly_eval(self, t)

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose_linear(self, u: Scalar, v: Scalar) -> Poly:
        """Return ``self(u*x + v)``."""
        lin = Poly((v, u))
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        return self / self.coeffs[-1]

    # -- text form -------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form, e.g. ``x^3 - 3/2*x^2 + 1/2*x``."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> Poly:
        return parse_poly(text)


def _coerce(obj) -> Poly | None:
    if isinstance(obj, Poly):
        return obj
    if isinstance(obj, (int, Fraction)):
        return Poly.constant(obj)
    return None


_TERM = re.compile(
    r"""^(?:(?P<num>\d+)(?:/(?P<den>\d+))?)?   # coefficient
        (?P<star>\*)?
        (?:(?P<var>x)(?:\^(?P<exp>\d+))?)?$""",
    re.VERBOSE,
)


def parse_poly(text: str) -> Poly:
    """Parse the canonical text form produced by :meth:`Poly.to_text`."""
    s = "".join(text.split())
    if not s:
        raise ParameterError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"[+-][^+-]*", s)
    if "".join(pieces) != s:
        raise ParameterError(f"cannot parse polynomial {text!r}")
    terms: dict[int, Fraction] = {}
    for piece in pieces:
        sign, body = piece[0], piece[1:]
        m = _TERM.match(body)
        if not body or m is None or (m["star"] and not (m["num"] and m["var"])):
            raise ParameterError(f"cannot parse term {piece!r} in {text!r}")
        if m["num"] is None and m["var"] is None:
            raise ParameterError(f"cannot parse term {piece!r} in {text!r}")
        if m["den"] is not None and int(m["den"]) == 0:
            raise ParameterError(f"zero denominator in {text!r}")
        coef = Fraction(int(m["num"]), int(m["den"] or 1)) if m["num"] else Fraction(1)
        if m["num"] and m["var"] and not m["star"]:
            raise ParameterError(f"missing '*' in term {piece!r}")
        exp = 0 if m["var"] is None else int(m["exp"] or 1)
        terms[exp] = terms.get(exp, Fraction(0)) + (coef if sign == "+" else -coef)
    deg = max(terms)
    return Poly(terms.get(i, 0) for i in range(deg + 1))


# ---------------------------------------------------------------------------
# Plain functional API
# ---------------------------------------------------------------------------


def poly_eval(p: Poly, t: Scalar) -> Fraction:
    """Horner evaluation, exact."""
    t = Fraction(t)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


def poly_compose_linear(p: Poly, u: Scalar, v: Scalar) -> Poly:
    return p.compose_linear(u, v)


def primitive_int(p: Poly) -> tuple[Fraction, list[int]]:
    """Split ``p`` as ``scale * f`` with ``f`` a primitive integer polynomial.

    The leading coefficient of ``f`` is positive. Zero maps to ``(0, [])``.
    """
    if p.is_zero():
        return Fraction(0), []
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = math.gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), [c // g for c in ints]


def _int_primitive(f: list[int]) -> list[int]:
    g = math.gcd(*f)
    if f[-1] < 0:
        g = -g
    return [c // g for c in f]


def _int_prem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials (low degree first)."""
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while r and len(r) - 1 >= dg:
        lr = r[-1]
        shift = len(r) - 1 - dg
        r = [c * lg for c in r]
        for i, c in enumerate(g):
            r[i + shift] -= lr * c
        while r and r[-1] == 0:
            r.pop()
    return r


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q, computed on primitive integer parts."""
    if p.is_zero() and q.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    _, f = primitive_int(p)
    _, g = primitive_int(q)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _int_prem(f, g)
        f, g = g, (_int_primitive(r) if r else [])
    return Poly(f).monic()


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """``content * prod(factor**mult for factor, mult in parts)``.

    Factors are monic, squarefree and pairwise coprime; multiplicities
    strictly increase.
    """

    content: Fraction
    parts: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        acc = Poly.constant(self.content)
        for f, m in self.parts:
            acc = acc * f**m
        return acc

    @property
    def multiplicities(self) -> list[int]:
        return [m for _, m in self.parts]

    def degree_by_multiplicity(self) -> dict[int, int]:
        return {m: f.degree for f, m in self.parts}


def squarefree_decompose(p: Poly) -> SquarefreeDecomposition:
    """Yun's algorithm over Q."""
    if p.is_zero():
        raise DomainError("squarefree decomposition of the zero polynomial")
    content = p.leading
    f = p.monic()
    if f.is_constant():
        return SquarefreeDecomposition(content, ())
    fp = f.derivative()
    a0 = poly_gcd(f, fp)
    b = f.exact_div(a0)
    c = fp.exact_div(a0)
    d = c - b.derivative()
    parts = []
    i = 1
    while not b.is_constant():
        a = poly_gcd(b, d)
        if not a.is_constant():
            parts.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return SquarefreeDecomposition(content, tuple(parts))


# ---------------------------------------------------------------------------
# Rational roots
# ---------------------------------------------------------------------------


def _int_sign_at(f: list[int], t: Fraction) -> int:
    # sign of q^n * f(p/q), q > 0
    p, q = t.numerator, t.denominator
    acc = 0
    q_pow = 1
    for c in reversed(f):
        acc = acc * p + c * q_pow
        q_pow *= q
    return (acc > 0) - (acc < 0)


def _sturm_chain(f: Poly) -> list[list[int]]:
    # Positive rescaling keeps sign sequences intact, so store primitive integer forms.
    chain = [f, f.derivative()]
    while not chain[-1].is_constant():
        r = -(chain[-2] % chain[-1])
        if r.is_zero():
            break
        chain.append(r / abs(r.leading))
    out = []
    for g in chain:
        scale, ints = primitive_int(g)
        out.append(ints if scale > 0 else [-c for c in ints])
    return out


def _variations(chain: list[list[int]], t: Fraction) -> int:
    signs = [s for s in (_int_sign_at(g, t) for g in chain) if s != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _real_root_intervals(f: Poly) -> list[tuple[Fraction, Fraction]]:
    """Intervals ``(lo, hi]``, each holding exactly one real root of squarefree ``f``."""
    lead = abs(f.leading)
    bound = 1 + max(abs(c) for c in f.coeffs[:-1]) / lead
    chain = _sturm_chain(f)
    out = []
    stack = [(-bound, bound, _variations(chain, -bound), _variations(chain, bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = _variations(chain, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    out.sort()
    return out


def _rational_roots_squarefree(f: Poly) -> list[Fraction]:
    if f.degree == 1:
        return [-f[0] / f[1]]
    if f.degree == 2:
        a, b, c = f[2], f[1], f[0]
        disc = b * b - 4 * a * c
        if disc < 0:
            return []
        rn, rd = math.isqrt(disc.numerator), math.isqrt(disc.denominator)
        if rn * rn != disc.numerator or rd * rd != disc.denominator:
            return []
        r = Fraction(rn, rd)
        return sorted({(-b - r) / (2 * a), (-b + r) / (2 * a)})
    _, ints = primitive_int(f)
    an = ints[-1]
    fd = f.derivative()
    # Two fractions with denominators <= an are >= 1/an^2 apart.
    target = Fraction(1, 2 * an * an)
    roots = []
    for lo, hi in _real_root_intervals(f):
        if poly_eval(f, hi) == 0:
            roots.append(hi)
            continue
        s_lo = _int_sign_at(ints, lo)
        if s_lo == 0:
            # lo is a root of the neighbouring interval; sign just right of a
            # simple root is the sign of the derivative there.
            dv = poly_eval(fd, lo)
            s_lo = (dv > 0) - (dv < 0)
        found = None
        while hi - lo >= target:
            mid = (lo + hi) / 2
            s_mid = _int_sign_at(ints, mid)
            if s_mid == 0:
                found = mid
                break
            if s_mid == s_lo:
                lo = mid
            else:
                hi = mid
        if found is None:
            cand = ((lo + hi) / 2).limit_denominator(an)
            if lo < cand <= hi and poly_eval(f, cand) == 0:
                found = cand
        if found is not None:
            roots.append(found)
    return roots


def rational_roots(p: Poly) -> list[tuple[Fraction, int]]:
    """All rational roots of ``p`` with exact multiplicities, ascending."""
    if p.is_zero():
        raise DomainError("rational roots of the zero polynomial")
    out = []
    for f, m in squarefree_decompose(p).parts:
        out.extend((r, m) for r in _rational_roots_squarefree(f))
    out.sort()
    return out


def poly_height(p: Poly) -> int:
    """Naive height of the primitive integer form of ``p``."""
    if p.is_zero():
        return 0
    _, ints = primitive_int(p)
    return max(abs(c) for c in ints)


def rational_height(r: Scalar) -> int:
    """``max(|u|, |v|)`` for ``r = u/v`` in lowest terms."""
    r = Fraction(r)
    return max(abs(r.numerator), r.denominator)

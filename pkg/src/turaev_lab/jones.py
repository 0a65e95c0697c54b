"""Jones polynomial from the bracket, plus span, extreme coefficients and defect.

``V(t) = (-A)^{-3w} <D>`` evaluated at ``A = t^{-1/4}``.  The result is stored
with exponent unit 1/2, so a knot has even stored exponents and a link with
an even number of components has odd ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LaurentPoly
from .bracket import DEFAULT_BUDGET, bracket
from .diagram import Diagram


@dataclass(frozen=True)
class JonesReport:
    polynomial: LaurentPoly
    max_deg: Fraction
    min_deg: Fraction
    span: Fraction
    a_M: int
    a_m: int

    def to_dict(self) -> dict:
        return {
            "polynomial": self.polynomial.to_text(),
            "terms": self.polynomial.to_json(),
            "max_deg": str(self.max_deg),
            "min_deg": str(self.min_deg),
            "span": str(self.span),
            "a_m": self.a_m,
            "a_M": self.a_M,
        }


def bracket_to_jones(br: LaurentPoly, w: int) -> LaurentPoly:
    """Writhe-normalize a bracket and substitute ``A = t^{-1/4}``."""
    factor = LaurentPoly({-3 * w: -1 if w % 2 else 1})
    normalized = br * factor
    terms = {}
    for e, c in normalized.terms.items():
        if e % 2:
            raise ValueError("bracket exponents have inconsistent parity for this writhe")
        # A^e = t^(-e/4), stored in half units as -e/2
        terms[-e // 2] = c
    return LaurentPoly(terms, var="t", denom=2)


def jones_polynomial(d: Diagram, budget: int = DEFAULT_BUDGET) -> LaurentPoly:
    return bracket_to_jones(bracket(d, budget), d.writhe)


def report_from_polynomial(v: LaurentPoly) -> JonesReport:
    lo, hi, lead, trail = v.degree_stats()
    return JonesReport(v, hi, lo, hi - lo, lead, trail)


def jones(d: Diagram, budget: int = DEFAULT_BUDGET) -> JonesReport:
    return report_from_polynomial(jones_polynomial(d, budget))


def in_strict_regime(r: int, s: int, t: int, u: int, v: int) -> bool:
    return r == s and u == v and t >= max(r + 2, u + 2)


def extreme_degrees(params) -> tuple[Fraction, Fraction]:
    """Predicted (max, min) Jones degree of the five-region family.

    Only valid when ``r = s``, ``u = v`` and ``t >= max(r, u) + 2``.
    """
    r, s, t, u, v = _unpack(params)
    if not in_strict_regime(r, s, t, u, v):
        raise ValueError(f"closed-form degrees need r=s, u=v and t >= max(r,u)+2; got {(r, s, t, u, v)}")
    hi = Fraction(-(4 * r - 6 * t - 2 * u + 2), 4)
    lo = Fraction(-(8 * r - 2 * t + 2 * u + 2), 4)
    return hi, lo


def defect(c: int, g: int, span) -> Fraction:
    """``c - g - span``: zero exactly when the span bound is attained."""
    return Fraction(c) - Fraction(g) - Fraction(span)


def _unpack(params) -> tuple[int, int, int, int, int]:
    if hasattr(params, "as_tuple"):
        return params.as_tuple()
    r, s, t, u, v = params
    return int(r), int(s), int(t), int(u), int(v)

"""Sparse Laurent polynomials with exact integer coefficients.

Two classes are provided:

* :class:`LaurentPoly` -- one variable.  Exponents are stored as integers in
  units of ``1/denom``; the Kauffman bracket lives in ``A`` with ``denom=1``
  while the Jones polynomial lives in ``t`` with ``denom=2`` so that half
  integer powers of ``t`` are stored as odd integers.
* :class:`LaurentPoly2` -- two variables, used for the Kauffman polynomial in
  ``a`` and ``z``.

Both are immutable; arithmetic returns new objects and zero coefficients are
never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class UnitMismatch(ValueError):
    """Raised when combining polynomials with different exponent units or variables."""


def _prune(terms: Mapping) -> dict:
    return {k: v for k, v in terms.items() if v != 0}


def _fmt_exp(exp: Fraction) -> str:
    if exp.denominator == 1:
        n = exp.numerator
        return str(n) if n >= 0 else f"({n})"
    return f"({exp.numerator}/{exp.denominator})"


def _join_terms(pieces: list[tuple[int, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for i, (coeff, mono) in enumerate(pieces):
        mag = abs(coeff)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        if i == 0:
            out.append(body if coeff > 0 else f"-{body}")
        else:
            out.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(out)


class LaurentPoly:
    """Element of Z[x, x^-1] (or Z[x^(1/denom), x^(-1/denom)]).

    ``terms`` maps the stored integer exponent to its coefficient; the actual
    exponent is ``stored / denom``.
    """

    __slots__ = ("_terms", "var", "denom", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "A", denom: int = 1):
        if denom < 1:
            raise ValueError("denom must be positive")
        self._terms = _prune(dict(terms or {}))
        self.var = var
        self.denom = denom
        self._hash = None

    # constructors
    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "A", denom: int = 1) -> "LaurentPoly":
        return cls({exp: coeff}, var, denom)

    @classmethod
    def constant(cls, c: int, var: str = "A", denom: int = 1) -> "LaurentPoly":
        return cls({0: c}, var, denom)

    def like(self, terms: Mapping[int, int]) -> "LaurentPoly":
        return LaurentPoly(terms, self.var, self.denom)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def _check(self, other: "LaurentPoly") -> None:
        if self.var != other.var or self.denom != other.denom:
            raise UnitMismatch(
                f"cannot combine polynomials in {self.var}^(1/{self.denom}) and "
                f"{other.var}^(1/{other.denom})"
            )

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return self.like({0: other})
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return self.like(out)

    __radd__ = __add__

    def __neg__(self):
        return self.like({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return self.like(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("monomial coefficient must be a unit to invert")
            return self.like({e * n: c ** (-n)})
        result = self.like({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``x^(k/denom)``."""
        return self.like({e + k: c for e, c in self._terms.items()})

    def substitute_power(self, factor: int, var: str | None = None, denom: int | None = None) -> "LaurentPoly":
        """Replace each stored exponent ``e`` by ``factor * e`` (optionally relabelling the variable)."""
        return LaurentPoly(
            {e * factor: c for e, c in self._terms.items()},
            var if var is not None else self.var,
            denom if denom is not None else self.denom,
        )

    def mirror(self) -> "LaurentPoly":
        return self.substitute_power(-1)

    # comparisons
    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.var, self.denom, self._terms) == (other.var, other.denom, other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var, self.denom, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def coeff(self, exp) -> int:
        """Coefficient of ``x^exp`` where ``exp`` is the true (possibly fractional) exponent."""
        stored = Fraction(exp) * self.denom
        if stored.denominator != 1:
            return 0
        return self._terms.get(int(stored), 0)

    # degree queries
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def degree_stats(self) -> tuple[Fraction, Fraction, int, int]:
        """Return ``(min_degree, max_degree, leading_coeff, trailing_coeff)``.

        Degrees are true exponents (``Fraction``); the leading coefficient
        belongs to the maximal exponent.
        """
        lo, hi = self.min_exp(), self.max_exp()
        return (
            Fraction(lo, self.denom),
            Fraction(hi, self.denom),
            self._terms[hi],
            self._terms[lo],
        )

    def span(self) -> Fraction:
        lo, hi, _, _ = self.degree_stats()
        return hi - lo

    def items(self) -> list[tuple[Fraction, int]]:
        """Terms as ``(exponent, coeff)`` sorted by descending exponent."""
        return [(Fraction(e, self.denom), self._terms[e]) for e in sorted(self._terms, reverse=True)]

    # rendering
    def to_text(self) -> str:
        pieces = []
        for exp, c in self.items():
            if exp == 0:
                mono = ""
            elif exp == 1:
                mono = self.var
            else:
                mono = f"{self.var}^{_fmt_exp(exp)}"
            pieces.append((c, mono))
        return _join_terms(pieces)

    def to_json(self) -> list[list[int]]:
        return [[exp.numerator, exp.denominator, c] for exp, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable, var: str = "A", denom: int = 1) -> "LaurentPoly":
        terms: dict[int, int] = {}
        for num, den, c in data:
            stored = Fraction(num, den) * denom
            if stored.denominator != 1:
                raise UnitMismatch(f"exponent {num}/{den} not representable with denom {denom}")
            terms[int(stored)] = terms.get(int(stored), 0) + c
        return cls(terms, var, denom)

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"

    __str__ = to_text


class LaurentPoly2:
    """Element of Z[a^±1, z^±1]; keys are ``(a_exp, z_exp)``."""

    __slots__ = ("_terms", "vars", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None, vars: tuple[str, str] = ("a", "z")):
        self._terms = _prune(dict(terms or {}))
        self.vars = tuple(vars)
        self._hash = None

    @classmethod
    def monomial(cls, a_exp: int = 0, z_exp: int = 0, coeff: int = 1) -> "LaurentPoly2":
        return cls({(a_exp, z_exp): coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly2):
            if other.vars != self.vars:
                raise UnitMismatch(f"variables {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return LaurentPoly2({(0, 0): other}, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self._terms.items()}, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (a1, z1), c1 in self._terms.items():
            for (a2, z2), c2 in other._terms.items():
                k = (a1 + a2, z1 + z2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPoly2({(0, 0): 1}, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, da: int = 0, dz: int = 0) -> "LaurentPoly2":
        """Multiply by the monomial ``a^da z^dz``."""
        return LaurentPoly2({(a + da, z + dz): c for (a, z), c in self._terms.items()}, self.vars)

    def invert_a(self) -> "LaurentPoly2":
        """Substitute ``a -> a^-1``."""
        return LaurentPoly2({(-a, z): c for (a, z), c in self._terms.items()}, self.vars)

    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, a_exp: int, z_exp: int) -> int:
        return self._terms.get((a_exp, z_exp), 0)

    def z_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no z-degree")
        return max(z for _, z in self._terms)

    def z_min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no z-degree")
        return min(z for _, z in self._terms)

    def a_spread(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no a-degree")
        exps = [a for a, _ in self._terms]
        return min(exps), max(exps)

    def z_coefficient(self, z_exp: int) -> LaurentPoly:
        """The coefficient of ``z^z_exp`` as a Laurent polynomial in ``a``."""
        return LaurentPoly({a: c for (a, z), c in self._terms.items() if z == z_exp}, self.vars[0], 1)

    def items(self) -> list[tuple[tuple[int, int], int]]:
        keys = sorted(self._terms, key=lambda k: (-k[1], -k[0]))
        return [(k, self._terms[k]) for k in keys]

    def to_text(self) -> str:
        av, zv = self.vars
        pieces = []
        for (a, z), c in self.items():
            parts = []
            for var, e in ((av, a), (zv, z)):
                if e == 1:
                    parts.append(var)
                elif e:
                    parts.append(f"{var}^{_fmt_exp(Fraction(e))}")
            pieces.append((c, "*".join(parts)))
        return _join_terms(pieces)

    def to_json(self) -> list[list[int]]:
        return [[a, z, c] for (a, z), c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable) -> "LaurentPoly2":
        terms: dict[tuple[int, int], int] = {}
        for a, z, c in data:
            terms[(a, z)] = terms.get((a, z), 0) + c
        return cls(terms)

    def __repr__(self):
        return f"LaurentPoly2({self.to_text()!r})"

    __str__ = to_text


def degree_stats(p: LaurentPoly) -> tuple[Fraction, Fraction, int, int]:
    return p.degree_stats()


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


mul2 = mul

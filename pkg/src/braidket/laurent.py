"""Exact Laurent-polynomial arithmetic in the variable A over the Gaussian integers.

All symbolic computation in this package takes values in Z[i][A, A^-1].
Coefficients are Gaussian integers because the elementary cup/cap matrix has
entries iA and -iA^-1; closed-diagram evaluations must come out with zero
imaginary part, which downstream code checks explicitly.

Canonical text form: terms in strictly descending exponent order, coefficient
1 elided unless the exponent is 0, ``A^0`` rendered as a bare integer, and
properly complex coefficients rendered ``(x+yi)``.  Example::

    -A^5 - A^-3 + A^-7

JSON form: a list of ``[exponent, re, im]`` triples in descending exponent
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

from .errors import ExactDivisionError


@dataclass(frozen=True, slots=True)
class GaussianInt:
    """A Gaussian integer re + im*i with arbitrary-precision parts."""

    re: int
    im: int = 0

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other: Union["GaussianInt", int]) -> "GaussianInt":
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def divexact(self, other: "GaussianInt") -> "GaussianInt":
        """Exact quotient self/other; raises if other does not divide self."""
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by Gaussian zero")
        re_num = self.re * other.re + self.im * other.im
        im_num = self.im * other.re - self.re * other.im
        if re_num % norm or im_num % norm:
            raise ExactDivisionError(f"{self} not divisible by {other}")
        return GaussianInt(re_num // norm, im_num // norm)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __str__(self) -> str:
        sign = "+" if self.im >= 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


_G_ZERO = GaussianInt(0, 0)
_G_ONE = GaussianInt(1, 0)

Coeff = Union[GaussianInt, int]


def _coerce(c: Coeff) -> GaussianInt:
    return GaussianInt(c, 0) if isinstance(c, int) else c


class LaurentPoly:
    """Canonical Laurent polynomial: a map exponent -> nonzero GaussianInt."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        canonical: dict[int, GaussianInt] = {}
        if terms:
            for exp, coeff in terms.items():
                g = _coerce(coeff)
                if g:
                    canonical[exp] = g
        self._terms = canonical

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: Coeff = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    # -- inspection ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_real(self) -> bool:
        """True when every coefficient has zero imaginary part."""
        return all(c.im == 0 for c in self._terms.values())

    def coefficient(self, exp: int) -> GaussianInt:
        return self._terms.get(exp, _G_ZERO)

    def terms(self) -> list[tuple[int, GaussianInt]]:
        """Terms in descending exponent order."""
        return sorted(self._terms.items(), key=lambda t: -t[0])

    def __iter__(self) -> Iterator[tuple[int, GaussianInt]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    # -- ring operations -----------------------------------------------

    def __add__(self, other: Union["LaurentPoly", Coeff]) -> "LaurentPoly":
        other = _as_poly(other)
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            s = out.get(exp, _G_ZERO) + coeff
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union["LaurentPoly", Coeff]) -> "LaurentPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: Coeff) -> "LaurentPoly":
        return _as_poly(other) + (-self)

    def __mul__(self, other: Union["LaurentPoly", Coeff]) -> "LaurentPoly":
        other = _as_poly(other)
        out: dict[int, GaussianInt] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, _G_ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not defined for general polynomials")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divexact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self/divisor in the Laurent ring.

        Raises ExactDivisionError when the division leaves a remainder.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly.zero()
        lead_exp = divisor.max_exponent()
        lead = divisor.coefficient(lead_exp)
        min_quot = self.min_exponent() - divisor.min_exponent()
        rem = dict(self._terms)
        quot: dict[int, GaussianInt] = {}
        while rem:
            top = max(rem)
            t_exp = top - lead_exp
            if t_exp < min_quot:
                raise ExactDivisionError("Laurent division left a remainder")
            t_coeff = rem[top].divexact(lead)
            quot[t_exp] = t_coeff
            for e, c in divisor._terms.items():
                e2 = e + t_exp
                s = rem.get(e2, _G_ZERO) - t_coeff * c
                if s:
                    rem[e2] = s
                else:
                    rem.pop(e2, None)
        return LaurentPoly(quot)

    def invert_variable(self) -> "LaurentPoly":
        """Substitute A -> A^-1 (negate every exponent)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    # -- evaluation ------------------------------------------------------

    def evaluate(self, a: complex) -> complex:
        """Numeric value at A = a (a != 0; negative exponents occur)."""
        if a == 0:
            raise ValueError("cannot evaluate at A = 0: negative exponents")
        return sum((complex(c) * a**e for e, c in self._terms.items()), 0j)

    # -- equality / rendering -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exp, coeff in self.terms():
            if coeff.im == 0:
                sign = "-" if coeff.re < 0 else "+"
                mag = abs(coeff.re)
                if exp == 0:
                    body = str(mag)
                elif mag == 1:
                    body = f"A^{exp}"
                else:
                    body = f"{mag}*A^{exp}"
            else:
                sign = "+"
                body = str(coeff) if exp == 0 else f"{coeff}*A^{exp}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def to_json(self) -> list[list[int]]:
        return [[e, c.re, c.im] for e, c in self.terms()]


def _as_poly(value: Union[LaurentPoly, Coeff]) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly({0: value})


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
A = LaurentPoly.monomial(1)
A_INV = LaurentPoly.monomial(-1)
#: Loop value of a closed curve: delta = -A^2 - A^-2.
DELTA = LaurentPoly({2: -1, -2: -1})


class QuarterLaurent:
    """Polynomial in t^(1/4); integer keys count quarter powers of t.

    The Jones variable t enters through the substitution A = t^(-1/4), so a
    term c*A^e becomes c*t^(-e/4), stored under the integer key -e.  Rendered
    in ascending t-order, with whole powers written ``t^k`` (``t`` for k=1)
    and fractional ones ``t^(p/q)``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        canonical: dict[int, GaussianInt] = {}
        if terms:
            for quarters, coeff in terms.items():
                g = _coerce(coeff)
                if g:
                    canonical[quarters] = g
        self._terms = canonical

    def terms(self) -> list[tuple[int, GaussianInt]]:
        """Terms in ascending t-exponent order."""
        return sorted(self._terms.items())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def evaluate(self, t: complex) -> complex:
        """Numeric value using the principal branch of t^(1/4)."""
        if t == 0:
            raise ValueError("cannot evaluate at t = 0")
        quarter = complex(t) ** 0.25
        return sum((complex(c) * quarter**k for k, c in self._terms.items()), 0j)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuarterLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for quarters, coeff in self.terms():
            if coeff.im == 0:
                sign = "-" if coeff.re < 0 else "+"
                mag = abs(coeff.re)
                coeff_text = "" if mag == 1 else f"{mag}*"
            else:
                sign = "+"
                coeff_text = f"{coeff}*"
            if quarters == 0:
                body = str(abs(coeff.re)) if coeff.im == 0 else str(coeff)
            else:
                if quarters % 4 == 0:
                    k = quarters // 4
                    var = "t" if k == 1 else f"t^{k}"
                else:
                    var = f"t^({Fraction(quarters, 4)})"
                body = f"{coeff_text}{var}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"QuarterLaurent({self})"

    def to_json(self) -> list[list[int]]:
        return [[q, c.re, c.im] for q, c in self.terms()]


def to_jones_variable(f: LaurentPoly) -> QuarterLaurent:
    """Rewrite a normalized invariant f(A) in the Jones variable t = A^-4.

    Termwise exponent map c*A^e -> c*t^(-e/4), kept exact by storing quarter
    powers of t.
    """
    return QuarterLaurent({-e: c for e, c in f.terms()})

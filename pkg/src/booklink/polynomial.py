"""Exact one-variable Laurent polynomials with integer coefficients.

Jones polynomials are stored with exponents in quarter units: the stored
exponent ``e`` stands for ``t**(e/4)``.  Since ``t = A**-4`` this is simply the
negated ``A`` exponent, which is how :func:`bracket_to_jones` gets away with
no rational arithmetic at all.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPolynomial:
    """Immutable map exponent -> nonzero integer coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be int")
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPolynomial:
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            if abs(c) != 1:
                raise ValueError("coefficient is not a unit")
            return LaurentPolynomial({e * k: c**k})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by the monomial ``x**k``."""
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def invert_variable(self) -> LaurentPolynomial:
        """Substitute ``x -> x**-1``."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def scale_exponents(self, k: int) -> LaurentPolynomial:
        return LaurentPolynomial({e * k: c for e, c in self._terms.items()})

    def evaluate(self, x):
        return sum(c * x**e for e, c in self._terms.items())

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPolynomial({self._terms!r})"

    def __str__(self):
        return format_polynomial(self, "x")


def _coerce(value):
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, int):
        return LaurentPolynomial.constant(value)
    return NotImplemented


ONE = LaurentPolynomial.constant(1)
ZERO = LaurentPolynomial()

#: the Kauffman loop value -A^2 - A^-2
DELTA = LaurentPolynomial({2: -1, -2: -1})


def bracket_to_jones(bracket: LaurentPolynomial, writhe: int) -> LaurentPolynomial:
    """Jones polynomial (quarter-unit t exponents) from a bracket in A.

    V = (-A)^(-3w) <D>, t = A^-4, so an A exponent k becomes t^(-k/4), i.e.
    stored exponent -k.
    """
    sign = -1 if writhe % 2 else 1
    normalized = bracket.shift(-3 * writhe)
    return LaurentPolynomial({-e: sign * c for e, c in normalized.items()})


# -- text forms ----------------------------------------------------------------

def format_polynomial(p: LaurentPolynomial, var: str = "t", unit: int = 1) -> str:
    """Render in KnotInfo's style, e.g. ``t^(-2)-t^(-1)+ 1-t+ t^2``.

    ``unit`` is the number of stored exponent steps per whole power (4 for
    quarter-unit Jones values).
    """
    if p.is_zero():
        return "0"
    parts = []
    for i, (e, c) in enumerate(p.items()):
        exp = Fraction(e, unit)
        if exp == 0:
            body = str(abs(c))
        else:
            if exp == 1:
                mono = var
            elif exp.denominator == 1 and exp > 0:
                mono = f"{var}^{exp.numerator}"
            else:
                mono = f"{var}^({exp})"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+ ") + body)
    return "".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+)\s*\*?\s*)?
        (?:(?P<var>[a-zA-Z])(?:\s*\^\s*(?:\((?P<pexp>[-+]?\d+(?:/\d+)?)\)|(?P<exp>[-+]?\d+)))?)?
        \s*""",
    re.VERBOSE,
)


def parse_polynomial(text: str, unit: int = 1) -> LaurentPolynomial:
    """Parse KnotInfo-style text such as ``t^(-2)-t^(-1)+ 1-t+ t^2``.

    Exponents may be fractions; they are multiplied by ``unit`` and must come
    out integral.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    terms: dict[int, int] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        coef = int(m.group("coef") or 1)
        if m.group("sign") == "-":
            coef = -coef
        if m.group("var") is None:
            exp = Fraction(0)
        else:
            raw = m.group("pexp") or m.group("exp")
            exp = Fraction(raw) if raw is not None else Fraction(1)
        scaled = exp * unit
        if scaled.denominator != 1:
            raise ValueError(f"exponent {exp} is not a multiple of 1/{unit}")
        e = int(scaled)
        terms[e] = terms.get(e, 0) + coef
        pos = m.end()
    return LaurentPolynomial(terms)


def format_pairs(p: LaurentPolynomial) -> str:
    """``e:c`` pairs separated by semicolons (the knots.csv jones column)."""
    return ";".join(f"{e}:{c}" for e, c in p.items())


def parse_pairs(text: str) -> LaurentPolynomial:
    terms = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        e, sep, c = chunk.partition(":")
        if not sep:
            raise ValueError(f"bad exponent:coefficient pair {chunk!r}")
        terms.append((int(e), int(c)))
    return LaurentPolynomial(terms)

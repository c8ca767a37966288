"""Exact Laurent polynomials in v, w, d, dp with rational coefficients.

``v`` is the Hecke parameter (``[2] = v + v^-1``), ``w`` its independent
twin for the second parameter, ``d`` and ``dp`` the loop weights of the
blob algebra.  Every value is immutable and kept in canonical form: terms
sorted by exponent vector, no zero coefficients, fractions in lowest terms.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

VARIABLES = ("v", "w", "d", "dp")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_ZERO_EXP = (0, 0, 0, 0)

Exponents = tuple[int, int, int, int]
Coercible = Union["Scalar", int, Fraction]


class Scalar:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, Rational] | Iterable[tuple[Exponents, Rational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponents, Fraction] = {}
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(VARIABLES):
                raise ValueError(f"exponent vector must have length {len(VARIABLES)}")
            acc[exps] = acc.get(exps, Fraction(0)) + Fraction(coeff)
        self._terms: tuple[tuple[Exponents, Fraction], ...] = tuple(
            sorted((e, c) for e, c in acc.items() if c != 0)
        )
        self._hash = hash(self._terms)

    # constructors -------------------------------------------------------
    @classmethod
    def const(cls, value: int | Fraction) -> Scalar:
        return cls({_ZERO_EXP: value})

    @classmethod
    def var(cls, name: str, power: int = 1) -> Scalar:
        exps = [0, 0, 0, 0]
        exps[_INDEX[name]] = power
        return cls({tuple(exps): 1})

    @classmethod
    def coerce(cls, value: Coercible) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"cannot interpret {value!r} as a Scalar")

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> tuple[tuple[Exponents, Fraction], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.const(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    # ring operations ----------------------------------------------------
    def __add__(self, other: Coercible) -> Scalar:
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar((e, -c) for e, c in self._terms)

    def __sub__(self, other: Coercible) -> Scalar:
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> Scalar:
        return Scalar.coerce(other) - self

    def __mul__(self, other: Coercible) -> Scalar:
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return Scalar(acc)

    __rmul__ = __mul__

    def __truediv__(self, other: int | Fraction | Scalar) -> Scalar:
        # Division only by units: nonzero rationals and monomials.
        other = Scalar.coerce(other)
        return self * other.inverse()

    def inverse(self) -> Scalar:
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not a unit of the Laurent ring")
        (exps, coeff), = self._terms
        return Scalar({tuple(-e for e in exps): 1 / coeff})

    def __pow__(self, k: int) -> Scalar:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Scalar.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute(self, bindings: Mapping[str, Coercible]) -> Scalar:
        """Simultaneously replace variables by Scalars.

        A variable occurring with a negative exponent can only be replaced
        by a unit (a single-term Scalar).
        """
        images = {_INDEX[name]: Scalar.coerce(img) for name, img in bindings.items()}
        total = Scalar()
        for exps, coeff in self._terms:
            kept = list(exps)
            term = Scalar.const(coeff)
            for idx, img in images.items():
                if exps[idx]:
                    term = term * img ** exps[idx]
                    kept[idx] = 0
            total = total + term * Scalar({tuple(kept): 1})
        return total

    # text and json ------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_term_text(e, c) for e, c in self._terms)

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"

    def to_json(self) -> list[dict]:
        out = []
        for exps, coeff in self._terms:
            pows = {VARIABLES[i]: e for i, e in enumerate(exps) if e}
            out.append({"num": coeff.numerator, "den": coeff.denominator, "pows": pows})
        return out

    @classmethod
    def from_json(cls, data: list[dict]) -> Scalar:
        terms = []
        for item in data:
            exps = [0, 0, 0, 0]
            for name, e in item["pows"].items():
                exps[_INDEX[name]] = int(e)
            terms.append((tuple(exps), Fraction(int(item["num"]), int(item["den"]))))
        return cls(terms)

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Inverse of ``str``; also accepts ``-`` signs and ``*`` between factors."""
        text = text.strip()
        if text == "0":
            return cls()
        total = cls()
        for chunk in re.split(r"\s+\+\s+", text):
            total = total + _parse_term(chunk)
        return total


def _term_text(exps: Exponents, coeff: Fraction) -> str:
    factors = []
    for name, e in zip(VARIABLES, exps):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    if not factors:
        return str(coeff)
    if coeff == 1:
        return " ".join(factors)
    if coeff == -1:
        return "-" + " ".join(factors)
    return f"{coeff} " + " ".join(factors)


_FACTOR = re.compile(r"^(v|w|dp|d)(?:\^(-?\d+))?$")


def _parse_term(chunk: str) -> Scalar:
    tokens = chunk.replace("*", " ").split()
    if not tokens:
        raise ValueError(f"empty term in {chunk!r}")
    coeff = Fraction(1)
    if tokens[0].startswith("-") and _FACTOR.match(tokens[0][1:]):
        coeff = Fraction(-1)
        tokens[0] = tokens[0][1:]
    elif not _FACTOR.match(tokens[0]):
        coeff = Fraction(tokens[0])
        tokens = tokens[1:]
    exps = [0, 0, 0, 0]
    for tok in tokens:
        m = _FACTOR.match(tok)
        if not m:
            raise ValueError(f"cannot parse factor {tok!r}")
        exps[_INDEX[m.group(1)]] += int(m.group(2) or 1)
    return Scalar({tuple(exps): coeff})


ZERO = Scalar()
ONE = Scalar.const(1)
v = Scalar.var("v")
w = Scalar.var("w")
d = Scalar.var("d")
dp = Scalar.var("dp")
QUANTUM_TWO = v + v ** -1

"""Exact sparse polynomials over the rationals in the channel variables p, kappa, mu.

A polynomial is a map from exponent triples (e_p, e_kappa, e_mu) to Fraction
coefficients.  Zero coefficients are never stored and fractions are always in
lowest terms (Fraction guarantees this), so two polynomials are equal exactly
when their term maps are equal.  Terms are kept in graded lexicographic order
on the exponent triple, which makes printing, hashing and JSON output
deterministic.

Python integers are arbitrary precision, so coefficient arithmetic can never
overflow or wrap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

VARIABLES = ("p", "kappa", "mu")

Exponent = tuple[int, int, int]
Coefficient = Union[int, Fraction]


class ReconstructionError(ValueError):
    """No rational with a small enough denominator lies within tolerance."""


def _grlex(exp: Exponent) -> tuple[int, Exponent]:
    return (exp[0] + exp[1] + exp[2], exp)


@dataclass(frozen=True)
class RationalPolynomial:
    """Immutable sparse polynomial in (p, kappa, mu) with Fraction coefficients.

    Values are safe to share between threads; every operation returns a new
    polynomial.  Use the module constants P, KAPPA, MU and ordinary arithmetic
    to build expressions, e.g. ``1 - 2*P**2 - P**3``.
    """

    _terms: tuple[tuple[Exponent, Fraction], ...]

    @staticmethod
    def from_terms(terms: Mapping[Exponent, Coefficient]) -> "RationalPolynomial":
        """Build a polynomial from an exponent->coefficient mapping."""
        cleaned: dict[Exponent, Fraction] = {}
        for exp, coeff in terms.items():
            if len(exp) != 3 or any(e < 0 or not isinstance(e, int) for e in exp):
                raise ValueError(f"bad exponent triple: {exp!r}")
            frac = Fraction(coeff)
            if frac != 0:
                cleaned[tuple(exp)] = frac  # type: ignore[index]
        ordered = tuple(sorted(cleaned.items(), key=lambda kv: _grlex(kv[0])))
        return RationalPolynomial(ordered)

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ------------------------------------------------------------------ ring ops

    def _coerce(self, other) -> "RationalPolynomial | None":
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return constant(other)
        return None

    def __add__(self, other) -> "RationalPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc = dict(self._terms)
        for exp, coeff in rhs._terms:
            acc[exp] = acc.get(exp, Fraction(0)) + coeff
        return RationalPolynomial.from_terms(acc)

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple((exp, -c) for exp, c in self._terms))

    def __sub__(self, other) -> "RationalPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> "RationalPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other) -> "RationalPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc: dict[Exponent, Fraction] = {}
        for (e1, c1) in self._terms:
            for (e2, c2) in rhs._terms:
                exp = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                acc[exp] = acc.get(exp, Fraction(0)) + c1 * c2
        return RationalPolynomial.from_terms(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RationalPolynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    # ------------------------------------------------------------ evaluation

    def evaluate(self, p: float = 0.0, kappa: float = 1.0, mu: float = 0.0) -> float:
        """Numeric value at a point, summed in canonical term order."""
        total = 0.0
        for (ep, ek, em), coeff in self._terms:
            total += float(coeff) * p**ep * kappa**ek * mu**em
        return total

    def substitute(
        self,
        p: Coefficient | None = None,
        kappa: Coefficient | None = None,
        mu: Coefficient | None = None,
    ) -> "RationalPolynomial":
        """Exact partial evaluation; substituted variables disappear from the result."""
        values = (p, kappa, mu)
        acc: dict[Exponent, Fraction] = {}
        for exp, coeff in self._terms:
            new_exp = list(exp)
            factor = Fraction(1)
            for i, val in enumerate(values):
                if val is not None:
                    factor *= Fraction(val) ** exp[i]
                    new_exp[i] = 0
            if factor == 0 and any(exp[i] > 0 for i, v in enumerate(values) if v is not None):
                continue
            key = (new_exp[0], new_exp[1], new_exp[2])
            acc[key] = acc.get(key, Fraction(0)) + coeff * factor
        return RationalPolynomial.from_terms(acc)

    def coefficient(self, exp: Exponent) -> Fraction:
        for e, c in self._terms:
            if e == exp:
                return c
        return Fraction(0)

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0) for e, _ in self._terms)

    def degree(self, variable: int) -> int:
        """Largest exponent of the given variable index (0=p, 1=kappa, 2=mu); -1 if absent."""
        return max((e[variable] for e, _ in self._terms), default=-1)

    def univariate_coefficients(self) -> list[float]:
        """Float coefficients [c_0, c_1, ...] in p; requires kappa and mu absent."""
        if self.degree(1) > 0 or self.degree(2) > 0:
            raise ValueError("polynomial still contains kappa or mu")
        coeffs = [0.0] * (self.degree(0) + 1 if self._terms else 1)
        for (ep, _, _), c in self._terms:
            coeffs[ep] = float(c)
        return coeffs

    # ------------------------------------------------------------------ JSON

    def to_json(self) -> str:
        payload = {
            "variables": list(VARIABLES),
            "terms": [
                {"exp": list(exp), "num": c.numerator, "den": c.denominator}
                for exp, c in self._terms
            ],
        }
        return json.dumps(payload)

    @staticmethod
    def from_json(text: str) -> "RationalPolynomial":
        payload = json.loads(text)
        if payload.get("variables") != list(VARIABLES):
            raise ValueError("unexpected variable list in polynomial JSON")
        terms: dict[Exponent, Fraction] = {}
        for item in payload["terms"]:
            exp = tuple(item["exp"])
            terms[exp] = Fraction(item["num"], item["den"])  # type: ignore[index]
        return RationalPolynomial.from_terms(terms)

    # ---------------------------------------------------------------- display

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exp, coeff in self._terms:
            names = [f"{v}^{e}" if e > 1 else v for v, e in zip(VARIABLES, exp) if e > 0]
            mono = "*".join(names)
            if mono and abs(coeff) == 1:
                body = mono
            elif mono:
                body = f"{abs(coeff)}*{mono}"
            else:
                body = str(abs(coeff))
            parts.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"RationalPolynomial({self})"


def constant(value: Coefficient) -> RationalPolynomial:
    return RationalPolynomial.from_terms({(0, 0, 0): value})


ZERO = constant(0)
ONE = constant(1)
P = RationalPolynomial.from_terms({(1, 0, 0): 1})
KAPPA = RationalPolynomial.from_terms({(0, 1, 0): 1})
MU = RationalPolynomial.from_terms({(0, 0, 1): 1})


def poly_sum(polys: Iterable[RationalPolynomial]) -> RationalPolynomial:
    acc: dict[Exponent, Fraction] = {}
    for poly in polys:
        for exp, coeff in poly._terms:
            acc[exp] = acc.get(exp, Fraction(0)) + coeff
    return RationalPolynomial.from_terms(acc)


def rational_reconstruct(
    x: float, tolerance: float = 1e-9, max_denominator: int = 10**6
) -> Fraction:
    """Best rational approximation of x with bounded denominator.

    Uses the continued-fraction convergent machinery of
    Fraction.limit_denominator.  Raises ReconstructionError when no rational
    with denominator <= max_denominator lies within the tolerance; callers
    must treat that as a hard signal of an ill-conditioned value, not guess.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if max_denominator < 1:
        raise ValueError("max_denominator must be >= 1")
    candidate = Fraction(x).limit_denominator(max_denominator)
    if abs(float(candidate) - x) > tolerance:
        raise ReconstructionError(
            f"no rational within {tolerance} of {x!r} with denominator <= {max_denominator}"
        )
    return candidate

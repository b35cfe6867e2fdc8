"""Sparse Laurent polynomials in arc variables with exact integer coefficients.

Terms map an integer exponent vector (one entry per variable, negatives
allowed) to a nonzero integer. Division by a monomial is done term-wise.
Any other division clears denominators and hands the polynomial quotient to
sympy, and a nonzero remainder is an error.
"""

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction

import sympy as sp

from .combinatorics import Arc
from .constants import VARIABLE_TEMPLATE
from .exceptions import (
    MismatchedAmbientError,
    MissingAssignmentError,
    NonExactDivisionError,
    ZeroSubstitutionError,
)

Exponent = tuple[int, ...]


def variable_name(arc: Arc) -> str:
    return VARIABLE_TEMPLATE.format(i=arc.i, j=arc.j)


class LaurentPoly:
    """Laurent polynomial over a fixed ordered tuple of arc variables."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[Arc], terms: Mapping[Exponent, int] | None = None):
        self.variables: tuple[Arc, ...] = tuple(variables)
        size = len(self.variables)
        cleaned: dict[Exponent, int] = {}
        for exponent, coeff in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != size:
                raise ValueError(f"exponent {exponent} has wrong length for {size} variables")
            if coeff:
                cleaned[exponent] = cleaned.get(exponent, 0) + int(coeff)
        self.terms: dict[Exponent, int] = {e: c for e, c in sorted(cleaned.items()) if c}

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def constant(cls, variables: Sequence[Arc], value: int) -> "LaurentPoly":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables: Sequence[Arc], arc: Arc) -> "LaurentPoly":
        """The polynomial x_arc."""
        variables = tuple(variables)
        exponent = [0] * len(variables)
        exponent[variables.index(arc)] = 1
        return cls(variables, {tuple(exponent): 1})

    @classmethod
    def monomial(cls, variables: Sequence[Arc], exponent: Exponent, coeff: int = 1) -> "LaurentPoly":
        return cls(variables, {tuple(exponent): coeff})

    # -------------------------------------------------------------------------
    # Inspection
    # -------------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def has_positive_coefficients(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def support(self) -> list[Arc]:
        """Variables that occur with a nonzero exponent in some term."""
        used = set()
        for exponent in self.terms:
            used.update(idx for idx, e in enumerate(exponent) if e)
        return [self.variables[idx] for idx in sorted(used)]

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def _coerce(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise MismatchedAmbientError(
                    "variables " + ",".join(map(str, self.variables)),
                    "variables " + ",".join(map(str, other.variables)),
                )
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exponent, coeff in other.terms.items():
            terms[exponent] = terms.get(exponent, 0) + coeff
        return LaurentPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                terms[exponent] = terms.get(exponent, 0) + c1 * c2
        return LaurentPoly(self.variables, terms)

    __rmul__ = __mul__

    def __truediv__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        """Exact division.

        Raises:
            ZeroDivisionError: If the divisor is zero
            NonExactDivisionError: If the quotient is not a Laurent polynomial
        """
        divisor = self._coerce(other)
        if divisor is NotImplemented:
            return NotImplemented
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if divisor.is_monomial():
            return self._divide_by_monomial(divisor)
        return self._divide_with_sympy(divisor)

    def _divide_by_monomial(self, divisor: "LaurentPoly") -> "LaurentPoly":
        ((shift, coeff),) = divisor.terms.items()
        terms = {}
        for exponent, c in self.terms.items():
            if c % coeff:
                raise NonExactDivisionError(str(self), str(divisor))
            terms[tuple(a - b for a, b in zip(exponent, shift))] = c // coeff
        return LaurentPoly(self.variables, terms)

    def _divide_with_sympy(self, divisor: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return self
        size = len(self.variables)
        low_num = [min(e[k] for e in self.terms) for k in range(size)]
        low_den = [min(e[k] for e in divisor.terms) for k in range(size)]
        gens = sp.symbols(f"v0:{size}")

        def to_poly(p: LaurentPoly, low: list[int]) -> sp.Poly:
            data = {
                tuple(a - b for a, b in zip(exponent, low)): coeff
                for exponent, coeff in p.terms.items()
            }
            return sp.Poly.from_dict(data, *gens, domain="QQ")

        quotient, remainder = to_poly(self, low_num).div(to_poly(divisor, low_den))
        if not remainder.is_zero:
            raise NonExactDivisionError(str(self), str(divisor))
        # self / divisor = quotient * x^(low_num - low_den)
        terms = {}
        for monom, coeff in quotient.terms():
            value = sp.Rational(coeff)
            if value.q != 1:
                raise NonExactDivisionError(str(self), str(divisor))
            exponent = tuple(m + a - b for m, a, b in zip(monom, low_num, low_den))
            terms[exponent] = int(value.p)
        return LaurentPoly(self.variables, terms)

    # -------------------------------------------------------------------------
    # Comparison and evaluation
    # -------------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self.variables, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def specialize(self, assignment: Mapping[Arc, Fraction | int]) -> Fraction:
        """Exact value at the given variable assignment.

        Raises:
            MissingAssignmentError: If a variable in use has no value
            ZeroSubstitutionError: If 0 is assigned to a variable with a negative exponent
        """
        values: dict[int, Fraction] = {}
        for idx in range(len(self.variables)):
            exponents = [e[idx] for e in self.terms]
            if not any(exponents):
                continue
            arc = self.variables[idx]
            if arc not in assignment:
                raise MissingAssignmentError(variable_name(arc))
            value = Fraction(assignment[arc])
            if value == 0 and min(exponents) < 0:
                raise ZeroSubstitutionError(variable_name(arc))
            values[idx] = value

        total = Fraction(0)
        for exponent, coeff in self.terms.items():
            term = Fraction(coeff)
            for idx, e in enumerate(exponent):
                if e:
                    term *= values[idx] ** e
            total += term
        return total

    def evaluate_at_one(self, arcs: Iterable[Arc]) -> "LaurentPoly":
        """Set the given variables to 1, keeping the variable tuple."""
        drop = {self.variables.index(a) for a in arcs if a in self.variables}
        terms: dict[Exponent, int] = {}
        for exponent, coeff in self.terms.items():
            reduced = tuple(0 if idx in drop else e for idx, e in enumerate(exponent))
            terms[reduced] = terms.get(reduced, 0) + coeff
        return LaurentPoly(self.variables, terms)

    # -------------------------------------------------------------------------
    # Text
    # -------------------------------------------------------------------------

    def _monomial_text(self, exponent: Exponent, coeff: int) -> str:
        def factors(sign: int) -> list[str]:
            out = []
            for idx, e in enumerate(exponent):
                if e * sign > 0:
                    name = variable_name(self.variables[idx])
                    power = abs(e)
                    out.append(name if power == 1 else f"{name}^{power}")
            return out

        numerator = factors(1)
        denominator = factors(-1)
        magnitude = abs(coeff)
        if numerator:
            head = "*".join(numerator)
            if magnitude != 1:
                head = f"{magnitude}*{head}"
        else:
            head = str(magnitude)
        if denominator:
            tail = denominator[0] if len(denominator) == 1 else "(" + "*".join(denominator) + ")"
            head = f"{head}/{tail}"
        return head

    def __str__(self) -> str:
        """Canonical text: monomials by descending exponent vector, joined by +/-."""
        if not self.terms:
            return "0"
        pieces = []
        for exponent in sorted(self.terms, reverse=True):
            coeff = self.terms[exponent]
            text = self._monomial_text(exponent, coeff)
            if not pieces:
                pieces.append(text if coeff > 0 else f"-{text}")
            else:
                pieces.append(f" + {text}" if coeff > 0 else f" - {text}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def specialize(poly: LaurentPoly, assignment: Mapping[Arc, Fraction | int]) -> Fraction:
    """Exact evaluation of a Laurent polynomial; see :meth:`LaurentPoly.specialize`."""
    return poly.specialize(assignment)

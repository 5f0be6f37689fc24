"""Graded polynomials in t_1, t_2, ... and (2-reduced) Schur functions.

deg t_j = j. Coefficients are exact Fractions; a monomial is a tuple of
(variable index, exponent) pairs in increasing variable order.
"""

import json
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from .characters import centralizer_order, factorial_weight, mn_character
from .exceptions import PreconditionError, ValidationError
from .partitions import Partition, enumerate_partitions, make_partition

Monomial = Tuple[Tuple[int, int], ...]
Scalar = Union[int, Fraction]


def monomial_degree(monomial: Monomial) -> int:
    return sum(j * e for j, e in monomial)


def _canonical_monomial(exps: Iterable[Tuple[int, int]]) -> Monomial:
    merged: Dict[int, int] = {}
    for j, e in exps:
        j, e = int(j), int(e)
        if j < 1 or e < 0:
            raise ValidationError(f"invalid variable t{j}^{e}")
        merged[j] = merged.get(j, 0) + e
    return tuple((j, e) for j, e in sorted(merged.items()) if e)


def _multiply_monomials(a: Monomial, b: Monomial) -> Monomial:
    return _canonical_monomial(a + b)


def _sort_key(monomial: Monomial):
    # graded, then higher powers of the lowest variables first
    return monomial_degree(monomial), tuple((j, -e) for j, e in monomial)


def monomial_of_cycle_type(cycles: Partition) -> Monomial:
    return _canonical_monomial((j, 1) for j in cycles.parts)


def cycle_type_of_monomial(monomial: Monomial) -> Partition:
    parts = []
    for j, e in monomial:
        parts.extend([j] * e)
    return make_partition(sorted(parts, reverse=True))


class GradedPolynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping] = None):
        cleaned: Dict[Monomial, Fraction] = {}
        for monomial, coeff in (terms or {}).items():
            key = _canonical_monomial(monomial)
            value = cleaned.get(key, Fraction(0)) + Fraction(coeff)
            if value:
                cleaned[key] = value
            else:
                cleaned.pop(key, None)
        self._terms = cleaned

    @classmethod
    def constant(cls, value: Scalar) -> "GradedPolynomial":
        return cls({(): value})

    @classmethod
    def variable(cls, j: int) -> "GradedPolynomial":
        return cls({((j, 1),): 1})

    @classmethod
    def monomial(cls, exps: Mapping[int, int], coeff: Scalar = 1) -> "GradedPolynomial":
        return cls({tuple(exps.items()): coeff})

    # --- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        """Terms in canonical order."""
        return {m: self._terms[m] for m in sorted(self._terms, key=_sort_key)}

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(_canonical_monomial(monomial), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degrees(self) -> set:
        return {monomial_degree(m) for m in self._terms}

    @property
    def max_degree(self) -> int:
        """Largest weighted degree; -1 for the zero polynomial."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        degrees = self.degrees()
        if degree is None:
            return len(degrees) <= 1
        return degrees <= {degree}

    def variables(self) -> set:
        return {j for m in self._terms for j, _ in m}

    def is_odd_supported(self) -> bool:
        return all(j % 2 for j in self.variables())

    # --- ring operations --------------------------------------------------

    def _coerce(self, other) -> Optional["GradedPolynomial"]:
        if isinstance(other, GradedPolynomial):
            return other
        if isinstance(other, (int, Rational)):
            return GradedPolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self._terms)
        for m, c in other._terms.items():
            merged[m] = merged.get(m, Fraction(0)) + c
        return GradedPolynomial(merged)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, GradedPolynomial):
            return GradedPolynomial({m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        product: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _multiply_monomials(m1, m2)
                product[m] = product.get(m, Fraction(0)) + c1 * c2
        return GradedPolynomial(product)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # --- transformations --------------------------------------------------

    def homogeneous_component(self, degree: int) -> "GradedPolynomial":
        return GradedPolynomial(
            {m: c for m, c in self._terms.items() if monomial_degree(m) == degree}
        )

    def restrict_to_odd(self) -> "GradedPolynomial":
        """Set every even-indexed variable to zero."""
        return GradedPolynomial(
            {m: c for m, c in self._terms.items() if all(j % 2 for j, _ in m)}
        )

    def derivative(self, j: int, times: int = 1) -> "GradedPolynomial":
        """times-fold partial derivative in t_j."""
        out: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            exps = dict(m)
            e = exps.get(j, 0)
            if e < times:
                continue
            factor = 1
            for k in range(times):
                factor *= e - k
            exps[j] = e - times
            out[tuple(exps.items())] = c * factor
        return GradedPolynomial(out)

    # --- serialization ----------------------------------------------------

    def to_json(self) -> List[dict]:
        return [
            {"exps": {str(j): e for j, e in m}, "coeff": str(c)}
            for m, c in self.terms.items()
        ]

    @classmethod
    def from_json(cls, data) -> "GradedPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(
                {
                    tuple((int(j), int(e)) for j, e in item["exps"].items()): Fraction(item["coeff"])
                    for item in data
                }
            )
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise ValidationError(f"malformed polynomial JSON: {e}") from e

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for index, (m, c) in enumerate(self.terms.items()):
            factors = "·".join(f"t{j}" if e == 1 else f"t{j}^{e}" for j, e in m)
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = factors
            else:
                body = f"{magnitude}·{factors}"
            if index == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"GradedPolynomial({self.pretty()!r})"


def poly_add(f: GradedPolynomial, g: GradedPolynomial) -> GradedPolynomial:
    return f + g


def poly_mul(f: GradedPolynomial, g: GradedPolynomial) -> GradedPolynomial:
    return f * g


def homogeneous_component(f: GradedPolynomial, degree: int) -> GradedPolynomial:
    return f.homogeneous_component(degree)


_TERM = re.compile(r"([+-]?)([^+-]+)")
_VARIABLE = re.compile(r"t(\d+)(?:\^(\d+))?")
_NUMBER = re.compile(r"\d+(?:/\d+)?")


def parse_polynomial(text: str) -> GradedPolynomial:
    """Read the pretty form (`1/24·t1^4 + t1·t3`, `*` also accepted) or the JSON form."""
    stripped = text.strip()
    if stripped.startswith("["):
        return GradedPolynomial.from_json(stripped)
    compact = re.sub(r"\s+", "", stripped)
    if not compact:
        raise ValidationError("empty polynomial")
    terms: Dict[Monomial, Fraction] = {}
    position = 0
    for match in _TERM.finditer(compact):
        if match.start() != position:
            raise ValidationError(f"cannot parse polynomial near {compact[position:]!r}", position)
        position = match.end()
        sign, body = match.groups()
        coeff = Fraction(-1 if sign == "-" else 1)
        exps: List[Tuple[int, int]] = []
        for factor in re.split(r"[·*]", body):
            variable = _VARIABLE.fullmatch(factor)
            if variable:
                exps.append((int(variable.group(1)), int(variable.group(2) or 1)))
            elif _NUMBER.fullmatch(factor):
                coeff *= Fraction(factor)
            else:
                raise ValidationError(f"bad factor {factor!r} in polynomial", match.start())
        monomial = _canonical_monomial(exps)
        terms[monomial] = terms.get(monomial, Fraction(0)) + coeff
    if position != len(compact):
        raise ValidationError(f"cannot parse polynomial near {compact[position:]!r}", position)
    return GradedPolynomial(terms)


@lru_cache(maxsize=None)
def schur(shape: Partition) -> GradedPolynomial:
    """S_Y(t) = sum over cycle types nu of chi_Y(nu) t^nu / prod nu_j!."""
    terms = {}
    for cycles in enumerate_partitions(shape.size):
        value = mn_character(shape, cycles)
        if value:
            terms[monomial_of_cycle_type(cycles)] = Fraction(value, factorial_weight(cycles))
    return GradedPolynomial(terms)


@lru_cache(maxsize=None)
def reduced_schur(shape: Partition) -> GradedPolynomial:
    """Schur function with t_2 = t_4 = ... = 0."""
    return schur(shape).restrict_to_odd()


def schur_expand(f: GradedPolynomial, degree: int) -> Dict[Partition, Fraction]:
    """Coefficients a_lambda with f = sum a_lambda S_lambda, by character orthogonality."""
    if not f.is_homogeneous(degree):
        raise PreconditionError(f"expansion needs a homogeneous polynomial of degree {degree}")
    by_class = [
        (cycle_type_of_monomial(m), c) for m, c in f.terms.items()
    ]
    expansion: Dict[Partition, Fraction] = {}
    for shape in enumerate_partitions(degree):
        total = Fraction(0)
        for cycles, c in by_class:
            total += c * factorial_weight(cycles) * mn_character(shape, cycles) / centralizer_order(
                cycles
            )
        if total:
            expansion[shape] = total
    return expansion

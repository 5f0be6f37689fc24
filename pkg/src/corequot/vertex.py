"""Heisenberg operators a_j and vertex-operator modes X_k on C[t_1, t_3, t_5, ...].

X(p) = -1/2 exp(2 xi(t, p)) exp(-2 xi(d, 1/p)) = sum_k X_k p^{-k}, with
xi(t, p) = sum_{j odd} t_j p^j and xi(d, 1/p) = sum_{j odd} (1/j) d/dt_j p^{-j}.
"""

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .exceptions import PreconditionError, ValidationError
from .linalg import SolveStatus, solve
from .partitions import partitions_with_parts_in
from .symfunc import GradedPolynomial, Monomial, monomial_degree

logger = logging.getLogger("corequot")

# An element of V: a GradedPolynomial in odd-indexed variables only.
OddPolynomial = GradedPolynomial


def as_odd_polynomial(f: GradedPolynomial) -> OddPolynomial:
    if not f.is_odd_supported():
        even = sorted(j for j in f.variables() if j % 2 == 0)
        raise ValidationError(f"polynomial involves even variables {even}")
    return f


def heisenberg_apply(j: int, f: OddPolynomial) -> OddPolynomial:
    """a_j = d/dt_j and a_{-j} = j t_j for odd j > 0."""
    if j == 0 or j % 2 == 0:
        raise PreconditionError(f"Heisenberg index must be odd and nonzero, got {j}")
    if j > 0:
        return f.derivative(j)
    return f * GradedPolynomial.monomial({-j: 1}, -j)


@lru_cache(maxsize=None)
def exp_xi_coefficient(m: int) -> OddPolynomial:
    """A_m, the coefficient of p^m in exp(2 xi(t, p)).

    m A_m = 2 sum_{j odd <= m} j t_j A_{m-j}.
    """
    if m < 0:
        raise PreconditionError(f"A_m needs m >= 0, got {m}")
    if m == 0:
        return GradedPolynomial.constant(1)
    total = GradedPolynomial()
    for j in range(1, m + 1, 2):
        total = total + GradedPolynomial.monomial({j: 1}, 2 * j) * exp_xi_coefficient(m - j)
    return total * Fraction(1, m)


@lru_cache(maxsize=None)
def _annihilation_terms(l: int) -> Tuple[Tuple[Monomial, Fraction], ...]:
    """B_l as a normally ordered differential operator: A_l under t_j -> -(1/j) d/dt_j."""
    terms = []
    for monomial, coeff in exp_xi_coefficient(l).terms.items():
        scale = Fraction(coeff)
        for j, e in monomial:
            scale *= Fraction(-1, j) ** e
        terms.append((monomial, scale))
    return tuple(terms)


def apply_annihilation(l: int, f: OddPolynomial) -> OddPolynomial:
    """B_l f, the coefficient of p^{-l} in exp(-2 xi(d, 1/p)) applied to f."""
    total = GradedPolynomial()
    for monomial, scale in _annihilation_terms(l):
        image = f
        for j, e in monomial:
            image = image.derivative(j, e)
            if not image:
                break
        if image:
            total = total + image * scale
    return total


def vertex_apply(k: int, f: OddPolynomial) -> OddPolynomial:
    """X_k f = -1/2 sum_{m >= 0} A_m B_{m+k} f; finite because B_l kills degrees below l."""
    total = GradedPolynomial()
    for monomial, coeff in f.terms.items():
        total = total + _vertex_on_monomial(k, monomial) * coeff
    return total


@lru_cache(maxsize=None)
def _vertex_on_monomial(k: int, monomial: Monomial) -> OddPolynomial:
    g = GradedPolynomial({monomial: 1})
    total = GradedPolynomial()
    for l in range(max(0, k), monomial_degree(monomial) + 1):
        lowered = apply_annihilation(l, g)
        if lowered:
            total = total + exp_xi_coefficient(l - k) * lowered
    return total * Fraction(-1, 2)


_OPERATOR = re.compile(r"\s*(a|X|I)\s*([+-]?\d+)?\s*")


@dataclass(frozen=True)
class Operator:
    """One of a_j, X_k or the identity acting on V."""

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in ("a", "X", "I"):
            raise ValidationError(f"unknown operator kind {self.kind!r}")
        if self.kind == "a" and (self.index == 0 or self.index % 2 == 0):
            raise PreconditionError(f"Heisenberg index must be odd and nonzero, got {self.index}")

    @classmethod
    def parse(cls, text: str) -> "Operator":
        match = _OPERATOR.fullmatch(text)
        if not match or (match.group(1) != "I" and match.group(2) is None):
            raise ValidationError(f"cannot parse operator {text!r} (expected a<j>, X<k> or I)")
        kind, index = match.group(1), int(match.group(2) or 0)
        return cls(kind, 0 if kind == "I" else index)

    @property
    def degree_shift(self) -> int:
        """Amount by which the operator lowers weighted degree."""
        return self.index

    def apply(self, f: OddPolynomial) -> OddPolynomial:
        if self.kind == "a":
            return heisenberg_apply(self.index, f)
        if self.kind == "X":
            return vertex_apply(self.index, f)
        return f

    def __str__(self) -> str:
        return "I" if self.kind == "I" else f"{self.kind}{self.index}"


def commutator_apply(op1: Operator, op2: Operator, f: OddPolynomial) -> OddPolynomial:
    return op1.apply(op2.apply(f)) - op2.apply(op1.apply(f))


def odd_monomials(max_degree: int) -> List[OddPolynomial]:
    """Every monomial in odd variables of weighted degree <= max_degree."""
    out = []
    for d in range(max_degree + 1):
        for parts in partitions_with_parts_in(d, range(1, d + 1, 2)):
            exps: Dict[int, int] = {}
            for part in parts:
                exps[part] = exps.get(part, 0) + 1
            out.append(GradedPolynomial.monomial(exps))
    return out


def closure_candidates(op1: Operator, op2: Operator) -> List[Operator]:
    """Operators that shift degree like [op1, op2]: a_s (s odd), X_s and the identity."""
    s = op1.degree_shift + op2.degree_shift
    candidates = []
    if s % 2:
        candidates.append(Operator("a", s))
    candidates.append(Operator("X", s))
    candidates.append(Operator("I"))
    return candidates


@dataclass
class CommutatorFit:
    op1: Operator
    op2: Operator
    degree_bound: int
    candidates: List[Operator]
    coefficients: Optional[Dict[str, Fraction]]
    status: SolveStatus
    checked: int
    witness: Optional[OddPolynomial] = None
    notes: List[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.status is not SolveStatus.inconsistent

    def combination(self) -> str:
        if not self.coefficients:
            return "?"
        pieces = []
        for name, c in self.coefficients.items():
            if not c:
                continue
            body = name if abs(c) == 1 else f"{abs(c)}·{name}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces) if pieces else "0"

    def to_json(self) -> dict:
        return {
            "commutator": f"[{self.op1},{self.op2}]",
            "degree_bound": self.degree_bound,
            "status": self.status.value,
            "coefficients": (
                {name: str(c) for name, c in self.coefficients.items()}
                if self.coefficients is not None
                else None
            ),
            "checked": self.checked,
            "witness": self.witness.pretty() if self.witness is not None else None,
        }


def commutator_fit(op1: Operator, op2: Operator, degree_bound: int) -> CommutatorFit:
    """Express [op1, op2] through closure_candidates on all monomials of degree <= bound."""
    if degree_bound < 0:
        raise PreconditionError(f"degree bound must be non-negative, got {degree_bound}")
    candidates = closure_candidates(op1, op2)
    monomials = odd_monomials(degree_bound)
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    row_source: List[int] = []
    for index, g in enumerate(monomials):
        target = commutator_apply(op1, op2, g)
        images = [c.apply(g) for c in candidates]
        support = set(target.terms)
        for image in images:
            support |= set(image.terms)
        for monomial in sorted(support, key=monomial_degree):
            rows.append([image.coefficient(monomial) for image in images])
            rhs.append(target.coefficient(monomial))
            row_source.append(index)
    solution = solve(rows, rhs)
    fit = CommutatorFit(
        op1, op2, degree_bound, candidates, None, solution.status, len(monomials)
    )
    if solution.status is SolveStatus.inconsistent:
        fit.witness = monomials[row_source[solution.witness_row]]
        logger.warning(f"[{op1},{op2}] does not close on degree <= {degree_bound}; witness {fit.witness}")
        return fit
    if solution.values is not None:
        fit.coefficients = {str(c): v for c, v in zip(candidates, solution.values)}
    if solution.status is SolveStatus.underdetermined:
        fit.notes.append("candidates are dependent on the tested monomials; free terms set to 0")
    logger.debug(f"[{op1},{op2}] = {fit.combination()} ({solution.status.value})")
    return fit


@dataclass
class RelationCheck:
    relation: str
    holds: bool
    witness: Optional[OddPolynomial] = None


def _check_relation(
    op1: Operator, op2: Operator, expected, monomials: List[OddPolynomial], relation: str
) -> RelationCheck:
    for g in monomials:
        if commutator_apply(op1, op2, g) != expected(g):
            return RelationCheck(relation, False, g)
    return RelationCheck(relation, True)


def heisenberg_relations(max_index: int, degree: int) -> List[RelationCheck]:
    """[a_i, a_j] = i delta_{i+j,0} on every monomial of degree <= `degree`."""
    monomials = odd_monomials(degree)
    indices = [j for j in range(-max_index, max_index + 1) if j % 2]
    checks = []
    for i in indices:
        for j in indices:
            scale = i if i + j == 0 else 0
            checks.append(
                _check_relation(
                    Operator("a", i),
                    Operator("a", j),
                    lambda g, scale=scale: g * scale,
                    monomials,
                    f"[a{i},a{j}] = {scale}·I",
                )
            )
    return checks


def vertex_relations(max_j: int, max_k: int, degree: int) -> List[RelationCheck]:
    """[a_j, X_k] = 2 X_{j+k} on every monomial of degree <= `degree`."""
    monomials = odd_monomials(degree)
    checks = []
    for j in (j for j in range(-max_j, max_j + 1) if j % 2):
        for k in range(-max_k, max_k + 1):
            checks.append(
                _check_relation(
                    Operator("a", j),
                    Operator("X", k),
                    lambda g, s=j + k: vertex_apply(s, g) * 2,
                    monomials,
                    f"[a{j},X{k}] = 2·X{j + k}",
                )
            )
    return checks


def commutator_table(max_index: int, degree: int) -> List[CommutatorFit]:
    """Empirical closure of [X_j, X_k] for |j|, |k| <= max_index."""
    fits = []
    for j in range(-max_index, max_index + 1):
        for k in range(j, max_index + 1):
            fits.append(commutator_fit(Operator("X", j), Operator("X", k), degree))
    return fits

"""Verification of the weight-vector statements for the basic A_1^(1)-module.

Weights are Lambda_r - n delta; their weight vectors are 2-reduced Schur
functions S^red_Y with tau(Y) = (K_r; Y0, Y1) and |Y0| + |Y1| = n.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .characters import (
    count_odd_partitions,
    count_partitions,
    odd_partition_series,
    partition_series,
    phi_series,
    theta_series,
)
from .linalg import SolveStatus, rank, solve
from .littlewood_richardson import lr_coefficient
from .partitions import (
    EMPTY,
    Partition,
    Triplet,
    conjugate,
    core_label,
    enumerate_partitions,
    from_triplet,
    partitions_with_parts_in,
    removable_dominoes,
    staircase,
    two_quotient_triplet,
    two_sign,
)
from .symfunc import GradedPolynomial, Monomial, reduced_schur, schur

logger = logging.getLogger("corequot")


@dataclass(frozen=True)
class Weight:
    """Lambda_r - n delta."""

    r: int
    n: int

    @property
    def degree(self) -> int:
        return 2 * self.n + self.r * (self.r + 1) // 2

    def __str__(self) -> str:
        return f"Lambda_{self.r} - {self.n}delta"


def weight_of(y: Partition) -> Weight:
    t = two_quotient_triplet(y)
    return Weight(t.core_index, t.quotient_size)


def basis_for_weight(w: Weight) -> List[Partition]:
    """Z with tau(Z) = (K_r; empty, Z1), Z1 running over partitions of n in descending order."""
    core = staircase(w.r)
    return [from_triplet(Triplet(core, EMPTY, z1)) for z1 in enumerate_partitions(w.n)]


def weight_space(w: Weight) -> List[Partition]:
    """Every Y whose reduced Schur function has weight w."""
    return [y for y in enumerate_partitions(w.degree) if weight_of(y) == w]


def odd_monomials_of_degree(d: int) -> List[Monomial]:
    out = []
    for parts in partitions_with_parts_in(d, range(1, d + 1, 2)):
        exps: Dict[int, int] = {}
        for part in parts:
            exps[part] = exps.get(part, 0) + 1
        out.append(tuple(sorted(exps.items())))
    return out


def coefficient_matrix(polys: List[GradedPolynomial], monomials: List[Monomial]) -> List[List[Fraction]]:
    """rows = polynomials, columns = monomials."""
    return [[f.coefficient(m) for m in monomials] for f in polys]


@dataclass
class RankReport:
    weight: Weight
    basis: List[Partition]
    rank: int
    expected: int
    monomials: int

    @property
    def passed(self) -> bool:
        return self.rank == self.expected

    def to_json(self) -> dict:
        return {
            "weight": {"r": self.weight.r, "n": self.weight.n, "degree": self.weight.degree},
            "basis": [str(z) for z in self.basis],
            "rank": self.rank,
            "expected": self.expected,
            "monomials": self.monomials,
            "passed": self.passed,
        }


def verify_theorem2(w: Weight) -> RankReport:
    """The basis reduced Schur functions are linearly independent: rank = p(n)."""
    basis = basis_for_weight(w)
    monomials = odd_monomials_of_degree(w.degree)
    matrix = coefficient_matrix([reduced_schur(z) for z in basis], monomials)
    report = RankReport(w, basis, rank(matrix), count_partitions(w.n), len(monomials))
    if not report.passed:
        logger.warning(f"rank {report.rank} != p({w.n}) = {report.expected} for {w}")
    return report


@dataclass
class DecompositionReport:
    subject: Partition
    basis: List[Partition]
    formula: Optional[List[Fraction]] = None
    solved: Optional[List[Fraction]] = None
    status: Optional[str] = None
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def match(self) -> bool:
        return self.formula is not None and self.solved is not None and self.formula == self.solved

    def nonzero(self, which: str = "formula") -> Dict[Partition, Fraction]:
        vector = self.formula if which == "formula" else self.solved
        return {z: c for z, c in zip(self.basis, vector or []) if c}

    def to_json(self) -> dict:
        def encode(vector):
            return [str(c) for c in vector] if vector is not None else None

        return {
            "subject": str(self.subject),
            "basis": [str(z) for z in self.basis],
            "formula": encode(self.formula),
            "solved": encode(self.solved),
            "match": self.match,
        }


def theorem3_coefficients(y: Partition) -> DecompositionReport:
    """Coefficients of S^red_Y in the basis as predicted by the LR formula.

    (-1)^{|Y0|} d2(Y) LR^{Z1}_{Y0', Y1} d2(Z) on the basis element Z = tau^{-1}(K; empty, Z1).
    """
    t = two_quotient_triplet(y)
    n = t.quotient_size
    prefactor = (-1) ** t.quotient0.size * two_sign(y).value
    transpose = conjugate(t.quotient0)
    basis, formula = [], []
    for z1 in enumerate_partitions(n):
        z = from_triplet(Triplet(t.core, EMPTY, z1))
        basis.append(z)
        lr = lr_coefficient(z1, transpose, t.quotient1)
        formula.append(Fraction(prefactor * lr * two_sign(z).value) if lr else Fraction(0))
    report = DecompositionReport(y, basis, formula=formula)
    report.details = {"triplet": str(t), "prefactor": prefactor}
    return report


def decompose_in_basis(y: Partition) -> DecompositionReport:
    """Coordinates of S^red_Y in the weight-space basis by exact linear solve."""
    w = weight_of(y)
    basis = basis_for_weight(w)
    monomials = odd_monomials_of_degree(w.degree)
    columns = [reduced_schur(z) for z in basis]
    target = reduced_schur(y)
    rows = [[f.coefficient(m) for f in columns] for m in monomials]
    rhs = [target.coefficient(m) for m in monomials]
    solution = solve(rows, rhs)
    report = DecompositionReport(y, basis, status=solution.status.value)
    if solution.status is SolveStatus.unique:
        report.solved = list(solution.values)
    else:
        logger.warning(f"S^red_{y} has no unique expansion in the basis of {w}: {solution.status.value}")
    return report


def verify_theorem3(y: Partition) -> DecompositionReport:
    report = theorem3_coefficients(y)
    solved = decompose_in_basis(y)
    report.solved = solved.solved
    report.status = solved.status
    if not report.match:
        logger.warning(f"LR coefficient mismatch for {y}: formula {report.formula} vs solved {report.solved}")
    return report


def verify_theorem3_up_to(max_size: int) -> List[DecompositionReport]:
    reports = []
    for size in range(max_size + 1):
        for y in enumerate_partitions(size):
            reports.append(verify_theorem3(y))
    return reports


@dataclass
class MultiplicityRow:
    degree: int
    contributions: List[Tuple[int, int, int]]
    total: int
    odd_count: int

    @property
    def passed(self) -> bool:
        return self.total == self.odd_count


def multiplicity_report(d_max: int) -> List[MultiplicityRow]:
    """sum over (r, n) with 2n + r(r+1)/2 = d of p(n) equals p^odd(d)."""
    rows = []
    for d in range(d_max + 1):
        contributions = []
        r = 0
        while r * (r + 1) // 2 <= d:
            rest = d - r * (r + 1) // 2
            if rest % 2 == 0:
                contributions.append((r, rest // 2, count_partitions(rest // 2)))
            r += 1
        total = sum(c[2] for c in contributions)
        rows.append(MultiplicityRow(d, contributions, total, count_odd_partitions(d)))
    return rows


@dataclass
class GaussReport:
    order: int
    lhs: List[int]
    rhs: List[int]
    theta_matches_product: bool
    exponents_are_cores: bool

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs and self.theta_matches_product and self.exponents_are_cores

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "theta_matches_product": self.theta_matches_product,
            "exponents_are_cores": self.exponents_are_cores,
            "passed": self.passed,
        }


def gauss_series_check(order: int) -> GaussReport:
    """(sum_m q^{2m^2+m}) (sum_n p(n) q^{2n}) = phi(q^2) / phi(q) up to q^order."""
    theta = theta_series(order)
    lhs = theta * partition_series(order, stretch=2)
    rhs = odd_partition_series(order)
    phi2 = phi_series(2, order)
    product = (phi2 * phi2) / phi_series(1, order)
    # the exponents 2m^2 + m are exactly the staircase sizes |K_r|
    core_sizes = {staircase(r).size for r in range(order + 2) if staircase(r).size <= order}
    labelled = all(
        2 * core_label(r) ** 2 + core_label(r) == staircase(r).size for r in range(order + 2)
    )
    exponents = {e for e, c in enumerate(theta.coefficients) if c}
    return GaussReport(
        order,
        list(lhs.coefficients),
        list(rhs.coefficients),
        theta == product,
        labelled and exponents == core_sizes and all(c in (0, 1) for c in theta.coefficients),
    )


@dataclass
class PropertyCheck:
    subject: Partition
    passed: bool
    reason: str = ""


def verify_maximal_vectors(r_max: int) -> List[PropertyCheck]:
    """S_{K_r} involves no even variable, so it already lies in V."""
    checks = []
    for r in range(r_max + 1):
        k = staircase(r)
        full = schur(k)
        ok = full.is_odd_supported() and reduced_schur(k) == full
        checks.append(PropertyCheck(k, ok, "" if ok else "depends on an even variable"))
    return checks


def verify_proposition1(y: Partition) -> PropertyCheck:
    """S^red_Y is odd supported and homogeneous of the degree of its weight."""
    f = reduced_schur(y)
    w = weight_of(y)
    if not f.is_odd_supported():
        return PropertyCheck(y, False, "even variable in reduced Schur function")
    if not f.is_homogeneous(w.degree):
        return PropertyCheck(y, False, f"not homogeneous of degree {w.degree}")
    if w.degree != y.size:
        return PropertyCheck(y, False, f"weight degree {w.degree} != |Y| = {y.size}")
    return PropertyCheck(y, True)


@lru_cache(maxsize=None)
def _removal_signs(p: Partition) -> frozenset:
    # signs of every complete sequence of domino removals down to the 2-core
    dominoes = removable_dominoes(p)
    if not dominoes:
        return frozenset({1})
    signs = set()
    for domino in dominoes:
        for s in _removal_signs(domino.result):
            signs.add(-s if domino.vertical else s)
    return frozenset(signs)


def verify_sign_consistency(y: Partition) -> PropertyCheck:
    """Every complete 2-hook removal sequence gives the sign two_sign computes."""
    signs = _removal_signs(y)
    expected = two_sign(y).value
    if signs != {expected}:
        return PropertyCheck(y, False, f"removal sequences give {sorted(signs)}, two_sign gives {expected}")
    return PropertyCheck(y, True)

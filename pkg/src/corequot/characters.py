"""Symmetric group characters, partition counts and truncated q-series."""

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Sequence, Tuple

from .exceptions import PreconditionError
from .partitions import Partition, beta_set, conjugate

# A cycle type is a Partition read as a conjugacy class of S_N.
CycleType = Partition


def multiplicities(cycles: CycleType) -> Dict[int, int]:
    """nu_j = number of cycles of length j."""
    return dict(Counter(cycles.parts))


def mn_character(shape: Partition, cycles: CycleType) -> int:
    """chi_shape(cycles) by the Murnaghan-Nakayama rule."""
    if shape.size != cycles.size:
        raise PreconditionError(
            f"shape {shape} has size {shape.size} but cycle type {cycles} has size {cycles.size}"
        )
    return _mn(shape.parts, cycles.parts)


@lru_cache(maxsize=None)
def _mn(shape: Tuple[int, ...], cycles: Tuple[int, ...]) -> int:
    if not cycles:
        return 1
    k, rest = cycles[0], cycles[1:]
    beads = beta_set(Partition(shape)).entries
    occupied = set(beads)
    n = len(beads)
    value = 0
    # removing a rim hook of length k slides a bead from x to a free x - k;
    # the hook height is the number of beads jumped over
    for x in beads:
        target = x - k
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for y in beads if target < y < x)
        moved = sorted((y if y != x else target for y in beads), reverse=True)
        smaller = tuple(p for p in (m - (n - j) for j, m in enumerate(moved, start=1)) if p > 0)
        term = _mn(smaller, rest)
        value += -term if jumped % 2 else term
    return value


def character_degree(shape: Partition) -> int:
    """Dimension of the irreducible representation, by the hook-length formula."""
    transpose = conjugate(shape)
    hooks = 1
    for i, row in enumerate(shape.parts):
        for j in range(row):
            hooks *= (row - j - 1) + (transpose.parts[j] - i - 1) + 1
    return math.factorial(shape.size) // hooks


def centralizer_order(cycles: CycleType) -> int:
    """z_nu = prod_j j^{nu_j} nu_j!."""
    order = 1
    for j, count in multiplicities(cycles).items():
        order *= j**count * math.factorial(count)
    return order


def factorial_weight(cycles: CycleType) -> int:
    """prod_j nu_j!, the denominator of t^nu / nu! in a Schur function."""
    weight = 1
    for count in multiplicities(cycles).values():
        weight *= math.factorial(count)
    return weight


@lru_cache(maxsize=None)
def count_partitions(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        first = k * (3 * k - 1) // 2
        if first > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * count_partitions(n - first)
        second = k * (3 * k + 1) // 2
        if second <= n:
            total += sign * count_partitions(n - second)
        k += 1
    return total


def count_odd_partitions(n: int) -> int:
    """p^odd(n): partitions of n into odd parts."""
    if n < 0:
        return 0
    ways = [1] + [0] * n
    for part in range(1, n + 1, 2):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


@dataclass(frozen=True)
class IntegerSeries:
    """Formal power series in q truncated after q^order."""

    coefficients: Tuple[int, ...]

    @classmethod
    def from_coefficients(cls, values: Sequence[int], order: int) -> "IntegerSeries":
        values = list(values)[: order + 1]
        values += [0] * (order + 1 - len(values))
        return cls(tuple(int(v) for v in values))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n]

    def __add__(self, other: "IntegerSeries") -> "IntegerSeries":
        order = min(self.order, other.order)
        return IntegerSeries(tuple(self[i] + other[i] for i in range(order + 1)))

    def __mul__(self, other: "IntegerSeries") -> "IntegerSeries":
        return series_mul(self, other)

    def __truediv__(self, other: "IntegerSeries") -> "IntegerSeries":
        return series_div(self, other)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coefficients) + "]"


def series_mul(a: IntegerSeries, b: IntegerSeries) -> IntegerSeries:
    order = min(a.order, b.order)
    out = [0] * (order + 1)
    for i, x in enumerate(a.coefficients[: order + 1]):
        if x:
            for j in range(order + 1 - i):
                out[i + j] += x * b[j]
    return IntegerSeries(tuple(out))


def series_div(a: IntegerSeries, b: IntegerSeries) -> IntegerSeries:
    """a / b for a divisor whose constant term is a unit (+1 or -1)."""
    if b[0] not in (1, -1):
        raise PreconditionError(f"series division needs constant term +-1, got {b[0]}")
    order = min(a.order, b.order)
    out = [0] * (order + 1)
    for n in range(order + 1):
        acc = a[n] - sum(b[k] * out[n - k] for k in range(1, n + 1))
        out[n] = acc * b[0]
    return IntegerSeries(tuple(out))


def phi_series(argument_power: int, order: int) -> IntegerSeries:
    """phi(q^s) = prod_{j>=1} (1 - q^{s j}) truncated at q^order, for s in {1, 2}."""
    if argument_power not in (1, 2):
        raise PreconditionError(f"phi is only needed at q or q^2, got power {argument_power}")
    if order < 0:
        raise PreconditionError(f"series order must be non-negative, got {order}")
    out = [1] + [0] * order
    step = argument_power
    while step <= order:
        for n in range(order, step - 1, -1):
            out[n] -= out[n - step]
        step += argument_power
    return IntegerSeries(tuple(out))


def odd_partition_series(order: int) -> IntegerSeries:
    """phi(q^2) / phi(q): the generating function of p^odd(n)."""
    return phi_series(2, order) / phi_series(1, order)


def theta_series(order: int) -> IntegerSeries:
    """sum over all integers m of q^{2m^2 + m}."""
    out = [0] * (order + 1)
    m = 0
    while 2 * m * m - abs(m) <= order:
        for e in {2 * m * m + m, 2 * m * m - m}:
            if e <= order:
                out[e] += 1
        m += 1
    return IntegerSeries(tuple(out))


def partition_series(order: int, stretch: int = 1) -> IntegerSeries:
    """sum_n p(n) q^{stretch * n} truncated at q^order."""
    out = [0] * (order + 1)
    for n in range(order // stretch + 1):
        out[stretch * n] = count_partitions(n)
    return IntegerSeries(tuple(out))

"""Partitions, beta-sets and the 2-core / 2-quotient correspondence.

A partition doubles as a Young diagram and as a cycle type. The 2-quotient
is read off the beta-set X = (x_1, ..., x_n), x_j = y_j + (n - j), by
splitting it into even and odd beads; the 2-core is always a staircase
K_r = (r, r-1, ..., 1).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .exceptions import PreconditionError, ValidationError


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for index, part in enumerate(parts):
            if not isinstance(part, int) or part <= 0:
                raise ValidationError(f"part {part!r} at index {index} is not positive", index)
            if index and parts[index - 1] < part:
                raise ValidationError(f"not weakly decreasing at index {index}", index)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def part(self, index: int) -> int:
        """0-based part access that reads zero past the last row."""
        return self.parts[index] if index < len(self.parts) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        """True when the diagram of `other` fits inside this one."""
        if other.length > self.length:
            return False
        return all(a >= b for a, b in zip(self.parts, other.parts))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"


EMPTY = Partition()


@dataclass(frozen=True)
class BetaSet:
    """First-column hook lengths of a partition padded to an even length."""

    entries: Tuple[int, ...]
    padded_length: int

    def __post_init__(self):
        if self.padded_length % 2 or len(self.entries) != self.padded_length:
            raise ValidationError("beta-set length must equal an even padded length")
        if any(a <= b for a, b in zip(self.entries, self.entries[1:])):
            raise ValidationError("beta-set entries must be strictly decreasing")
        if self.entries and self.entries[-1] < 0:
            raise ValidationError("beta-set entries must be non-negative")

    def split(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Return (X0, X1): even beads halved and odd beads as (x - 1) / 2."""
        even = tuple(x // 2 for x in self.entries if x % 2 == 0)
        odd = tuple((x - 1) // 2 for x in self.entries if x % 2 == 1)
        return even, odd

    def to_partition(self) -> Partition:
        n = self.padded_length
        return make_partition([x - (n - j) for j, x in enumerate(self.entries, start=1)])


@dataclass(frozen=True)
class Triplet:
    """(2-core; 2-quotient) of a partition."""

    core: Partition
    quotient0: Partition
    quotient1: Partition

    @property
    def core_index(self) -> int:
        return self.core.length

    @property
    def quotient_size(self) -> int:
        return self.quotient0.size + self.quotient1.size

    @property
    def size(self) -> int:
        """Size of the partition this triplet encodes."""
        return self.core.size + 2 * self.quotient_size

    def __str__(self) -> str:
        return f"({self.core}; {self.quotient0}, {self.quotient1})"


@dataclass(frozen=True)
class Sign:
    value: int

    def __post_init__(self):
        if self.value not in (1, -1):
            raise ValidationError(f"sign must be +1 or -1, got {self.value}")

    def __mul__(self, other: "Sign") -> "Sign":
        return Sign(self.value * other.value)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return "+1" if self.value > 0 else "-1"


class Domino(NamedTuple):
    """A removable 2-hook: top-left row, orientation and the partition left behind."""

    row: int
    vertical: bool
    result: Partition


def make_partition(parts: Iterable[int]) -> Partition:
    """Canonical partition from an integer sequence; trailing zeros are stripped."""
    values = []
    for index, part in enumerate(parts):
        try:
            value = int(part)
        except (TypeError, ValueError, OverflowError):
            raise ValidationError(f"part {part!r} at index {index} is not an integer", index) from None
        if value != part:
            raise ValidationError(f"part {part!r} at index {index} is not an integer", index)
        values.append(value)
    for index, value in enumerate(values):
        if value < 0:
            raise ValidationError(f"negative part {value} at index {index}", index)
    while values and values[-1] == 0:
        values.pop()
    for index in range(1, len(values)):
        if values[index - 1] < values[index]:
            raise ValidationError(f"not weakly decreasing at index {index}", index)
    return Partition(tuple(values))


def conjugate(p: Partition) -> Partition:
    """Transpose of the diagram."""
    if not p:
        return EMPTY
    return Partition(tuple(sum(1 for part in p.parts if part > col) for col in range(p.parts[0])))


def default_padding(p: Partition) -> int:
    """Number of parts rounded up to the next even integer, at least 2."""
    n = p.length + (p.length % 2)
    return max(n, 2)


def beta_set(p: Partition, n: Optional[int] = None) -> BetaSet:
    if n is None:
        n = default_padding(p)
    if n % 2:
        raise PreconditionError(f"padding must be even, got {n}")
    if n < p.length:
        raise PreconditionError(f"padding {n} is smaller than the {p.length} parts of {p}")
    return BetaSet(tuple(p.part(j - 1) + (n - j) for j in range(1, n + 1)), n)


def _quotient_from_beads(beads: Sequence[int]) -> Partition:
    m = len(beads)
    return make_partition([xi - (m - j) for j, xi in enumerate(beads, start=1)])


def two_quotient_triplet(p: Partition, n: Optional[int] = None) -> Triplet:
    """tau(Y): the 2-core and 2-quotient of p, independent of the even padding."""
    even, odd = beta_set(p, n).split()
    difference = len(even) - len(odd)
    r = difference - 1 if difference >= 1 else -difference
    return Triplet(staircase(r), _quotient_from_beads(even), _quotient_from_beads(odd))


def _beads(quotient: Partition, m: int) -> List[int]:
    return [quotient.part(j - 1) + (m - j) for j in range(1, m + 1)]


def from_triplet(t: Triplet) -> Partition:
    """Inverse of two_quotient_triplet."""
    r = staircase_length(t.core)
    len0, len1 = t.quotient0.length, t.quotient1.length
    # |X0| - |X1| is even for even n, so the parity of r picks the branch
    if r % 2 == 0:
        n = max(r + 2 * len0, 2 * len1 - r, r, 2)
        m0, m1 = (n - r) // 2, (n + r) // 2
    else:
        n = max(2 * len1 + r + 1, 2 * len0 - r - 1, r + 1, 2)
        m0, m1 = (n + r + 1) // 2, (n - r - 1) // 2
    beads = [2 * xi for xi in _beads(t.quotient0, m0)]
    beads += [2 * xi + 1 for xi in _beads(t.quotient1, m1)]
    return BetaSet(tuple(sorted(beads, reverse=True)), n).to_partition()


@lru_cache(maxsize=None)
def staircase(r: int) -> Partition:
    if r < 0:
        raise PreconditionError(f"staircase index must be non-negative, got {r}")
    return Partition(tuple(range(r, 0, -1)))


def is_staircase(p: Partition) -> bool:
    return p.parts == tuple(range(p.length, 0, -1))


def staircase_length(p: Partition) -> int:
    """r with p = K_r; raises when p is not a staircase."""
    if not is_staircase(p):
        raise PreconditionError(f"core {p} is not a staircase")
    return p.length


def two_core(p: Partition) -> Partition:
    return two_quotient_triplet(p).core


def core_label(r: int) -> int:
    """The integer m with |K_r| = 2m^2 + m (r = 2m for m >= 0, r = -2m - 1 otherwise)."""
    if r < 0:
        raise PreconditionError(f"staircase index must be non-negative, got {r}")
    return r // 2 if r % 2 == 0 else -(r + 1) // 2


def staircase_index(m: int) -> int:
    """Inverse of core_label."""
    return 2 * m if m >= 0 else -2 * m - 1


def removable_dominoes(p: Partition) -> List[Domino]:
    """Every 2-hook of the diagram, read row by row from the top."""
    parts = list(p.parts)
    found = []
    for i, part in enumerate(parts):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        if part - 2 >= below:
            rest = parts[:]
            rest[i] -= 2
            found.append(Domino(i, False, make_partition(rest)))
        if i + 1 < len(parts) and parts[i + 1] == part:
            after = parts[i + 2] if i + 2 < len(parts) else 0
            if after < part:
                rest = parts[:]
                rest[i] -= 1
                rest[i + 1] -= 1
                found.append(Domino(i, True, make_partition(rest)))
    return found


def two_sign(p: Partition) -> Sign:
    """delta_2: (-1)^q, q the number of column 2-hooks removed on the way to the 2-core.

    Greedy removal on the beta-set: always slide the largest bead x with x - 2
    free down to x - 2. The hook is a column 2-hook exactly when x - 1 holds a bead.
    """
    beads = set(beta_set(p).entries)
    q = 0
    while True:
        movable = [x for x in beads if x >= 2 and x - 2 not in beads]
        if not movable:
            break
        x = max(movable)
        if x - 1 in beads:
            q += 1
        beads.remove(x)
        beads.add(x - 2)
    return Sign(-1 if q % 2 else 1)


def enumerate_partitions(n: int) -> List[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise PreconditionError(f"cannot partition a negative integer {n}")
    return list(_partitions(n))


@lru_cache(maxsize=None)
def _partitions(n: int) -> Tuple[Partition, ...]:
    return tuple(Partition(parts) for parts in _descending(n, n))


def _descending(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def partitions_with_parts_in(n: int, allowed: Iterable[int]) -> Iterator[Tuple[int, ...]]:
    """Partitions of n (descending tuples) whose parts lie in `allowed`."""
    choices = sorted(set(allowed), reverse=True)

    def walk(remaining: int, start: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for k in range(start, len(choices)):
            part = choices[k]
            if part <= remaining:
                for rest in walk(remaining - part, k):
                    yield (part,) + rest

    yield from walk(n, 0)

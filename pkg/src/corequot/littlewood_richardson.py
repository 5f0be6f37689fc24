"""Littlewood-Richardson coefficients by lattice-word skew tableaux."""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from .partitions import Partition, enumerate_partitions


@dataclass(frozen=True)
class SkewTableau:
    """Filling of outer/inner; rows[i] lists the entries of row i left to right."""

    outer: Partition
    inner: Partition
    rows: Tuple[Tuple[int, ...], ...]

    def content(self) -> Tuple[int, ...]:
        counts: Dict[int, int] = {}
        for row in self.rows:
            for value in row:
                counts[value] = counts.get(value, 0) + 1
        return tuple(counts[v] for v in sorted(counts))

    def reading_word(self) -> Tuple[int, ...]:
        """Right to left along each row, rows top to bottom."""
        return tuple(value for row in self.rows for value in reversed(row))


def lr_tableaux(outer: Partition, inner: Partition, content: Partition) -> Iterator[SkewTableau]:
    """Semistandard fillings of outer/inner with the given content whose reading word is lattice."""
    if outer.size != inner.size + content.size or not outer.contains(inner):
        return
    cells: List[Tuple[int, int]] = [
        (i, j)
        for i in range(outer.length)
        for j in range(outer.part(i) - 1, inner.part(i) - 1, -1)
    ]
    letters = content.length
    grid: Dict[Tuple[int, int], int] = {}
    used = [0] * (letters + 1)

    def place(k: int) -> Iterator[SkewTableau]:
        if k == len(cells):
            rows = tuple(
                tuple(grid[(i, j)] for j in range(inner.part(i), outer.part(i)))
                for i in range(outer.length)
            )
            yield SkewTableau(outer, inner, rows)
            return
        i, j = cells[k]
        high = grid.get((i, j + 1), letters)
        low = grid[(i - 1, j)] + 1 if (i - 1, j) in grid else 1
        for value in range(low, high + 1):
            if used[value] >= content[value - 1]:
                continue
            # lattice prefix: never more (value)s than (value - 1)s
            if value > 1 and used[value] + 1 > used[value - 1]:
                continue
            used[value] += 1
            grid[(i, j)] = value
            yield from place(k + 1)
            del grid[(i, j)]
            used[value] -= 1

    yield from place(0)


def lr_coefficient(outer: Partition, inner: Partition, content: Partition) -> int:
    """c^outer_{inner, content}; zero on size mismatch or non-containment."""
    return sum(1 for _ in lr_tableaux(outer, inner, content))


def lr_expand_product(mu: Partition, nu: Partition) -> Dict[Partition, int]:
    """lambda -> c^lambda_{mu nu} over all lambda of size |mu| + |nu|."""
    product = {}
    for shape in enumerate_partitions(mu.size + nu.size):
        if not shape.contains(mu):
            continue
        value = lr_coefficient(shape, mu, nu)
        if value:
            product[shape] = value
    return product

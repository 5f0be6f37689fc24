from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from corequot.linalg import SolveStatus, echelon, integral_row, rank, solve


def test_integral_row():
    assert integral_row([Fraction(1, 2), Fraction(1, 3), 1]) == [3, 2, 6]


class TestRank:
    def test_examples(self):
        assert rank([[1, 2], [2, 4]]) == 1
        assert rank([[1, 0], [0, 1]]) == 2
        assert rank([[0, 0], [0, 0]]) == 0
        assert rank([]) == 0
        assert rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1

    def test_skipped_column(self):
        assert rank([[0, 1, 2], [0, 2, 5], [0, 3, 7]]) == 2

    def test_pivots(self):
        _, pivots, order = echelon([[0, 1], [1, 0]])
        assert pivots == [0, 1]
        assert order == [1, 0]

    @given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=4))
    def test_rank_of_transpose(self, rows):
        columns = [list(c) for c in zip(*rows)]
        assert rank(rows) == rank(columns)


class TestSolve:
    def test_unique(self):
        result = solve([[1, 1], [1, -1]], [3, 1])
        assert result.status is SolveStatus.unique
        assert result.values == (2, 1)

    def test_rational_solution(self):
        result = solve([[2, 0], [0, 3]], [1, 1])
        assert result.values == (Fraction(1, 2), Fraction(1, 3))

    def test_overdetermined_consistent(self):
        result = solve([[1, 0], [0, 1], [1, 1]], [1, 2, 3])
        assert result.status is SolveStatus.unique
        assert result.values == (1, 2)

    def test_inconsistent_reports_witness(self):
        result = solve([[1, 1], [2, 2]], [1, 3])
        assert result.status is SolveStatus.inconsistent
        assert result.values is None
        assert result.witness_row == 1

    def test_underdetermined_sets_free_unknowns_to_zero(self):
        result = solve([[1, 1]], [2])
        assert result.status is SolveStatus.underdetermined
        assert result.values == (2, 0)

    @given(
        st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=5),
        st.lists(st.integers(-3, 3), min_size=3, max_size=3),
    )
    def test_solution_satisfies_system(self, rows, x):
        rhs = [sum(a * b for a, b in zip(row, x)) for row in rows]
        result = solve(rows, rhs)
        assert result.status is not SolveStatus.inconsistent
        for row, b in zip(rows, rhs):
            assert sum(a * v for a, v in zip(row, result.values)) == b
        if result.status is SolveStatus.unique:
            assert list(result.values) == x

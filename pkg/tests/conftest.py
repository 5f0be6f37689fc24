"""Shared fixtures and hypothesis strategies."""

import pytest
from hypothesis import strategies as st

from corequot.config import Settings
from corequot.partitions import enumerate_partitions, make_partition
from corequot.symfunc import GradedPolynomial


def partitions(max_size: int = 10):
    """Any partition of size <= max_size."""
    return st.integers(min_value=0, max_value=max_size).flatmap(
        lambda n: st.sampled_from(enumerate_partitions(n))
    )


def odd_polynomials(max_degree: int = 6):
    """Small polynomials in t1, t3, t5 with rational coefficients."""
    monomial = st.fixed_dictionaries(
        {1: st.integers(0, 3), 3: st.integers(0, 1), 5: st.integers(0, 1)}
    ).filter(lambda e: e[1] + 3 * e[3] + 5 * e[5] <= max_degree)
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=6)
    return st.lists(st.tuples(monomial, coeff), max_size=4).map(
        lambda terms: sum(
            (GradedPolynomial.monomial({j: e for j, e in exps.items() if e}, c) for exps, c in terms),
            GradedPolynomial(),
        )
    )


def P(text: str):
    """Partition from "4,3,1,1"."""
    return make_partition(int(x) for x in text.split(",") if x)


@pytest.fixture
def settings(tmp_path):
    s = Settings()
    s.database_path = str(tmp_path / "runs.db")
    s.output_directory = str(tmp_path / "reports")
    return s

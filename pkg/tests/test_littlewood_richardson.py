from itertools import product

import pytest

from conftest import P
from corequot.littlewood_richardson import lr_coefficient, lr_expand_product, lr_tableaux
from corequot.partitions import conjugate, enumerate_partitions
from corequot.symfunc import schur, schur_expand


class TestCoefficient:
    @pytest.mark.parametrize(
        "outer, inner, content, value",
        [
            ("2,1", "1", "1,1", 1),
            ("2,1", "1", "2", 1),
            ("3,2,1", "2,1", "2,1", 2),
            ("4,2", "2", "2,2", 1),
            ("2,2", "1", "1", 0),
            ("2", "1,1", "", 0),
            ("3,1", "3,1", "", 1),
            ("", "", "", 1),
        ],
    )
    def test_values(self, outer, inner, content, value):
        assert lr_coefficient(P(outer), P(inner), P(content)) == value

    def test_tableaux_are_lattice_words(self):
        tableaux = list(lr_tableaux(P("3,2,1"), P("2,1"), P("2,1")))
        assert len(tableaux) == 2
        for t in tableaux:
            assert t.content() == (2, 1)
            word = t.reading_word()
            for k in range(1, len(word) + 1):
                prefix = word[:k]
                assert prefix.count(1) >= prefix.count(2)


def test_expand_product_examples():
    assert lr_expand_product(P("1"), P("1")) == {P("2"): 1, P("1,1"): 1}
    assert lr_expand_product(P("2,1"), P("1")) == {P("3,1"): 1, P("2,2"): 1, P("2,1,1"): 1}
    assert lr_expand_product(P(""), P("2,1")) == {P("2,1"): 1}


# Independent oracle: every filling of the skew shape, filtered by the tableau rules


def _brute_lr(outer, inner, content):
    if outer.size != inner.size + content.size or not outer.contains(inner):
        return 0
    cells = [(i, j) for i in range(outer.length) for j in range(inner.part(i), outer.part(i))]
    letters = range(1, content.length + 1)
    count = 0
    for values in product(letters, repeat=len(cells)):
        grid = dict(zip(cells, values))
        if any(values.count(k) != content.part(k - 1) for k in letters):
            continue
        if any((i, j + 1) in grid and grid[(i, j + 1)] < v for (i, j), v in grid.items()):
            continue
        if any((i + 1, j) in grid and grid[(i + 1, j)] <= v for (i, j), v in grid.items()):
            continue
        word = [grid[(i, j)] for i in range(outer.length) for j in reversed(range(inner.part(i), outer.part(i)))]
        seen = [0] * (content.length + 2)
        lattice = True
        for v in word:
            seen[v] += 1
            if v > 1 and seen[v] > seen[v - 1]:
                lattice = False
                break
        if lattice:
            count += 1
    return count


@pytest.mark.parametrize("n", range(1, 6))
def test_against_brute_force(n):
    for outer in enumerate_partitions(n):
        for k in range(n + 1):
            for inner in enumerate_partitions(k):
                for content in enumerate_partitions(n - k):
                    assert lr_coefficient(outer, inner, content) == _brute_lr(outer, inner, content), (
                        str(outer),
                        str(inner),
                        str(content),
                    )


def _symmetric_up_to(total):
    for a in range(total + 1):
        for b in range(total - a + 1):
            for mu in enumerate_partitions(a):
                for nu in enumerate_partitions(b):
                    product_ = lr_expand_product(mu, nu)
                    if product_ != lr_expand_product(nu, mu):
                        return False
                    expected = schur_expand(schur(mu) * schur(nu), a + b)
                    if {shape: c for shape, c in product_.items()} != expected:
                        return False
    return True


def test_product_matches_schur_expansion():
    assert _symmetric_up_to(5)


@pytest.mark.slow
def test_product_matches_schur_expansion_up_to_eight():
    assert _symmetric_up_to(8)


@pytest.mark.parametrize("total", range(8))
def test_conjugation_covariance(total):
    # c^lambda_{mu,nu} = c^{lambda'}_{mu',nu'}
    for a in range(total + 1):
        for mu in enumerate_partitions(a):
            for nu in enumerate_partitions(total - a):
                for lam in enumerate_partitions(total):
                    assert lr_coefficient(lam, mu, nu) == lr_coefficient(
                        conjugate(lam), conjugate(mu), conjugate(nu)
                    ), (str(lam), str(mu), str(nu))

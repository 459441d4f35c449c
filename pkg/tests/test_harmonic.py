from fractions import Fraction

from hypothesis import given, strategies as st

from smzv.core import IndexCombination
from smzv.harmonic import harmonic, ic, index_shuffle, reg_star, sha_alternating_lhs, star_expand

I = IndexCombination.index
EMPTY = I(())
indices = st.lists(st.integers(1, 4), max_size=3).map(tuple)


def test_harmonic_examples():
    assert harmonic(EMPTY, ic(2, 3)) == ic(2, 3)
    assert harmonic(ic(1), ic(2)) == ic(1, 2) + ic(2, 1) + ic(3)


def test_index_shuffle_examples():
    assert index_shuffle(ic(1), ic(2)) == ic(1, 2) + ic(2, 1)
    assert index_shuffle(ic(5, 6), ic(7)) == ic(5, 6, 7) + ic(5, 7, 6) + ic(7, 5, 6)
    assert index_shuffle(EMPTY, ic(4)) == ic(4)


@given(indices, indices, indices)
def test_products_commutative_associative(a, b, c):
    a, b, c = I(a), I(b), I(c)
    for prod in (harmonic, index_shuffle):
        assert prod(a, b) == prod(b, a)
        assert prod(prod(a, b), c) == prod(a, prod(b, c))


@given(indices, indices)
def test_harmonic_term_count(a, b):
    # total coefficient mass is a Delannoy number: sum over merges of C(r+s-j, r-j, s-j, j)
    from math import factorial
    r, s = len(a), len(b)
    d = sum(factorial(r + s - j) // (factorial(r - j) * factorial(s - j) * factorial(j))
            for j in range(min(r, s) + 1))
    assert sum(c for _, c in harmonic(I(a), I(b))) == d


def test_sha_alternating_examples():
    assert sha_alternating_lhs(3, 2, 0) == ic(2)
    assert sha_alternating_lhs(2, 1, 1) == ic(1, 2) + ic(2, 1)
    assert sha_alternating_lhs(4, 5, 1) == ic(5, 4) + ic(4, 5)


def test_star_expand_examples():
    assert star_expand((3,)) == ic(3)
    assert star_expand((2, 2)) == ic(2, 2) + ic(4)
    assert star_expand((2, 2, 2)) == ic(2, 2, 2) + ic(4, 2) + ic(2, 4) + ic(6)
    assert star_expand(()) == EMPTY


def test_reg_star_examples():
    assert reg_star((2,)) == ic(2)
    assert reg_star((2, 1)) == -ic(1, 2) - ic(3)
    assert reg_star((1,)) == 0
    # (1) * (1) = 2 (1,1) + (2) regularizes to 0
    assert reg_star((1, 1)) == ic(2).scale(Fraction(-1, 2))


@given(indices)
def test_reg_star_kills_products_with_one(k):
    # zeta*((k) * (1)) = zeta*(k) zeta*(1) = 0
    assert reg_star(harmonic(I(k), ic(1))) == 0


@given(indices)
def test_reg_star_outputs_admissible(k):
    assert all(not l or l[-1] > 1 for l, _ in reg_star(k))

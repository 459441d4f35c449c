from itertools import combinations

from hypothesis import given, strategies as st

from smzv.core import MzvExpression, WordPolynomial, in_h0
from smzv.shuffle import reg_sh, regshwd_rhs, shuffle, shuffle_words, tau, zsh_symbolic
from smzv.verify import WORD_LEMMAS, check_regshwd, word_lemma_lhs, word_lemma_rhs

W = WordPolynomial.word
words = st.text(alphabet="xy", max_size=5)
polys = st.dictionaries(words, st.integers(-3, 3), max_size=3).map(WordPolynomial)


def brute_shuffle(a: str, b: str) -> dict:
    """All interleavings, by choosing the positions of ``a``."""
    n = len(a) + len(b)
    out = {}
    for pos in combinations(range(n), len(a)):
        ia, ib = iter(a), iter(b)
        pos = set(pos)
        w = "".join(next(ia) if i in pos else next(ib) for i in range(n))
        out[w] = out.get(w, 0) + 1
    return out


def test_shuffle_examples():
    assert shuffle(WordPolynomial.one(), W("yxy")) == W("yxy")
    assert shuffle(W("x"), W("yx")) == W("xyx") + W("yxx", 2)
    # alternating sum at n=1 of the first word identity
    assert shuffle(W("x"), W("yx")) - shuffle(W("xyx"), WordPolynomial.one()) == W("yxx", 2)


@given(words, words)
def test_shuffle_matches_interleavings(a, b):
    assert dict(shuffle_words(a, b)) == brute_shuffle(a, b)


@given(polys, polys, polys)
def test_shuffle_commutative_associative(a, b, c):
    assert shuffle(a, b) == shuffle(b, a)
    assert shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c))


def test_tau_examples():
    assert tau(W("yx")) == W("yx")
    assert tau(W("yyx")) == W("yxx")


@given(polys, polys)
def test_tau_involution_and_morphism(a, b):
    assert tau(tau(a)) == a
    assert tau(shuffle(a, b)) == shuffle(tau(a), tau(b))


def test_reg_examples():
    assert reg_sh(W("y")) == 0
    assert reg_sh(W("x")) == 0
    assert reg_sh(W("yxy")) == W("yyx", -2)
    assert reg_sh(W("yxxyx")) == W("yxxyx")


@given(words)
def test_reg_lands_in_h0(w):
    r = reg_sh(W(w))
    assert all(in_h0(u) for u, _ in r)
    if in_h0(w):
        assert r == W(w)


@given(st.text(alphabet="xy", max_size=4), st.text(alphabet="xy", max_size=4))
def test_reg_is_shuffle_homomorphism(a, b):
    assert reg_sh(shuffle(W(a), W(b))) == shuffle(reg_sh(W(a)), reg_sh(W(b)))


def test_zsh_examples():
    assert zsh_symbolic(W("yxx")) == MzvExpression.zeta((3,))
    assert zsh_symbolic(W("x")) == 0
    assert zsh_symbolic(W("yxy")) == MzvExpression.zeta((1, 2), -2)
    assert zsh_symbolic(WordPolynomial.one()) == MzvExpression.one()


def test_regshwd_examples():
    assert regshwd_rhs(0, (3,)) == W("yxx")
    assert regshwd_rhs(1, (2,)) == W("yxx", -2)
    assert regshwd_rhs(1, (1, 3)) == -W("yxyxx") - W("yyxxx", 3)


def test_regshwd_consistency():
    rep = check_regshwd()
    assert rep["cases"] >= 200
    assert rep["verdict"] == "pass", rep["failures"]


def test_word_identities_small_n_by_hand():
    # n = 0: x ⧢ 1 = x for the first three, x ⧢ x = 2xx for the last
    assert word_lemma_lhs("wordA", 0) == W("x")
    assert word_lemma_lhs("word2", 0) == W("xx", 2)
    assert word_lemma_rhs("word2", 1) == 0
    assert word_lemma_rhs("wordB", 0) == W("xy") + W("yx")


def test_word_identities():
    for name in WORD_LEMMAS:
        for n in range(11):
            assert word_lemma_lhs(name, n) == word_lemma_rhs(name, n), (name, n)

"""Shuffle product on Q<x, y>, the duality map, and shuffle regularization.

``reg_sh`` is computed in two stages.  A leading block ``x^m`` is moved past
the first ``y`` with

    x^m y w = sum_i (-1)^(m-i) x^i ⧢ y (x^(m-i) ⧢ w),

where every ``i >= 1`` term is a shuffle multiple of ``x`` and is killed.
Trailing ``y``'s of a word ``u y^m`` in h^1 are then peeled off through

    (u y^(m-1)) ⧢ y = m u y^m + (words with m - 1 trailing y's),

whose left side regularizes to zero.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from .core import (
    Index,
    MzvExpression,
    Word,
    WordPolynomial,
    index_of_word,
    make_index,
    tau_word,
    word_of_index,
)
from .errors import EmptyIndex


@lru_cache(maxsize=4096)
def _shuffle_words(a: Word, b: Word) -> dict:
    # memo key is order-normalized: the shuffle is commutative
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    head_a, head_b = a[0], b[0]
    out = {head_a + w: c for w, c in shuffle_words(a[1:], b).items()}
    for w, c in shuffle_words(a, b[1:]).items():
        w = head_b + w
        out[w] = out.get(w, 0) + c
    return out


def shuffle_words(a: Word, b: Word) -> dict:
    """Shuffle of two words as a raw ``word -> int`` map (do not mutate)."""
    return _shuffle_words(a, b) if a <= b else _shuffle_words(b, a)


def shuffle(a: WordPolynomial, b: WordPolynomial) -> WordPolynomial:
    acc: dict = {}
    for u, cu in a.raw().items():
        for v, cv in b.raw().items():
            c = cu * cv
            for w, n in shuffle_words(u, v).items():
                acc[w] = acc.get(w, 0) + c * n
    return WordPolynomial.from_accumulator({sys.intern(w): c for w, c in acc.items()})


def shuffle_power(a: WordPolynomial, n: int) -> WordPolynomial:
    out = WordPolynomial.one()
    for _ in range(n):
        out = shuffle(out, a)
    return out


def tau(a: WordPolynomial) -> WordPolynomial:
    return WordPolynomial.from_accumulator({tau_word(w): c for w, c in a.raw().items()})


@lru_cache(maxsize=None)
def _reg_word(w: Word) -> tuple:
    if not w:
        return (("", Fraction(1)),)
    acc: dict = {}
    if w[0] == "x":
        m = len(w) - len(w.lstrip("x"))
        rest = w[m:]
        if not rest:
            return ()
        sign = -1 if m % 2 else 1
        for v, c in shuffle_words("x" * m, rest[1:]).items():
            for u, d in _reg_word("y" + v):
                acc[u] = acc.get(u, 0) + sign * c * d
    elif w[-1] == "x":
        return ((w, Fraction(1)),)
    else:
        m = len(w) - len(w.rstrip("y"))
        u = w[:-m]
        if not u:
            return ()
        tail = "y" * (m - 1)
        scale = Fraction(-1, m)
        for j in range(len(u)):
            for z, d in _reg_word(u[:j] + "y" + u[j:] + tail):
                acc[z] = acc.get(z, 0) + scale * d
    return tuple((sys.intern(z), c) for z, c in acc.items() if c)


def reg_sh(a: WordPolynomial) -> WordPolynomial:
    """Shuffle regularization: the shuffle-algebra map onto h^0 killing x and y."""
    acc: dict = {}
    for w, c in a.raw().items():
        for u, d in _reg_word(w):
            acc[u] = acc.get(u, 0) + c * d
    return WordPolynomial.from_accumulator(acc)


def zsh_symbolic(a: WordPolynomial) -> MzvExpression:
    """Regularized value as a combination of admissible MZV symbols."""
    return MzvExpression(
        ((0, (index_of_word(w),)), c) for w, c in reg_sh(a).raw().items())


def weak_compositions(m: int, r: int):
    """All ``(l_1, ..., l_r)`` of nonnegative integers summing to ``m``."""
    if r == 0:
        if m == 0:
            yield ()
        return
    for first in range(m + 1):
        for rest in weak_compositions(m - first, r - 1):
            yield (first,) + rest


def regshwd_rhs(m: int, k: Index) -> WordPolynomial:
    """Closed form of ``x^m z_{k1} ... z_{kr}`` modulo ``x ⧢ h``."""
    k = make_index(k)
    if not k:
        raise EmptyIndex("the index must be nonempty")
    sign = -1 if m % 2 else 1
    acc: dict = {}
    for ls in weak_compositions(m, len(k)):
        c = sign
        for a, l in zip(k, ls):
            c *= comb(a + l - 1, l)
        w = word_of_index(tuple(a + l for a, l in zip(k, ls)))
        acc[w] = acc.get(w, 0) + c
    return WordPolynomial.from_accumulator(acc)


def x_power_word(m: int, k: Index) -> WordPolynomial:
    return WordPolynomial.word("x" * m + word_of_index(k))


def all_words(length: int):
    for letters in product("xy", repeat=length):
        yield sys.intern("".join(letters))

"""Harmonic (stuffle) product, index shuffle, star expansion and harmonic regularization."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .core import Index, IndexCombination, make_index


@lru_cache(maxsize=1 << 16)
def _stuffle(a: Index, b: Index) -> dict:
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    ka, la = a[:-1], a[-1]
    kb, lb = b[:-1], b[-1]
    out: dict = {}
    for part, tail in ((stuffle_indices(ka, b), la),
                       (stuffle_indices(ka, kb), la + lb),
                       (stuffle_indices(a, kb), lb)):
        for k, c in part.items():
            k = k + (tail,)
            out[k] = out.get(k, 0) + c
    return out


def stuffle_indices(a: Index, b: Index) -> dict:
    """Harmonic product of two indices as a raw ``index -> int`` map (do not mutate)."""
    return _stuffle(a, b) if a <= b else _stuffle(b, a)


@lru_cache(maxsize=1 << 16)
def _index_shuffle(a: Index, b: Index) -> dict:
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    out: dict = {}
    for part, tail in ((index_shuffle_indices(a[:-1], b), a[-1]),
                       (index_shuffle_indices(a, b[:-1]), b[-1])):
        for k, c in part.items():
            k = k + (tail,)
            out[k] = out.get(k, 0) + c
    return out


def index_shuffle_indices(a: Index, b: Index) -> dict:
    return _index_shuffle(a, b) if a <= b else _index_shuffle(b, a)


def _bilinear(raw_product, a: IndexCombination, b: IndexCombination) -> IndexCombination:
    acc: dict = {}
    for k, ck in a.raw().items():
        for l, cl in b.raw().items():
            c = ck * cl
            for m, n in raw_product(k, l).items():
                acc[m] = acc.get(m, 0) + c * n
    return IndexCombination.from_accumulator(acc)


def harmonic(a: IndexCombination, b: IndexCombination) -> IndexCombination:
    return _bilinear(stuffle_indices, a, b)


def index_shuffle(a: IndexCombination, b: IndexCombination) -> IndexCombination:
    """Interleavings of indices, no merging of parts."""
    return _bilinear(index_shuffle_indices, a, b)


def ic(*parts: int) -> IndexCombination:
    return IndexCombination.index(make_index(parts))


def sha_alternating_lhs(a: int, b: int, n: int) -> IndexCombination:
    """``sum_i (-1)^i (a i + b) * ({a}^(n-i))``; equals ``(b) ⧢ ({a}^n)``."""
    out = IndexCombination.zero()
    for i in range(n + 1):
        term = harmonic(ic(a * i + b), IndexCombination.index((a,) * (n - i)))
        out = out + (term if i % 2 == 0 else -term)
    return out


def star_expand(k: Index) -> IndexCombination:
    """Zeta-star as zeta: each comma is kept or replaced by a ``+``."""
    k = make_index(k)
    if not k:
        return IndexCombination.index(())
    acc: dict = {}
    for merges in product((False, True), repeat=len(k) - 1):
        parts = [k[0]]
        for a, merge in zip(k[1:], merges):
            if merge:
                parts[-1] += a
            else:
                parts.append(a)
        t = tuple(parts)
        acc[t] = acc.get(t, 0) + 1
    return IndexCombination.from_accumulator(acc)


@lru_cache(maxsize=None)
def _reg_star(k: Index) -> tuple:
    if not k or k[-1] > 1:
        return ((k, Fraction(1)),)
    m = len(k) - len(tuple(_strip_ones(k)))
    head = k[:-1]
    # (head) * (1) = m (k) + lower terms, and zeta*((head) * (1)) = 0
    acc: dict = {}
    scale = Fraction(-1, m)
    for l, c in stuffle_indices(head, (1,)).items():
        if l == k:
            continue
        for r, d in _reg_star(l):
            acc[r] = acc.get(r, 0) + scale * c * d
    return tuple((r, c) for r, c in acc.items() if c)


def _strip_ones(k: Index) -> Index:
    end = len(k)
    while end and k[end - 1] == 1:
        end -= 1
    return k[:end]


def reg_star(k) -> IndexCombination:
    """Harmonic regularization (constant term, zeta*(1) = 0) onto admissible indices.

    Accepts a single index or an IndexCombination.
    """
    if isinstance(k, IndexCombination):
        acc: dict = {}
        for l, c in k.raw().items():
            for r, d in _reg_star(l):
                acc[r] = acc.get(r, 0) + c * d
        return IndexCombination.from_accumulator(acc)
    return IndexCombination.from_accumulator(dict(_reg_star(make_index(k))))

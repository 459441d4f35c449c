"""t-adic symmetric multiple zeta values and the index maps sigma, I0, I1."""

from __future__ import annotations

import enum
from functools import lru_cache
from math import comb

from .core import (
    Index,
    IndexCombination,
    MzvExpression,
    TadicSeries,
    make_index,
    word_of_index,
)
from .harmonic import harmonic, reg_star
from .shuffle import weak_compositions, x_power_word, zsh_symbolic
from .core import WordPolynomial


class Flavor(enum.Enum):
    SHUFFLE = "sh"
    HARMONIC = "star"

    @classmethod
    def parse(cls, value) -> "Flavor":
        if isinstance(value, Flavor):
            return value
        aliases = {"sh": cls.SHUFFLE, "shuffle": cls.SHUFFLE,
                   "star": cls.HARMONIC, "harmonic": cls.HARMONIC, "*": cls.HARMONIC}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ValueError(f"unknown regularization flavor {value!r}") from None


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


@lru_cache(maxsize=None)
def zeta_reg(k: Index, flavor: Flavor = Flavor.SHUFFLE) -> MzvExpression:
    """Regularized ``zeta^sh(k)`` or ``zeta^*(k)`` (``zeta(1) = 0``)."""
    k = make_index(k)
    if flavor is Flavor.SHUFFLE:
        return zsh_symbolic(WordPolynomial.word(word_of_index(k)))
    return MzvExpression.from_index_combination(reg_star(k))


def zeta_of_combination(c: IndexCombination, flavor: Flavor = Flavor.HARMONIC) -> MzvExpression:
    out = MzvExpression.zero()
    for k, coeff in c:
        out = out + zeta_reg(k, flavor).scale(coeff)
    return out


def _zeta_m_sum(k: Index, weight_shift: int, flavor: Flavor) -> MzvExpression:
    out = MzvExpression.zero()
    for ls in weak_compositions(weight_shift, len(k)):
        c = 1
        for a, l in zip(k, ls):
            c *= comb(a + l - 1, l)
        out = out + zeta_reg(tuple(a + l for a, l in zip(k, ls)), flavor).scale(c)
    return out


@lru_cache(maxsize=None)
def _zeta_m_cached(k: Index, weight_shift: int, flavor: Flavor, method: str) -> MzvExpression:
    if not k:
        return MzvExpression.one() if weight_shift == 0 else MzvExpression.zero()
    if method == "word":
        e = zsh_symbolic(x_power_word(weight_shift, k))
        return e if weight_shift % 2 == 0 else -e
    return _zeta_m_sum(k, weight_shift, flavor)


def zeta_m_symbolic(k, weight_shift: int, flavor=Flavor.SHUFFLE, method: str | None = None) -> MzvExpression:
    """Weight-shifted value ``zeta_m^flavor(k)``.

    The shuffle flavor defaults to ``(-1)^m Z^sh(x^m z_k1 ... z_kr)`` (``method="word"``);
    ``method="sum"`` forces the binomial sum over ``l_1 + ... + l_r = m``, which is
    the only method for the harmonic flavor.
    """
    flavor = Flavor.parse(flavor)
    if weight_shift < 0:
        raise ValueError("weight_shift must be nonnegative")
    if method is None:
        method = "word" if flavor is Flavor.SHUFFLE else "sum"
    if method not in ("word", "sum"):
        raise ValueError(f"unknown method {method!r}")
    if method == "word" and flavor is not Flavor.SHUFFLE:
        raise ValueError("the word method exists only for the shuffle flavor")
    return _zeta_m_cached(make_index(k), weight_shift, flavor, method)


@lru_cache(maxsize=None)
def _t_adic(k: Index, truncation: int, flavor: Flavor) -> TadicSeries:
    if not k:
        return TadicSeries.constant(MzvExpression.one(), truncation)
    r = len(k)
    coeffs = [MzvExpression.zero() for _ in range(truncation)]
    for i in range(r + 1):
        sign = _sign(sum(k[i:]))
        head = zeta_reg(k[:i], flavor)
        if not head:
            continue
        rev = k[i:][::-1]
        for m in range(truncation):
            tail = zeta_m_symbolic(rev, m, flavor)
            if tail:
                term = head * tail
                coeffs[m] = coeffs[m] + (term if sign > 0 else -term)
    return TadicSeries(coeffs, truncation)


def t_adic_smzv(k, truncation: int, flavor=Flavor.SHUFFLE) -> TadicSeries:
    """``zeta_S^flavor(k)`` modulo ``t^truncation``."""
    if truncation < 1:
        raise ValueError("truncation must be a positive integer")
    return _t_adic(make_index(k), truncation, Flavor.parse(flavor))


# ---------------------------------------------------------------------------
# sigma, I0, I1


def _as_combination(a) -> IndexCombination:
    if isinstance(a, IndexCombination):
        return a
    return IndexCombination.index(make_index(a))


def sigma(a) -> IndexCombination:
    """The derivation ``(k_1..k_r) -> sum_i k_i (.., k_i + 1, ..)``, extended linearly."""
    acc: dict = {}
    for k, c in _as_combination(a).raw().items():
        for i, ki in enumerate(k):
            l = k[:i] + (ki + 1,) + k[i + 1:]
            acc[l] = acc.get(l, 0) + c * ki
    return IndexCombination.from_accumulator(acc)


def _alternating_split(k: Index, inner) -> IndexCombination:
    out = IndexCombination.zero()
    for i in range(len(k) + 1):
        term = harmonic(IndexCombination.index(k[:i]), inner(k[i:][::-1]))
        out = out + (term if _sign(sum(k[i:])) > 0 else -term)
    return out


@lru_cache(maxsize=None)
def _I0(k: Index) -> IndexCombination:
    return _alternating_split(k, IndexCombination.index)


@lru_cache(maxsize=None)
def _I1(k: Index) -> IndexCombination:
    return _alternating_split(k, sigma)


def I0(k) -> IndexCombination:
    return _I0(make_index(k))


def I1(k) -> IndexCombination:
    return _I1(make_index(k))


def zeta_S2_via_I(k) -> TadicSeries:
    """``zeta*(I0(k)) + zeta*(I1(k)) t`` modulo ``t^2``."""
    k = make_index(k)
    return TadicSeries([zeta_of_combination(I0(k), Flavor.HARMONIC),
                        zeta_of_combination(I1(k), Flavor.HARMONIC)], 2)

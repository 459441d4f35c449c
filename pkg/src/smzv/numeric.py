"""Arbitrary-precision evaluation of MZVs, MzvExpressions and TadicSeries.

An admissible MZV is the iterated integral over ``0 < t_1 < ... < t_w < 1`` of
its word (``y -> dt/(1-t)``, ``x -> dt/t``).  Splitting the simplex at 1/2 and
substituting ``t -> 1 - t`` on the upper part gives

    Z(w) = sum_j L(w[:j]) * L(tau(w[j:])),

where ``L(u)`` is the integral of ``u`` over ``[0, 1/2]``.  For ``u`` in h^1 with
blocks ``(a_1, ..., a_s)`` this is the multiple polylogarithm

    L(u) = sum_{n_1 < ... < n_s} 2^(-n_s) / (n_1^a_1 ... n_s^a_s),

which converges like ``2^-n``.  One pass over ``n`` yields ``L`` of every prefix
of ``u``, and the prefixes of ``tau(w)`` are exactly the ``tau(w[j:])``, so each
MZV costs two passes.  Sums run in fixed point (Python ints scaled by 2^bits).

Values are returned as ``mpmath.mpf``.  Every public function takes ``p``, the
number of correct decimal digits wanted; internal work is done at
``p + guard`` digits.
"""

from __future__ import annotations

import json
import math
import os
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath
from mpmath import mpf

from .core import (
    Index,
    MzvExpression,
    TadicSeries,
    is_admissible,
    make_index,
    tau_word,
    word_of_index,
)
from .errors import NotAdmissible, PrecisionUnreachable

GUARD_DIGITS = 10
MAX_DIGITS = 20000
_LOG2_10 = math.log2(10)


def _bits_for(digits: int) -> int:
    return int(math.ceil(digits * _LOG2_10)) + 32


def _check_precision(p: int) -> None:
    if p > MAX_DIGITS:
        raise PrecisionUnreachable(f"{p} digits exceeds the iteration bound ({MAX_DIGITS})")


class precision:
    """Context manager setting mpmath's working precision to ``p`` digits plus guard."""

    def __init__(self, p: int, guard: int = GUARD_DIGITS):
        self._ctx = mpmath.workdps(p + guard)

    def __enter__(self):
        self._ctx.__enter__()
        return self

    def __exit__(self, *exc):
        return self._ctx.__exit__(*exc)


def pi_const(p: int) -> mpf:
    _check_precision(p)
    with precision(p):
        return +mpmath.pi


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0, B_1 = -1/2
    table = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum(math.comb(m + 1, j) * table[j] for j in range(m))
        table.append(-s / (m + 1))
    return tuple(table)


def bernoulli(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _bernoulli_table(n)[n]


def zeta_even_exact(n: int) -> tuple[Fraction, int]:
    """``zeta(n) = c * pi^n`` for even ``n >= 2``; returns ``(c, n)``."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and >= 2")
    c = abs(bernoulli(n)) * Fraction(2) ** (n - 1) / math.factorial(n)
    return c, n


# ---------------------------------------------------------------------------
# fixed-point kernel


def _terms_needed(bits: int, depth: int, rate: float = 1.0) -> int:
    # tail after N terms is below q^N (1 + ln N)^depth, q^-1 = 2^rate
    n = int(bits / rate) + 8
    for _ in range(3):
        n = int((bits + 8 + depth * math.log2(1 + math.log(n))) / rate) + 1
    return n


def _prefix_values(u: str, bits: int, point: Fraction = Fraction(1, 2)) -> tuple:
    """Fixed-point ``L_z(u[:j])`` (integral over ``[0, z]``) for ``j = 0..len(u)``.

    ``u`` must start with y.  ``z = 1/2`` takes a shift-only fast path.
    """
    if not u:
        return (1 << bits,)
    blocks = [len(b) + 1 for b in u[1:].split("y")]
    s = len(blocks)
    half = point == Fraction(1, 2)
    rate = 1.0 if half else -math.log2(float(point))
    n_max = _terms_needed(bits, s, rate)
    one = 1 << bits
    zpow = one
    # chain[q] = sum over n_1 < ... < n_q < n of prod 1/n_i^a_i
    chain = [one] + [0] * s
    acc = [[0] * a for a in blocks]
    for n in range(1, n_max + 1):
        if not half:
            zpow = zpow * point.numerator // point.denominator
        for q in range(s):
            t = chain[q] >> n if half else (chain[q] * zpow) >> bits
            if not t:
                continue
            row = acc[q]
            for e in range(blocks[q]):
                t //= n
                row[e] += t
        for q in range(s, 0, -1):
            t = chain[q - 1]
            for _ in range(blocks[q - 1]):
                t //= n
            chain[q] += t
    out = [one]
    for row in acc:
        out.extend(row)
    return tuple(out)


@lru_cache(maxsize=1 << 14)
def _half_prefix_values(u: str, bits: int) -> tuple:
    return _prefix_values(u, bits)


def _mzv_fixed(w: str, bits: int) -> int:
    lo = _half_prefix_values(w, bits)
    hi = _half_prefix_values(tau_word(w), bits)
    n = len(w)
    return sum(lo[j] * hi[n - j] for j in range(n + 1)) >> bits


class MzvCache:
    """In-memory MZV values keyed by ``(index, digits)``, optionally backed by a JSONL file.

    File records are ``{"index": [...], "digits": p, "value": "..."}``, one per line.
    """

    def __init__(self, path: str | None = None):
        self.path = path
        self._values: dict = {}
        self._loaded = False
        self._lock = threading.Lock()

    def _load(self):
        if self._loaded:
            return
        self._loaded = True
        if not self.path or not os.path.exists(self.path):
            return
        with open(self.path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError:
                    continue
                self._values[(tuple(rec["index"]), int(rec["digits"]))] = rec["value"]

    def get(self, k: Index, digits: int):
        with self._lock:
            self._load()
            v = self._values.get((k, digits))
        if isinstance(v, str):
            with mpmath.workdps(digits + GUARD_DIGITS):
                v = mpf(v)
            self._values[(k, digits)] = v
        return v

    def put(self, k: Index, digits: int, value: mpf) -> None:
        with self._lock:
            self._values[(k, digits)] = value
            if self.path:
                rec = {"index": list(k), "digits": digits,
                       "value": mpmath.nstr(value, digits + GUARD_DIGITS, strip_zeros=False)}
                # one write per record keeps appends whole
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write(json.dumps(rec) + "\n")

    def clear(self):
        with self._lock:
            self._values.clear()


_cache = MzvCache(os.environ.get("SMZV_CACHE"))


def set_cache_path(path: str | None) -> None:
    global _cache
    _cache = MzvCache(path)


def eval_mzv(k: Sequence[int], p: int) -> mpf:
    """``zeta(k)`` to ``p`` decimal digits (absolute error below 10^-p)."""
    k = make_index(k)
    if not is_admissible(k):
        raise NotAdmissible(f"zeta{k} diverges; regularize first")
    if not k:
        return mpf(1)
    _check_precision(p)
    hit = _cache.get(k, p)
    if hit is not None:
        return hit
    digits = p + GUARD_DIGITS
    bits = _bits_for(digits)
    raw = _mzv_fixed(word_of_index(k), bits)
    with mpmath.workdps(digits):
        value = mpmath.ldexp(mpf(raw), -bits)
    _cache.put(k, p, value)
    return value


def eval_mzv_split(k: Sequence[int], p: int, point: Fraction = Fraction(1, 3)) -> mpf:
    """``zeta(k)`` with the integral split at ``point`` instead of 1/2 (uncached).

    The 1/2 split treats a word and its dual identically; any other point
    gives an independent evaluation, used to cross-check duality.
    """
    k = make_index(k)
    if not is_admissible(k):
        raise NotAdmissible(f"zeta{k} diverges; regularize first")
    point = Fraction(point)
    if not 0 < point < 1:
        raise ValueError("point must lie strictly between 0 and 1")
    if not k:
        return mpf(1)
    _check_precision(p)
    digits = p + GUARD_DIGITS
    bits = _bits_for(digits)
    w = word_of_index(k)
    lo = _prefix_values(w, bits, point)
    hi = _prefix_values(tau_word(w), bits, 1 - point)
    n = len(w)
    raw = sum(lo[j] * hi[n - j] for j in range(n + 1)) >> bits
    with mpmath.workdps(digits):
        return mpmath.ldexp(mpf(raw), -bits)


def riemann_zeta(n: int, p: int) -> mpf:
    if n < 2:
        raise NotAdmissible("riemann_zeta needs n >= 2")
    if n % 2 == 0:
        c, e = zeta_even_exact(n)
        with precision(p):
            return mpf(c.numerator) / c.denominator * pi_const(p) ** e
    return eval_mzv((n,), p)


def _round_digits(p: int) -> int:
    # quantized so evaluations at nearby precisions share cache entries
    return -(-p // 16) * 16


def expr_guard(e: MzvExpression) -> int:
    """Extra digits covering cancellation among the terms of ``e``."""
    if not e:
        return GUARD_DIGITS
    big = max(abs(c) for _, c in e)
    mag = max(0, int(math.ceil(math.log10(max(1, float(big))))))
    return GUARD_DIGITS + mag + int(math.ceil(math.log10(len(e) + 1)))


def eval_expr(e: MzvExpression, p: int) -> mpf:
    _check_precision(p)
    digits = _round_digits(p + expr_guard(e))
    with mpmath.workdps(digits + GUARD_DIGITS):
        pi = +mpmath.pi
        total = mpf(0)
        for (pie, syms), c in e:
            term = mpf(c.numerator) / c.denominator
            if pie:
                term *= pi ** pie
            for k in syms:
                term *= eval_mzv(k, digits)
            total += term
    return total


def eval_series(s: TadicSeries, p: int) -> list:
    return [eval_expr(c, p) for c in s.coeffs]

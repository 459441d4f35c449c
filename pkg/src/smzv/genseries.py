"""Truncated power series in ``u`` over mpf, the series F±, G±, and the generating-series identities.

Each identity pairs a definitional left side (MZV symbols from the exact
pipeline, evaluated numerically) with a right side computed by series algebra
on F± and G±.  The ``u^1`` coefficient of F± would be ``zeta(1)``; it is set to
the regularized value 0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

import mpmath
from mpmath import mpf

from .core import MzvExpression, WordPolynomial
from .errors import UnknownLemma
from .numeric import GUARD_DIGITS, eval_expr, eval_mzv, precision, riemann_zeta
from .shuffle import zsh_symbolic
from .tadic import Flavor, zeta_m_symbolic, zeta_reg
from .harmonic import star_expand

DEFAULT_ORDER = 14


class TruncSeries:
    """``c_0 + c_1 u + ... + c_{order-1} u^(order-1)`` with mpf coefficients."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs: Sequence, p: int):
        # mpf() rounds to the active context precision
        with precision(p):
            self.coeffs = [mpf(c) for c in coeffs]
        self.p = p

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, order: int, p: int):
        return cls([0] * order, p)

    @classmethod
    def one(cls, order: int, p: int):
        return cls([1] + [0] * (order - 1), p)

    def _same(self, other):
        if other.order != self.order:
            raise ValueError(f"series orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, TruncSeries):
            self._same(other)
            with precision(self.p):
                return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.p)
        return NotImplemented

    def __neg__(self):
        with precision(self.p):
            return TruncSeries([-a for a in self.coeffs], self.p)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        with precision(self.p):
            if isinstance(other, TruncSeries):
                self._same(other)
                n = self.order
                a, b = self.coeffs, other.coeffs
                out = [mpmath.fsum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]
                return TruncSeries(out, self.p)
            if isinstance(other, Fraction):
                other = mpf(other.numerator) / other.denominator
            return TruncSeries([a * other for a in self.coeffs], self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.invert()
        return self * (1 / Fraction(other))

    def __pow__(self, e: int):
        if e < 0:
            return self.invert() ** (-e)
        out = TruncSeries.one(self.order, self.p)
        for _ in range(e):
            out = out * self
        return out

    def invert(self) -> "TruncSeries":
        a = self.coeffs
        if not a[0]:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        with precision(self.p):
            inv0 = 1 / a[0]
            b = [inv0]
            for k in range(1, self.order):
                b.append(-inv0 * mpmath.fsum(a[i] * b[k - i] for i in range(1, k + 1)))
        return TruncSeries(b, self.p)

    def __repr__(self):
        return f"TruncSeries({[mpmath.nstr(c, 15) for c in self.coeffs]})"


def _signed_power(sign: int, n: int) -> Fraction:
    # (±2)^(-n)
    return Fraction(sign, 2) ** n if sign > 0 else Fraction(-1, 2) ** n


def F(sign: int, order: int, p: int) -> TruncSeries:
    """``sum_n (±2)^(-n) zeta(2n+1) u^(2n+1)`` with the ``zeta(1)`` term set to 0."""
    if order < 1:
        raise ValueError("order must be >= 1")
    out = [mpf(0)] * order
    with precision(p):
        for n in range(1, order):
            if 2 * n + 1 < order:
                c = _signed_power(sign, n)
                out[2 * n + 1] = riemann_zeta(2 * n + 1, p + GUARD_DIGITS) * c.numerator / c.denominator
    return TruncSeries(out, p)


def G(sign: int, order: int, p: int) -> TruncSeries:
    """``sum_n (±2)^(-n) zeta({2}^n) u^(2n)``, with ``zeta({2}^n)`` from the MZV evaluator."""
    if order < 1:
        raise ValueError("order must be >= 1")
    out = [mpf(0)] * order
    with precision(p):
        for n in range(order):
            if 2 * n < order:
                c = _signed_power(sign, n)
                out[2 * n] = eval_mzv((2,) * n, p + GUARD_DIGITS) * c.numerator / c.denominator
    return TruncSeries(out, p)


def series_from_terms(terms: Iterable[tuple], order: int, p: int) -> TruncSeries:
    """Series with coefficient ``c * value(expr)`` at each ``(power, c, expr)``."""
    out = [mpf(0)] * order
    with precision(p):
        for power, c, expr in terms:
            if power < order:
                out[power] += mpf(c.numerator) / c.denominator * eval_expr(expr, p + GUARD_DIGITS)
    return TruncSeries(out, p)


def _alt(n: int) -> Fraction:
    return Fraction(-1) ** n


def _zeta(k) -> MzvExpression:
    return zeta_reg(tuple(k), Flavor.SHUFFLE)


def _zm(k, m) -> MzvExpression:
    return zeta_m_symbolic(tuple(k), m, Flavor.SHUFFLE)


def _lhs_terms(lemma: str, order: int, sign: int):
    """``(power, rational, MzvExpression)`` triples of the definitional left side."""
    n = 0
    while True:
        if lemma == "zeta(4^n)_gen":
            item = (4 * n, _alt(n), _zeta((1, 3) * n))
        elif lemma == "zeta(3,1,3)_gen":
            item = (4 * n + 3, _alt(n), _zeta((3, 1) * n + (3,)))
        elif lemma == "zeta(1,3,1)_gen":
            item = (4 * n + 1, _alt(n), _zeta((1, 3) * n + (1,)))
        elif lemma == "zeta(3,1,3,1)_gen":
            item = (4 * n, _alt(n), _zeta((3, 1) * n))
        elif lemma == "2star_2star":
            item = (4 * n + 2, Fraction(4 * n + 1, 4 ** n), MzvExpression.zeta((4 * n + 2,)))
        elif lemma == "zeta(3,1,2)_gen":
            item = (4 * n + 2, _alt(n), _zeta((3, 1) * n + (2,)))
        elif lemma == "zeta_1(1,3,1,3)_gen":
            item = (4 * n + 1, _alt(n), _zm((1, 3) * n, 1))
        elif lemma == "zeta_1(2^n)_gen":
            item = (2 * n + 1, _signed_power(sign, n), _zm((2,) * n, 1))
        elif lemma == "zeta_1(1,3,1)_gen":
            item = (4 * n + 2, _alt(n), _zm((1, 3) * n + (1,), 1))
        elif lemma == "Z(xyxy)_gen":
            item = (2 * n, _signed_power(sign, n), zsh_symbolic(WordPolynomial.word("xy" * n)))
        elif lemma == "zeta_2(1,3,1,3)_gen":
            item = (4 * n + 2, _alt(n), _zm((1, 3) * n, 2))
        elif lemma == "zeta_2(1,3,1)_gen":
            item = (4 * n + 3, _alt(n), _zm((1, 3) * n + (1,), 2))
        else:
            raise UnknownLemma(f"unknown lemma {lemma!r}")
        if item[0] >= order:
            return
        yield item
        n += 1


def _rhs(lemma: str, order: int, p: int, sign: int) -> TruncSeries:
    Fp, Fm = F(1, order, p), F(-1, order, p)
    Gp, Gm = G(1, order, p), G(-1, order, p)
    GG = Gp * Gm
    half = Fraction(1, 2)
    if lemma == "zeta(4^n)_gen":
        return GG
    if lemma == "zeta(3,1,3)_gen":
        return (Fp - Fm) * GG
    if lemma == "zeta(1,3,1)_gen":
        return (Fp + Fm) * GG
    if lemma == "zeta(3,1,3,1)_gen":
        return (Gp * Gp + Gm * Gm) * half / GG - (Fp * Fp - Fm * Fm) * GG
    if lemma == "2star_2star":
        return (Gm ** -2 - Gp ** -2) * half
    if lemma == "zeta(3,1,2)_gen":
        return (Gp * Gp - Gm * Gm) * half / GG - (Fp - Fm) ** 2 * GG
    if lemma == "zeta_1(1,3,1,3)_gen":
        return -((Fp + Fm) * GG)
    if lemma == "zeta_1(2^n)_gen":
        # -2 F_∓ G_±
        return (Fm * Gp if sign > 0 else Fp * Gm) * (-2)
    if lemma == "zeta_1(1,3,1)_gen":
        return (Gp * Gp - Gm * Gm) * half / GG - (Fp + Fm) ** 2 * GG
    if lemma == "Z(xyxy)_gen":
        # G_±^-1 ± 2 F_∓^2 G_±
        if sign > 0:
            return Gp.invert() + Fm * Fm * Gp * 2
        return Gm.invert() - Fp * Fp * Gm * 2
    if lemma == "zeta_2(1,3,1,3)_gen":
        return Fp * Fm * GG * 2
    if lemma == "zeta_2(1,3,1)_gen":
        return (Fp * Gm * Gm - Fm * Gp * Gp) / GG + Fp * Fm * (Fp + Fm) * GG * 2
    raise UnknownLemma(f"unknown lemma {lemma!r}")


LEMMAS = (
    "zeta(4^n)_gen",
    "zeta(3,1,3)_gen",
    "zeta(1,3,1)_gen",
    "zeta(3,1,3,1)_gen",
    "2star_2star",
    "zeta(3,1,2)_gen",
    "zeta_1(1,3,1,3)_gen",
    "zeta_1(2^n)_gen",
    "zeta_1(1,3,1)_gen",
    "Z(xyxy)_gen",
    "zeta_2(1,3,1,3)_gen",
    "zeta_2(1,3,1)_gen",
)
SIGNED_LEMMAS = frozenset({"zeta_1(2^n)_gen", "Z(xyxy)_gen"})


def canonical_lemma(lemma_id: str) -> str:
    name = lemma_id[4:] if lemma_id.startswith("lem:") else lemma_id
    if name == "prop:2star_2star":
        name = "2star_2star"
    if name not in LEMMAS:
        raise UnknownLemma(f"unknown lemma {lemma_id!r}")
    return name


def series_lhs(lemma_id: str, order: int = DEFAULT_ORDER, p: int = 60, sign: int = 1) -> TruncSeries:
    lemma = canonical_lemma(lemma_id)
    return series_from_terms(_lhs_terms(lemma, order, sign), order, p)


def series_rhs(lemma_id: str, order: int = DEFAULT_ORDER, p: int = 60, sign: int = 1) -> TruncSeries:
    return _rhs(canonical_lemma(lemma_id), order, p, sign)


def default_tol(p: int) -> mpf:
    return mpf(10) ** (-(p - 20))


def compare_series(lhs: TruncSeries, rhs: TruncSeries, tol, p: int, extra: dict | None = None) -> list:
    records = []
    with precision(p):
        for power, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
            diff = abs(a - b)
            rec = {"power": power,
                   "lhs": mpmath.nstr(a, p),
                   "rhs": mpmath.nstr(b, p),
                   "absdiff": mpmath.nstr(diff, 5),
                   "pass": bool(diff <= tol)}
            if extra:
                rec.update(extra)
            records.append(rec)
    return records


def verify_series(lemma_id: str, order: int = DEFAULT_ORDER, p: int = 60, tol=None) -> dict:
    """Coefficientwise comparison of both sides; signed lemmas check both signs."""
    lemma = canonical_lemma(lemma_id)
    tol = default_tol(p) if tol is None else mpf(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    records = []
    for sign in ((1, -1) if lemma in SIGNED_LEMMAS else (1,)):
        extra = {"sign": "+" if sign > 0 else "-"} if lemma in SIGNED_LEMMAS else None
        records += compare_series(series_lhs(lemma, order, p, sign),
                                  series_rhs(lemma, order, p, sign), tol, p, extra)
    return {"lemma": lemma, "order": order, "precision": p,
            "tol": mpmath.nstr(tol, 3), "coefficients": records,
            "verdict": "pass" if all(r["pass"] for r in records) else "fail"}


# ---------------------------------------------------------------------------
# auxiliary identities used by the generating-series lemmas


def preamble_identities(order: int, p: int) -> list:
    """``(name, lhs, rhs)`` series pairs for the parity splittings of F±, G± and related inverses."""
    Fp, Fm = F(1, order, p), F(-1, order, p)
    Gp, Gm = G(1, order, p), G(-1, order, p)

    def from_fn(fn: Callable[[int], tuple]):
        terms = []
        for n in range(order):
            item = fn(n)
            if item is not None:
                terms.append(item)
        return series_from_terms(terms, order, p)

    def odd_zeta(n, residue, scale):
        if 4 * n + residue == 1:
            return None
        return (4 * n + residue, scale * Fraction(1, 4 ** n), MzvExpression.zeta((4 * n + residue,)))

    def star(k):
        out = MzvExpression.zero()
        for l, c in star_expand(k):
            out = out + MzvExpression.zeta(l, c)
        return out

    out = [
        ("F+ + F-", Fp + Fm, from_fn(lambda n: odd_zeta(n, 1, 2))),
        ("F+ - F-", Fp - Fm, from_fn(lambda n: odd_zeta(n, 3, 1))),
        ("G+ G- * sum 4^-n zeta*({4}^n) u^4n", Gp * Gm * from_fn(
            lambda n: (4 * n, Fraction(1, 4 ** n), star((4,) * n))),
         TruncSeries.one(order, p)),
        ("G+ G- = sum (-4)^-n zeta({4}^n) u^4n", Gp * Gm,
         from_fn(lambda n: (4 * n, Fraction(-1, 4) ** n, MzvExpression.zeta((4,) * n)))),
        ("(G+^2 + G-^2)/2 = sum zeta({4}^n) u^4n", (Gp * Gp + Gm * Gm) * Fraction(1, 2),
         from_fn(lambda n: (4 * n, Fraction(1), MzvExpression.zeta((4,) * n)))),
    ]
    for sign, g_inv in ((1, Gm.invert()), (-1, Gp.invert())):
        out.append((f"sum ({'+' if sign > 0 else '-'}2)^-n zeta*({{2}}^n) u^2n = G^-1",
                    from_fn(lambda n, s=sign: (2 * n, _signed_power(s, n), star((2,) * n))), g_inv))
    for sign, g in ((1, Gp), (-1, Gm)):
        with precision(p):
            closed = [mpf(0)] * order
            for n in range(order):
                if 2 * n < order:
                    closed[2 * n] = (mpf(sign) ** n * 2 ** (n + 1) * mpmath.pi ** (2 * n)
                                     / mpmath.factorial(2 * n + 2))
        out.append((f"G{'+' if sign > 0 else '-'}^2 closed form", g * g, TruncSeries(closed, p)))
    return out


def cited_identities(n_max: int) -> list:
    """Closed forms for alternating 3,1 / 1,3 MZVs as ``(name, lhs, rhs)`` MzvExpressions."""

    def z4(j):
        return MzvExpression.zeta((4,) * j)

    def z4star(j):
        out = MzvExpression.zero()
        for l, c in star_expand((4,) * j):
            out = out + MzvExpression.zeta(l, c)
        return out

    def rz(n):
        return MzvExpression.zero() if n == 1 else MzvExpression.zeta((n,))

    out = []
    for n in range(n_max + 1):
        rhs = MzvExpression.zero()
        for i in range(n + 1):
            rhs = rhs + (rz(4 * i + 3) * z4(n - i)).scale(_alt(i) / 4 ** n)
        out.append((f"zeta({{3,1}}^{n},3)", _zeta((3, 1) * n + (3,)), rhs))

        rhs = MzvExpression.zero()
        for i in range(n + 1):
            rhs = rhs + (rz(4 * i + 1) * z4(n - i)).scale(_alt(i) * Fraction(2, 4 ** n))
        out.append((f"zeta({{1,3}}^{n},1)", _zeta((1, 3) * n + (1,)), rhs))

        rhs = MzvExpression.zero()
        for i in range(n + 1):
            rhs = rhs + (z4star(i) * z4(n - i)).scale(_alt(n) / 4 ** i)
        for i in range(1, n):
            for j in range(n - i):
                c = _alt(i + j) * Fraction(8, 4 ** n)
                rhs = rhs + (rz(4 * i + 1) * rz(4 * j + 3) * z4(n - i - j - 1)).scale(c)
        out.append((f"zeta({{3,1}}^{n})", _zeta((3, 1) * n), rhs))

        rhs = MzvExpression.zero()
        for i in range(n + 1):
            inner = MzvExpression.zeta((4 * i + 2,), 4 * i + 1)
            for j in range(1, i + 1):
                inner = inner - (rz(4 * j - 1) * rz(4 * i - 4 * j + 3)).scale(4)
            rhs = rhs + (z4(n - i) * inner).scale(_alt(i) / 4 ** n)
        out.append((f"zeta({{3,1}}^{n},2)", _zeta((3, 1) * n + (2,)), rhs))
    return out

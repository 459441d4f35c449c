"""Closed-form right-hand sides for the t-adic SMZVs of alternating 1/3 indices.

Everything is built as exact MzvExpressions over powers of pi and Riemann zeta
symbols ``zeta(n) = (n,)``; ``zeta(1)`` is replaced by 0 at construction.
Congruences modulo pi^2 are only emitted, never checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .core import MzvExpression, TadicSeries
from .errors import UnknownId

F = Fraction


def rz(n: int, c=1) -> MzvExpression:
    """``c * zeta(n)`` with the convention ``zeta(1) = 0``."""
    if n == 1:
        return MzvExpression.zero()
    return MzvExpression.zeta((n,), c)


def pi(e: int, c=1) -> MzvExpression:
    return MzvExpression.pi_power(e, c)


def _pow(base: int, e: int) -> Fraction:
    return F(base) ** e


def main0_rhs(n: int) -> TadicSeries:
    """``zeta_S2({1,3}^n)``."""
    c0 = pi(4 * n, 2 * _pow(-4, n) / factorial(4 * n + 2))
    c1 = MzvExpression.zero()
    for n0 in range(n + 1):
        n1 = n - n0
        c = _pow(-4, n0 + 1) * (2 - _pow(-4, -n1)) / factorial(4 * n0 + 2)
        c1 = c1 + pi(4 * n0) * rz(4 * n1 + 1, c)
    for n0 in range(1, 2 * n, 2):
        n1 = 2 * n - n0
        c = -_pow(-1, n) * _pow(2, n0 - n1 + 2) / factorial(2 * n0 + 2)
        c1 = c1 + pi(2 * n0) * rz(2 * n1 + 1, c)
    return TadicSeries([c0, c1], 2)


def main1_rhs(n: int) -> TadicSeries:
    """``zeta_S3({3,1}^n)``."""
    c0 = pi(4 * n, 2 * _pow(-4, n) / factorial(4 * n + 2))
    c1 = MzvExpression.zero()
    for n0 in range(2 * n + 1):
        n1 = 2 * n - n0
        c = _pow(-1, n + 1 + n0) * _pow(2, n0 - n1 + 2) / factorial(2 * n0 + 2)
        c1 = c1 + pi(2 * n0) * rz(2 * n1 + 1, c)
    c2 = MzvExpression.zero()
    for n0 in range(2 * n + 1):
        for n1 in range(2 * n - n0 + 1):
            n2 = 2 * n - n0 - n1
            c = _pow(-1, n + n0) * _pow(2, n0 - n1 - n2 + 2) / factorial(2 * n0 + 2)
            c2 = c2 + pi(2 * n0, c) * rz(2 * n1 + 1) * rz(2 * n2 + 1)
    return TadicSeries([c0, c1, c2], 3)


def main2_rhs(n: int) -> TadicSeries:
    """``zeta_S3({1,3}^n, 1)``."""
    c1 = pi(4 * n + 2, _pow(-4, n + 1) / factorial(4 * n + 4))
    c2 = MzvExpression.zero()
    for n0 in range(2 * n + 2):
        n1 = 2 * n + 1 - n0
        c = _pow(-1, n + n1) * _pow(2, n0 - n1 + 2) / factorial(2 * n0 + 2)
        c2 = c2 + pi(2 * n0) * rz(2 * n1 + 1, c)
    return TadicSeries([MzvExpression.zero(), c1, c2], 3)


THEOREMS = {"main0": main0_rhs, "main1": main1_rhs, "main2": main2_rhs}

# theorem -> (index builder, truncation) for the definitional side
THEOREM_INDEX = {
    "main0": (lambda n: (1, 3) * n, 2),
    "main1": (lambda n: (3, 1) * n, 3),
    "main2": (lambda n: (1, 3) * n + (1,), 3),
}


def theorem_rhs(name: str, n: int) -> TadicSeries:
    try:
        return THEOREMS[name](n)
    except KeyError:
        raise UnknownId(f"unknown theorem {name!r}") from None


# ---------------------------------------------------------------------------
# displayed values for short indices


def zhat_1(truncation: int) -> TadicSeries:
    return TadicSeries([MzvExpression.zero()] + [rz(m + 1, -1) for m in range(1, truncation)],
                       truncation)


def zhat_3(truncation: int) -> TadicSeries:
    return TadicSeries(
        [MzvExpression.zero()]
        + [rz(m + 3, F(-(m + 1) * (m + 2), 2)) for m in range(1, truncation)],
        truncation)


def zs3_13(with_t3: bool = False) -> TadicSeries:
    coeffs = [
        pi(4, F(-1, 90)),
        pi(2, F(1, 6)) * rz(3) + rz(5, F(-9, 2)),
        pi(6, F(-19, 3780)) + rz(3, F(1, 2)) * rz(3),
    ]
    if with_t3:
        coeffs.append(pi(4, F(1, 90)) * rz(3) + pi(2) * rz(5) + rz(7, -17))
    return TadicSeries(coeffs)


def zs3_31(with_t3: bool = False) -> TadicSeries:
    coeffs = [
        pi(4, F(-1, 90)),
        pi(2, F(-1, 6)) * rz(3) + rz(5, F(1, 2)),
        rz(3, F(-1, 2)) * rz(3),
    ]
    if with_t3:
        coeffs.append(pi(4, F(1, 45)) * rz(3) + rz(7, -3))
    return TadicSeries(coeffs)


def summary_rhs(name: str, param: int | None = None) -> TadicSeries:
    """Displayed right-hand sides.

    ``ZS1_31n3`` takes ``n``; ``ZHAT_1``/``ZHAT_3`` take the truncation order;
    ``ZS3_13``/``ZS3_31`` are modulo t^3.
    """
    if name == "ZS1_31n3":
        return TadicSeries.zero(1)
    if name == "ZHAT_1":
        return zhat_1(param or 6)
    if name == "ZHAT_3":
        return zhat_3(param or 6)
    if name == "ZS3_13":
        return zs3_13()
    if name == "ZS3_31":
        return zs3_31()
    raise UnknownId(f"unknown summary id {name!r}")


def summary_index(name: str, n: int = 0):
    return {
        "ZS1_31n3": (3, 1) * n + (3,),
        "ZHAT_1": (1,),
        "ZHAT_3": (3,),
        "ZS3_13": (1, 3),
        "ZS3_31": (3, 1),
    }[name]


SUMMARY_IDS = ("ZS1_31n3", "ZHAT_1", "ZHAT_3", "ZS3_13", "ZS3_31")


def intro_t2_coefficient() -> MzvExpression:
    """Exact coefficient of t^2 in ``zeta_S3(1,3,1,3)``."""
    z = rz
    return (
        z(2, F(1, 2)) * z(3) * z(5)
        + z(2) * MzvExpression.zeta((3, 5))
        + z(3, F(-1, 2)) * z(3) * z(4)
        + z(3, F(-1, 4)) * z(7)
        + z(5, F(81, 8)) * z(5)
        + z(10, F(-103, 10))
    )


# ---------------------------------------------------------------------------
# congruences modulo pi^2 (emitted only)

MOD_PI2_NOTE = "congruence mod pi^2, NOT verified"


@dataclass(frozen=True)
class Congruence:
    name: str
    index: tuple
    series: TadicSeries
    modulus: str = "pi^2"
    verified: bool = False
    note: str = field(default=MOD_PI2_NOTE)


def _delta(n: int) -> MzvExpression:
    return MzvExpression.one() if n == 0 else MzvExpression.zero()


def cor1(n: int) -> Congruence:
    """``zeta_S3({3,1}^n)`` modulo pi^2."""
    c1 = rz(4 * n + 1, -2 * _pow(-4, -n))
    c2 = MzvExpression.zero()
    for n1 in range(2 * n + 1):
        c2 = c2 + rz(2 * n1 + 1, 2 * _pow(-4, -n)) * rz(2 * (2 * n - n1) + 1)
    return Congruence("cor1", (3, 1) * n, TadicSeries([_delta(n), c1, c2], 3))


def cor2(n: int) -> Congruence:
    """``zeta_S3({1,3}^n, 1)`` modulo pi^2."""
    c2 = rz(4 * n + 3, -_pow(-4, -n))
    return Congruence("cor2", (1, 3) * n + (1,),
                      TadicSeries([MzvExpression.zero(), MzvExpression.zero(), c2], 3))


def conj_s3_13n(n: int) -> Congruence:
    """Conjectural ``zeta_S3({1,3}^n)`` modulo pi^2."""
    c1 = rz(4 * n + 1, 2 * _pow(-4, -n) - 4)
    c2 = MzvExpression.zero()
    for n1 in range(n):
        c2 = c2 + rz(4 * n1 + 3, -2 * _pow(-4, -n)) * rz(4 * (n - 1 - n1) + 3)
    for n1 in range(n + 1):
        n2 = n - n1
        c = 2 * (_pow(-4, -n1) - 2) * (_pow(-4, -n2) - 2)
        c2 = c2 + rz(4 * n1 + 1, c) * rz(4 * n2 + 1)
    return Congruence("conj_S3_13n", (1, 3) * n, TadicSeries([_delta(n), c1, c2], 3))


def _single(name, index, power, expr) -> Congruence:
    coeffs = [MzvExpression.zero()] * power + [expr]
    return Congruence(name, index, TadicSeries(coeffs, power + 1))


def intro_displays() -> list:
    """Single-coefficient congruences displayed for indices not covered by the theorems."""
    z35 = MzvExpression.zeta((3, 5))
    z335 = MzvExpression.zeta((3, 3, 5))
    return [
        _single("S2(3,1,3)_t1", (3, 1, 3), 1, rz(3, -5) * rz(5) - z35),
        _single("S4(1,3,1,3)_t3", (1, 3, 1, 3), 3,
                rz(11, F(-845, 4)) + rz(3, F(-9, 4)) * rz(3) * rz(5) - rz(3) * z35 + z335.scale(2)),
        _single("S4(3,1,3,1)_t3", (3, 1, 3, 1), 3,
                rz(11, F(605, 4)) + rz(3, F(19, 4)) * rz(3) * rz(5) + rz(3, 2) * z35 - z335.scale(2)),
        _single("S4(1,3,1)_t3", (1, 3, 1), 3, rz(3, F(9, 2)) * rz(5) + z35),
    ]


def emit_conjecture(name: str, n: int = 0):
    """Emit a mod-pi^2 statement (flagged unverified).  ``intro`` returns a list."""
    if name == "cor1":
        return cor1(n)
    if name == "cor2":
        return cor2(n)
    if name in ("conj_S3_13n", "conj"):
        return conj_s3_13n(n)
    if name == "intro":
        return intro_displays()
    raise UnknownId(f"unknown conjecture id {name!r}")

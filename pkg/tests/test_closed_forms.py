from fractions import Fraction

import pytest

from smzv.closed_forms import (
    MOD_PI2_NOTE,
    emit_conjecture,
    intro_t2_coefficient,
    main0_rhs,
    main1_rhs,
    main2_rhs,
    summary_rhs,
    theorem_rhs,
    zs3_13,
)
from smzv.core import MzvExpression, TadicSeries
from smzv.errors import UnknownId
from smzv.verify import check_intro, check_summary, check_theorem

Z = MzvExpression.zeta
PI = MzvExpression.pi_power
ZERO = MzvExpression.zero()
ONE = MzvExpression.one()


def test_main1_examples():
    assert main1_rhs(0) == TadicSeries([ONE, ZERO, ZERO], 3)
    assert main1_rhs(1).coeffs[0] == PI(4, Fraction(-1, 90))
    # n0 = 1 term of the t coefficient: 2^2/4! pi^2 zeta(3), with sign (-1)^(1+1+1)
    assert main1_rhs(1).coeffs[1].coefficient((2, ((3,),))) == Fraction(-1, 6)


def test_main2_examples():
    assert main2_rhs(0) == TadicSeries([ZERO, PI(2, Fraction(-1, 6)), Z((3,), -1)], 3)
    assert main2_rhs(1).coeffs[1] == PI(6, Fraction(16, 40320))


def test_main0_examples():
    assert main0_rhs(0) == TadicSeries([ONE, ZERO], 2)
    assert main0_rhs(1) == TadicSeries(
        [PI(4, Fraction(-1, 90)), PI(2, Fraction(1, 6)) * Z((3,)) + Z((5,), Fraction(-9, 2))], 2)


def test_summary_examples():
    assert summary_rhs("ZHAT_3").coeffs[1] == Z((4,), -3)
    assert summary_rhs("ZS3_31").coeffs[1] == PI(2, Fraction(-1, 6)) * Z((3,)) + Z((5,), Fraction(1, 2))
    assert summary_rhs("ZS3_13").coeffs[2] == PI(6, Fraction(-19, 3780)) + (Z((3,)) * Z((3,))).scale(Fraction(1, 2))
    assert zs3_13(with_t3=True).truncation == 4
    with pytest.raises(UnknownId):
        summary_rhs("ZS9")
    with pytest.raises(UnknownId):
        theorem_rhs("main9", 1)


def test_conjecture_emitters_are_flagged():
    c = emit_conjecture("cor2", 0)
    assert c.series.coeffs[2] == Z((3,), -1)
    assert not c.verified and c.note == MOD_PI2_NOTE
    assert emit_conjecture("conj_S3_13n", 0).series == TadicSeries([ONE, ZERO, ZERO], 3)
    assert all(not d.verified for d in emit_conjecture("intro"))
    with pytest.raises(UnknownId):
        emit_conjecture("cor7")


def test_intro_value_has_six_terms():
    e = intro_t2_coefficient()
    assert len(e) == 6
    assert e.coefficient((0, ((5,), (5,)))) == Fraction(81, 8)


@pytest.mark.parametrize("name", ["main0", "main1", "main2"])
def test_theorems_small_n(name):
    rep = check_theorem(name, max_n=2)
    assert rep["verdict"] == "pass", rep["failures"]


def test_summary_checks():
    for name in ("ZS1_31n3", "ZHAT_1", "ZHAT_3", "ZS3_13", "ZS3_31"):
        for rep in check_summary(name):
            assert rep["verdict"] == "pass", (rep["name"], rep["failures"])


def test_intro_check():
    assert check_intro()["verdict"] == "pass"

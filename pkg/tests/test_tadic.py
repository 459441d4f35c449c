import pytest
from hypothesis import given, strategies as st

from smzv.core import IndexCombination, MzvExpression, TadicSeries
from smzv.harmonic import harmonic, ic
from smzv.tadic import Flavor, I0, I1, sigma, t_adic_smzv, zeta_m_symbolic, zeta_reg, zeta_S2_via_I
from smzv.numeric import eval_series
from smzv.verify import check_I0, check_I1_reversal, check_I1_sum, check_sha, check_sigma

Z = MzvExpression.zeta
indices = st.lists(st.integers(1, 4), max_size=3).map(tuple)


def test_flavor_parse():
    assert Flavor.parse("star") is Flavor.HARMONIC
    assert Flavor.parse("sh") is Flavor.SHUFFLE
    with pytest.raises(ValueError):
        Flavor.parse("zz")


def test_zeta_m_examples():
    assert zeta_m_symbolic((2, 3), 0) == Z((2, 3))
    assert zeta_m_symbolic((2,), 1) == Z((3,), 2)
    assert zeta_m_symbolic((2,), 1, "star") == Z((3,), 2)
    assert zeta_m_symbolic((), 0) == MzvExpression.one()
    assert zeta_m_symbolic((), 2) == 0


def test_zeta_m_word_and_sum_agree():
    for k in [(1,), (2,), (1, 3), (3, 1), (2, 1, 2)]:
        for m in range(4):
            assert (zeta_m_symbolic(k, m, method="word")
                    == zeta_m_symbolic(k, m, method="sum")), (k, m)


def test_zeta_m_errors():
    with pytest.raises(ValueError):
        zeta_m_symbolic((2,), -1)
    with pytest.raises(ValueError):
        zeta_m_symbolic((2,), 1, "star", method="word")


def test_t_adic_examples():
    assert t_adic_smzv((3,), 2) == TadicSeries([MzvExpression.zero(), Z((4,), -3)], 2)
    assert t_adic_smzv((1,), 3) == TadicSeries(
        [MzvExpression.zero(), Z((2,), -1), Z((3,), -1)], 3)
    assert t_adic_smzv((3, 1, 3), 1) == TadicSeries.zero(1)
    assert t_adic_smzv((), 1) == TadicSeries.constant(MzvExpression.one(), 1)
    with pytest.raises(ValueError):
        t_adic_smzv((1,), 0)


def test_sigma_examples():
    assert sigma(ic(2)) == ic(3).scale(2)
    assert sigma(ic(1, 3)) == ic(2, 3) + ic(1, 4).scale(3)
    assert sigma(IndexCombination.index(())) == 0


@given(indices, indices)
def test_sigma_is_derivation(k, l):
    a, b = IndexCombination.index(k), IndexCombination.index(l)
    assert sigma(harmonic(a, b)) == harmonic(sigma(a), b) + harmonic(a, sigma(b))


def test_I_examples():
    assert I0((3,)) == 0
    assert I0((1, 3)) == -ic(4)
    assert I0(()) == IndexCombination.index(())
    assert I1(()) == 0
    assert I1((1, 3)) + I1((3, 1)) == ic(5).scale(-4)


def test_index_lemma_battery():
    for rep in (check_sha(), check_I0(), check_I1_reversal(), check_I1_sum(), check_sigma()):
        assert rep["verdict"] == "pass", (rep["name"], rep["failures"])
    assert check_sigma()["cases"] == 200


def test_zeta_S2_via_I_examples(approx60):
    assert zeta_S2_via_I(()) == TadicSeries.constant(MzvExpression.one(), 2)
    s = zeta_S2_via_I((1, 3))
    assert s.coeffs[0] == Z((4,), -1)
    for k in [(3,), (1, 3), (3, 1), (2, 1, 2), (1, 3, 1)]:
        a = eval_series(zeta_S2_via_I(k), 60)
        b = eval_series(t_adic_smzv(k, 2, Flavor.HARMONIC), 60)
        assert all(approx60(x, y) for x, y in zip(a, b)), k


def test_zeta_reg_flavors_differ_only_by_regularization():
    # admissible indices carry no regularization at all
    assert zeta_reg((1, 3), Flavor.SHUFFLE) == zeta_reg((1, 3), Flavor.HARMONIC) == Z((1, 3))
    assert zeta_reg((1,), Flavor.SHUFFLE) == 0

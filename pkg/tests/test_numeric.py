import json
import random
import threading
from fractions import Fraction

import mpmath
import pytest

from smzv import numeric
from smzv.core import MzvExpression, TadicSeries
from smzv.errors import NotAdmissible, PrecisionUnreachable
from smzv.numeric import (
    bernoulli,
    eval_expr,
    eval_mzv,
    eval_mzv_split,
    eval_series,
    pi_const,
    riemann_zeta,
    zeta_even_exact,
)
from smzv.verify import check_antipode, check_kernel, kernel_closed_forms

P = 60


def close(a, b, digits):
    with mpmath.workdps(digits + 20):
        return abs(a - b) <= mpmath.mpf(10) ** (-digits)


def test_classical_values():
    with mpmath.workdps(80):
        pi = +mpmath.pi
        assert close(riemann_zeta(2, P), pi ** 2 / 6, P)
        assert close(riemann_zeta(4, P), pi ** 4 / 90, P)
        assert close(riemann_zeta(3, P), mpmath.zeta(3), P)
        assert close(eval_mzv((1, 3), P), pi ** 4 / 360, P)
        assert close(pi_const(P), pi, P)


def test_bernoulli():
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(3) == 0
    assert zeta_even_exact(2) == (Fraction(1, 6), 2)


def test_eval_mzv_conventions():
    assert eval_mzv((), P) == 1
    with pytest.raises(NotAdmissible):
        eval_mzv((2, 1), P)
    with pytest.raises(PrecisionUnreachable):
        eval_mzv((3,), numeric.MAX_DIGITS + 1)


def test_known_relations():
    assert close(eval_mzv((1, 2), P), eval_mzv((3,), P), P)
    # Euler: zeta(2,1) in the increasing convention is zeta(1,2) = zeta(3)
    with mpmath.workdps(80):
        assert close(eval_mzv((2, 2), P), (mpmath.zeta(2) ** 2 - mpmath.zeta(4)) / 2, P)


def test_split_point_independent():
    rng = random.Random(5)
    for _ in range(10):
        k = tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 3))) + (rng.randint(2, 4),)
        assert close(eval_mzv(k, P), eval_mzv_split(k, P), P)
        assert close(eval_mzv(k, P), eval_mzv_split(k, P, Fraction(3, 4)), P)


def test_eval_expr_examples():
    assert eval_expr(MzvExpression.one(), P) == 1
    e = MzvExpression.pi_power(2) * MzvExpression.zeta((3,))
    with mpmath.workdps(80):
        # arithmetic on the returned mpf values must happen at high precision too
        assert close(eval_expr(MzvExpression.zeta((1, 2), -2), P), -2 * eval_mzv((3,), P), P)
        assert close(eval_expr(e, P), mpmath.pi ** 2 * mpmath.zeta(3), P)
    s = TadicSeries([MzvExpression.one(), MzvExpression.zeta((2,))], 2)
    assert len(eval_series(s, P)) == 2


def test_kernel_battery():
    closed = kernel_closed_forms()
    assert len(closed) == 9
    for rep in check_kernel(p=P):
        assert rep["verdict"] == "pass", (rep["name"], rep["failures"])
        if rep["name"] in ("duality", "shuffle-consistency", "stuffle-consistency"):
            assert rep["cases"] >= 100


def test_antipode():
    rep = check_antipode(p=P)
    assert rep["verdict"] == "pass", rep["failures"]


def test_cache_file_roundtrip(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache = numeric.MzvCache(str(path))
    old = numeric._cache
    numeric._cache = cache
    try:
        v = eval_mzv((2, 5), 30)
        rec = json.loads(path.read_text().splitlines()[0])
        assert rec["index"] == [2, 5] and rec["digits"] == 30
        numeric._cache = numeric.MzvCache(str(path))
        assert close(eval_mzv((2, 5), 30), v, 30)
    finally:
        numeric._cache = old


def test_concurrent_evaluation_deterministic():
    out = {}

    def work(k):
        out[k] = eval_mzv(k, 40)

    ks = [(2, 3), (1, 4), (3, 3), (1, 1, 5)]
    threads = [threading.Thread(target=work, args=(k,)) for k in ks * 2]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for k in ks:
        assert out[k] == eval_mzv(k, 40)

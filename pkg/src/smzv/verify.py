"""The verification battery shared by the command line and the test-suite.

Every check returns a plain dict::

    {"name", "kind": "exact" | "numeric" | "informational", "cases",
     "verdict": "pass" | "fail", "failures": [...], "max_absdiff"?}

Informational checks never fail a run.  Numeric checks compare at ``p`` digits
against ``tol`` (default ``10^-(p-20)``).  Randomized checks draw from
``random.Random(seed)``, so reports are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from math import factorial

import mpmath
from mpmath import mpf

from .closed_forms import (
    SUMMARY_IDS,
    THEOREM_INDEX,
    intro_t2_coefficient,
    summary_index,
    summary_rhs,
    theorem_rhs,
    zs3_13,
    zs3_31,
)
from .core import (
    IndexCombination,
    MzvExpression,
    WordPolynomial,
    compositions,
    index_of_word,
    index_weight,
    is_admissible,
    no_adjacent_ones,
    tau_word,
    word_of_index,
)
from .errors import UnknownId
from .genseries import LEMMAS, canonical_lemma, cited_identities, preamble_identities, verify_series
from .harmonic import harmonic, ic, index_shuffle, sha_alternating_lhs, star_expand
from .numeric import eval_expr, eval_mzv, eval_mzv_split, eval_series, precision
from .shuffle import reg_sh, regshwd_rhs, shuffle, x_power_word, zsh_symbolic
from .tadic import Flavor, I0, I1, sigma, t_adic_smzv, zeta_m_symbolic, zeta_reg

DEFAULT_PREC = 60
DEFAULT_SEED = 0
MAX_FAILURES = 10  # failures listed per check; the count is always exact


def default_tol(p: int) -> mpf:
    return mpf(10) ** (-(p - 20))


def _result(name: str, kind: str, cases: int, failures: list, **extra) -> dict:
    out = {"name": name, "kind": kind, "cases": cases,
           "verdict": "pass" if not failures or kind == "informational" else "fail",
           "failure_count": len(failures), "failures": failures[:MAX_FAILURES]}
    out.update(extra)
    return out


def _exact(name: str, cases) -> dict:
    """``cases`` yields ``(label, lhs, rhs)`` with exactly comparable sides."""
    n = 0
    failures = []
    for label, lhs, rhs in cases:
        n += 1
        if lhs != rhs:
            failures.append({"case": label, "lhs": repr(lhs), "rhs": repr(rhs)})
    return _result(name, "exact", n, failures)


def _value(v, p: int) -> mpf:
    if isinstance(v, MzvExpression):
        return eval_expr(v, p)
    return v


def _numeric(name: str, cases, p: int, tol, kind: str = "numeric") -> dict:
    """``cases`` yields ``(label, lhs, rhs)``; sides are MzvExpressions or mpf."""
    n = 0
    failures = []
    worst = mpf(0)
    for label, lhs, rhs in cases:
        n += 1
        a, b = _value(lhs, p), _value(rhs, p)
        with precision(p):
            diff = abs(a - b)
        worst = max(worst, diff)
        if not diff <= tol:
            failures.append({"case": label, "lhs": mpmath.nstr(a, 30), "rhs": mpmath.nstr(b, 30),
                             "absdiff": mpmath.nstr(diff, 5)})
    return _result(name, kind, n, failures, tol=mpmath.nstr(tol, 3),
                   max_absdiff=mpmath.nstr(worst, 5))


def _series_cases(label: str, lhs, rhs, powers=None):
    powers = range(lhs.truncation) if powers is None else powers
    for m in powers:
        yield f"{label} t^{m}", lhs.coeffs[m], rhs.coeffs[m]


# ---------------------------------------------------------------------------
# word identities


def _w(s: str, c=1) -> WordPolynomial:
    return WordPolynomial.word(s, c)


def _alternating_word_sum(left, right, n: int) -> WordPolynomial:
    out = WordPolynomial.zero()
    for i in range(n + 1):
        term = shuffle(_w(left(i)), _w(right(n - i)))
        out = out + (term if i % 2 == 0 else -term)
    return out


def word_lemma_lhs(name: str, n: int) -> WordPolynomial:
    left = lambda i: "x" + "yx" * i  # noqa: E731
    right = {
        "wordA": lambda j: "yx" * j,
        "word1": lambda j: "xy" * j,
        "wordB": lambda j: "yx" * j + "y",
        "word2": lambda j: "x" + "yx" * j,
    }
    if name not in right:
        raise UnknownId(f"unknown word lemma {name!r}")
    return _alternating_word_sum(left, right[name], n)


def word_lemma_rhs(name: str, n: int) -> WordPolynomial:
    h, odd = divmod(n, 2)
    c = (-1) ** h * 2 ** n
    if name == "wordA":
        return _w("x" + "yyxx" * h, c) if not odd else _w("y" + "xxyy" * h + "xx", c)
    if name == "word1":
        return _w("xxyy" * h + "x", c) if not odd else _w("xx" + "yyxx" * h + "y", c)
    if name == "wordB":
        if not odd:
            return _w("x" + "yyxx" * h + "y", c) + _w("yxxy" * h + "yx", c)
        return _w("xyy" + "xxyy" * h + "x", -c) + _w("y" + "xxyy" * h + "xxy", c)
    if name == "word2":
        return WordPolynomial.zero() if odd else _w("xx" + "yyxx" * h, 2 * c)
    raise UnknownId(f"unknown word lemma {name!r}")


WORD_LEMMAS = ("wordA", "word1", "wordB", "word2")


def check_word_lemma(name: str, max_n: int = 10) -> dict:
    return _exact(name, ((f"n={n}", word_lemma_lhs(name, n), word_lemma_rhs(name, n))
                         for n in range(max_n + 1)))


# ---------------------------------------------------------------------------
# index identities


def _icomb(k) -> IndexCombination:
    return IndexCombination.index(tuple(k))


def check_sha(max_part: int = 4, max_n: int = 6) -> dict:
    def cases():
        for a, b, n in product(range(1, max_part + 1), range(1, max_part + 1), range(max_n + 1)):
            yield (f"a={a},b={b},n={n}", sha_alternating_lhs(a, b, n),
                   index_shuffle(ic(b), _icomb((a,) * n)))
    return _exact("sha", cases())


def check_I0(odd_parts=(1, 3, 5), max_n: int = 4) -> dict:
    def cases():
        for a, b, n in product(odd_parts, odd_parts, range(max_n + 1)):
            yield (f"a={a},b={b},n={n}", I0((a, b) * n),
                   _icomb((a + b,) * n).scale((-1) ** n))
    return _exact("I0", cases())


def check_I1_reversal(max_weight: int = 10) -> dict:
    def cases():
        for w in range(0, max_weight + 1, 2):
            for k in compositions(w):
                yield str(k), I1(k) + I1(k[::-1]), sigma(I0(k))
    return _exact("I1rev", cases())


def I1_pair_rhs(n: int) -> IndexCombination:
    out = IndexCombination.zero()
    for i in range(n):
        term = harmonic(ic(4 * i + 5), _icomb((4,) * (n - i - 1)))
        out = out + (term if i % 2 == 0 else -term)
    return out.scale(4 * (-1) ** n)


def check_I1_sum(max_n: int = 4) -> dict:
    return _exact("I1sum", ((f"n={n}", I1((1, 3) * n) + I1((3, 1) * n), I1_pair_rhs(n))
                            for n in range(1, max_n + 1)))


def _random_index(rng: random.Random, max_depth: int, max_part: int):
    return tuple(rng.randint(1, max_part) for _ in range(rng.randint(0, max_depth)))


def check_sigma(cases: int = 200, seed: int = DEFAULT_SEED) -> dict:
    rng = random.Random(seed)

    def gen():
        for _ in range(cases):
            k, l = _random_index(rng, 3, 5), _random_index(rng, 3, 5)
            a, b = _icomb(k), _icomb(l)
            yield (f"{k}*{l}", sigma(harmonic(a, b)),
                   harmonic(sigma(a), b) + harmonic(a, sigma(b)))
    return _exact("sigma", gen())


INDEX_LEMMAS = ("sha", "I0", "I1rev", "I1sum", "sigma")


def check_index_lemma(name: str, seed: int = DEFAULT_SEED) -> dict:
    if name == "sha":
        return check_sha()
    if name == "I0":
        return check_I0()
    if name == "I1rev":
        return check_I1_reversal()
    if name == "I1sum":
        return check_I1_sum()
    if name == "sigma":
        return check_sigma(seed=seed)
    raise UnknownId(f"unknown index lemma {name!r}")


def check_zeta1_2n(max_n: int = 4, p: int = DEFAULT_PREC, tol=None) -> dict:
    """``zeta_1({2}^n) = -2 sum_i (-1)^i zeta(2i+1) zeta({2}^(n-i))`` with ``zeta(1) = 0``."""
    tol = default_tol(p) if tol is None else tol

    def cases():
        for n in range(max_n + 1):
            rhs = MzvExpression.zero()
            for i in range(1, n + 1):
                rhs = rhs + (MzvExpression.zeta((2 * i + 1,)) * MzvExpression.zeta((2,) * (n - i))
                             ).scale(-2 * (-1) ** i)
            yield f"n={n}", zeta_m_symbolic((2,) * n, 1), rhs
    return _numeric("zeta_1(2^n)", cases(), p, tol)


# ---------------------------------------------------------------------------
# regularization


def check_regshwd(max_m: int = 4, max_weight: int = 8) -> dict:
    """Both routes to ``reg_sh(x^m z_k)`` agree: direct regularization and the closed form."""
    def cases():
        for w in range(1, max_weight + 1):
            for k in compositions(w):
                for m in range(max_m + 1):
                    yield (f"m={m},k={k}", reg_sh(x_power_word(m, k)), reg_sh(regshwd_rhs(m, k)))
    return _exact("regshwd", cases())


def check_zmZ(max_m: int = 4, max_weight: int = 7) -> dict:
    """``zeta_m^sh`` by the word formula equals the binomial weight-shift sum."""
    def cases():
        for w in range(1, max_weight + 1):
            for k in compositions(w):
                for m in range(max_m + 1):
                    yield (f"m={m},k={k}", zeta_m_symbolic(k, m, Flavor.SHUFFLE, "word"),
                           zeta_m_symbolic(k, m, Flavor.SHUFFLE, "sum"))
    return _exact("zmZ", cases())


def check_astsh(max_weight: int = 8, max_m: int = 3, p: int = DEFAULT_PREC, tol=None) -> list:
    tol = default_tol(p) if tol is None else tol
    indices = [k for w in range(1, max_weight + 1) for k in compositions(w) if no_adjacent_ones(k)]

    def series_cases():
        for k in indices:
            sh = t_adic_smzv(k, max_m + 1, Flavor.SHUFFLE)
            st = t_adic_smzv(k, max_m + 1, Flavor.HARMONIC)
            yield from _series_cases(str(k), sh, st)

    def value_cases():
        for k in indices:
            if not is_admissible(k):
                yield str(k), zeta_reg(k, Flavor.HARMONIC), zeta_reg(k, Flavor.SHUFFLE)

    return [_numeric("astsh", series_cases(), p, tol),
            _numeric("astsh-values", value_cases(), p, tol)]


# ---------------------------------------------------------------------------
# numeric kernel


def _closed(c: Fraction, pi_exp: int) -> MzvExpression:
    return MzvExpression.pi_power(pi_exp, c)


def kernel_closed_forms(max_n: int = 3) -> list:
    out = []
    for n in range(1, max_n + 1):
        out.append((f"zeta({{2}}^{n})", MzvExpression.zeta((2,) * n),
                    _closed(Fraction(1, factorial(2 * n + 1)), 2 * n)))
        out.append((f"zeta({{4}}^{n})", MzvExpression.zeta((4,) * n),
                    _closed(Fraction(2 ** (2 * n + 1), factorial(4 * n + 2)), 4 * n)))
        out.append((f"zeta({{1,3}}^{n})", MzvExpression.zeta((1, 3) * n),
                    _closed(Fraction(2, factorial(4 * n + 2)), 4 * n)))
    return out


def _random_admissible(rng: random.Random, max_weight: int):
    while True:
        w = rng.randint(2, max_weight)
        parts = []
        left = w
        while left:
            a = rng.randint(1, left)
            parts.append(a)
            left -= a
        k = tuple(parts)
        if is_admissible(k):
            return k


def _dual(k):
    return index_of_word(tau_word(word_of_index(k)))


def check_kernel(p: int = DEFAULT_PREC, cases: int = 100, seed: int = DEFAULT_SEED,
                 max_weight: int = 8, tol=None) -> list:
    tol = default_tol(p) if tol is None else tol
    rng = random.Random(seed)
    closed_tol = mpf(10) ** (-(p - 5))
    out = [_numeric("kernel-closed-forms", kernel_closed_forms(), p, closed_tol)]

    duals = []
    for _ in range(cases):
        k = _random_admissible(rng, max_weight)
        # the dual side is split at 1/3: the 1/2 split is symmetric under duality
        duals.append((f"{k}~{_dual(k)}", eval_mzv(k, p), eval_mzv_split(_dual(k), p)))
    out.append(_numeric("duality", duals, p, tol))

    sh, st = [], []
    for _ in range(cases):
        k = _random_admissible(rng, max_weight - 2)
        l = _random_admissible(rng, max(2, max_weight - index_weight(k)))
        with precision(p):
            prod = eval_mzv(k, p) * eval_mzv(l, p)
        wp = shuffle(WordPolynomial.word(word_of_index(k)), WordPolynomial.word(word_of_index(l)))
        sh.append((f"{k} sh {l}", prod, zsh_symbolic(wp)))
        hp = harmonic(_icomb(k), _icomb(l))
        st.append((f"{k} * {l}", prod, MzvExpression.from_index_combination(hp)))
    out.append(_numeric("shuffle-consistency", sh, p, tol))
    out.append(_numeric("stuffle-consistency", st, p, tol))

    doubling = []
    for k in ((2,), (3,), (1, 3), (2, 3, 3), (1, 1, 2, 4)):
        doubling.append((f"{k} p->2p", eval_mzv(k, p), eval_mzv(k, 2 * p)))
    out.append(_numeric("precision-doubling", doubling, p, mpf(10) ** (-(p - 5))))
    return out


def antipode_lhs(k) -> MzvExpression:
    out = MzvExpression.zero()
    for i in range(len(k) + 1):
        star = MzvExpression.from_index_combination(star_expand(k[i:][::-1]))
        term = MzvExpression.zeta(k[:i]) * star if i else star
        out = out + (term if i % 2 == 0 else -term)
    return out


def check_antipode(max_depth: int = 3, max_weight: int = 10, p: int = DEFAULT_PREC, tol=None) -> dict:
    tol = default_tol(p) if tol is None else tol

    def cases():
        yield "()", antipode_lhs(()), MzvExpression.one()
        for w in range(2, max_weight + 1):
            for k in compositions(w, 2):
                if len(k) <= max_depth:
                    yield str(k), antipode_lhs(k), MzvExpression.zero()
    return _numeric("antipode", cases(), p, tol)


# ---------------------------------------------------------------------------
# theorems, summary displays, intro value


THEOREM_IDS = tuple(THEOREM_INDEX)


def check_theorem(name: str, max_n: int = 3, p: int = DEFAULT_PREC, tol=None) -> dict:
    if name not in THEOREM_INDEX:
        raise UnknownId(f"unknown theorem {name!r}")
    tol = default_tol(p) if tol is None else tol
    build, trunc = THEOREM_INDEX[name]

    def cases():
        for n in range(max_n + 1):
            k = build(n)
            lhs = eval_series(t_adic_smzv(k, trunc), p)
            rhs = eval_series(theorem_rhs(name, n), p)
            for m in range(trunc):
                yield f"n={n} t^{m}", lhs[m], rhs[m]
    return _numeric(name, cases(), p, tol)


def check_summary(name: str, max_n: int = 3, p: int = DEFAULT_PREC, tol=None) -> list:
    if name not in SUMMARY_IDS:
        raise UnknownId(f"unknown summary id {name!r}")
    tol = default_tol(p) if tol is None else tol
    if name == "ZS1_31n3":
        cases = []
        for n in range(max_n + 1):
            k = summary_index(name, n)
            cases += _series_cases(f"n={n}", t_adic_smzv(k, 1), summary_rhs(name, n))
        return [_numeric(name, cases, p, tol)]
    if name in ("ZHAT_1", "ZHAT_3"):
        rhs = summary_rhs(name, 6)
        return [_numeric(name, _series_cases(name, t_adic_smzv(summary_index(name), 6), rhs), p, tol)]
    # ZS3_13 / ZS3_31: verified mod t^3, displayed t^3 term compared separately
    k = summary_index(name)
    out = [_numeric(name, _series_cases(name, t_adic_smzv(k, 3), summary_rhs(name)), p, tol)]
    shown = (zs3_13 if name == "ZS3_13" else zs3_31)(with_t3=True)
    out.append(_numeric(f"{name}-t3", _series_cases(name, t_adic_smzv(k, 4), shown, [3]),
                        p, tol, kind="informational"))
    return out


def intro_t2_definitional() -> MzvExpression:
    return t_adic_smzv((1, 3, 1, 3), 3).coeffs[2]


def check_intro(p: int = DEFAULT_PREC, tol=None) -> dict:
    tol = default_tol(p) if tol is None else tol
    return _numeric("intro-t2", [("t^2 of (1,3,1,3)", intro_t2_definitional(),
                                  intro_t2_coefficient())], p, tol)


# ---------------------------------------------------------------------------
# generating series


def check_series(lemma: str, order: int = 14, p: int = DEFAULT_PREC, tol=None) -> dict:
    rep = verify_series(lemma, order, p, default_tol(p) if tol is None else tol)
    failures = [r for r in rep["coefficients"] if not r["pass"]]
    worst = max((mpf(r["absdiff"]) for r in rep["coefficients"]), default=mpf(0))
    return _result(rep["lemma"], "numeric", len(rep["coefficients"]), failures,
                   tol=rep["tol"], max_absdiff=mpmath.nstr(worst, 5), report=rep)


def check_series_auxiliary(order: int = 14, p: int = DEFAULT_PREC, tol=None, max_n: int = 2) -> list:
    tol = default_tol(p) if tol is None else tol
    pre = []
    for name, lhs, rhs in preamble_identities(order, p):
        pre += [(f"{name} u^{i}", a, b) for i, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs))]
    return [_numeric("series-preamble", pre, p, tol),
            _numeric("series-cited", cited_identities(max_n), p, tol)]


# ---------------------------------------------------------------------------
# dispatch


def targets() -> list:
    return (["word", "index", "regshwd", "zmZ", "astsh", "kernel", "duality", "antipode",
             "zeta_1(2^n)", "theorem", "summary", "intro-t2", "series", "all"])


def run(target: str, name: str | None = None, *, p: int = DEFAULT_PREC, tol=None,
        seed: int = DEFAULT_SEED, max_n: int | None = None, order: int = 14) -> list:
    """Run one target (optionally a single named member) and return its checks.

    Raises UnknownId for an unknown target or member.
    """
    def pick(members, label):
        if name is None or name == "all":
            return list(members)
        if name not in members:
            raise UnknownId(f"unknown {label} {name!r}")
        return [name]

    if target == "word":
        return [check_word_lemma(w, 10 if max_n is None else max_n) for w in pick(WORD_LEMMAS, "word lemma")]
    if target == "index":
        return [check_index_lemma(i, seed) for i in pick(INDEX_LEMMAS, "index lemma")]
    if target == "regshwd":
        return [check_regshwd()]
    if target == "zmZ":
        return [check_zmZ()]
    if target == "astsh":
        return check_astsh(p=p, tol=tol)
    if target in ("kernel", "duality"):
        checks = check_kernel(p=p, seed=seed, tol=tol)
        return [c for c in checks if c["name"] == "duality"] if target == "duality" else checks
    if target == "antipode":
        return [check_antipode(p=p, tol=tol)]
    if target == "zeta_1(2^n)":
        return [check_zeta1_2n(p=p, tol=tol)]
    if target == "theorem":
        n = 3 if max_n is None else max_n
        return [check_theorem(t, n, p, tol) for t in pick(THEOREM_IDS, "theorem")]
    if target == "summary":
        n = 3 if max_n is None else max_n
        return [c for s in pick(SUMMARY_IDS, "summary id") for c in check_summary(s, n, p, tol)]
    if target == "intro-t2":
        return [check_intro(p, tol)]
    if target == "series":
        if name in ("preamble", "auxiliary"):
            return check_series_auxiliary(order, p, tol)
        if name is None or name == "all":
            return [check_series(l, order, p, tol) for l in LEMMAS] + check_series_auxiliary(order, p, tol)
        return [check_series(canonical_lemma(name), order, p, tol)]
    if target == "all":
        out = []
        for t in targets()[:-1]:
            if t == "duality":
                continue  # included in kernel
            out += run(t, None, p=p, tol=tol, seed=seed, max_n=max_n, order=order)
        return out
    raise UnknownId(f"unknown target {target!r}")


def verdict(checks: list) -> str:
    return "pass" if all(c["verdict"] == "pass" for c in checks) else "fail"

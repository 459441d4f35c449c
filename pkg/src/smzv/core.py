"""Exact data structures: words, indices and their rational linear combinations.

Words over the alphabet ``{x, y}`` are plain (interned) Python strings, indices
are tuples of positive integers.  The combination classes below are immutable
finite maps ``key -> Fraction`` with zero coefficients purged, so ``==`` is
structural equality of the normal form.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .errors import (
    InvalidIndex,
    InvalidWord,
    NotAdmissible,
    NotInH1,
    TruncationExceeded,
    TruncationMismatch,
)

Word = str
Index = Tuple[int, ...]
Rational = Union[int, Fraction]

_LETTERS = frozenset("xy")


# ---------------------------------------------------------------------------
# words


def make_word(letters: Iterable[str] | str) -> Word:
    w = letters if isinstance(letters, str) else "".join(letters)
    if not _LETTERS.issuperset(w):
        raise InvalidWord(f"word {w!r} uses letters outside {{x, y}}")
    return sys.intern(w)


def word_weight(w: Word) -> int:
    return len(w)


def word_depth(w: Word) -> int:
    return w.count("y")


def in_h1(w: Word) -> bool:
    return not w or w[0] == "y"


def in_h0(w: Word) -> bool:
    return not w or (w[0] == "y" and w[-1] == "x")


def word_of_index(k: Sequence[int]) -> Word:
    """Return ``y x^(k1-1) ... y x^(kr-1)``; the empty index gives the empty word."""
    return sys.intern("".join("y" + "x" * (a - 1) for a in make_index(k)))


def index_of_word(w: Word) -> Index:
    if not in_h1(w):
        raise NotInH1(f"word {w!r} does not start with y")
    if not w:
        return ()
    return tuple(len(block) + 1 for block in w[1:].split("y"))


def tau_word(w: Word) -> Word:
    """Reverse ``w`` and swap ``x <-> y``."""
    return sys.intern(w[::-1].translate(_SWAP))


_SWAP = str.maketrans("xy", "yx")


def word_sort_key(w: Word):
    # graded lexicographic, x < y
    return (len(w), w)


# ---------------------------------------------------------------------------
# indices


def make_index(parts: Iterable[int]) -> Index:
    k = tuple(parts)
    for a in k:
        if not isinstance(a, int) or isinstance(a, bool) or a < 1:
            raise InvalidIndex(f"index parts must be positive integers, got {k!r}")
    return k


def parse_index(text: str) -> Index:
    """Parse ``"3,1,3"`` (or ``""`` for the empty index)."""
    text = text.strip().strip("()")
    if not text:
        return ()
    try:
        return make_index(int(s) for s in text.split(","))
    except ValueError as exc:
        raise InvalidIndex(f"cannot parse index {text!r}") from exc


def is_admissible(k: Index) -> bool:
    return not k or k[-1] > 1


def no_adjacent_ones(k: Index) -> bool:
    return all(not (a == 1 and b == 1) for a, b in zip(k, k[1:]))


def index_weight(k: Index) -> int:
    return sum(k)


def index_sort_key(k: Index):
    return (len(k), k)


def repeat(parts: Sequence[int], n: int) -> Index:
    """``{a, b, ...}^n`` as a flat index."""
    return tuple(parts) * n


def compositions(weight: int, min_part: int = 1) -> Iterator[Index]:
    """All indices of the given weight with parts >= ``min_part``."""
    if weight == 0:
        yield ()
        return
    for first in range(min_part, weight + 1):
        for rest in compositions(weight - first, min_part):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# linear combinations


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class _Combination:
    """Immutable finite map ``key -> nonzero Fraction`` in canonical order."""

    __slots__ = ("_terms", "_sorted", "_hash")

    def __init__(self, terms: Mapping | Iterable[tuple] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict = {}
        for key, c in items:
            key = self._check_key(key)
            c = _as_fraction(c)
            if key in clean:
                c += clean[key]
            if c:
                clean[key] = c
            else:
                clean.pop(key, None)
        self._terms = clean
        self._sorted = None
        self._hash = None

    @classmethod
    def _check_key(cls, key):
        return key

    @staticmethod
    def _sort_key(key):
        return key

    @classmethod
    def _wrap(cls, clean: dict):
        # clean: Fraction coefficients, no zeros, keys already validated
        obj = cls.__new__(cls)
        obj._terms = clean
        obj._sorted = None
        obj._hash = None
        return obj

    @classmethod
    def zero(cls):
        return cls._wrap({})

    @classmethod
    def from_accumulator(cls, acc: Mapping):
        """Wrap a raw ``key -> int/Fraction`` accumulator built by trusted code."""
        return cls._wrap({k: _as_fraction(c) for k, c in acc.items() if c})

    # mapping-like access -------------------------------------------------

    def items(self) -> list[tuple]:
        if self._sorted is None:
            self._sorted = sorted(self._terms.items(), key=lambda kv: self._sort_key(kv[0]))
        return self._sorted

    def keys(self):
        return [k for k, _ in self.items()]

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def raw(self) -> Mapping:
        return self._terms

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __contains__(self, key):
        return key in self._terms

    # vector space ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                del acc[k]
        return self._wrap(acc)

    def __neg__(self):
        return self._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Rational):
        c = _as_fraction(c)
        if not c:
            return self.zero()
        return self._wrap({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(1 / _as_fraction(c))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def map_keys(self, fn):
        """Apply ``fn`` to every key and collect (keys may collide)."""
        return type(self)((fn(k), c) for k, c in self._terms.items())


def _fmt_coeff(c: Fraction, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    body = "" if a == 1 else f"{a}*"
    return f"{sign}{body}" if first else f" {sign} {body}"


class WordPolynomial(_Combination):
    """Element of Q<x, y>."""

    __slots__ = ()

    @classmethod
    def _check_key(cls, key):
        return make_word(key)

    @staticmethod
    def _sort_key(key):
        return word_sort_key(key)

    @classmethod
    def word(cls, w: Word, c: Rational = 1):
        return cls({w: c})

    @classmethod
    def one(cls):
        return cls._wrap({"": Fraction(1)})

    def in_h1(self) -> bool:
        return all(in_h1(w) for w in self._terms)

    def in_h0(self) -> bool:
        return all(in_h0(w) for w in self._terms)

    def concat(self, other: "WordPolynomial") -> "WordPolynomial":
        """Concatenation product (the noncommutative product of Q<x, y>)."""
        acc: dict = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = sys.intern(u + v)
                acc[w] = acc.get(w, 0) + a * b
        return self.from_accumulator(acc)

    def __repr__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (w, c) in enumerate(self.items()):
            out.append(_fmt_coeff(c, i == 0) + (w or "1"))
        return "".join(out)


class IndexCombination(_Combination):
    """Element of the Q-vector space freely generated by indices."""

    __slots__ = ()

    @classmethod
    def _check_key(cls, key):
        return make_index(key)

    @staticmethod
    def _sort_key(key):
        return index_sort_key(key)

    @classmethod
    def index(cls, k: Sequence[int], c: Rational = 1):
        return cls({tuple(k): c})

    def __repr__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (k, c) in enumerate(self.items()):
            out.append(_fmt_coeff(c, i == 0) + "(" + ",".join(map(str, k)) + ")")
        return "".join(out)


# A monomial is (power of pi, sorted tuple of admissible indices); the empty
# monomial (0, ()) is the scalar 1.  Riemann zeta(n) is the depth-one index (n,).
Monomial = Tuple[int, Tuple[Index, ...]]
ONE_MONOMIAL: Monomial = (0, ())


def _monomial_sort_key(m: Monomial):
    pi, syms = m
    return (sum(map(sum, syms)) + pi, len(syms), pi, [index_sort_key(k) for k in syms])


def _monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return (a[0] + b[0], tuple(sorted(a[1] + b[1], key=index_sort_key)))


class MzvExpression(_Combination):
    """Q-linear combination of commutative products of MZV symbols and powers of pi.

    Equality is syntactic; two expressions equal as real numbers can differ.
    """

    __slots__ = ()

    @classmethod
    def _check_key(cls, key):
        pi, syms = key
        if not isinstance(pi, int) or pi < 0:
            raise InvalidIndex(f"pi exponent must be a nonnegative integer, got {pi!r}")
        syms = tuple(make_index(k) for k in syms)
        for k in syms:
            if not is_admissible(k):
                raise NotAdmissible(f"MZV symbol {k} is not admissible")
        # zeta(empty) = 1 is the empty product
        syms = tuple(sorted((k for k in syms if k), key=index_sort_key))
        return (pi, syms)

    @staticmethod
    def _sort_key(key):
        return _monomial_sort_key(key)

    @classmethod
    def one(cls):
        return cls._wrap({ONE_MONOMIAL: Fraction(1)})

    @classmethod
    def constant(cls, c: Rational):
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def zeta(cls, k: Sequence[int], c: Rational = 1):
        return cls({(0, (tuple(k),)): c})

    @classmethod
    def pi_power(cls, e: int, c: Rational = 1):
        return cls({(e, ()): c})

    @classmethod
    def from_index_combination(cls, comb: IndexCombination):
        """Read each index as its MZV symbol (all indices must be admissible)."""
        return cls((((0, (k,)), c) for k, c in comb))

    def __mul__(self, other):
        if isinstance(other, MzvExpression):
            acc: dict = {}
            for ma, a in self._terms.items():
                for mb, b in other._terms.items():
                    m = _monomial_mul(ma, mb)
                    acc[m] = acc.get(m, 0) + a * b
            return self.from_accumulator(acc)
        return super().__mul__(other)

    def __pow__(self, n: int):
        out = MzvExpression.one()
        for _ in range(n):
            out = out * self
        return out

    def symbols(self) -> set:
        return {k for (_, syms) in self._terms for k in syms}

    def __repr__(self):
        if not self._terms:
            return "0"
        out = []
        for i, ((pi, syms), c) in enumerate(self.items()):
            factors = []
            if pi:
                factors.append("pi" if pi == 1 else f"pi^{pi}")
            for k in syms:
                factors.append("zeta(" + ",".join(map(str, k)) + ")")
            body = "*".join(factors)
            if body:
                out.append(_fmt_coeff(c, i == 0) + body)
            else:
                sign = ("-" if c < 0 else "") if i == 0 else (" - " if c < 0 else " + ")
                out.append(sign + str(abs(c)))
        return "".join(out)


class TadicSeries:
    """Truncated power series in ``t`` with MzvExpression coefficients (mod t^truncation)."""

    __slots__ = ("truncation", "coeffs")

    def __init__(self, coeffs: Sequence[MzvExpression], truncation: int | None = None):
        coeffs = list(coeffs)
        if truncation is None:
            truncation = len(coeffs)
        if truncation < 1:
            raise ValueError("truncation must be a positive integer")
        if len(coeffs) > truncation:
            coeffs = coeffs[:truncation]
        coeffs += [MzvExpression.zero()] * (truncation - len(coeffs))
        self.truncation = truncation
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, truncation: int):
        return cls([], truncation)

    @classmethod
    def constant(cls, e: MzvExpression, truncation: int):
        return cls([e], truncation)

    def coefficient(self, i: int) -> MzvExpression:
        if not 0 <= i < self.truncation:
            raise TruncationExceeded(
                f"coefficient of t^{i} requested from a series known mod t^{self.truncation}")
        return self.coeffs[i]

    def truncate(self, m: int) -> "TadicSeries":
        if m > self.truncation:
            raise TruncationExceeded(f"cannot lift mod t^{self.truncation} to mod t^{m}")
        return TadicSeries(self.coeffs[:m], m)

    def _check(self, other):
        if not isinstance(other, TadicSeries):
            return False
        if other.truncation != self.truncation:
            raise TruncationMismatch(
                f"truncations differ: {self.truncation} vs {other.truncation}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return TadicSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.truncation)

    def __neg__(self):
        return TadicSeries([-a for a in self.coeffs], self.truncation)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Rational):
        return TadicSeries([a.scale(c) for a in self.coeffs], self.truncation)

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        m = self.truncation
        out = [MzvExpression.zero() for _ in range(m)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(m - i):
                if other.coeffs[j]:
                    out[i + j] = out[i + j] + a * other.coeffs[j]
        return TadicSeries(out, m)

    def __eq__(self, other):
        if not isinstance(other, TadicSeries):
            return NotImplemented
        return self.truncation == other.truncation and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.truncation, self.coeffs))

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"({c!r})" + ("" if i == 0 else f"*t^{i}" if i > 1 else "*t"))
        body = " + ".join(parts) if parts else "0"
        return f"{body} mod t^{self.truncation}"


# ---------------------------------------------------------------------------
# JSON forms


def rational_to_json(c: Fraction) -> dict:
    c = _as_fraction(c)
    return {"num": str(c.numerator), "den": str(c.denominator)}


def rational_from_json(d: Mapping) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))


def to_json(obj):
    """Stable JSON-ready form of any exact type in this module."""
    if isinstance(obj, WordPolynomial):
        return [{"coeff": rational_to_json(c), "word": w} for w, c in obj]
    if isinstance(obj, IndexCombination):
        return [{"coeff": rational_to_json(c), "index": list(k)} for k, c in obj]
    if isinstance(obj, MzvExpression):
        out = []
        for (pi, syms), c in obj:
            rec = {"coeff": rational_to_json(c), "monomial": [list(k) for k in syms]}
            if pi:
                rec["pi"] = pi
            out.append(rec)
        return out
    if isinstance(obj, TadicSeries):
        return {"truncation": obj.truncation, "coeffs": [to_json(c) for c in obj.coeffs]}
    if isinstance(obj, Fraction):
        return rational_to_json(obj)
    if isinstance(obj, tuple):
        return list(obj)
    if isinstance(obj, str):
        return obj
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def word_polynomial_from_json(data) -> WordPolynomial:
    return WordPolynomial((r["word"], rational_from_json(r["coeff"])) for r in data)


def index_combination_from_json(data) -> IndexCombination:
    return IndexCombination((tuple(r["index"]), rational_from_json(r["coeff"])) for r in data)


def mzv_expression_from_json(data) -> MzvExpression:
    return MzvExpression(
        ((r.get("pi", 0), tuple(tuple(k) for k in r["monomial"])), rational_from_json(r["coeff"]))
        for r in data)


def tadic_series_from_json(data) -> TadicSeries:
    return TadicSeries([mzv_expression_from_json(c) for c in data["coeffs"]], data["truncation"])

"""Exact and numerical tools for t-adic symmetric multiple zeta values.

The exact layer works with words in Q<x, y> and indices; MZVs appear as
symbols and are evaluated to arbitrary precision only at the end.
"""

from .core import (
    IndexCombination,
    MzvExpression,
    TadicSeries,
    WordPolynomial,
    parse_index,
    to_json,
)
from .errors import (
    NotAdmissible,
    PrecisionUnreachable,
    SmzvError,
    UnknownId,
    UnknownLemma,
)
from .harmonic import harmonic, index_shuffle, reg_star, star_expand
from .numeric import eval_expr, eval_mzv, eval_series, riemann_zeta
from .shuffle import reg_sh, shuffle, tau, zsh_symbolic
from .tadic import Flavor, I0, I1, sigma, t_adic_smzv, zeta_m_symbolic, zeta_reg

__version__ = "0.1.0"

__all__ = [
    "Flavor",
    "I0",
    "I1",
    "IndexCombination",
    "MzvExpression",
    "NotAdmissible",
    "PrecisionUnreachable",
    "SmzvError",
    "TadicSeries",
    "UnknownId",
    "UnknownLemma",
    "WordPolynomial",
    "eval_expr",
    "eval_mzv",
    "eval_series",
    "harmonic",
    "index_shuffle",
    "parse_index",
    "reg_sh",
    "reg_star",
    "riemann_zeta",
    "shuffle",
    "sigma",
    "star_expand",
    "t_adic_smzv",
    "tau",
    "to_json",
    "zeta_m_symbolic",
    "zeta_reg",
    "zsh_symbolic",
]

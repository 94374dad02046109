"""Frobenius powers, critical exponents, test ideals and multiplier ideals of
monomial ideals in prime characteristic (exact arithmetic, C++ core)."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    InternalError,
    ResourceError,
    SymbolicCrit,
    ValidationError,
    base_p_digits,
    carry_free,
    compare_thm64,
    crit_diag,
    crit_md,
    frob_power,
    lpr,
    mu,
    mu_diag_fast,
    multiplier_ideal,
    nu,
    parse_ideal,
    run_cli,
    test_ideal,
)

__all__ = [
    "InternalError",
    "ResourceError",
    "SymbolicCrit",
    "ValidationError",
    "base_p_digits",
    "carry_free",
    "compare_thm64",
    "crit_diag",
    "crit_md",
    "crit_value",
    "family",
    "frob_power",
    "lpr",
    "mu",
    "mu_diag_fast",
    "multiplier_ideal",
    "nu",
    "parse_ideal",
    "run_cli",
    "test_ideal",
]


def crit_value(crit, p):
    """Exact value of a SymbolicCrit at the prime p."""
    num, den = crit.eval(p)
    return Fraction(int(num), int(den))


def family(ideal, cls="", at_p=0, window=""):
    """The closed-form family as the CLI's JSON document, parsed."""
    return json.loads(_core.family_json(ideal, cls, at_p, window))

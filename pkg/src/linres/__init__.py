"""Partial linearity (N_{d,p}) of monomial ideals: exact oracles and combinatorial certifiers."""
from .errors import (
    AmbientMismatchError,
    BudgetError,
    CertificateError,
    FieldError,
    LinresError,
    NotEquigeneratedError,
    NotPrimaryError,
    NotSquareFreeError,
    ParseError,
    PreconditionError,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    below,
    bracket_power,
    colon_maximal,
    colon_monomial,
    contains,
    divides,
    equals,
    gcd,
    is_primary,
    lcm,
    maximal_ideal,
    maximal_power,
    minimalize,
    missing_monomials,
    power,
    product,
    restrict_vars,
    socle_monomials,
    truncate,
)
from .oracle import (
    BettiTable,
    graded_betti,
    lcm_lattice,
    regularity,
    satisfies_ndp,
    strand_betti,
    t_s,
)

__all__ = [
    "AmbientMismatchError",
    "BudgetError",
    "CertificateError",
    "FieldError",
    "LinresError",
    "NotEquigeneratedError",
    "NotPrimaryError",
    "NotSquareFreeError",
    "ParseError",
    "PreconditionError",
    "Monomial",
    "MonomialIdeal",
    "below",
    "bracket_power",
    "colon_maximal",
    "colon_monomial",
    "contains",
    "divides",
    "equals",
    "gcd",
    "is_primary",
    "lcm",
    "maximal_ideal",
    "maximal_power",
    "minimalize",
    "missing_monomials",
    "power",
    "product",
    "restrict_vars",
    "socle_monomials",
    "truncate",
    "BettiTable",
    "graded_betti",
    "lcm_lattice",
    "regularity",
    "satisfies_ndp",
    "strand_betti",
    "t_s",
]

__version__ = "0.1.0"

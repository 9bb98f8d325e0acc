"""Exact real arithmetic where a real number is an oracle for its decimal truncations."""

from .arithmetic import DEFAULT_BUDGET, ResolutionBudget, add, divide, mul, reciprocal
from .cauchy import CauchySequence, constant_sequence, kappa, kappa_enclosure, seq_add, seq_equiv, seq_leq, seq_mul
from .dedekind import DedekindCut, Side, cut_add, cut_leq, cut_mul, cut_neg, cut_of_stream, cut_sign, rational_cut, tau
from .errors import ContractViolation, InvalidWitness, RealsError, Undecidable, UnresolvedPrecision
from .iso import HomomorphismReport, iso_report
from .limits import StreamSequence, approx_liminf, approx_limsup, inf_finite, monotone_limit, sup_finite
from .rational import (
    PeriodicDecimal,
    Rational,
    Truncation,
    detect_period,
    from_periodic,
    is_finite_decimal,
    long_division_truncate,
    make_rational,
    trunc_add,
    trunc_psi,
)
from .stream import (
    Comparison,
    DecimalStream,
    IntervalEnclosure,
    LookaheadPolicy,
    TailClass,
    Verdict,
    abs_,
    classify_tail,
    compare_upto,
    decide_equiv_rational,
    from_digit_function,
    from_periodic_digits,
    from_rational,
    psi,
    resolve,
    sign,
    sqrt_stream,
    truncate,
    truncation_gap,
)

__all__ = [
    "abs_",
    "add",
    "approx_liminf",
    "approx_limsup",
    "CauchySequence",
    "classify_tail",
    "compare_upto",
    "Comparison",
    "constant_sequence",
    "ContractViolation",
    "cut_add",
    "cut_leq",
    "cut_mul",
    "cut_neg",
    "cut_of_stream",
    "cut_sign",
    "decide_equiv_rational",
    "DecimalStream",
    "DedekindCut",
    "DEFAULT_BUDGET",
    "detect_period",
    "divide",
    "from_digit_function",
    "from_periodic",
    "from_periodic_digits",
    "from_rational",
    "HomomorphismReport",
    "inf_finite",
    "IntervalEnclosure",
    "InvalidWitness",
    "is_finite_decimal",
    "iso_report",
    "kappa",
    "kappa_enclosure",
    "long_division_truncate",
    "LookaheadPolicy",
    "make_rational",
    "monotone_limit",
    "mul",
    "PeriodicDecimal",
    "psi",
    "Rational",
    "rational_cut",
    "RealsError",
    "reciprocal",
    "ResolutionBudget",
    "resolve",
    "seq_add",
    "seq_equiv",
    "seq_leq",
    "seq_mul",
    "Side",
    "sign",
    "sqrt_stream",
    "StreamSequence",
    "sup_finite",
    "TailClass",
    "tau",
    "trunc_add",
    "trunc_psi",
    "truncate",
    "Truncation",
    "truncation_gap",
    "Undecidable",
    "UnresolvedPrecision",
    "Verdict",
]

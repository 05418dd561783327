"""Finite multiple polylogarithms over prime fields.

Exact evaluation of truncated multiple harmonic sums and their polynomial
analogues mod p, the shuffle and stuffle word algebras on indices, the
descent-classified expansion of variant zeta values, and and the explicit
correction expressions that witness the shuffle congruence, verified per
prime over configurable sweeps.
"""

from .modular import ModPoly, PrimeField, is_prime, mod_inverse, primes_in_range, xgcd
from .words import (
    EMPTY,
    FormalSum,
    Index,
    concat,
    index_to_word,
    shuffle,
    star,
    stuffle,
    word_to_index,
)
from .surjections import (
    ResidueTuple,
    Surjection,
    bijection_roundtrip,
    count_x_tuples,
    enumerate_phi,
    f_map,
    g_map,
    grouped_index,
    phi_class,
    variant_expansion,
)
from .evaluate import (
    PartialSumTable,
    brute_force_fmp,
    brute_force_fmp_triple,
    brute_force_zeta_variant,
    eval_fmp,
    eval_fmp_triple,
    eval_zeta,
    eval_zeta_variant,
    partial_sum_table,
)
from .identities import (
    CheckResult,
    CorrectionExpression,
    CorrectionTerm,
    ExceptionalPrimeError,
    eval_expression,
    expand_triple,
    pfd_check,
    shuffle_correction,
    term_product,
    verify_eq7,
    verify_li_at_one,
    verify_main,
    verify_prop24,
    verify_reversal,
    verify_stuffle,
)
from .sweep import PrimeOutcome, SweepReport, run_sweep

__version__ = "0.1.0"

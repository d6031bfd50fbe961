"""Exact composite Hurwitz numbers and multimonotonic path counts.

The coefficients F^c_d(mu, nu) of the hypergeometric 2D Toda tau-function are
computed three ways (character sum with content eigenvalues, signed sum of
Hurwitz numbers, brute-force path enumeration), all in exact rationals.
"""
from .cayley import BandSpec, CenterElement, JMGenerator, Perm, count_cover_tuples, count_monotone_pairs, cycle_type, idempotent, multiply_central
from .characters import CharacterTable, character, character_table
from .coefficients import (
    CoefficientKey,
    SignedHurwitzTerm,
    aggregated_strict,
    double_hurwitz,
    f_coefficient,
    frobenius_hurwitz,
    g_coefficient,
    kp_coefficient,
    parity_split_hurwitz,
    signed_hurwitz_sum,
    signed_hurwitz_terms,
)
from .content import HypergeometricParams, content_product, content_symmetric, pochhammer_partition, r_factor, rho
from .errors import CapExceededError, HurwitzError, PoleError, RefusalError, TruncationError, UsageError
from .partitions import (
    Partition,
    RamificationData,
    class_size,
    colength,
    contents,
    dimension,
    double_genus,
    hook_product,
    partitions_of,
    partitions_with_colength,
    stabilizer_order,
)
from .series import PowerSumTable, TruncatedSeries, evaluate_special, kp_restrict, schur_to_powersum, tau_expand

__version__ = "0.1.0"

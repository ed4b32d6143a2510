"""Pseudoprime hierarchy classification and primover number families."""

from primover._accel import BACKEND
from primover.classify import (
    ClassificationReport,
    check_divisor_differences,
    classify,
    coprimality_check,
    equal_order_product,
    is_fermat_psp,
    is_overpseudoprime_definitional,
    is_overpseudoprime_fast,
    is_primover,
    is_strong_psp,
    is_super_psp,
)
from primover.core_arith import (
    Factorization,
    PrimalityVerdict,
    divisors,
    factorize,
    is_prime,
    mod_pow,
    moebius,
    valuation,
)
from primover.cosets import CosetPartition, coset_count, coset_partition
from primover.cyclotomic import (
    FamilyNumber,
    cyclotomic_value,
    gen_fermat,
    gen_mersenne,
    moebius_product,
    phi_criterion,
    phi_pq,
    phi_prime_power,
    progression_census,
    reduced_phi,
)
from primover.orders import (
    OrderLift,
    OrderRecord,
    WieferichRecord,
    multiplicative_order,
    order_mod_prime_power,
    wieferich_order,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ClassificationReport",
    "CosetPartition",
    "Factorization",
    "FamilyNumber",
    "OrderLift",
    "OrderRecord",
    "PrimalityVerdict",
    "WieferichRecord",
    "check_divisor_differences",
    "classify",
    "coprimality_check",
    "coset_count",
    "coset_partition",
    "cyclotomic_value",
    "divisors",
    "equal_order_product",
    "factorize",
    "gen_fermat",
    "gen_mersenne",
    "is_fermat_psp",
    "is_overpseudoprime_definitional",
    "is_overpseudoprime_fast",
    "is_prime",
    "is_primover",
    "is_strong_psp",
    "is_super_psp",
    "mod_pow",
    "moebius",
    "moebius_product",
    "multiplicative_order",
    "order_mod_prime_power",
    "phi_criterion",
    "phi_pq",
    "phi_prime_power",
    "progression_census",
    "reduced_phi",
    "valuation",
    "wieferich_order",
]

"""Hilbert-Kunz functions of k[[x,y]]/(x^n - y^n), exactly.

The closed form HK(e) = n*p^e - b(n-b), with b = p^e mod n, drives tables
and period analysis; an independent Groebner-basis oracle recomputes the
same numbers as colengths so the two routes can be checked against each
other.  A constructive search produces rings with any prescribed period.
The `hkkit` console script exposes all of it.
"""

from .closed_form import (
    HKRecord,
    InvalidRingError,
    RingSpec,
    hk_table,
    hk_value,
    phi_value,
    residue_b,
)
from .groebner import (
    BasisCheck,
    CharacteristicMismatchError,
    FpPoly,
    GroebnerBasis,
    Monomial,
    PairBudgetExceededError,
    Q_CAP_DEFAULT,
    QCapExceededError,
    buchberger,
    count_under_staircase,
    frobenius_power_generators,
    hk_brute,
    s_polynomial,
    standard_monomial_count,
    verify_closed_form_basis,
)
from .numtheory import (
    NoPrimesInClassError,
    NotAUnitError,
    Residue,
    find_prime_in_class,
    is_prime,
    mod_pow,
    multiplicative_order,
)
from .period import (
    Branch,
    PeriodCheck,
    PeriodReport,
    period_of,
    verify_minimal_period,
)
from .realize import (
    RealizationResult,
    SearchExhausted,
    SearchStats,
    enumerate_realizations,
    realize,
)

__version__ = "0.1.0"

__all__ = [
    "BasisCheck",
    "Branch",
    "CharacteristicMismatchError",
    "FpPoly",
    "GroebnerBasis",
    "HKRecord",
    "InvalidRingError",
    "Monomial",
    "NoPrimesInClassError",
    "NotAUnitError",
    "PairBudgetExceededError",
    "PeriodCheck",
    "PeriodReport",
    "Q_CAP_DEFAULT",
    "QCapExceededError",
    "RealizationResult",
    "Residue",
    "RingSpec",
    "SearchExhausted",
    "SearchStats",
    "buchberger",
    "count_under_staircase",
    "enumerate_realizations",
    "find_prime_in_class",
    "frobenius_power_generators",
    "hk_brute",
    "hk_table",
    "hk_value",
    "is_prime",
    "mod_pow",
    "multiplicative_order",
    "period_of",
    "phi_value",
    "realize",
    "residue_b",
    "s_polynomial",
    "standard_monomial_count",
    "verify_closed_form_basis",
    "verify_minimal_period",
]

"""Trace codes over F_q + uF_q with u^2 = 0, their Lee weight spectra and
the Gaussian-period machinery that predicts them."""
from .gf import Field, FieldElement, FieldError, build_field
from .ring import RingElement, RingExtension
from .cyclotomy import (
    CaseMismatch,
    CyclotomicInteger,
    closed_form_periods,
    gaussian_periods,
    period_polynomial,
    solve_diophantine,
)
from .tracecode import (
    BudgetExceeded,
    CodeSpec,
    InvalidSpec,
    WeightDistribution,
    brute_force_spectrum,
    representative_spectrum_check,
)
from .theory import (
    compare,
    griesmer_check,
    predict,
    predict_gcd1,
    predict_gcd2,
    predict_gcd3,
    predict_gcd4,
    predict_general,
)

__version__ = "0.1.0"

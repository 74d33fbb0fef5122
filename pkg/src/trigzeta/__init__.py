"""Closed forms of trigonometric series at singular integer orders.

Eight families of sine/cosine series whose power-series representations
break down at integer exponents are evaluated through short combinations
of Hurwitz-zeta order-derivatives, with independent brute-force oracles
for cross-validation and a verification CLI (``trigzeta``).
"""

from .closedforms import (
    ClosedFormResult,
    GeneralFormulaParams,
    SeriesSpec,
    TABLE2_ROWS,
    closed_form_eval,
    general_closed_form,
    singular_limit_term,
)
from .dirichlet import (
    SPECIAL_VALUES,
    SpecialValue,
    beta_fn,
    beta_prime_neg_odd,
    dirichlet_lambda,
    eta,
    riemann_zeta,
    zeta_neg_odd,
    zeta_prime_neg_even,
)
from .errors import (
    ConvergenceError,
    DomainError,
    PoleError,
    ResourceError,
    TrigZetaError,
    VerificationError,
)
from .hurwitz import (
    EulerMaclaurinPlan,
    HurwitzPoint,
    hurwitz_formula_partial,
    hurwitz_zeta,
    hurwitz_zeta_sderiv,
    plan_for,
)
from .oracles import (
    OracleReport,
    choi_srivastava_check,
    direct_sum,
    lambda_series_path,
    limit_probe_eta_and_lambda,
    power_series_eval,
)

__version__ = "0.1.0"

__all__ = [
    "ClosedFormResult",
    "ConvergenceError",
    "DomainError",
    "EulerMaclaurinPlan",
    "GeneralFormulaParams",
    "HurwitzPoint",
    "OracleReport",
    "PoleError",
    "ResourceError",
    "SPECIAL_VALUES",
    "SeriesSpec",
    "SpecialValue",
    "TABLE2_ROWS",
    "TrigZetaError",
    "VerificationError",
    "beta_fn",
    "beta_prime_neg_odd",
    "choi_srivastava_check",
    "closed_form_eval",
    "dirichlet_lambda",
    "direct_sum",
    "eta",
    "general_closed_form",
    "hurwitz_formula_partial",
    "hurwitz_zeta",
    "hurwitz_zeta_sderiv",
    "lambda_series_path",
    "limit_probe_eta_and_lambda",
    "plan_for",
    "power_series_eval",
    "riemann_zeta",
    "singular_limit_term",
    "zeta_neg_odd",
    "zeta_prime_neg_even",
]

"""qmu: numerics for the generalized Appell-Lerch mu-function.

The package evaluates the two-variable mu-function and its one-parameter
deformation mu(u, v; alpha), together with the supporting q-series layer
(q-Pochhammer symbols, theta functions, unilateral/bilateral basic
hypergeometric series, q-Borel/q-Laplace resummation, continuous q-Hermite
polynomials, non-holomorphic completions), and ships a residual suite that
verifies the identities these functions satisfy at sampled admissible points.
"""

from ._backend import BACKEND
from .errors import (
    BudgetExceeded,
    Divergent,
    DomainError,
    DuplicateName,
    PoleHit,
    QmuError,
    UnknownIdentity,
)
from .qcore import (
    DEFAULT_TRUNC,
    EvalResult,
    ModularPoint,
    Truncation,
    lattice_dist,
    qpoch,
    qpoch_inf,
    qpoch_many,
    theta11,
    theta11_logderiv,
    theta11_sum,
    theta_q,
    theta_q_sum,
)
from .mufun import MuForm, MuPoint, mu_alpha, mu_general, mu_zwegers

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "DEFAULT_TRUNC",
    "Divergent",
    "DomainError",
    "DuplicateName",
    "EvalResult",
    "ModularPoint",
    "MuForm",
    "MuPoint",
    "PoleHit",
    "QmuError",
    "Truncation",
    "UnknownIdentity",
    "lattice_dist",
    "mu_alpha",
    "mu_general",
    "mu_zwegers",
    "qpoch",
    "qpoch_inf",
    "qpoch_many",
    "theta11",
    "theta11_logderiv",
    "theta11_sum",
    "theta_q",
    "theta_q_sum",
    "__version__",
]

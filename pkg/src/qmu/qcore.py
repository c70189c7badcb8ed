"""Parameter types, q-Pochhammer symbols, theta functions, truncation policy.

Additive coordinates are canonical throughout the package: entry points take
(u, v, alpha, tau) and derive the multiplicative quantities x = e^{2 pi i u},
y = e^{2 pi i v}, a = q^alpha internally, which pins down every fractional
power branch (e.g. (x/y)^{alpha/2} := e^{pi i alpha (u - v)}).
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field

from . import _kernels as K
from .errors import BudgetExceeded, Divergent, DomainError, PoleHit

TWO_PI_I = 2j * math.pi

#: Additive distance below which an input counts as sitting on an excluded
#: lattice; identity sampling rejects such points instead of propagating
#: near-singular values.
POLE_DIST = 1e-6


def _default_max_terms() -> int:
    env = os.environ.get("QMU_MAX_TERMS", "").strip()
    return int(env) if env else 20000


@dataclass(frozen=True)
class Truncation:
    """Tolerance / term-budget policy for every infinite sum and product."""

    rel_tol: float = 1e-12
    max_terms: int = field(default_factory=_default_max_terms)
    settle_count: int = 3

    def __post_init__(self):
        if self.rel_tol <= 0:
            raise DomainError("rel_tol must be positive")
        if self.max_terms < self.settle_count or self.settle_count < 1:
            raise DomainError("need max_terms >= settle_count >= 1")


DEFAULT_TRUNC = Truncation()


@dataclass(frozen=True)
class ModularPoint:
    """Upper half-plane parameter tau with its derived nome q = e^{2 pi i tau}."""

    tau: complex
    q: complex = field(init=False)

    def __post_init__(self):
        tau = complex(self.tau)
        if tau.imag <= 0:
            raise DomainError(f"tau={tau} must have positive imaginary part")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "q", cmath.exp(TWO_PI_I * tau))

    @classmethod
    def from_nome(cls, q: complex) -> "ModularPoint":
        q = complex(q)
        if not 0 < abs(q) < 1:
            raise DomainError(f"nome q={q} must satisfy 0 < |q| < 1")
        return cls(cmath.log(q) / TWO_PI_I)

    def power(self, exponent: complex) -> complex:
        """q^exponent with the branch fixed by tau: e^{2 pi i tau exponent}."""
        return cmath.exp(TWO_PI_I * self.tau * exponent)


@dataclass(frozen=True)
class EvalResult:
    """Value of a series plus its a-posteriori error estimate."""

    value: complex
    err_estimate: float
    terms_used: int

    def __complex__(self) -> complex:
        return self.value


_STATUS_ERRORS = {
    K.BUDGET: BudgetExceeded,
    K.DIVERGENT: Divergent,
    K.POLE: PoleHit,
}


def _check(status: int, what: str) -> None:
    if status != K.OK:
        raise _STATUS_ERRORS[status](what)


def as_modular_point(tau) -> ModularPoint:
    return tau if isinstance(tau, ModularPoint) else ModularPoint(complex(tau))


def _check_nome(q: complex) -> complex:
    q = complex(q)
    if not 0 < abs(q) < 1:
        raise DomainError(f"nome q={q} must satisfy 0 < |q| < 1")
    return q


# --------------------------------------------------------------------------
# Lattice geometry
# --------------------------------------------------------------------------

def lattice_dist(u: complex, tau) -> float:
    """Distance from u to the nearest point of Z + Z tau.

    Measured as |dp + dr tau| after reducing the lattice coordinates
    (p, r) of u = p + r tau to the centered fundamental cell.
    """
    tau = as_modular_point(tau).tau
    u = complex(u)
    r = u.imag / tau.imag
    p = u.real - r * tau.real
    dp = p - round(p)
    dr = r - round(r)
    return abs(dp + dr * tau)


def require_off_lattice(u: complex, tau, what: str, shift: complex = 0.0) -> None:
    """Raise PoleHit when u is within POLE_DIST of shift + Z + Z tau."""
    if lattice_dist(complex(u) - shift, tau) < POLE_DIST:
        raise PoleHit(f"{what} within {POLE_DIST:g} of the excluded lattice")


def mult_to_additive(w: complex, tau) -> complex:
    """Additive coordinate u with w = e^{2 pi i u}, Re(u) in (-1/2, 1/2]."""
    w = complex(w)
    if w == 0:
        raise DomainError("multiplicative coordinate must be nonzero")
    return cmath.log(w) / TWO_PI_I


def thetaq_zero_dist(w: complex, tau) -> float:
    """Additive distance of w from the theta_q zero set -q^Z."""
    # -q^m = e^{2 pi i (1/2 + m tau)}
    return lattice_dist(mult_to_additive(w, tau) - 0.5, tau)


def qpow_lattice_dist(w: complex, tau) -> float:
    """Additive distance of w from {q^m : m in Z}."""
    return lattice_dist(mult_to_additive(w, tau), tau)


# --------------------------------------------------------------------------
# q-Pochhammer symbols
# --------------------------------------------------------------------------

def qpoch_inf(x: complex, q: complex, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """(x; q)_inf = prod_{j>=0} (1 - x q^j)."""
    q = _check_nome(q)
    v, e, t, s = K.qpoch_inf_k(complex(x), q, trunc.rel_tol, trunc.max_terms,
                               trunc.settle_count)
    _check(s, "qpoch_inf")
    return EvalResult(v, e, t)


def qpoch(x: complex, q: complex, n: int, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """(x; q)_n for integer n, as an explicit finite product on both signs.

    Negative n uses prod_{j=1}^{-n} (1 - x q^{-j})^{-1}; the infinite-product
    quotient it must agree with is kept as a test oracle only.
    """
    q = _check_nome(q)
    v, e, t, s = K.qpoch_int_k(complex(x), q, int(n))
    _check(s, "qpoch: denominator factor vanished")
    return EvalResult(v, e, t)


def qpoch_many(args, q: complex, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Product of (x; q)_inf over the sequence args (the (a1, ..., ak)_inf shorthand)."""
    value = 1.0 + 0.0j
    err = 0.0
    terms = 0
    for x in args:
        r = qpoch_inf(x, q, trunc)
        err = err * abs(r.value) + abs(value) * r.err_estimate
        value *= r.value
        terms += r.terms_used
    return EvalResult(value, err, terms)


# --------------------------------------------------------------------------
# Theta functions
# --------------------------------------------------------------------------

def theta_q(x: complex, q: complex, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """theta_q(x) = (q, -x, -q/x; q)_inf, the triple product form."""
    q = _check_nome(q)
    x = complex(x)
    if x == 0:
        raise DomainError("theta_q requires x != 0")
    v, e, t, s = K.theta_q_prod_k(x, q, trunc.rel_tol, trunc.max_terms,
                                  trunc.settle_count)
    _check(s, "theta_q")
    return EvalResult(v, e, t)


def theta_q_sum(x: complex, q: complex, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Bilateral series form of theta_q (internal oracle for the product)."""
    q = _check_nome(q)
    x = complex(x)
    if x == 0:
        raise DomainError("theta_q requires x != 0")
    v, e, t, s = K.theta_q_sum_k(x, q, trunc.rel_tol, trunc.max_terms,
                                 trunc.settle_count)
    _check(s, "theta_q_sum")
    return EvalResult(v, e, t)


def theta11(u: complex, tau, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Jacobi theta with half characteristics, product form.

    theta11(u) = -i q^{1/8} e^{-pi i u} (q, e^{2 pi i u}, q e^{-2 pi i u}; q)_inf.
    Entire in u, odd, with zero set Z + Z tau.
    """
    mp = as_modular_point(tau)
    u = complex(u)
    q = mp.q
    xu = cmath.exp(TWO_PI_I * u)
    pref = -1j * mp.power(0.125) * cmath.exp(-1j * math.pi * u)
    v1 = K.qpoch_inf_k(q, q, trunc.rel_tol, trunc.max_terms, trunc.settle_count)
    v2 = K.qpoch_inf_k(xu, q, trunc.rel_tol, trunc.max_terms, trunc.settle_count)
    v3 = K.qpoch_inf_k(q / xu, q, trunc.rel_tol, trunc.max_terms, trunc.settle_count)
    _check(max(v1[3], v2[3], v3[3]), "theta11")
    value = pref * v1[0] * v2[0] * v3[0]
    err = abs(pref) * (abs(v2[0] * v3[0]) * v1[1] + abs(v1[0] * v3[0]) * v2[1]
                       + abs(v1[0] * v2[0]) * v3[1])
    return EvalResult(value, err, v1[2] + v2[2] + v3[2])


def theta11_sum(u: complex, tau, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Defining half-integer series of theta11 (oracle for the product form)."""
    mp = as_modular_point(tau)
    v, e, t, s = K.theta11_sum_k(complex(u), mp.tau, trunc.rel_tol,
                                 trunc.max_terms, trunc.settle_count)
    _check(s, "theta11_sum")
    return EvalResult(v, e, t)


def theta11_logderiv(u: complex, tau, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """theta11'(u) / theta11(u) by termwise differentiation of the series."""
    mp = as_modular_point(tau)
    u = complex(u)
    require_off_lattice(u, mp, "theta11_logderiv: u")
    d, v, t, s = K.theta11_dsum_k(u, mp.tau, trunc.rel_tol, trunc.max_terms,
                                  trunc.settle_count)
    _check(s, "theta11_logderiv")
    value = d / v
    return EvalResult(value, trunc.rel_tol * (1.0 + abs(value)) * 10.0, t)

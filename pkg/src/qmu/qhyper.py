"""Unilateral and bilateral basic hypergeometric series, the q-Appell double
series, and the Jackson q-Bessel function J_nu^(2).

Series conventions (r upper parameters a_i, s lower parameters b_j):

    phi:  sum_{n>=0} (a_1..a_r)_n / ((b_1..b_s)_n (q)_n)
                     ((-1)^n q^{n(n-1)/2})^{s-r+1} x^n
    psi:  sum_{n in Z} (a_1..a_r)_n / ((b_1..b_s)_n)
                     ((-1)^n q^{n(n-1)/2})^{s-r} x^n

Bilateral sums use a symmetric-window policy with independently settled
tails; divergence is detected empirically (persistent term growth), not from
analytic region tests.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels as K
from .errors import DomainError
from .qcore import DEFAULT_TRUNC, EvalResult, Truncation, _check, _check_nome, qpoch_inf


@dataclass(frozen=True)
class SeriesSpec:
    """Parameters of one basic hypergeometric series."""

    upper: tuple = ()
    lower: tuple = ()
    q: complex = 0.0
    argument: complex = 0.0

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(complex(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(complex(b) for b in self.lower))
        object.__setattr__(self, "q", _check_nome(self.q))
        object.__setattr__(self, "argument", complex(self.argument))


def _params(values: Sequence[complex]) -> np.ndarray:
    return np.asarray(values, dtype=np.complex128)


def phi(spec: SeriesSpec, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Evaluate the unilateral series; terminating series sum exactly."""
    srp1 = len(spec.lower) - len(spec.upper) + 1
    v, e, t, s = K.phi_k(_params(spec.upper), _params(spec.lower), spec.q,
                         spec.argument, srp1, trunc.rel_tol, trunc.max_terms,
                         trunc.settle_count)
    _check(s, "phi")
    return EvalResult(v, e, t)


def phi_f(upper, lower, q, x, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Convenience wrapper: phi on raw parameter lists."""
    return phi(SeriesSpec(tuple(upper), tuple(lower), q, x), trunc)


def psi(spec: SeriesSpec, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Evaluate the bilateral series with independently settled tails."""
    sr = len(spec.lower) - len(spec.upper)
    v, e, t, s = K.psi_k(_params(spec.upper), _params(spec.lower), spec.q,
                         spec.argument, sr, trunc.rel_tol, trunc.max_terms,
                         trunc.settle_count)
    _check(s, "psi")
    return EvalResult(v, e, t)


def psi_f(upper, lower, q, x, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Convenience wrapper: psi on raw parameter lists."""
    return psi(SeriesSpec(tuple(upper), tuple(lower), q, x), trunc)


def q_appell_phi1(a, b1, b2, c, q, x, y, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """First q-Appell double series.

    sum_{m,n>=0} (a)_{m+n} (b1)_m (b2)_n / ((c)_{m+n} (q)_m (q)_n) x^m y^n,
    truncated by square shells max(m, n) = k, matching the q^{k^2}-type decay
    of the zero-b-parameter cases that appear in the mu-function expansions.
    """
    q = _check_nome(q)
    if abs(x) >= 1 or abs(y) >= 1:
        raise DomainError("q_appell_phi1 requires |x| < 1 and |y| < 1")
    max_shells = min(600, trunc.max_terms)
    v, e, t, s = K.appell_phi1_k(complex(a), complex(b1), complex(b2), complex(c),
                                 q, complex(x), complex(y), trunc.rel_tol,
                                 max_shells, trunc.settle_count)
    _check(s, "q_appell_phi1")
    return EvalResult(v, e, t)


def q_bessel_J2(nu: complex, x: complex, q: complex,
                trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Jackson q-Bessel function, 0-phi-1 form.

    J_nu^(2)(x; q) = (q^{nu+1})_inf / (q)_inf (x/2)^nu
                     0phi1(-; q^{nu+1}; q, -x^2 q^{nu+1} / 4)
    with (x/2)^nu on the principal branch.
    """
    q = _check_nome(q)
    nu = complex(nu)
    x = complex(x)
    qnu1 = q ** (nu + 1)
    num = qpoch_inf(qnu1, q, trunc)
    den = qpoch_inf(q, q, trunc)
    head = num.value / den.value * cmath.exp(nu * cmath.log(x / 2)) if x != 0 else (
        num.value / den.value if nu == 0 else 0.0j)
    tail = phi_f((), (qnu1,), q, -x * x * qnu1 / 4.0, trunc)
    value = head * tail.value
    err = abs(head) * tail.err_estimate + abs(value) * (
        num.err_estimate / max(abs(num.value), 1e-300)
        + den.err_estimate / abs(den.value))
    return EvalResult(value, err, num.terms_used + den.terms_used + tail.terms_used)


def q_bessel_J2_alt(nu: complex, x: complex, q: complex,
                    trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """1-phi-1 form of J_nu^(2) (oracle for the 0-phi-1 form).

    J_nu^(2)(x; q) = (x/2)^nu / (q)_inf 1phi1(-x^2/4; 0; q, q^{nu+1}).
    """
    q = _check_nome(q)
    nu = complex(nu)
    x = complex(x)
    qnu1 = q ** (nu + 1)
    den = qpoch_inf(q, q, trunc)
    head = cmath.exp(nu * cmath.log(x / 2)) / den.value if x != 0 else (
        1.0 / den.value if nu == 0 else 0.0j)
    tail = phi_f((-x * x / 4.0,), (0.0,), q, qnu1, trunc)
    value = head * tail.value
    err = abs(head) * tail.err_estimate + abs(value) * den.err_estimate / abs(den.value)
    return EvalResult(value, err, den.terms_used + tail.terms_used)

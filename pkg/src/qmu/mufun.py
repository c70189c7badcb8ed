"""The Appell-Lerch mu-function, its one-parameter deformation mu(u, v; alpha),
the Kronecker function, and the mock theta layer tied to them.

All entry points take additive coordinates (u, v, alpha, tau); multiplicative
quantities x = e^{2 pi i u}, y = e^{2 pi i v}, a = q^alpha are derived
internally so that fractional powers such as (x/y)^{alpha/2} := e^{pi i
alpha (u - v)} are branch-unambiguous.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from . import _kernels as K
from .errors import DomainError, PoleHit
from .qcore import (
    DEFAULT_TRUNC,
    EvalResult,
    ModularPoint,
    Truncation,
    _check,
    _check_nome,
    as_modular_point,
    lattice_dist,
    qpoch_many,
    require_off_lattice,
    theta11,
    theta_q,
)
from .qhyper import phi_f, psi_f, q_bessel_J2

TWO_PI_I = 2j * math.pi
PI_I = 1j * math.pi

_INT_TOL = 1e-9   # alpha this close to an integer takes the finite-product path


@dataclass(frozen=True)
class MuPoint:
    """Admissible argument tuple of mu(u, v; alpha).

    Requires u - alpha tau and v off Z + Z tau (within the 1e-6 rejection
    threshold); these are the pole lattices of the deformed function.
    """

    u: complex
    v: complex
    alpha: complex
    tau: ModularPoint

    def __post_init__(self):
        object.__setattr__(self, "u", complex(self.u))
        object.__setattr__(self, "v", complex(self.v))
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "tau", as_modular_point(self.tau))
        require_off_lattice(self.u - self.alpha * self.tau.tau, self.tau,
                            "mu: u - alpha*tau")
        require_off_lattice(self.v, self.tau, "mu: v")

    @property
    def q(self) -> complex:
        return self.tau.q

    @property
    def x(self) -> complex:
        return cmath.exp(TWO_PI_I * self.u)

    @property
    def y(self) -> complex:
        return cmath.exp(TWO_PI_I * self.v)

    @property
    def a(self) -> complex:
        return self.tau.power(self.alpha)

    def shifted(self, du=0.0, dv=0.0, dalpha=0.0) -> "MuPoint":
        return MuPoint(self.u + du, self.v + dv, self.alpha + dalpha, self.tau)


class MuForm(Enum):
    """Which of the four bilateral expressions of mu(x, y; a) to evaluate."""

    DEF = "def"    # 1psi2 in y, prefactor (x)_inf / (x/a)_inf / theta_q(-y)
    ALT1 = "alt1"  # 1psi2 in x, prefactor against theta_q(-x/a)
    ALT2 = "alt2"  # 2psi2(x/a, y/a; 0, 0; q, a)
    ALT3 = "alt3"  # 0psi2(-; x, y; q, xy/a)


def mu_zwegers(u: complex, v: complex, tau, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Two-variable Appell-Lerch sum.

    mu(u, v) = e^{pi i u} / theta11(v)
               sum_n (-1)^n e^{2 pi i n v} q^{n(n+1)/2} / (1 - e^{2 pi i u} q^n)
    """
    mp = as_modular_point(tau)
    u = complex(u)
    v = complex(v)
    require_off_lattice(u, mp, "mu: u")
    require_off_lattice(v, mp, "mu: v")
    xm = cmath.exp(TWO_PI_I * u)
    ym = cmath.exp(TWO_PI_I * v)
    sv, se, st, ss = K.mu_zwegers_sum_k(xm, ym, mp.q, trunc.rel_tol,
                                        trunc.max_terms, trunc.settle_count)
    _check(ss, "mu_zwegers")
    th = theta11(v, mp, trunc)
    pref = cmath.exp(PI_I * u) / th.value
    value = pref * sv
    err = abs(pref) * se + abs(value) * th.err_estimate / abs(th.value)
    return EvalResult(value, err, st + th.terms_used)


def mu_general(p: MuPoint, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Deformed Appell-Lerch sum mu(u, v; alpha).

    mu(u, v; alpha) = e^{pi i alpha (u - v)} / theta11(v) *
        sum_n (-1)^n e^{2 pi i (n + 1/2) v} q^{n(n+1)/2}
              (e^{2 pi i u} q^{n+1})_inf / (e^{2 pi i u} q^{n - alpha + 1})_inf

    Integer alpha collapses the Pochhammer quotient to an explicit finite
    product (avoiding 0/0 between the two infinite products near poles).
    """
    mp = p.tau
    kr = round(p.alpha.real)
    is_int = abs(p.alpha - kr) < _INT_TOL
    sv, se, st, ss = K.mu_general_sum_k(p.x, p.y, mp.q, p.a, is_int, int(kr),
                                        trunc.rel_tol, trunc.max_terms,
                                        trunc.settle_count)
    _check(ss, "mu_general")
    th = theta11(p.v, mp, trunc)
    # e^{2 pi i (n + 1/2) v} = e^{pi i v} * y^n; the y^n lives in the kernel
    pref = cmath.exp(PI_I * (p.alpha * (p.u - p.v) + p.v)) / th.value
    value = pref * sv
    err = abs(pref) * se + abs(value) * th.err_estimate / abs(th.value)
    return EvalResult(value, err, st + th.terms_used)


def mu_alpha(u, v, alpha, tau, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """mu_general on raw coordinates."""
    return mu_general(MuPoint(u, v, alpha, as_modular_point(tau)), trunc)


def mu_general_expr(p: MuPoint, form: MuForm,
                    trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """One of the four bilateral q-hypergeometric expressions of mu(x, y; a).

    All fractional powers come from additive coordinates:
    (x/y)^{alpha/2} = e^{pi i alpha (u - v)}, a = e^{2 pi i alpha tau}.
    """
    mp = p.tau
    q = mp.q
    x, y, a = p.x, p.y, p.a
    halfpow = cmath.exp(PI_I * p.alpha * (p.u - p.v))
    lead = -1j * mp.power(-0.125) * halfpow
    if form is MuForm.DEF:
        tq = theta_q(-y, q, trunc)
        head = qpoch_many((x,), q, trunc)
        tail = qpoch_many((x / a,), q, trunc)
        if abs(tail.value) < 1e-300:
            raise PoleHit("mu expression: (x/a)_inf vanished")
        series = psi_f((x / a,), (0.0, x), q, y, trunc)
        value = lead / tq.value * head.value / tail.value * series.value
    elif form is MuForm.ALT1:
        require_off_lattice(p.u - p.alpha * mp.tau - 0.5, mp, "mu Alt1: -x/a")
        tq = theta_q(-x / a, q, trunc)
        head = qpoch_many((a * q / y,), q, trunc)
        tail = qpoch_many((q / y,), q, trunc)
        if abs(tail.value) < 1e-300:
            raise PoleHit("mu expression: (q/y)_inf vanished")
        series = psi_f((y / a,), (0.0, y), q, x, trunc)
        value = lead / tq.value * head.value / tail.value * series.value
    elif form is MuForm.ALT2:
        tq = theta_q(-y, q, trunc)
        tq2 = theta_q(-x / a, q, trunc)
        head = qpoch_many((a, q, a * q / x, a * q / y), q, trunc)
        series = psi_f((x / a, y / a), (0.0, 0.0), q, a, trunc)
        value = lead * head.value / (tq.value * tq2.value) * series.value
    elif form is MuForm.ALT3:
        tq = theta_q(-y, q, trunc)
        tq2 = theta_q(-x / a, q, trunc)
        head = qpoch_many((a, q, x, y), q, trunc)
        series = psi_f((), (x, y), q, x * y / a, trunc)
        value = lead * head.value / (tq.value * tq2.value) * series.value
    else:
        raise DomainError(f"unknown form {form}")
    rel = series.err_estimate / max(abs(series.value), 1e-300)
    return EvalResult(value, abs(value) * (rel + 10 * trunc.rel_tol), series.terms_used)


def phi_factor(p: MuPoint) -> complex:
    """Theta quotient carrying the u <-> v symmetry of mu(u, v; alpha).

    Phi(u, v; alpha) = theta11(v - alpha tau) theta11(u) /
                       (theta11(u - alpha tau) theta11(v)) e^{2 pi i alpha (u - v)}
    """
    mp = p.tau
    at = p.alpha * mp.tau
    for w, name in ((p.u, "u"), (p.v, "v"), (p.u - at, "u - alpha*tau"),
                    (p.v - at, "v - alpha*tau")):
        require_off_lattice(w, mp, f"phi_factor: {name}")
    num = theta11(p.v - at, mp).value * theta11(p.u, mp).value
    den = theta11(p.u - at, mp).value * theta11(p.v, mp).value
    return num / den * cmath.exp(TWO_PI_I * p.alpha * (p.u - p.v))


def kronecker_k(x: complex, y: complex, q: complex,
                trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Kronecker function, product form.

    k(x, y) = (q, q, xy, q/xy)_inf / (x, q/x, y, q/y)_inf; the bilateral sum
    sum_n y^n / (1 - x q^n) is kept as the oracle (kronecker_k_sum).
    """
    q = _check_nome(q)
    mp = ModularPoint.from_nome(q)
    x, y = complex(x), complex(y)
    for w, name in ((x, "x"), (y, "y")):
        if lattice_dist(cmath.log(w) / TWO_PI_I, mp) < 1e-6:
            raise PoleHit(f"kronecker_k: {name} within 1e-6 of q^Z")
    num = qpoch_many((q, q, x * y, q / (x * y)), q, trunc)
    den = qpoch_many((x, q / x, y, q / y), q, trunc)
    value = num.value / den.value
    err = (num.err_estimate + abs(value) * den.err_estimate) / abs(den.value)
    return EvalResult(value, err, num.terms_used + den.terms_used)


def kronecker_k_sum(x: complex, y: complex, q: complex,
                    trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Bilateral-sum oracle for kronecker_k.

    sum_n y^n / (1 - x q^n) = 1phi1-style bilateral 1psi1(x; qx; q, y) / (1 - x);
    converges for |q| < |y| < 1.
    """
    q = _check_nome(q)
    x, y = complex(x), complex(y)
    if abs(1.0 - x) < 1e-12:
        raise PoleHit("kronecker_k_sum: x too close to 1")
    r = psi_f((x,), (q * x,), q, y, trunc)
    value = r.value / (1.0 - x)
    return EvalResult(value, r.err_estimate / abs(1.0 - x), r.terms_used)


def j_alpha(w: complex, alpha: complex, tau,
            trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Building block of the q-Bessel decomposition of mu.

    j(w; alpha) = i q^{1/8} (q)_inf / (q^{1-alpha})_inf
                  e^{pi i (1-alpha) w} / theta11(w)
                  1phi1(q^{1-alpha}; 0; q, e^{2 pi i w} q)

    Diverges as alpha approaches a positive integer ((q^{1-alpha})_inf -> 0);
    such alpha raise PoleHit.
    """
    mp = as_modular_point(tau)
    w = complex(w)
    alpha = complex(alpha)
    require_off_lattice(w, mp, "j_alpha: w")
    if abs(alpha.imag) < 1e-6 and abs(alpha.real - round(alpha.real)) < 1e-6 \
            and round(alpha.real) >= 1:
        raise PoleHit("j_alpha: alpha within 1e-6 of a positive integer")
    q = mp.q
    q1a = mp.power(1.0 - alpha)
    num = qpoch_many((q,), q, trunc)
    den = qpoch_many((q1a,), q, trunc)
    th = theta11(w, mp, trunc)
    series = phi_f((q1a,), (0.0,), q, cmath.exp(TWO_PI_I * w) * q, trunc)
    pref = 1j * mp.power(0.125) * num.value / den.value \
        * cmath.exp(PI_I * (1.0 - alpha) * w) / th.value
    value = pref * series.value
    rel = (series.err_estimate / max(abs(series.value), 1e-300)
           + th.err_estimate / abs(th.value) + 10 * trunc.rel_tol)
    return EvalResult(value, abs(value) * rel, series.terms_used + th.terms_used)


def j_alpha_bessel(w: complex, alpha: complex, tau,
                   trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """q-Bessel form of j(w; alpha), the cross-check for j_alpha.

    j(w; alpha) = i q^{1/8} (q)_inf^2 e^{-pi i w / (2 tau)} /
                  (theta11(w) (q^{1-alpha})_inf)
                  J^{(2)}_{w/tau}(2 i e^{pi i (1-alpha) tau}; q)
    """
    mp = as_modular_point(tau)
    w = complex(w)
    alpha = complex(alpha)
    q = mp.q
    q1a = mp.power(1.0 - alpha)
    qq = qpoch_many((q,), q, trunc)
    den = qpoch_many((q1a,), q, trunc)
    th = theta11(w, mp, trunc)
    bes = q_bessel_J2(w / mp.tau, 2j * cmath.exp(PI_I * (1.0 - alpha) * mp.tau),
                      q, trunc)
    value = (1j * mp.power(0.125) * qq.value ** 2
             * cmath.exp(-PI_I * w / (2.0 * mp.tau)) / (th.value * den.value)
             * bes.value)
    rel = (bes.err_estimate / max(abs(bes.value), 1e-300)
           + th.err_estimate / abs(th.value) + 10 * trunc.rel_tol)
    return EvalResult(value, abs(value) * rel, bes.terms_used + th.terms_used)


def g3(x: complex, q: complex, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Universal mock theta function g3(x; q) = sum_{n>=1} q^{n(n-1)} / ((x)_n (q/x)_n)."""
    q = _check_nome(q)
    x = complex(x)
    if x == 0:
        raise DomainError("g3 requires x != 0")
    v, e, t, s = K.g3_k(x, q, trunc.rel_tol, trunc.max_terms, trunc.settle_count)
    _check(s, "g3")
    return EvalResult(v, e, t)


_MOCK_CODES = {"f0": 0, "phi": 1, "psi": 2}


def mock_theta(which: str, q: complex, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """One of the three classical fifth/third-order mock theta sums.

    f0(q)  = sum_{n>=0} q^{n^2} / (-q; q)_n
    phi(q) = sum_{n>=0} q^{n^2} / (-q^2; q^2)_n
    psi(q) = sum_{n>=1} q^{n^2} / (q; q^2)_n
    """
    try:
        code = _MOCK_CODES[which]
    except KeyError:
        raise DomainError(f"mock_theta: unknown name {which!r}") from None
    q = _check_nome(q)
    v, e, t, s = K.mock_theta_k(code, q, trunc.rel_tol, trunc.max_terms,
                                trunc.settle_count)
    _check(s, f"mock_theta {which}")
    return EvalResult(v, e, t)

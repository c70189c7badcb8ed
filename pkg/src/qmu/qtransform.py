"""Formal power series, the q-Borel and q-Laplace transformations, the
fundamental solutions of the second-order q-difference equation

    [T_x^2 - (1 - x q) sqrt(a) T_x - x q] f(x) = 0,     T_x f(x) := f(q x),

and numerical evaluation of the connection formulas linking the solutions at
x = 0 and x = infinity.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from . import _kernels as K
from .errors import DomainError, PoleHit
from .qcore import (
    DEFAULT_TRUNC,
    EvalResult,
    ModularPoint,
    POLE_DIST,
    Truncation,
    _check,
    as_modular_point,
    qpoch_many,
    theta_q,
    thetaq_zero_dist,
)
from .qhyper import phi_f

TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class FormalPowerSeries:
    """Finite coefficient list c_0..c_N with declared truncation order N."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        if not self.coeffs:
            raise DomainError("FormalPowerSeries needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, x: complex) -> EvalResult:
        """Horner evaluation; err_estimate is the last-kept-term bound |c_N x^N|."""
        x = complex(x)
        acc = 0.0 + 0.0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        tail = abs(self.coeffs[-1]) * abs(x) ** self.order
        return EvalResult(acc, tail, len(self.coeffs))

    def __call__(self, x: complex) -> complex:
        return self.eval(x).value


@dataclass(frozen=True)
class HWParams:
    """Parameter bundle (alpha, tau, lambda) for the resummed solutions."""

    alpha: complex
    tau: ModularPoint
    lam: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "tau", as_modular_point(self.tau))
        object.__setattr__(self, "lam", complex(self.lam))

    @property
    def q(self) -> complex:
        return self.tau.q

    @property
    def a(self) -> complex:
        return self.tau.power(self.alpha)


def q_borel(f: FormalPowerSeries, q: complex) -> FormalPowerSeries:
    """Coefficient map c_n -> c_n q^{n(n-1)/2}, same truncation order."""
    q = complex(q)
    out = []
    w = 1.0 + 0.0j   # q^{n(n-1)/2}, updated by q^n
    qn = 1.0 + 0.0j
    for c in f.coeffs:
        out.append(c * w)
        w *= qn
        qn *= q
    return FormalPowerSeries(tuple(out))


def q_laplace(f: Callable[[complex], complex], x: complex, lam: complex,
              q: complex, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Theta-kernel bilateral sum  sum_n f(lam q^n) / theta_q(lam q^n / x).

    The kernel values come from theta_q(lam/x) via the exact q-difference
    relation theta_q(q^n w) = q^{-n(n-1)/2} w^{-n} theta_q(w), so only one
    theta evaluation is needed.
    """
    mp = ModularPoint.from_nome(q)
    x, lam = complex(x), complex(lam)
    if thetaq_zero_dist(lam / x, mp) < POLE_DIST:
        raise PoleHit("q_laplace: lam/x within 1e-6 of the theta kernel zeros")
    th0 = theta_q(lam / x, q, trunc)
    w = lam / x
    total = f(lam)
    sumabs = abs(total)
    err = 0.0
    terms = 1
    # upward: multiplier m_{n+1} = m_n q^n w
    m = 1.0 + 0.0j
    qn = 1.0 + 0.0j
    arg = lam * q
    calm = 0
    emax = 0.0
    while terms < trunc.max_terms:
        m = m * qn * w
        qn *= q
        t = f(arg) * m
        arg *= q
        total += t
        terms += 1
        a = abs(t)
        sumabs += a
        if a <= trunc.rel_tol * sumabs:
            emax = max(emax, a)
            calm += 1
            if calm >= trunc.settle_count:
                break
        else:
            calm = 0
            emax = 0.0
    else:
        from .errors import BudgetExceeded
        raise BudgetExceeded("q_laplace")
    err += emax
    # downward: m_{n-1} = m_n q^{-(n-1)} / w
    m = 1.0 + 0.0j
    p = 1.0 / q
    arg = lam / q
    calm = 0
    emax = 0.0
    while terms < trunc.max_terms:
        m = m / (p * w)
        p /= q
        t = f(arg) * m
        arg /= q
        total += t
        terms += 1
        a = abs(t)
        sumabs += a
        if a <= trunc.rel_tol * sumabs:
            emax = max(emax, a)
            calm += 1
            if calm >= trunc.settle_count:
                break
        else:
            calm = 0
            emax = 0.0
    else:
        from .errors import BudgetExceeded
        raise BudgetExceeded("q_laplace")
    err += emax
    value = total / th0.value
    errv = (err + abs(value) * th0.err_estimate) / abs(th0.value)
    return EvalResult(value, errv, terms)


def f0_solution(x: complex, p: HWParams, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Resummed solution at x = 0.

    f0(x, lam) = x^{alpha/2} sum_n B(lam q^n) / theta_q(lam q^n / x), where
    B(xi) = (-xi)_inf / (-xi/a)_inf is the closed form of the q-Borel image of
    the formal solution 2phi0(a, 0; -; q, x/a).  The bilateral sum is always
    taken on the closed form: it probes lam q^n far outside any polynomial
    truncation's radius.
    """
    mp = p.tau
    x = complex(x)
    if x == 0:
        raise DomainError("f0_solution requires x != 0")
    if thetaq_zero_dist(p.lam / x, mp) < POLE_DIST:
        raise PoleHit("f0_solution: lam/x within 1e-6 of the theta kernel zeros")
    sv, se, st, ss = K.laplace_borel_sum_k(x, p.lam, p.a, mp.q, trunc.rel_tol,
                                           trunc.max_terms, trunc.settle_count)
    _check(ss, "f0_solution")
    th0 = theta_q(p.lam / x, mp.q, trunc)
    head = cmath.exp(0.5 * p.alpha * cmath.log(x))
    value = head * sv / th0.value
    err = abs(head) * (se + abs(sv / th0.value) * th0.err_estimate) / abs(th0.value)
    return EvalResult(value, err, st + th0.terms_used)


def f_inf_solution(x: complex, p: HWParams, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Solution at x = infinity: f_inf(x, lam) = f0(x^{-1}, lam)."""
    return f0_solution(1.0 / complex(x), p, trunc)


def g0_solution(x: complex, p: HWParams, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Companion solution at x = 0.

    g0(x) = x^{1 - alpha/2} / theta_q(-x) 1phi1(q/a; 0; q, x q).
    """
    mp = p.tau
    x = complex(x)
    if x == 0:
        raise DomainError("g0_solution requires x != 0")
    if thetaq_zero_dist(-x, mp) < POLE_DIST:
        raise PoleHit("g0_solution: -x within 1e-6 of q^Z")
    th = theta_q(-x, mp.q, trunc)
    series = phi_f((mp.q / p.a,), (0.0,), mp.q, x * mp.q, trunc)
    head = cmath.exp((1.0 - 0.5 * p.alpha) * cmath.log(x))
    value = head * series.value / th.value
    err = abs(head / th.value) * series.err_estimate \
        + abs(value) * th.err_estimate / abs(th.value)
    return EvalResult(value, err, series.terms_used + th.terms_used)


def g_inf_solution(x: complex, p: HWParams, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Companion solution at x = infinity: g_inf(x) = g0(x^{-1})."""
    return g0_solution(1.0 / complex(x), p, trunc)


def hermite_weber_residual(fn, x: complex, p: HWParams,
                           trunc: Truncation = DEFAULT_TRUNC) -> tuple:
    """Residual of [T_x^2 - (1 - x q) sqrt(a) T_x - x q] applied to fn.

    fn(x, p, trunc) -> EvalResult; three independent evaluations at x, qx,
    q^2 x (no recurrence shortcutting).  The three terms can sit on wildly
    different scales at small nomes, so the residual is reported against the
    sum of the term magnitudes: the returned pair is (residual + S, S) with
    S = |T^2 f| + |(1-xq) sqrt(a) T f| + |x q f|, making the caller's
    |lhs - rhs| / (|lhs| + |rhs|) the conditioning-honest relative residual.
    """
    q = p.q
    sqa = p.tau.power(0.5 * p.alpha)
    f2 = fn(q * q * x, p, trunc)
    f1 = fn(q * x, p, trunc)
    f0 = fn(x, p, trunc)
    t2 = f2.value
    t1 = (1.0 - x * q) * sqa * f1.value
    t0 = x * q * f0.value
    scale = abs(t2) + abs(t1) + abs(t0)
    err = f2.err_estimate + abs((1.0 - x * q) * sqa) * f1.err_estimate \
        + abs(x * q) * f0.err_estimate
    return (t2 - t1 - t0) + scale, scale, err


def connection_residual_lemma22(x: complex, p: HWParams,
                                trunc: Truncation = DEFAULT_TRUNC) -> list:
    """Both rows of the connection matrix between (f0, f_inf) and (g0, g_inf).

    (f0, f_inf)^T = -(q)_inf/(q/a)_inf M (g0, g_inf)^T with
    M11 = theta_q(lam) theta_q(a x / lam) x^alpha /
          (theta_q(lam/a) theta_q(x/lam) a),       M12 = M21 = 1,
    M22 = theta_q(lam) theta_q(x lam / a) x^{-alpha} /
          (theta_q(lam/a) theta_q(x lam)).
    Returns [{name, lhs, rhs, err}, ...].
    """
    mp = p.tau
    q = mp.q
    lam, a = p.lam, p.a
    x = complex(x)
    for w, name in ((lam, "lam"), (lam / a, "lam/a"), (a * x / lam, "a x/lam"),
                    (x / lam, "x/lam"), (x * lam / a, "x lam/a"), (x * lam, "x lam")):
        if thetaq_zero_dist(w, mp) < POLE_DIST:
            raise PoleHit(f"lemma22 connection: theta argument {name} near zero set")
    pref = -qpoch_many((q,), q, trunc).value / qpoch_many((q / a,), q, trunc).value
    xpow = cmath.exp(p.alpha * cmath.log(x))
    m11 = theta_q(lam, q, trunc).value * theta_q(a * x / lam, q, trunc).value * xpow \
        / (theta_q(lam / a, q, trunc).value * theta_q(x / lam, q, trunc).value * a)
    m22 = theta_q(lam, q, trunc).value * theta_q(x * lam / a, q, trunc).value \
        / (theta_q(lam / a, q, trunc).value * theta_q(x * lam, q, trunc).value * xpow)
    g0 = g0_solution(x, p, trunc)
    gi = g_inf_solution(x, p, trunc)
    f0 = f0_solution(x, p, trunc)
    fi = f_inf_solution(x, p, trunc)
    scale = abs(pref) * (abs(m11) + 1.0) * (abs(g0.value) + abs(gi.value))
    err0 = f0.err_estimate + scale * (g0.err_estimate + gi.err_estimate)
    err1 = fi.err_estimate + abs(pref) * (1.0 + abs(m22)) * (g0.err_estimate + gi.err_estimate)
    return [
        {"name": "row-f0", "lhs": f0.value,
         "rhs": pref * (m11 * g0.value + gi.value), "err": err0},
        {"name": "row-finf", "lhs": fi.value,
         "rhs": pref * (g0.value + m22 * gi.value), "err": err1},
    ]


def connection_residual_thm23(x: complex, lam: complex, lam_p: complex,
                              p: HWParams, trunc: Truncation = DEFAULT_TRUNC) -> dict:
    """Two-parameter connection formula (the one behind the translation law).

    f0(x, lam') = theta_q(lam') theta_q(a x / lam') x^alpha /
                  (theta_q(lam'/a) theta_q(x/lam') a) f_inf(x, lam)
                - (a)_inf (q)_inf^2
                  theta_q(-lam'/(x lam)) theta_q(-x) theta_q(-lam lam'/a) /
                  (theta_q(x lam) theta_q(lam'/x) theta_q(lam'/a) theta_q(a/lam))
                  g_inf(x).
    """
    mp = p.tau
    q = mp.q
    a = p.a
    x, lam, lam_p = complex(x), complex(lam), complex(lam_p)
    for w, name in ((lam_p, "lam'"), (a * x / lam_p, "a x/lam'"),
                    (lam_p / a, "lam'/a"), (x / lam_p, "x/lam'"),
                    (-lam_p / (x * lam), "-lam'/(x lam)"), (-x, "-x"),
                    (-lam * lam_p / a, "-lam lam'/a"), (x * lam, "x lam"),
                    (lam_p / x, "lam'/x"), (a / lam, "a/lam")):
        if thetaq_zero_dist(w, mp) < POLE_DIST:
            raise PoleHit(f"thm23 connection: theta argument {name} near zero set")
    pp = HWParams(p.alpha, mp, lam_p)
    pl = HWParams(p.alpha, mp, lam)
    lhs = f0_solution(x, pp, trunc)
    fi = f_inf_solution(x, pl, trunc)
    gi = g_inf_solution(x, pl, trunc)
    xpow = cmath.exp(p.alpha * cmath.log(x))
    c1 = theta_q(lam_p, q, trunc).value * theta_q(a * x / lam_p, q, trunc).value * xpow \
        / (theta_q(lam_p / a, q, trunc).value * theta_q(x / lam_p, q, trunc).value * a)
    c2 = qpoch_many((a,), q, trunc).value * qpoch_many((q, q), q, trunc).value \
        * theta_q(-lam_p / (x * lam), q, trunc).value * theta_q(-x, q, trunc).value \
        * theta_q(-lam * lam_p / a, q, trunc).value \
        / (theta_q(x * lam, q, trunc).value * theta_q(lam_p / x, q, trunc).value
           * theta_q(lam_p / a, q, trunc).value * theta_q(a / lam, q, trunc).value)
    rhs = c1 * fi.value - c2 * gi.value
    err = lhs.err_estimate + abs(c1) * fi.err_estimate + abs(c2) * gi.err_estimate
    return {"name": "thm23", "lhs": lhs.value, "rhs": rhs, "err": err}


# --------------------------------------------------------------------------
# The two-parameter equation [(1-abxq)T^2 - (1-(a+b)xq)T - xq] f = 0
# --------------------------------------------------------------------------

def _borel_f1(xi: complex, a: complex, b: complex, q: complex,
              trunc: Truncation) -> complex:
    """Analytic continuation of the q-Borel image of 2phi0(a, b; -; q, x).

    B(xi) = 2phi1(a, b; 0; q, -xi); outside |xi| < 0.9 the series is
    continued with Heine's first iterate,
    2phi1(a, b; 0; q, z) = (b, az)_inf / (z)_inf 2phi1(0, z; az; q, b),
    whose argument b stays fixed and small.
    """
    z = -xi
    if abs(z) < 0.9:
        return phi_f((a, b), (0.0,), q, z, trunc).value
    pref = qpoch_many((b, a * z), q, trunc).value / qpoch_many((z,), q, trunc).value
    return pref * phi_f((0.0, z), (a * z,), q, b, trunc).value


def lb_f1(x: complex, a: complex, b: complex, q: complex, lam: complex,
          trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Laplace-Borel image of the formal solution 2phi0(a, b; -; q, x)."""
    return q_laplace(lambda xi: _borel_f1(xi, a, b, q, trunc), x, lam, q, trunc)


def f2_solution(x: complex, a: complex, b: complex, q: complex,
                trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """Convergent solution at x = 0:
    F2(x) = (abx)_inf / theta_q(-xq) 2phi1(q/a, q/b; 0; q, abx)."""
    mp = ModularPoint.from_nome(q)
    if thetaq_zero_dist(-x * q, mp) < POLE_DIST:
        raise PoleHit("f2_solution: -xq near q^Z")
    th = theta_q(-x * q, q, trunc)
    head = qpoch_many((a * b * x,), q, trunc)
    series = phi_f((q / a, q / b), (0.0,), q, a * b * x, trunc)
    value = head.value / th.value * series.value
    err = abs(head.value / th.value) * series.err_estimate \
        + abs(value) * (th.err_estimate / abs(th.value))
    return EvalResult(value, err, series.terms_used)


def _g_solution(x: complex, first: complex, second: complex, q: complex,
                trunc: Truncation) -> EvalResult:
    """Shared form of the two solutions at infinity.

    theta_q(-first*x*q)/theta_q(-xq) 2phi1(first, 0; first*q/second; q,
    q/(first*second*x)), evaluated through the confluent continuation
    2phi1(0, c1; c; q, z) -> 1phi1(c/c1; c; q, c1 z)/(z)_inf so the value
    exists also for |q/(first*second*x)| >= 1.
    """
    mp = ModularPoint.from_nome(q)
    if thetaq_zero_dist(-x * q, mp) < POLE_DIST:
        raise PoleHit("g-solution: -xq near q^Z")
    z = q / (first * second * x)
    th_num = theta_q(-first * x * q, q, trunc)
    th_den = theta_q(-x * q, q, trunc)
    c = first * q / second
    pref = th_num.value / (th_den.value * qpoch_many((z,), q, trunc).value)
    series = phi_f((c / first,), (c,), q, first * z, trunc)
    value = pref * series.value
    err = abs(pref) * series.err_estimate + abs(value) * (
        th_num.err_estimate / max(abs(th_num.value), 1e-300)
        + th_den.err_estimate / abs(th_den.value))
    return EvalResult(value, err, series.terms_used)


def g1_solution(x, a, b, q, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    return _g_solution(complex(x), complex(a), complex(b), complex(q), trunc)


def g2_solution(x, a, b, q, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    return _g_solution(complex(x), complex(b), complex(a), complex(q), trunc)


def _two_param_residual(fn, x, a, b, q, trunc) -> tuple:
    """Residual of [(1-abxq)T^2 - (1-(a+b)xq)T - xq] fn, three evaluations,
    reported against the sum of term magnitudes exactly as in
    hermite_weber_residual."""
    f2 = fn(q * q * x)
    f1 = fn(q * x)
    f0 = fn(x)
    t2 = (1.0 - a * b * x * q) * f2.value
    t1 = (1.0 - (a + b) * x * q) * f1.value
    t0 = x * q * f0.value
    scale = abs(t2) + abs(t1) + abs(t0)
    err = abs(1.0 - a * b * x * q) * f2.err_estimate \
        + abs(1.0 - (a + b) * x * q) * f1.err_estimate + abs(x * q) * f0.err_estimate
    return (t2 - t1 - t0) + scale, scale, err


def lemma21_suite(x: complex, a: complex, b: complex, q: complex, lam: complex,
                  trunc: Truncation = DEFAULT_TRUNC) -> list:
    """Residual rows for the two-parameter equation and its connection rows.

    Rows: the equation residual for each of LB(F1), F2, G1, G2, then the two
    connection formulas expanding LB(F1) and F2 over (G1, G2).
    """
    x, a, b, q, lam = (complex(x), complex(a), complex(b), complex(q), complex(lam))
    rows = []
    lhs, rhs, err = _two_param_residual(
        lambda xx: lb_f1(xx, a, b, q, lam, trunc), x, a, b, q, trunc)
    rows.append({"name": "qdiff-lbf1", "lhs": lhs, "rhs": rhs, "err": err})
    lhs, rhs, err = _two_param_residual(
        lambda xx: f2_solution(xx, a, b, q, trunc), x, a, b, q, trunc)
    rows.append({"name": "qdiff-f2", "lhs": lhs, "rhs": rhs, "err": err})
    lhs, rhs, err = _two_param_residual(
        lambda xx: g1_solution(xx, a, b, q, trunc), x, a, b, q, trunc)
    rows.append({"name": "qdiff-g1", "lhs": lhs, "rhs": rhs, "err": err})
    lhs, rhs, err = _two_param_residual(
        lambda xx: g2_solution(xx, a, b, q, trunc), x, a, b, q, trunc)
    rows.append({"name": "qdiff-g2", "lhs": lhs, "rhs": rhs, "err": err})

    tq = lambda w: theta_q(w, q, trunc).value  # noqa: E731
    lb = lb_f1(x, a, b, q, lam, trunc)
    g1 = g1_solution(x, a, b, q, trunc)
    g2 = g2_solution(x, a, b, q, trunc)
    c1 = qpoch_many((b,), q, trunc).value * tq(a * lam) * tq(a * x * q / lam) \
        * tq(-x * q) / (qpoch_many((b / a,), q, trunc).value
                        * tq(lam) * tq(x * q / lam) * tq(-a * x * q))
    c2 = qpoch_many((a,), q, trunc).value * tq(b * lam) * tq(b * x * q / lam) \
        * tq(-x * q) / (qpoch_many((a / b,), q, trunc).value
                        * tq(lam) * tq(x * q / lam) * tq(-b * x * q))
    err = lb.err_estimate + abs(c1) * g1.err_estimate + abs(c2) * g2.err_estimate
    rows.append({"name": "connect-lbf1", "lhs": lb.value,
                 "rhs": c1 * g1.value + c2 * g2.value, "err": err})
    f2v = f2_solution(x, a, b, q, trunc)
    d1 = qpoch_many((q / a,), q, trunc).value / qpoch_many((b / a, q), q, trunc).value
    d2 = qpoch_many((q / b,), q, trunc).value / qpoch_many((a / b, q), q, trunc).value
    err = f2v.err_estimate + abs(d1) * g1.err_estimate + abs(d2) * g2.err_estimate
    rows.append({"name": "connect-f2", "lhs": f2v.value,
                 "rhs": d1 * g1.value + d2 * g2.value, "err": err})
    return rows

"""Hot series kernels.

Every kernel returns ``(value, err, terms, status)`` built from plain scalars
so the same source runs compiled under numba or interpreted as the fallback
(see ``_backend``).  Kernels never raise: failures are reported through the
status code and mapped to exceptions by the wrappers in the public modules.

Conventions
-----------
* ``err`` is the magnitude bound used for ``EvalResult.err_estimate``: for
  sums, the largest magnitude among the final ``settle`` computed terms; for
  products, a bound on the neglected tail.
* Bilateral sums settle each tail independently against ``rel_tol`` times the
  running sum of absolute values (a scale that stays honest when the value
  itself nearly cancels).
* A numerator factor within 1e-14 (relative) of zero is snapped to exact
  zero: that is how terminating series stop with the exact term count.
* A denominator factor below 1e-12 in magnitude counts as a pole.
"""

import cmath
import math

import numpy as np

from ._backend import jit

OK = 0
BUDGET = 1
DIVERGENT = 2
POLE = 3

_SNAP = 1e-14
_PFLOOR = 1e-12
_TINY = 1e-300
_TWO_PI = 2.0 * math.pi


@jit
def _cpowi(z, n):
    # z**n for integer n, without complex**complex
    if n == 0:
        return 1.0 + 0.0j
    m = n if n > 0 else -n
    out = 1.0 + 0.0j
    w = z
    while m > 0:
        if m & 1:
            out = out * w
        w = w * w
        m >>= 1
    if n < 0:
        return 1.0 / out
    return out


# --------------------------------------------------------------------------
# q-Pochhammer products
# --------------------------------------------------------------------------

@jit
def qpoch_inf_k(x, q, rel_tol, max_terms, settle):
    """prod_{j>=0} (1 - x q^j), stopped once |x q^j| stays below tolerance."""
    absq = abs(q)
    thr = rel_tol * (1.0 + abs(x))
    value = 1.0 + 0.0j
    w = x
    calm = 0
    j = 0
    while j < max_terms:
        value *= 1.0 - w
        if abs(w) < thr:
            calm += 1
        else:
            calm = 0
        w *= q
        j += 1
        if calm >= settle:
            return value, abs(value) * abs(w) / (1.0 - absq), j, OK
    return value, abs(value) * abs(w) / (1.0 - absq), j, BUDGET


@jit
def qpoch_int_k(x, q, n):
    """Finite (x;q)_n for integer n, explicit products on both signs."""
    value = 1.0 + 0.0j
    if n >= 0:
        w = x
        for _ in range(n):
            value *= 1.0 - w
            w *= q
        return value, 0.0, n, OK
    w = x
    for _ in range(-n):
        w = w / q
        d = 1.0 - w
        if abs(d) < _TINY:
            return value, 0.0, 0, POLE
        value /= d
    return value, 0.0, -n, OK


# --------------------------------------------------------------------------
# Theta functions
# --------------------------------------------------------------------------

@jit
def theta_q_prod_k(x, q, rel_tol, max_terms, settle):
    """Triple product (q, -x, -q/x; q)_inf."""
    v1, e1, t1, s1 = qpoch_inf_k(q, q, rel_tol, max_terms, settle)
    v2, e2, t2, s2 = qpoch_inf_k(-x, q, rel_tol, max_terms, settle)
    v3, e3, t3, s3 = qpoch_inf_k(-q / x, q, rel_tol, max_terms, settle)
    status = max(max(s1, s2), s3)
    value = v1 * v2 * v3
    err = abs(v2 * v3) * e1 + abs(v1 * v3) * e2 + abs(v1 * v2) * e3
    return value, err, t1 + t2 + t3, status


@jit
def theta_q_sum_k(x, q, rel_tol, max_terms, settle):
    """Bilateral sum_n x^n q^{n(n-1)/2} (oracle form of the triple product)."""
    total = 1.0 + 0.0j
    sumabs = 1.0
    terms = 1
    err = 0.0
    # upward: t_{n+1} = t_n * x * q^n
    t = 1.0 + 0.0j
    qn = 1.0 + 0.0j
    calm = 0
    emax = 0.0
    while True:
        if terms >= max_terms:
            return total, err + emax, terms, BUDGET
        t = t * x * qn
        qn *= q
        terms += 1
        total += t
        a = abs(t)
        sumabs += a
        if a <= rel_tol * sumabs:
            if a > emax:
                emax = a
            calm += 1
            if calm >= settle:
                break
        else:
            calm = 0
            emax = 0.0
    err += emax
    # downward: t_{n-1} = t_n / (x * q^{n-1})
    t = 1.0 + 0.0j
    p = 1.0 / q
    calm = 0
    emax = 0.0
    while True:
        if terms >= max_terms:
            return total, err + emax, terms, BUDGET
        t = t / (x * p)
        p /= q
        terms += 1
        total += t
        a = abs(t)
        sumabs += a
        if a <= rel_tol * sumabs:
            if a > emax:
                emax = a
            calm += 1
            if calm >= settle:
                break
        else:
            calm = 0
            emax = 0.0
    return total, err + emax, terms, OK


@jit
def theta11_sum_k(u, tau, rel_tol, max_terms, settle):
    """sum over nu in Z+1/2 of exp(2 pi i nu (u + 1/2) + pi i nu^2 tau)."""
    total = 0.0 + 0.0j
    sumabs = 0.0
    terms = 0
    err = 0.0
    for direction in range(2):
        calm = 0
        emax = 0.0
        n = 0
        while True:
            if terms >= max_terms:
                return total, err + emax, terms, BUDGET
            if direction == 0:
                nu = n + 0.5
            else:
                nu = -n - 0.5
            t = cmath.exp(1j * _TWO_PI * nu * (u + 0.5) + 1j * math.pi * nu * nu * tau)
            total += t
            terms += 1
            n += 1
            a = abs(t)
            sumabs += a
            if a <= rel_tol * sumabs and n > 1:
                if a > emax:
                    emax = a
                calm += 1
                if calm >= settle:
                    break
            else:
                calm = 0
                emax = 0.0
        err += emax
    return total, err, terms, OK


@jit
def theta11_dsum_k(u, tau, rel_tol, max_terms, settle):
    """Termwise derivative and value of the half-integer theta sum.

    Returns (derivative_sum, value_sum, terms, status); err is folded into the
    wrapper via the settle scale of the derivative series.
    """
    dtot = 0.0 + 0.0j
    vtot = 0.0 + 0.0j
    sumabs = 0.0
    terms = 0
    for direction in range(2):
        calm = 0
        n = 0
        while True:
            if terms >= max_terms:
                return dtot, vtot, terms, BUDGET
            if direction == 0:
                nu = n + 0.5
            else:
                nu = -n - 0.5
            t = cmath.exp(1j * _TWO_PI * nu * (u + 0.5) + 1j * math.pi * nu * nu * tau)
            vtot += t
            dtot += 1j * _TWO_PI * nu * t
            terms += 1
            n += 1
            a = abs(t) * (1.0 + _TWO_PI * abs(nu))
            sumabs += a
            if a <= rel_tol * sumabs and n > 1:
                calm += 1
                if calm >= settle:
                    break
            else:
                calm = 0
    return dtot, vtot, terms, OK


# --------------------------------------------------------------------------
# Basic hypergeometric series
# --------------------------------------------------------------------------

@jit
def phi_k(upper, lower, q, z, srp1, rel_tol, max_terms, settle):
    """Unilateral r-phi-s with term factor ((-1)^n q^{n(n-1)/2})^{srp1}.

    ``srp1`` is s - r + 1.  Terminating series (a numerator factor snapping
    to zero) return exactly the finite sum with the exact term count.
    """
    total = 1.0 + 0.0j
    sumabs = 1.0
    t = 1.0 + 0.0j
    qn = 1.0 + 0.0j
    qnp = q
    calm = 0
    grow = 0
    emax = 0.0
    aprev = 1.0
    n = 0
    while n < max_terms:
        num = 1.0 + 0.0j
        for i in range(upper.shape[0]):
            w = upper[i] * qn
            f = 1.0 - w
            if abs(f) <= _SNAP * (1.0 + abs(w)):
                f = 0.0 + 0.0j
            num *= f
        den = 1.0 - qnp
        for i in range(lower.shape[0]):
            f = 1.0 - lower[i] * qn
            if abs(f) < _PFLOOR:
                return total, emax, n + 1, POLE
            den *= f
        t = t * num / den * _cpowi(-qn, srp1) * z
        qn *= q
        qnp *= q
        n += 1
        if t == 0.0 + 0.0j:
            return total, 0.0, n, OK
        total += t
        a = abs(t)
        sumabs += a
        if a <= rel_tol * sumabs:
            if a > emax:
                emax = a
            calm += 1
            if calm >= settle:
                return total, emax, n + 1, OK
        else:
            calm = 0
            emax = 0.0
        if n > 50:
            if a > aprev:
                grow += 1
                if grow >= settle:
                    return total, a, n + 1, DIVERGENT
            else:
                grow = 0
        aprev = a
    return total, abs(t), n, BUDGET


@jit
def psi_k(upper, lower, q, z, sr, rel_tol, max_terms, settle):
    """Bilateral r-psi-s with term factor ((-1)^n q^{n(n-1)/2})^{sr}.

    Tails settle independently; either tail may terminate exactly when a
    Pochhammer factor vanishes.
    """
    total = 1.0 + 0.0j
    sumabs = 1.0
    terms = 1
    err = 0.0
    # upward
    t = 1.0 + 0.0j
    qn = 1.0 + 0.0j
    calm = 0
    grow = 0
    emax = 0.0
    aprev = 1.0
    n = 0
    while True:
        if terms >= max_terms:
            return total, err + emax, terms, BUDGET
        num = 1.0 + 0.0j
        for i in range(upper.shape[0]):
            w = upper[i] * qn
            f = 1.0 - w
            if abs(f) <= _SNAP * (1.0 + abs(w)):
                f = 0.0 + 0.0j
            num *= f
        den = 1.0 + 0.0j
        for i in range(lower.shape[0]):
            f = 1.0 - lower[i] * qn
            if abs(f) < _PFLOOR:
                return total, err + emax, terms, POLE
            den *= f
        t = t * num / den * _cpowi(-qn, sr) * z
        qn *= q
        terms += 1
        n += 1
        if t == 0.0 + 0.0j:
            emax = 0.0
            break
        total += t
        a = abs(t)
        sumabs += a
        if a <= rel_tol * sumabs:
            if a > emax:
                emax = a
            calm += 1
            if calm >= settle:
                break
        else:
            calm = 0
            emax = 0.0
        if n > 50:
            if a > aprev:
                grow += 1
                if grow >= settle:
                    return total, a, terms, DIVERGENT
            else:
                grow = 0
        aprev = a
    err += emax
    # downward: at step to n-1 the lower parameters move to the numerator.
    # The ratio is taken in the normalized form
    #   prod_j (q^{1-n} - b_j) / (prod_i (q^{1-n} - a_i) (-1)^{s-r} z),
    # whose factors shrink with the tail; the raw (1 - c q^{n-1}) factors
    # would leave double range before slow geometric tails settle.
    t = 1.0 + 0.0j
    pinv = q
    sign = -1.0 if (sr % 2 != 0) else 1.0
    calm = 0
    grow = 0
    emax = 0.0
    aprev = 1.0
    n = 0
    while True:
        if terms >= max_terms:
            return total, err + emax, terms, BUDGET
        num = 1.0 + 0.0j
        for i in range(lower.shape[0]):
            f = pinv - lower[i]
            if abs(f) <= _SNAP * (1.0 + abs(lower[i])):
                f = 0.0 + 0.0j
            num *= f
        den = 1.0 + 0.0j
        for i in range(upper.shape[0]):
            f = pinv - upper[i]
            if abs(f) < _PFLOOR:
                return total, err + emax, terms, POLE
            den *= f
        t = t * num / (den * sign * z)
        pinv *= q
        terms += 1
        n += 1
        if t == 0.0 + 0.0j:
            emax = 0.0
            break
        total += t
        a = abs(t)
        sumabs += a
        if a <= rel_tol * sumabs:
            if a > emax:
                emax = a
            calm += 1
            if calm >= settle:
                break
        else:
            calm = 0
            emax = 0.0
        if n > 50:
            if a > aprev:
                grow += 1
                if grow >= settle:
                    return total, a, terms, DIVERGENT
            else:
                grow = 0
        aprev = a
    return total, err + emax, terms, OK


@jit
def appell_phi1_k(a, b1, b2, c, q, x, y, rel_tol, max_shells, settle):
    """Double sum over m, n >= 0 expanded by square shells max(m, n) = k."""
    nmax = 2 * max_shells + 2
    ac = np.empty(nmax, dtype=np.complex128)     # (a)_t / (c)_t
    u1 = np.empty(max_shells + 1, dtype=np.complex128)  # (b1)_m x^m / (q)_m
    u2 = np.empty(max_shells + 1, dtype=np.complex128)  # (b2)_n y^n / (q)_n
    ac[0] = 1.0 + 0.0j
    u1[0] = 1.0 + 0.0j
    u2[0] = 1.0 + 0.0j
    qt = 1.0 + 0.0j
    for t in range(1, nmax):
        fden = 1.0 - c * qt
        if abs(fden) < _PFLOOR:
            return 0.0 + 0.0j, 0.0, 0, POLE
        ac[t] = ac[t - 1] * (1.0 - a * qt) / fden
        qt *= q
    qm = 1.0 + 0.0j
    qmp = q
    for m in range(1, max_shells + 1):
        u1[m] = u1[m - 1] * (1.0 - b1 * qm) * x / (1.0 - qmp)
        u2[m] = u2[m - 1] * (1.0 - b2 * qm) * y / (1.0 - qmp)
        qm *= q
        qmp *= q
    total = 1.0 + 0.0j   # (0, 0) term
    sumabs = 1.0
    calm = 0
    grow = 0
    sprev = 1.0
    emax = 0.0
    for k in range(1, max_shells + 1):
        shell = 0.0 + 0.0j
        shellabs = 0.0
        for m in range(k + 1):
            t = ac[m + k] * u1[m] * u2[k]
            shell += t
            shellabs += abs(t)
        for n in range(k):
            t = ac[k + n] * u1[k] * u2[n]
            shell += t
            shellabs += abs(t)
        total += shell
        sumabs += shellabs
        if shellabs <= rel_tol * sumabs:
            if shellabs > emax:
                emax = shellabs
            calm += 1
            if calm >= settle:
                return total, emax, (k + 1) * (k + 1), OK
        else:
            calm = 0
            emax = 0.0
        if k > 30:
            if shellabs > sprev:
                grow += 1
                if grow >= settle:
                    return total, shellabs, (k + 1) * (k + 1), DIVERGENT
            else:
                grow = 0
        sprev = shellabs
    return total, emax, (max_shells + 1) * (max_shells + 1), BUDGET


# --------------------------------------------------------------------------
# Appell-Lerch sums
# --------------------------------------------------------------------------

@jit
def mu_zwegers_sum_k(xm, ym, q, rel_tol, max_terms, settle):
    """sum_n (-1)^n ym^n q^{n(n+1)/2} / (1 - xm q^n)."""
    d = 1.0 - xm
    if abs(d) < _PFLOOR:
        return 0.0 + 0.0j, 0.0, 0, POLE
    total = 1.0 / d
    sumabs = abs(total)
    terms = 1
    err = 0.0
    # upward: N_{n+1} = -N_n ym q^{n+1}
    numr = 1.0 + 0.0j
    qn1 = q
    xq = xm * q
    calm = 0
    emax = 0.0
    while True:
        if terms >= max_terms:
            return total, err + emax, terms, BUDGET
        numr = -numr * ym * qn1
        d = 1.0 - xq
        if abs(d) < _PFLOOR:
            return total, err + emax, terms, POLE
        t = numr / d
        qn1 *= q
        xq *= q
        terms += 1
        total += t
        a = abs(t)
        sumabs += a
        if a <= rel_tol * sumabs:
            if a > emax:
                emax = a
            calm += 1
            if calm >= settle:
                break
        else:
            calm = 0
            emax = 0.0
    err += emax
    # downward: N_{n-1} = -N_n q^{-n} / ym, and q^{-n} = 1, q, q^2, ... as n
    # runs through 0, -1, -2, ...
    numr = 1.0 + 0.0j
    qmn = 1.0 + 0.0j
    xq = xm
    calm = 0
    emax = 0.0
    while True:
        if terms >= max_terms:
            return total, err + emax, terms, BUDGET
        numr = -numr * qmn / ym
        xq /= q
        d = 1.0 - xq
        if abs(d) < _PFLOOR:
            return total, err + emax, terms, POLE
        t = numr / d
        qmn *= q
        terms += 1
        total += t
        a = abs(t)
        sumabs += a
        if a <= rel_tol * sumabs:
            if a > emax:
                emax = a
            calm += 1
            if calm >= settle:
                break
        else:
            calm = 0
            emax = 0.0
    return total, err + emax, terms, OK


@jit
def _mu_quot(w, q, a, is_int, kint, inner_tol, max_terms, settle):
    """(w)_inf / (w/a)_inf with w = xm q^{n+1}.

    For integer exponents the quotient collapses to an explicit finite
    product, sidestepping 0/0 between the two infinite products.
    """
    if is_int:
        if kint == 0:
            return 1.0 + 0.0j, 0.0, OK
        if kint > 0:
            v = w
            for _ in range(kint):
                v /= q
            prod = 1.0 + 0.0j
            for _ in range(kint):
                f = 1.0 - v
                if abs(f) < _PFLOOR:
                    return 0.0 + 0.0j, 0.0, POLE
                prod *= f
                v *= q
            return 1.0 / prod, 0.0, OK
        prod = 1.0 + 0.0j
        v = w
        for _ in range(-kint):
            prod *= 1.0 - v
            v *= q
        return prod, 0.0, OK
    nv, ne, _, ns = qpoch_inf_k(w, q, inner_tol, max_terms, settle)
    dv, de, _, ds = qpoch_inf_k(w / a, q, inner_tol, max_terms, settle)
    st = max(ns, ds)
    if abs(dv) < _TINY:
        return 0.0 + 0.0j, 0.0, POLE
    val = nv / dv
    err = (ne + abs(val) * de) / abs(dv)
    return val, err, st


@jit
def mu_general_sum_k(xm, ym, q, a, is_int, kint, rel_tol, max_terms, settle):
    """sum_n (-1)^n ym^n q^{n(n+1)/2} (xm q^{n+1})_inf / (xm q^{n+1} / a)_inf."""
    inner_tol = rel_tol * 1e-2
    if inner_tol < 1e-15:
        inner_tol = 1e-15
    q0, e0, s0 = _mu_quot(xm * q, q, a, is_int, kint, inner_tol, max_terms, settle)
    if s0 != OK:
        return 0.0 + 0.0j, 0.0, 0, s0
    total = q0
    errq = e0
    sumabs = abs(total)
    terms = 1
    err = 0.0
    # upward
    numr = 1.0 + 0.0j
    qn1 = q
    warg = xm * q * q
    calm = 0
    emax = 0.0
    while True:
        if terms >= max_terms:
            return total, err + emax + errq, terms, BUDGET
        numr = -numr * ym * qn1
        qv, qe, qs = _mu_quot(warg, q, a, is_int, kint, inner_tol, max_terms, settle)
        if qs != OK:
            return total, err + emax + errq, terms, qs
        t = numr * qv
        errq += abs(numr) * qe
        qn1 *= q
        warg *= q
        terms += 1
        total += t
        av = abs(t)
        sumabs += av
        if av <= rel_tol * sumabs:
            if av > emax:
                emax = av
            calm += 1
            if calm >= settle:
                break
        else:
            calm = 0
            emax = 0.0
    err += emax
    # downward, by the balanced whole-term recurrence
    #   T_{n-1} = T_n * (-q^{-n} / ym) * (1 - xm q^n) / (1 - xm q^n / a)
    # (the split numerator/quotient forms each leave double range long before
    # the term itself does).  A vanishing (1 - xm q^n) truncates the tail
    # exactly; a vanishing denominator is the excluded x/a lattice.
    t = q0
    qmn = 1.0 + 0.0j
    xqn = xm
    xqa = xm / a
    if is_int:
        xqa = xm
        if kint > 0:
            for _ in range(kint):
                xqa /= q
        else:
            for _ in range(-kint):
                xqa *= q
    calm = 0
    emax = 0.0
    while True:
        if terms >= max_terms:
            return total, err + emax + errq, terms, BUDGET
        fden = 1.0 - xqa
        if abs(fden) < _PFLOOR:
            return total, err + emax + errq, terms, POLE
        t = t * (-qmn / ym) * (1.0 - xqn) / fden
        qmn *= q
        xqn /= q
        xqa /= q
        terms += 1
        if t == 0.0 + 0.0j:
            break
        total += t
        av = abs(t)
        sumabs += av
        if av <= rel_tol * sumabs:
            if av > emax:
                emax = av
            calm += 1
            if calm >= settle:
                break
        else:
            calm = 0
            emax = 0.0
    return total, err + emax + errq, terms, OK


# --------------------------------------------------------------------------
# q-Borel / q-Laplace resummation
# --------------------------------------------------------------------------

@jit
def laplace_borel_sum_k(x, lam, a, q, rel_tol, max_terms, settle):
    """sum_n B(lam q^n) q^{n(n-1)/2} (lam/x)^n with B(xi) = (-xi)_inf/(-xi/a)_inf.

    This is the theta-kernel bilateral sum with the kernel's quasi-periodicity
    already factored out; the wrapper divides by theta_q(lam/x).
    """
    inner_tol = rel_tol * 1e-2
    if inner_tol < 1e-15:
        inner_tol = 1e-15
    ratio = lam / x
    nv, ne, _, ns = qpoch_inf_k(-lam, q, inner_tol, max_terms, settle)
    dv, de, _, ds = qpoch_inf_k(-lam / a, q, inner_tol, max_terms, settle)
    if max(ns, ds) != OK:
        return 0.0 + 0.0j, 0.0, 0, max(ns, ds)
    if abs(dv) < _TINY:
        return 0.0 + 0.0j, 0.0, 0, POLE
    total = nv / dv
    sumabs = abs(total)
    terms = 1
    err = ne / abs(dv)
    # upward: M_{n+1} = M_n q^n ratio
    m = 1.0 + 0.0j
    qn = 1.0 + 0.0j
    arg = lam * q
    calm = 0
    emax = 0.0
    while True:
        if terms >= max_terms:
            return total, err + emax, terms, BUDGET
        m = m * qn * ratio
        qn *= q
        nv, ne, _, ns = qpoch_inf_k(-arg, q, inner_tol, max_terms, settle)
        dv, de, _, ds = qpoch_inf_k(-arg / a, q, inner_tol, max_terms, settle)
        if max(ns, ds) != OK:
            return total, err + emax, terms, max(ns, ds)
        if abs(dv) < _TINY:
            return total, err + emax, terms, POLE
        t = m * nv / dv
        err += abs(m) * ne / abs(dv)
        arg *= q
        terms += 1
        total += t
        av = abs(t)
        sumabs += av
        if av <= rel_tol * sumabs:
            if av > emax:
                emax = av
            calm += 1
            if calm >= settle:
                break
        else:
            calm = 0
            emax = 0.0
    err += emax
    # downward: M_{n-1} = M_n q^{-(n-1)} / ratio
    m = 1.0 + 0.0j
    p = 1.0 / q
    arg = lam / q
    calm = 0
    emax = 0.0
    while True:
        if terms >= max_terms:
            return total, err + emax, terms, BUDGET
        m = m / (p * ratio)
        p /= q
        nv, ne, _, ns = qpoch_inf_k(-arg, q, inner_tol, max_terms, settle)
        dv, de, _, ds = qpoch_inf_k(-arg / a, q, inner_tol, max_terms, settle)
        if max(ns, ds) != OK:
            return total, err + emax, terms, max(ns, ds)
        if abs(dv) < _TINY:
            return total, err + emax, terms, POLE
        t = m * nv / dv
        err += abs(m) * ne / abs(dv)
        arg /= q
        terms += 1
        total += t
        av = abs(t)
        sumabs += av
        if av <= rel_tol * sumabs:
            if av > emax:
                emax = av
            calm += 1
            if calm >= settle:
                break
        else:
            calm = 0
            emax = 0.0
    return total, err + emax, terms, OK


# --------------------------------------------------------------------------
# Mock theta sums
# --------------------------------------------------------------------------

@jit
def g3_k(x, q, rel_tol, max_terms, settle):
    """sum_{n>=1} q^{n(n-1)} / ((x)_n (q/x)_n)."""
    f1 = 1.0 - x
    f2 = 1.0 - q / x
    if abs(f1) < _PFLOOR or abs(f2) < _PFLOOR:
        return 0.0 + 0.0j, 0.0, 0, POLE
    den = f1 * f2
    t = 1.0 / den
    total = t
    sumabs = abs(t)
    terms = 1
    q2n = q * q          # q^{2n} at n = 1
    xq = x * q           # x q^n at n = 1
    qx = q * q / x       # q^{n+1}/x at n = 1
    calm = 0
    emax = 0.0
    while True:
        if terms >= max_terms:
            return total, emax, terms, BUDGET
        f1 = 1.0 - xq
        f2 = 1.0 - qx
        if abs(f1) < _PFLOOR or abs(f2) < _PFLOOR:
            return total, emax, terms, POLE
        t = t * q2n / (f1 * f2)
        q2n *= q * q
        xq *= q
        qx *= q
        terms += 1
        total += t
        a = abs(t)
        sumabs += a
        if a <= rel_tol * sumabs:
            if a > emax:
                emax = a
            calm += 1
            if calm >= settle:
                return total, emax, terms, OK
        else:
            calm = 0
            emax = 0.0


@jit
def mock_theta_k(which, q, rel_tol, max_terms, settle):
    """which: 0 -> f0, 1 -> phi, 2 -> psi (the three classical sums)."""
    if which == 2:
        d = 1.0 - q
        if abs(d) < _PFLOOR:
            return 0.0 + 0.0j, 0.0, 0, POLE
        t = q / d
        total = t
        terms = 1
        n = 1
    else:
        t = 1.0 + 0.0j
        total = t
        terms = 1
        n = 0
    sumabs = abs(total)
    calm = 0
    emax = 0.0
    while True:
        if terms >= max_terms:
            return total, emax, terms, BUDGET
        # ratio from term n to n+1: q^{2n+1} / denominator factor
        num = _cpowi(q, 2 * n + 1)
        if which == 0:
            den = 1.0 + _cpowi(q, n + 1)
        elif which == 1:
            den = 1.0 + _cpowi(q, 2 * n + 2)
        else:
            den = 1.0 - _cpowi(q, 2 * n + 1)
        if abs(den) < _PFLOOR:
            return total, emax, terms, POLE
        t = t * num / den
        n += 1
        terms += 1
        total += t
        a = abs(t)
        sumabs += a
        if a <= rel_tol * sumabs:
            if a > emax:
                emax = a
            calm += 1
            if calm >= settle:
                return total, emax, terms, OK
        else:
            calm = 0
            emax = 0.0


# --------------------------------------------------------------------------
# Non-holomorphic completion
# --------------------------------------------------------------------------

@jit
def r_sum_k(u, tau, aratio, t_im, rel_tol, max_terms, settle):
    """Half-integer completion sum built from the Gaussian error integral.

    term(nu) = {sgn(nu) - E((nu + a) sqrt(2t))} (-1)^{nu - 1/2}
               exp(-pi i nu^2 tau - 2 pi i nu u).
    """
    sq2t = math.sqrt(2.0 * t_im)
    rtpi = math.sqrt(math.pi)
    total = 0.0 + 0.0j
    sumabs = 0.0
    terms = 0
    err = 0.0
    for direction in range(2):
        calm = 0
        emax = 0.0
        n = 0
        while True:
            if terms >= max_terms:
                return total, err + emax, terms, BUDGET
            if direction == 0:
                # nu - 1/2 = n
                nu = n + 0.5
                sgn = 1.0
                parity = 1.0 if (n % 2 == 0) else -1.0
            else:
                # nu - 1/2 = -n - 1
                nu = -n - 0.5
                sgn = -1.0
                parity = -1.0 if (n % 2 == 0) else 1.0
            # sgn(nu) - E(w) = sgn(nu) * erfc(sgn(nu) * sqrt(pi) * w)
            w = (nu + aratio) * sq2t
            g = sgn * math.erfc(sgn * rtpi * w)
            t = g * parity * cmath.exp(-1j * math.pi * nu * nu * tau - 1j * _TWO_PI * nu * u)
            total += t
            terms += 1
            n += 1
            a = abs(t)
            sumabs += a
            if a <= rel_tol * (sumabs + 1e-30) and n > 1:
                if a > emax:
                    emax = a
                calm += 1
                if calm >= settle:
                    break
            else:
                calm = 0
                emax = 0.0
        err += emax
    return total, err, terms, OK

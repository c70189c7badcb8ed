"""Continuous q-Hermite polynomials, their link to negative-parameter mu
values, the generating function of the mu family, and the finite kernel
F_{n+1} that mediates between the two.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal

from .errors import Divergent, DomainError
from .qcore import (
    DEFAULT_TRUNC,
    EvalResult,
    Truncation,
    _check_nome,
    as_modular_point,
    qpoch_many,
)
from .mufun import MuPoint, mu_general, mu_zwegers
from .qhyper import phi_f

PI_I = 1j * math.pi


@dataclass(frozen=True)
class HermiteArg:
    """Argument bundle: x = cos(pi w) with the e^{+-pi i w} splitting kept.

    Callers supply w rather than x so the two exponential halves entering the
    finite sums are well defined for complex arguments.
    """

    w: complex
    q: complex

    def __post_init__(self):
        object.__setattr__(self, "w", complex(self.w))
        object.__setattr__(self, "q", _check_nome(self.q))

    @property
    def x(self) -> complex:
        return cmath.cos(math.pi * self.w)


def _qfactorials(q: complex, k: int) -> list:
    """(q; q)_j for j = 0..k."""
    out = [1.0 + 0.0j]
    f = 1.0 + 0.0j
    qj = q
    for _ in range(k):
        f *= 1.0 - qj
        qj *= q
        out.append(f)
    return out


def hermite_cq(k: int, arg: HermiteArg) -> complex:
    """Continuous q-Hermite polynomial H_k(cos(pi w) | q).

    H_k = sum_{l=0}^{k} (q)_k / ((q)_l (q)_{k-l}) e^{pi i (k - 2l) w},
    an exact finite sum; satisfies 2x H_n = H_{n+1} + (1 - q^n) H_{n-1}.
    """
    if k < 0:
        raise DomainError("hermite_cq requires k >= 0")
    fac = _qfactorials(arg.q, k)
    total = 0.0 + 0.0j
    for l in range(k + 1):
        total += fac[k] / (fac[l] * fac[k - l]) * cmath.exp(PI_I * (k - 2 * l) * arg.w)
    return total


def mu_negative_degree(k: int, u, v, tau, trunc: Truncation = DEFAULT_TRUNC) -> EvalResult:
    """mu(u, v; -k) for k >= 0, evaluated through the generic bilateral sum.

    The polynomial value -i q^{-1/8} H_k(cos pi(u - v) | q) is the test
    oracle, not the code path.
    """
    if k < 0:
        raise DomainError("mu_negative_degree requires k >= 0")
    mp = as_modular_point(tau)
    return mu_general(MuPoint(u, v, -float(k), mp), trunc)


def F_capital(n: int, arg: HermiteArg) -> complex:
    """Expansion kernel F_{n+1}(cos pi w | q).

    F_{n+1} = e^{-pi i n w} 1phi1(q^{-n}; 0; q, e^{2 pi i w} q)
              (-1)^n q^{n(n+1)/2} / (q)_n,
    exact: the 1phi1 terminates after n + 1 terms.
    """
    if n < 0:
        raise DomainError("F_capital requires n >= 0")
    q = arg.q
    series = phi_f((q ** (-n),), (0.0,), q, cmath.exp(2.0 * PI_I * arg.w) * q)
    fac = _qfactorials(q, n)[n]
    sign = -1.0 if n % 2 else 1.0
    return (cmath.exp(-PI_I * n * arg.w) * series.value
            * sign * q ** (n * (n + 1) // 2) / fac)


def gen_S(r: complex, u, v, tau, trunc: Truncation = DEFAULT_TRUNC,
          method: Literal["direct", "closed"] = "direct") -> EvalResult:
    """Generating function S(r) = sum_{k>=0} mu(u, v; k+1) r^k.

    direct: term-by-term sum of mu values (integer-parameter path).
    closed: (r e^{pi i(u-v)} q, r e^{-pi i(u-v)} q)_inf mu(u, v)
            - i r q^{7/8} 3phi2(q, r e^{pi i(u-v)} q, r e^{-pi i(u-v)} q; 0, 0; q, q).
    """
    mp = as_modular_point(tau)
    u, v, r = complex(u), complex(v), complex(r)
    q = mp.q
    w = u - v
    ep = cmath.exp(PI_I * w)
    if method == "closed":
        pre = qpoch_many((r * ep * q, r / ep * q), q, trunc)
        head = mu_zwegers(u, v, mp, trunc)
        tail = phi_f((q, r * ep * q, r / ep * q), (0.0, 0.0), q, q, trunc)
        value = pre.value * head.value - 1j * r * mp.power(7.0 / 8.0) * tail.value
        err = (abs(pre.value) * head.err_estimate + abs(head.value) * pre.err_estimate
               + abs(r) * tail.err_estimate)
        return EvalResult(value, err, head.terms_used + tail.terms_used)
    if method != "direct":
        raise DomainError(f"gen_S: unknown method {method!r}")
    total = 0.0 + 0.0j
    sumabs = 0.0
    rk = 1.0 + 0.0j
    calm = 0
    emax = 0.0
    errc = 0.0
    terms = 0
    k = 0
    while True:
        mk = mu_general(MuPoint(u, v, float(k + 1), mp), trunc)
        t = mk.value * rk
        total += t
        errc += abs(rk) * mk.err_estimate
        terms += mk.terms_used
        a = abs(t)
        sumabs += a
        if a <= trunc.rel_tol * sumabs:
            if a > emax:
                emax = a
            calm += 1
            if calm >= trunc.settle_count:
                return EvalResult(total, emax + errc, terms)
        else:
            calm = 0
            emax = 0.0
        rk *= r
        k += 1
        if k > 60 and a > sumabs:
            raise Divergent("gen_S: direct series not decaying")
        if terms >= trunc.max_terms:
            from .errors import BudgetExceeded
            raise BudgetExceeded("gen_S")


def gauss_sum_product(N: int) -> tuple:
    """Quadratic Gauss sum and its sine-product companion.

    Returns (sum_{k=0}^{2N} e^{2 pi i k^2 / (2N+1)},
             prod_{j=1}^{N} (e^{2 pi i (2j-1)/(2N+1)} - e^{-2 pi i (2j-1)/(2N+1)})).
    The sum runs over a full residue system mod 2N+1 (the k = 0 term is
    required for equality).  Exact finite computation; the caller asserts
    equality of the pair.
    """
    if not 1 <= N <= 500:
        raise DomainError("gauss_sum_product requires 1 <= N <= 500")
    m = 2 * N + 1
    ssum = sum(cmath.exp(2j * math.pi * (k * k % m) / m) for k in range(2 * N + 1))
    prod = 1.0 + 0.0j
    for idx in range(1, N + 1):
        g = 2j * math.pi * (2 * idx - 1) / m
        prod *= cmath.exp(g) - cmath.exp(-g)
    return ssum, prod

"""Continuous q-Hermite layer: polynomials, generating function, kernels."""

import cmath
import math

import numpy as np
import pytest

from qmu import ModularPoint, qpoch, qpoch_many
from qmu.mufun import mu_alpha, mu_zwegers
from qmu.qhermite import (
    F_capital,
    HermiteArg,
    gauss_sum_product,
    gen_S,
    hermite_cq,
    mu_negative_degree,
)

TAU = ModularPoint(0.9j)
U, V = 0.2 + 0.05j, -0.3 + 0.02j


def rel(a, b):
    return abs(a - b) / (abs(a) + abs(b) + 1e-300)


def e1(w):
    return cmath.exp(1j * math.pi * w)


class TestHermite:
    def test_initial(self):
        arg = HermiteArg(0.25, 0.3)
        assert hermite_cq(0, arg) == 1.0
        assert hermite_cq(1, arg) == pytest.approx(2 * math.cos(0.25 * math.pi))

    def test_degree_two(self):
        arg = HermiteArg(0.25, 0.3)
        x = arg.x
        assert rel(hermite_cq(2, arg), 4 * x * x - (1 - 0.3)) < 1e-14

    def test_recurrence(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            arg = HermiteArg(complex(rng.uniform(-0.4, 0.4), rng.uniform(-0.1, 0.1)),
                             rng.uniform(0.1, 0.6))
            for n in range(1, 21):
                lhs = 2 * arg.x * hermite_cq(n, arg)
                rhs = hermite_cq(n + 1, arg) + (1 - arg.q ** n) * hermite_cq(n - 1, arg)
                assert rel(lhs, rhs) < 1e-13

    @pytest.mark.parametrize("N", [1, 2, 3, 4, 5, 6])
    def test_value_at_zero(self, N):
        # i^{-2N} H_{2N}(0|q) = (q; q^2)_N, odd degrees vanish
        q = 0.3
        arg = HermiteArg(0.5, q)
        got = (1j) ** (-2 * N) * hermite_cq(2 * N, arg)
        assert abs(got - qpoch(q, q * q, N).value) < 1e-12
        assert abs(hermite_cq(2 * N - 1, arg)) < 1e-12

    def test_generating_function(self):
        # sum H_n r^n/(q)_n converges to the reciprocal double product
        r, w, q = 0.35, 0.2 + 0.05j, 0.3
        arg = HermiteArg(w, q)
        prev_tail = None
        total = 0.0
        target = 1.0 / qpoch_many((r * cmath.exp(1j * math.pi * w),
                                   r * cmath.exp(-1j * math.pi * w)), q).value
        for n in range(60):
            total += hermite_cq(n, arg) / qpoch(q, q, n).value * r ** n
            tail = abs(total - target)
            if n > 5 and prev_tail is not None:
                assert tail <= prev_tail * 1.05 + 1e-15
            prev_tail = tail
        assert rel(total, target) < 1e-10


class TestNegativeDegree:
    @pytest.mark.parametrize("k", [0, 1, 12])
    def test_matches_polynomial(self, k):
        m = mu_negative_degree(k, U, V, TAU).value
        h = hermite_cq(k, HermiteArg(U - V, TAU.q))
        assert rel(m, -1j * TAU.power(-1 / 8) * h) < 1e-10


class TestGenS:
    def test_at_zero(self):
        s0 = gen_S(0.0, U, V, TAU).value
        assert rel(s0, mu_zwegers(U, V, TAU).value) < 1e-13

    def test_direct_vs_closed(self):
        a = gen_S(0.3, U, V, TAU, method="direct").value
        b = gen_S(0.3, U, V, TAU, method="closed").value
        assert rel(a, b) < 1e-8

    def test_first_order_equation(self):
        q = TAU.q
        w = U - V
        r = 0.3
        lhs = gen_S(r, U, V, TAU).value
        rhs = (1 - r * e1(w) * q) * (1 - r * e1(-w) * q) \
            * gen_S(r * q, U, V, TAU).value - 1j * r * TAU.power(7 / 8)
        assert rel(lhs, rhs) < 1e-8

    def test_expansion_in_negative_parameters(self):
        q = TAU.q
        w = U - V
        r = 0.3
        pre = qpoch_many((r * e1(w) * q, r * e1(-w) * q), q).value
        total = 0.0
        for m in range(25):
            total += mu_alpha(U, V, 1.0 - m, TAU).value * q ** m * r ** m \
                / qpoch(q, q, m).value
        assert rel(gen_S(r, U, V, TAU).value, pre * total) < 1e-8


class TestFKernel:
    def test_first_is_one(self):
        assert F_capital(0, HermiteArg(0.2, 0.3)) == 1.0 + 0.0j

    def test_generating_function(self):
        r, w, q = 0.3, 0.2, 0.3
        arg = HermiteArg(w, q)
        total = sum(F_capital(n, arg) * r ** n for n in range(25))
        prod = qpoch_many((e1(w) * r * q, e1(-w) * r * q), q).value
        assert rel(total, prod) < 1e-10

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_mu_convolution(self, k):
        # mu(u,v;k+1) = sum_l q^l/(q)_l F_{k-l+1} mu(u,v;1-l)
        q = TAU.q
        arg = HermiteArg(U - V, q)
        lhs = mu_alpha(U, V, float(k + 1), TAU).value
        rhs = sum(q ** l / qpoch(q, q, l).value * F_capital(k - l, arg)
                  * mu_alpha(U, V, 1.0 - l, TAU).value for l in range(k + 1))
        assert rel(lhs, rhs) < 1e-9

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
    def test_reverse_convolution(self, m):
        # sum_k mu(k+1) H_{m-k} q^{m-k}/(q)_{m-k} = -i q^{m-1/8} H_{m-1}/(q)_m
        q = TAU.q
        arg = HermiteArg(U - V, q)
        lhs = sum(mu_alpha(U, V, k + 1.0, TAU).value
                  * hermite_cq(m - k, arg) * q ** (m - k) / qpoch(q, q, m - k).value
                  for k in range(m + 1))
        rhs = -1j * TAU.power(m - 1 / 8) * hermite_cq(m - 1, arg) \
            / qpoch(q, q, m).value
        assert rel(lhs, rhs) < 1e-9


class TestGaussSum:
    @pytest.mark.parametrize("N,tol", [(1, 1e-12), (5, 1e-11), (30, 1e-10)])
    def test_sum_equals_product(self, N, tol):
        s, p = gauss_sum_product(N)
        assert abs(s - p) < tol

    def test_n_one_exact(self):
        s, p = gauss_sum_product(1)
        # 1 + 2 e^{2 pi i /3} = i sqrt(3)
        assert abs(s - 1j * math.sqrt(3)) < 1e-14
        assert abs(p - 1j * math.sqrt(3)) < 1e-14

    def test_range_check(self):
        from qmu import DomainError
        with pytest.raises(DomainError):
            gauss_sum_product(0)

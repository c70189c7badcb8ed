"""Completion layer: the Gaussian error integral, the correction series, and
the modular transformation checks."""

import cmath
import math

import numpy as np
import pytest

from qmu import ModularPoint, PoleHit, Truncation
from qmu.modular import CompletionContext, E_func, R_func, mu_tilde, nu_tilde

TAU = ModularPoint(1.1j)
U, V = 0.2 + 0.05j, -0.1 + 0.03j


def rel(a, b):
    return abs(a - b) / (abs(a) + abs(b) + 1e-300)


def s_multiplier(w, ts):
    return -cmath.sqrt(-1j * ts) * cmath.exp(-1j * math.pi * w * w / ts)


class TestE:
    def test_zero(self):
        assert E_func(0.0) == 0.0

    def test_odd(self):
        xs = np.linspace(0.05, 3.0, 40)
        for x in xs:
            assert E_func(-x) == -E_func(x)

    def test_limit(self):
        assert abs(E_func(5.0) - 1.0) < 1e-12

    def test_monotone_bounded(self):
        # inside +-2.5 the increments stay representable; further out erf
        # saturates to 1.0 exactly in doubles
        xs = np.linspace(-2.5, 2.5, 101)
        vals = [E_func(x) for x in xs]
        assert all(b > a for a, b in zip(vals, vals[1:]))
        assert all(abs(v) < 1.0 for v in vals)

    def test_midpoint_rule_oracle(self):
        for x in (0.3, 0.8, 1.7):
            n = 20000
            h = x / n
            quad = 2 * h * sum(math.exp(-math.pi * ((j + 0.5) * h) ** 2)
                               for j in range(n))
            assert abs(E_func(x) - quad) < 1e-8
        # refinement converges to the library value
        x, err_prev = 0.8, None
        for n in (1000, 4000, 16000):
            h = x / n
            quad = 2 * h * sum(math.exp(-math.pi * ((j + 0.5) * h) ** 2)
                               for j in range(n))
            err = abs(E_func(x) - quad)
            if err_prev is not None:
                assert err < err_prev
            err_prev = err


class TestR:
    def test_even(self):
        w = U - V
        assert rel(R_func(w, TAU).value, R_func(-w, TAU).value) < 1e-12

    def test_window_doubling_stability(self):
        # refining the settle policy must not move R for Im tau >= 0.5,
        # |Im u| <= 0.3
        for tau in (ModularPoint(0.5j), TAU, ModularPoint(0.2 + 0.9j)):
            for w in (U - V, 0.31 + 0.28j, -0.4 - 0.22j):
                a = R_func(w, tau, Truncation(1e-10, 20000, 3)).value
                b = R_func(w, tau, Truncation(1e-15, 20000, 6)).value
                assert abs(a - b) < 1e-11

    def test_completion_context(self):
        ctx = CompletionContext(0.2 + 0.3j, TAU)
        assert ctx.t == pytest.approx(1.1)
        assert ctx.a_ratio == pytest.approx(0.3 / 1.1)


class TestMuTilde:
    def test_symmetric(self):
        assert rel(mu_tilde(U, V, TAU).value, mu_tilde(V, U, TAU).value) < 1e-8

    def test_elliptic_shift(self):
        # mu~(u + tau, v) = -e^{2 pi i(u - v) + pi i tau} mu~(u, v): the
        # correction series must cancel the inhomogeneous term exactly
        lhs = mu_tilde(U + TAU.tau, V, TAU).value
        rhs = -cmath.exp(2j * math.pi * (U - V) + 1j * math.pi * TAU.tau) \
            * mu_tilde(U, V, TAU).value
        assert rel(lhs, rhs) < 1e-12

    def test_translation_by_one(self):
        lhs = mu_tilde(U, V, ModularPoint(TAU.tau + 1)).value
        rhs = cmath.exp(-1j * math.pi / 4) * mu_tilde(U, V, TAU).value
        assert rel(lhs, rhs) < 1e-7

    @pytest.mark.parametrize("tau", [1.1j, 1.2j])
    def test_inversion(self, tau):
        ts = complex(tau)
        lhs = mu_tilde(U / ts, V / ts, ModularPoint(-1 / ts)).value
        rhs = s_multiplier(U - V, ts) * mu_tilde(U, V, ModularPoint(ts)).value
        assert rel(lhs, rhs) < 1e-6

    def test_displayed_inversion_multiplier_fails(self):
        # the displayed reading -i sqrt(-i tau) e^{+pi i (u-v)^2 / tau} does
        # not transform mu~; assert its failure so the correction is load-bearing
        ts = TAU.tau
        lhs = mu_tilde(U / ts, V / ts, ModularPoint(-1 / ts)).value
        displayed = -1j * cmath.sqrt(-1j * ts) \
            * cmath.exp(1j * math.pi * (U - V) ** 2 / ts) \
            * mu_tilde(U, V, TAU).value
        assert rel(lhs, displayed) > 1e-2


class TestNuTilde:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_equals_mu_tilde(self, k):
        assert rel(nu_tilde(U, V, k, TAU).value,
                   mu_tilde(U, V, TAU).value) < 1e-7

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_translation_by_one(self, k):
        lhs = nu_tilde(U, V, k, ModularPoint(TAU.tau + 1)).value
        rhs = cmath.exp(-1j * math.pi / 4) * nu_tilde(U, V, k, TAU).value
        assert rel(lhs, rhs) < 1e-7

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_inversion(self, k):
        ts = TAU.tau
        lhs = nu_tilde(U / ts, V / ts, k, ModularPoint(-1 / ts)).value
        rhs = s_multiplier(U - V, ts) * nu_tilde(U, V, k, TAU).value
        assert rel(lhs, rhs) < 1e-6

    def test_requires_positive_k(self):
        with pytest.raises(PoleHit):
            nu_tilde(U, V, 0, TAU)

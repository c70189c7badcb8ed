"""Basic hypergeometric layer: phi, psi, q-Appell, q-Bessel."""

import pytest

from qmu import Divergent, DomainError, qpoch_inf, qpoch_many
from qmu.qhyper import (
    SeriesSpec,
    phi,
    phi_f,
    psi_f,
    q_appell_phi1,
    q_bessel_J2,
    q_bessel_J2_alt,
)


def rel(a, b):
    return abs(a - b) / (abs(a) + abs(b) + 1e-300)


def direct_poch(c, n, q):
    p = 1.0 + 0.0j
    w = c
    for _ in range(n):
        p *= 1.0 - w
        w *= q
    return p


class TestPhi:
    def test_zero_argument(self):
        assert phi_f((0.0,), (0.5,), 0.3, 0.0).value == 1.0

    def test_terminating_degree_two(self):
        # numerator parameter q^{-2} kills every term past n = 2
        q = 0.3
        x = 0.45 + 0.2j
        r = phi_f((q ** -2, 0.0), (), q, x)
        a = q ** -2
        want = sum(direct_poch(a, n, q) / direct_poch(q, n, q)
                   * ((-1) ** n * q ** (n * (n - 1) / 2)) ** (-1) * x ** n
                   for n in range(3))
        assert rel(r.value, want) < 1e-14
        assert r.terms_used == 3

    def test_terminating_deterministic(self):
        spec = SeriesSpec((0.3 ** -2, 0.0), (), 0.3, 0.45 + 0.2j)
        assert phi(spec).value == phi(spec).value

    def test_heine_cross_oracle_first_iterate(self):
        # at the classic sample point the first Heine iterate (argument b)
        # converges; the residual is the cross-oracle
        q, a, b, c, z = 0.3, 0.2, 0.4, 0.5, 0.6
        lhs = phi_f((a, b), (c,), q, z).value
        pref = qpoch_many((b, a * z), q).value / qpoch_many((c, z), q).value
        rhs = pref * phi_f((c / b, z), (a * z,), q, b).value
        assert rel(lhs, rhs) < 1e-11

    def test_heine_displayed_form(self):
        # the (az, c/a)-prefactor form needs |c/a| < 1
        q, a, b, c, z = 0.3, 0.5, 0.4, 0.2, 0.6
        lhs = phi_f((a, b), (c,), q, z).value
        pref = qpoch_many((a * z, c / a), q).value / qpoch_many((z, c), q).value
        rhs = pref * phi_f((a, a * b * z / c), (a * z,), q, c / a).value
        assert rel(lhs, rhs) < 1e-11

    def test_divergent_detected(self):
        with pytest.raises(Divergent):
            phi_f((0.2, 0.3), (0.5,), 0.3, 2.5)


class TestPsi:
    def test_ramanujan_summation(self):
        # region |b/a| < |z| < 1
        a, b, z, q = 0.7, 0.2, 0.5, 0.25
        lhs = psi_f((a,), (b,), q, z).value
        rhs = qpoch_many((a * z, q / (a * z), q, b / a), q).value \
            / qpoch_many((z, b / (a * z), b, q / a), q).value
        assert rel(lhs, rhs) < 1e-11

    def test_ramanujan_region_enforced(self):
        # the same series outside |b/a| < |z| diverges and must say so
        with pytest.raises(Divergent):
            psi_f((0.3,), (0.7,), 0.25, 0.5)

    def test_kronecker_product_form(self):
        x, y, q = 0.3, 0.45, 0.25
        lhs = psi_f((x,), (q * x,), q, y).value / (1 - x)
        rhs = qpoch_many((q, q, x * y, q / (x * y)), q).value \
            / qpoch_many((x, q / x, y, q / y), q).value
        assert rel(lhs, rhs) < 1e-11

    def test_bailey_transformations(self):
        # each with its own convergence region for the transformed side
        q = 0.22
        a, b, c, d, z = 0.85, 0.8 + 0.05j, 0.55, 0.35, 0.6
        lhs = psi_f((a, b), (c, d), q, z).value
        pref = qpoch_many((a * z, c / a, d / b, q * c / (a * b * z)), q).value \
            / qpoch_many((z, c, q / b, c * d / (a * b * z)), q).value
        rhs = pref * psi_f((a, a * b * z / c), (a * z, d), q, c / a).value
        assert rel(lhs, rhs) < 1e-10

        a, b, c, d = 0.8 + 0.05j, 0.85, 0.35, 0.55
        lhs = psi_f((a, b), (c, d), q, z).value
        pref = qpoch_many((b * z, d / b, c / a, q * d / (a * b * z)), q).value \
            / qpoch_many((z, d, q / a, c * d / (a * b * z)), q).value
        rhs = pref * psi_f((b, a * b * z / d), (b * z, c), q, d / b).value
        assert rel(lhs, rhs) < 1e-10

        a, b, c, d = 0.85, 0.8, 0.35, 0.55
        lhs = psi_f((a, b), (c, d), q, z).value
        pref = qpoch_many((a * z, d / a, c / b, q * d / (a * b * z)), q).value \
            / qpoch_many((z, d, q / b, c * d / (a * b * z)), q).value
        rhs = pref * psi_f((a, a * b * z / d), (a * z, c), q, d / a).value
        assert rel(lhs, rhs) < 1e-10

        a, b, c, d = 0.8, 0.85, 0.55, 0.35
        lhs = psi_f((a, b), (c, d), q, z).value
        pref = qpoch_many((b * z, c / b, d / a, q * c / (a * b * z)), q).value \
            / qpoch_many((z, c, q / a, c * d / (a * b * z)), q).value
        rhs = pref * psi_f((b, a * b * z / c), (b * z, d), q, c / b).value
        assert rel(lhs, rhs) < 1e-10

    def test_degenerate_transformations(self):
        q = 0.25
        a, d, z = 0.6 + 0.1j, 0.3, 0.7
        lhs = psi_f((a,), (0.0, d), q, z).value
        r1 = qpoch_many((z, d * q / (a * z)), q).value \
            / qpoch_many((d, q / a), q).value \
            * psi_f((a * z / d,), (0.0, z), q, d).value
        r2 = qpoch_many((d / a, d * q / (a * z)), q).value / qpoch_inf(d, q).value \
            * psi_f((a, a * z / d), (0.0, 0.0), q, d / a).value
        r3 = qpoch_many((z, d / a), q).value / qpoch_inf(q / a, q).value \
            * psi_f((), (z, d), q, a * z).value
        assert rel(lhs, r1) < 1e-10
        assert rel(lhs, r2) < 1e-10
        assert rel(lhs, r3) < 1e-10


class TestAppell:
    def test_origin(self):
        assert q_appell_phi1(0.3, 0.1, 0.2, 0.6, 0.3, 0.0, 0.0).value == 1.0

    def test_collapse_to_single_series(self):
        a, c, x, q = 0.3, 0.6, 0.4, 0.3
        r1 = q_appell_phi1(a, 0.0, 0.0, c, q, x, 0.0)
        r2 = phi_f((a, 0.0), (c,), q, x)
        assert rel(r1.value, r2.value) < 1e-12

    def test_andrews_formula(self):
        a, b, c, d, e, x, q = 0.25, 0.4, 0.3, 0.5, 0.35, 0.45, 0.28
        lhs = phi_f((a, b, c), (d, e), q, x).value
        rhs = qpoch_many((a * x, b, c), q).value / qpoch_many((x, d, e), q).value \
            * q_appell_phi1(x, d / b, e / c, a * x, q, b, c).value
        assert rel(lhs, rhs) < 1e-10

    def test_domain(self):
        with pytest.raises(DomainError):
            q_appell_phi1(0.3, 0.1, 0.2, 0.6, 0.3, 1.5, 0.0)


class TestQBessel:
    def test_order_zero_origin(self):
        assert q_bessel_J2(0.0, 0.0, 0.3).value == pytest.approx(1.0)

    def test_two_forms_agree(self):
        r1 = q_bessel_J2(0.7, 0.5, 0.3)
        r2 = q_bessel_J2_alt(0.7, 0.5, 0.3)
        assert rel(r1.value, r2.value) < 1e-11

    def test_direct_summation_oracle(self):
        nu, x, q = 2, 0.4, 0.3
        qn1 = q ** (nu + 1)
        want = qpoch_inf(qn1, q).value / qpoch_inf(q, q).value * (x / 2) ** nu \
            * sum(1.0 / (direct_poch(qn1, n, q) * direct_poch(q, n, q))
                  * q ** (n * (n - 1)) * (-x * x * qn1 / 4) ** n
                  for n in range(40))
        assert rel(q_bessel_J2(nu, x, q).value, want) < 1e-12


def test_spec_validation():
    with pytest.raises(DomainError):
        SeriesSpec((0.2,), (0.3,), 1.1, 0.5)

"""Scalar generating functions on the quarter disk."""

import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catalan_ops import genfun
from catalan_ops import combinatorics as comb
from catalan_ops.errors import DomainError, SingularityError

SQRT2 = math.sqrt(2.0)

disk_points = st.builds(
    lambda r, phi: 0.25 * math.sqrt(r) * cmath.exp(1j * phi),
    st.floats(min_value=0.0, max_value=1.0),
    st.floats(min_value=-math.pi, max_value=math.pi),
)


class TestCatalanGF:
    def test_special_values(self):
        assert genfun.catalan_gf(0) == 1.0
        assert abs(genfun.catalan_gf(0.25) - 2.0) < 1e-14
        assert abs(genfun.catalan_gf(-0.25) - 2 * (SQRT2 - 1)) < 1e-14

    @given(disk_points)
    def test_quadratic_residual(self, z):
        c = genfun.catalan_gf(z)
        assert abs(z * c * c - c + 1.0) < 1e-12

    def test_domain_error(self):
        for z in (0.26, -0.3, 0.2 + 0.2j):
            with pytest.raises(DomainError):
                genfun.catalan_gf(z)

    @given(disk_points)
    def test_series_agreement(self, z):
        n = 2000
        allowance = 2.0 * genfun.catalan_tail_bound(n)
        assert abs(genfun.catalan_gf(z) - genfun.catalan_series(z, n)) < allowance

    def test_series_interior_is_tight(self):
        # strictly inside the disk the series nails the closed form
        for z in (0.1, -0.2, 0.1 + 0.15j):
            assert abs(genfun.catalan_gf(z) - genfun.catalan_series(z, 800)) < 1e-12

    def test_tiny_argument_no_cancellation(self):
        for z in (1e-9, -1e-12, 1e-16 + 1e-16j):
            c = genfun.catalan_gf(z)
            assert abs(c - (1.0 + z + 2 * z * z)) < 1e-13


class TestResolvent:
    def test_at_zero(self):
        assert abs(genfun.resolvent_scalar(3.0, 0.0) - 0.5) < 1e-14

    def test_lambda_zero(self):
        # 1/(0 - C(z)) against an independent series evaluation of C
        c_series = genfun.catalan_series(0.1, 600)
        got = genfun.resolvent_scalar(0.0, 0.1)
        assert abs(got - (-1.0 / c_series)) < 1e-10

    def test_two_routes(self):
        for lam, z in ((2 + 1j, 0.2), (1.5, -0.1), (-0.7 + 0.3j, 0.12 + 0.1j)):
            direct = 1.0 / (lam - genfun.catalan_gf(z))
            assert abs(genfun.resolvent_scalar(lam, z) - direct) < 1e-10

    def test_singularity(self):
        z = 0.2
        with pytest.raises(SingularityError):
            genfun.resolvent_scalar(genfun.catalan_gf(z), z)

    @given(disk_points, st.complex_numbers(max_magnitude=4.0, allow_nan=False,
                                           allow_infinity=False))
    def test_identity(self, z, lam):
        if abs(z) > 0.24:
            z = 0.9 * z
        try:
            r = genfun.resolvent_scalar(lam, z)
        except SingularityError:
            return
        if abs(lam - genfun.catalan_gf(z)) < 1e-4:
            return  # too close to the pole for a 1e-10 identity check
        assert abs((lam - genfun.catalan_gf(z)) * r - 1.0) < 1e-10


class TestEvenOdd:
    def test_at_zero(self):
        assert genfun.even_odd_gf(0.0) == (1.0, 0.0)

    def test_split_sums_to_c(self):
        ce, co = genfun.even_odd_gf(0.25)
        assert abs(ce + co - 2.0) < 1e-14
        assert abs(ce - SQRT2) < 1e-14
        assert abs(co - (2.0 - SQRT2)) < 1e-14

    def test_series_oracle(self):
        lam = 0.2
        cs = comb.catalan_list(400)
        even = sum(cs[2 * n] / 4.0 ** (2 * n) * (4 * lam) ** (2 * n) for n in range(200))
        odd = sum(cs[2 * n + 1] / 4.0 ** (2 * n + 1) * (4 * lam) ** (2 * n + 1)
                  for n in range(200))
        ce, co = genfun.even_odd_gf(lam)
        assert abs(ce - even) < 1e-10
        assert abs(co - odd) < 1e-10

    @given(disk_points)
    def test_parity_and_sum(self, lam):
        ce, co = genfun.even_odd_gf(lam)
        cem, com = genfun.even_odd_gf(-lam)
        assert abs(ce + co - genfun.catalan_gf(lam)) < 1e-12
        assert abs(ce - cem) < 1e-12
        assert abs(co + com) < 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            genfun.even_odd_gf(0.3)


class TestBivariate:
    def test_p_at_z_zero(self):
        # P(0, w) = (C(w) - 1)/w = C(w)^2
        for w in (0.1, -0.2, 0.05 + 0.1j):
            c = genfun.catalan_gf(w)
            assert abs(genfun.bivariate_p(0.0, w) - (c - 1.0) / w) < 1e-12

    def test_p_at_w_zero(self):
        for z in (0.0, 0.3, -0.5 + 0.2j):
            assert genfun.bivariate_p(z, 0.0) == 1.0

    def test_series_oracle(self):
        z, w = 0.3, 0.1
        series = sum(complex(comb.row_polynomial_p(n)(z)) * w**n for n in range(60))
        assert abs(genfun.bivariate_p(z, w) - series) < 1e-8
        series_q = sum(complex(comb.row_polynomial_q(n)(z)) * w**n for n in range(60))
        assert abs(genfun.bivariate_q(z, w) - series_q) < 1e-8

    @given(st.complex_numbers(max_magnitude=0.9, allow_nan=False, allow_infinity=False),
           disk_points)
    def test_q_is_p_scaled(self, z, w):
        try:
            p = genfun.bivariate_p(z, w)
        except SingularityError:
            return
        assert abs(genfun.bivariate_q(z, w) - p * (z + 1.0)) < 1e-12

    def test_singular_set(self):
        z = 0.5
        w = z / (1 + z) ** 2
        with pytest.raises(SingularityError):
            genfun.bivariate_p(z, w)

    def test_domain(self):
        with pytest.raises(DomainError):
            genfun.bivariate_p(1.5, 0.1)
        with pytest.raises(DomainError):
            genfun.bivariate_p(0.3, 0.3)


class TestGeneralized:
    def test_reduces_to_catalan(self):
        for z in (0.1, -0.2, 0.2j):
            assert abs(genfun.generalized_gf(4, 2, z) - genfun.catalan_gf(z)) < 1e-14

    def test_pinned_value(self):
        got = genfun.generalized_gf(1, 1, 0.5)
        assert abs(got - 2 * (1 - math.sqrt(0.5))) < 1e-14

    def test_series_limit_at_zero(self):
        assert genfun.generalized_gf(3, 2, 0.0) == 0.75
        assert abs(genfun.generalized_gf(2 + 1j, 1j, 0.0) - (2 + 1j) / 2j) < 1e-15

    def test_scaling_relation_and_quadratic(self):
        for a, b, z in ((1.0, 1.0, 0.5), (2.0, 3.0, 0.4), (1 + 1j, 2.0, 0.3)):
            y = genfun.generalized_gf(a, b, z)
            assert abs(y - (a / (2 * b)) * genfun.catalan_gf(a * z / 4)) < 1e-12
            assert abs((b * z / 2) * y * y - y + a / (2 * b)) < 1e-12

    def test_errors(self):
        with pytest.raises(DomainError):
            genfun.generalized_gf(1, 0, 0.5)
        with pytest.raises(DomainError):
            genfun.generalized_gf(3, 1, 0.5)  # |az| > 1

"""Exact combinatorics: numbers, triangles, row polynomials, weighted sums."""

from fractions import Fraction

import pytest

from catalan_ops import combinatorics as comb
from catalan_ops.combinatorics import TriangleKind
from catalan_ops.errors import TriangleIndexError
from catalan_ops.polynomials import IntPolynomial

B, A = TriangleKind.B, TriangleKind.A

# well-known leading rows of the two triangles
B_ROWS = {
    1: [1],
    2: [2, 1],
    3: [5, 4, 1],
    4: [14, 14, 6, 1],
    5: [42, 48, 27, 8, 1],
    6: [132, 165, 110, 44, 10, 1],
}
A_ROWS = {
    0: [1],
    1: [1, 1],
    2: [2, 3, 1],
    3: [5, 9, 5, 1],
    4: [14, 28, 20, 7, 1],
    5: [42, 90, 75, 35, 9, 1],
    6: [132, 297, 275, 154, 54, 11, 1],
}


def brute_force_catalan(count):
    """Convolution recurrence C_n = sum_{i<n} C_i C_{n-1-i}, independent oracle."""
    out = []
    for n in range(count):
        out.append(1 if n == 0 else sum(out[i] * out[n - 1 - i] for i in range(n)))
    return out


class TestCatalanNumbers:
    def test_first_values(self):
        assert [comb.catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]

    def test_convolution_oracle(self):
        oracle = brute_force_catalan(60)
        assert oracle[20] == 6564120420
        assert [comb.catalan(n) for n in range(60)] == oracle

    def test_iter_matches_closed_form(self):
        assert list(comb.catalan_iter(300)) == [comb.catalan(n) for n in range(300)]

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            comb.catalan(-1)


class TestTriangles:
    @pytest.mark.parametrize("n,row", sorted(B_ROWS.items()))
    def test_b_rows_pinned(self, n, row):
        assert comb.triangle_row(B, n) == row

    @pytest.mark.parametrize("n,row", sorted(A_ROWS.items()))
    def test_a_rows_pinned(self, n, row):
        assert comb.triangle_row(A, n) == row

    def test_entry_examples(self):
        assert comb.triangle_entry(B, 4, 2) == 14
        assert comb.triangle_entry(A, 5, 3) == 75
        assert all(comb.triangle_entry(B, n, n) == 1 for n in range(1, 30))

    def test_first_columns_are_catalan(self):
        for n in range(1, 40):
            assert comb.triangle_entry(B, n, 1) == comb.catalan(n)
            assert comb.triangle_entry(A, n, 1) == comb.catalan(n)
            assert comb.triangle_entry(A, n, n + 1) == 1

    @pytest.mark.parametrize("kind,n,k", [
        (B, 3, 0), (B, 3, 4), (B, 0, 1), (A, 2, 4), (A, -1, 1),
    ])
    def test_out_of_range(self, kind, n, k):
        with pytest.raises(TriangleIndexError):
            comb.triangle_entry(kind, n, k)

    def test_recurrence_matches_closed_form(self):
        for kind, start in ((B, 1), (A, 0)):
            for n, row in zip(range(start, 81), comb.triangle_rows_by_recurrence(kind, 80)):
                assert row == comb.triangle_row(kind, n), (kind, n)

    def test_interior_recurrence(self):
        # X[n][k] = X[n-1][k-1] + 2 X[n-1][k] + X[n-1][k+1], out-of-range as 0
        for kind in (B, A):
            for n in range(5, 30):
                prev = comb.triangle_row(kind, n - 1)
                row = comb.triangle_row(kind, n)

                def at(cells, k):
                    return cells[k - 1] if 1 <= k <= len(cells) else 0

                for k in range(2, len(row) + 1):
                    assert at(row, k) == at(prev, k - 1) + 2 * at(prev, k) + at(prev, k + 1)

    def test_column_iterator(self):
        for kind, first in ((B, lambda k: k), (A, lambda k: k - 1)):
            for k in (1, 2, 5):
                col = list(comb.triangle_column(kind, k, 40))
                expected = [comb.triangle_entry(kind, first(k) + i, k) for i in range(40)]
                assert col == expected


class TestRowPolynomials:
    def test_p_values(self):
        assert comb.row_polynomial_p(0) == IntPolynomial((1,))
        assert comb.row_polynomial_p(1) == IntPolynomial((2, 1))
        assert comb.row_polynomial_p(2) == IntPolynomial((5, 4, 1))
        assert comb.row_polynomial_p(3) == IntPolynomial((14, 14, 6, 1))

    def test_q_values(self):
        assert comb.row_polynomial_q(0) == IntPolynomial((1, 1))
        # the A-triangle row 2 is (2, 3, 1), so Q_1 = 2 + 3z + z^2
        assert comb.row_polynomial_q(1) == IntPolynomial((2, 3, 1))
        assert comb.row_polynomial_q(2) == IntPolynomial((5, 9, 5, 1))
        assert comb.row_polynomial_q(3) == IntPolynomial((14, 28, 20, 7, 1))

    def test_p_recurrence(self):
        square = IntPolynomial((1, 2, 1))
        for n in range(1, 60):
            lhs = comb.row_polynomial_p(n).shift(1) + comb.catalan(n)
            assert lhs == square * comb.row_polynomial_p(n - 1)

    def test_q_recurrence_carries_one_plus_z(self):
        # z Q_n + (1+z) C_n == (z+1)^2 Q_{n-1}; the bare-C_n form fails at n=1
        square = IntPolynomial((1, 2, 1))
        one_plus_z = IntPolynomial((1, 1))
        for n in range(1, 60):
            lhs = comb.row_polynomial_q(n).shift(1) + one_plus_z * comb.catalan(n)
            assert lhs == square * comb.row_polynomial_q(n - 1)
        bare = comb.row_polynomial_q(1).shift(1) + comb.catalan(1)
        assert bare != square * comb.row_polynomial_q(0)

    def test_q_is_one_plus_z_times_p(self):
        one_plus_z = IntPolynomial((1, 1))
        for n in range(60):
            assert comb.row_polynomial_q(n) == one_plus_z * comb.row_polynomial_p(n)

    def test_p_at_one(self):
        for n in range(60):
            assert comb.row_polynomial_p(n)(1) == (2 * n + 1) * comb.catalan(n)


class TestCatalanPolynomials:
    def test_first_values(self):
        assert comb.catalan_polynomial(0) == IntPolynomial((1,))
        assert comb.catalan_polynomial(1) == IntPolynomial((1,))
        assert comb.catalan_polynomial(2) == IntPolynomial((1, -1))
        assert comb.catalan_polynomial(3) == IntPolynomial((1, -2))
        assert comb.catalan_polynomial(4) == IntPolynomial((1, -3, 1))
        # two recurrence steps past P_4: P_5 = 1 - 4z + 3z^2, P_6 = 1 - 5z + 6z^2 - z^3
        assert comb.catalan_polynomial(6) == IntPolynomial((1, -5, 6, -1))

    def test_recurrence_definition(self):
        for k in range(2, 80):
            expected = comb.catalan_polynomial(k - 1) - comb.catalan_polynomial(k - 2).shift(1)
            assert comb.catalan_polynomial(k) == expected

    def test_sign_alternation(self):
        for k in range(101):
            for j, c in enumerate(comb.catalan_polynomial(k).coeffs):
                assert c == 0 or (c > 0) == (j % 2 == 0), (k, j, c)

    def test_closed_form_agreement(self):
        points = [Fraction(p, 7) for p in range(-10, 10)]
        for k in range(51):
            poly = comb.catalan_polynomial(k)
            for z in points:
                assert poly(z) == comb.catalan_polynomial_closed(k, z), (k, z)


class TestAlpha:
    def test_pinned_values(self):
        assert [comb.alpha(k) for k in range(1, 6)] == [1, 5, 24, 116, 560]

    def test_recurrence(self):
        for k in range(3, 40):
            assert comb.alpha(k) == 4 * (comb.alpha(k - 1) + comb.alpha(k - 2))

    def test_equals_scaled_polynomial_value(self):
        for k in range(1, 51):
            value = comb.catalan_polynomial(k)(Fraction(-1, 4))
            assert comb.alpha(k) == 4 ** (k - 1) * value


class TestRowSums:
    def test_small_cases(self):
        s2 = comb.row_sum_identities(2)
        assert (s2.sum_b, s2.sum_a) == (3, 6)
        assert comb.row_sum_identities(4).alt_b == -5 == -comb.catalan(3)
        assert comb.row_sum_identities(3).alt_a == 0

    def test_closed_forms(self):
        for n in range(1, 80):
            s = comb.row_sum_identities(n)
            assert 2 * s.sum_b == (n + 1) * comb.catalan(n)
            assert s.sum_a == (n + 1) * comb.catalan(n)
            assert s.alt_b == -comb.catalan(n - 1)
            assert s.alt_a == 0


class TestQuarterWeightedSums:
    @staticmethod
    def oracle(n):
        """Exact rational sums over recurrence-built rows (independent route)."""
        rows_b = list(comb.triangle_rows_by_recurrence(B, max(n, 1)))
        rows_a = list(comb.triangle_rows_by_recurrence(A, n))
        row_b = rows_b[n - 1] if n >= 1 else []
        row_a = rows_a[n]
        q = Fraction(1, 4)
        sb = sum(v * q**k for k, v in enumerate(row_b, start=1))
        sa = sum(v * q**k for k, v in enumerate(row_a, start=1))
        sbm = sum(v * (-q) ** k for k, v in enumerate(row_b, start=1))
        sam = sum(v * (-q) ** k for k, v in enumerate(row_a, start=1))
        return (4**n * sb, 4 ** (n + 1) * sa, -((-4) ** n) * sbm, -(4 ** (n + 1)) * sam)

    def test_first_values(self):
        assert comb.quarter_weighted_row_sums(1) == comb.QuarterSums(a=1, b=5, d=-1, e=3)
        assert comb.quarter_weighted_row_sums(2).d == 7
        assert comb.quarter_weighted_row_sums(0) == comb.QuarterSums(a=None, b=1, d=None, e=1)

    def test_against_rational_oracle(self):
        for n in range(1, 40):
            got = comb.quarter_weighted_row_sums(n)
            a, b, d, e = self.oracle(n)
            assert (got.a, got.b, got.d, got.e) == (a, b, d, e)

    def test_cross_identities(self):
        for n in range(1, 40):
            s = comb.quarter_weighted_row_sums(n)
            assert s.b == 5 * s.a
            assert s.e == 3 * abs(s.d)


class TestAsymptotics:
    @pytest.mark.parametrize("kind", [B, A])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_ratio_near_one_at_large_n(self, kind, k):
        assert abs(comb.asymptotic_ratio(kind, 5000, k) - 1.0) < 2e-3

    def test_small_n_smoke(self):
        ratio = comb.asymptotic_ratio(B, 10, 1)
        assert 0.5 < ratio < 1.5

    def test_ratio_improves_with_n(self):
        worse = abs(comb.asymptotic_ratio(B, 100, 2) - 1.0)
        better = abs(comb.asymptotic_ratio(B, 10000, 2) - 1.0)
        assert better < worse

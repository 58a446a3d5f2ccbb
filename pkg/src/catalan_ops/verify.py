"""Verification suites: every exact identity, norm and spectral statement
the library implements, runnable as one command.

Each suite returns a list of CheckResult records; a suite passes when every
record does.  Randomized checks use fixed seeds so runs are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import combinatorics as comb
from . import genfun
from . import operator_calculus as oc
from . import seq_algebra as sa
from .combinatorics import TriangleKind
from .errors import NonConvergenceError


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name=name, passed=bool(passed), detail=detail)


def _disk_points(count: int, seed: int, radius: float = 0.25) -> np.ndarray:
    rng = np.random.default_rng(seed)
    r = radius * np.sqrt(rng.random(count))
    phi = 2.0 * math.pi * rng.random(count)
    return r * np.exp(1j * phi)


# ---------------------------------------------------------------------------


def suite_identities(nmax: int = 200, poly_nmax: int = 100) -> list[CheckResult]:
    """Exact triangle/polynomial identities plus the scalar generating-function laws."""
    out: list[CheckResult] = []

    for kind in TriangleKind:
        bad = None
        start = 1 if kind is TriangleKind.B else 0
        for n, row in zip(range(start, nmax + 1), comb.triangle_rows_by_recurrence(kind, nmax)):
            if row != comb.triangle_row(kind, n):
                bad = n
                break
        out.append(_check(f"triangle {kind.value}: closed form == recurrence, n <= {nmax}",
                          bad is None, detail="" if bad is None else f"first failure at n={bad}"))

    from .polynomials import IntPolynomial

    square = IntPolynomial((1, 2, 1))  # (z+1)^2 in z R_n + C_n == (z+1)^2 R_{n-1}
    ok_p = all(
        (comb.row_polynomial_p(n).shift(1) + comb.catalan(n) - square * comb.row_polynomial_p(n - 1)).is_zero()
        for n in range(1, poly_nmax + 1)
    )
    out.append(_check(f"z P_n + C_n == (z+1)^2 P_(n-1), n <= {poly_nmax}", ok_p))
    one_plus_z = IntPolynomial((1, 1))
    ok_q = all(
        (comb.row_polynomial_q(n).shift(1) + one_plus_z * comb.catalan(n)
         - square * comb.row_polynomial_q(n - 1)).is_zero()
        for n in range(1, poly_nmax + 1)
    )
    out.append(_check(f"z Q_n + (1+z) C_n == (z+1)^2 Q_(n-1), n <= {poly_nmax}", ok_q))
    out.append(_check(f"Q_n == (1+z) P_n, n <= {poly_nmax}",
                      all(comb.row_polynomial_q(n) == one_plus_z * comb.row_polynomial_p(n)
                          for n in range(poly_nmax + 1))))
    out.append(_check(f"P_n(1) == (2n+1) C_n, n <= {poly_nmax}",
                      all(comb.row_polynomial_p(n)(1) == (2 * n + 1) * comb.catalan(n)
                          for n in range(poly_nmax + 1))))

    ok_sign = all(
        all(c == 0 or (c > 0) == (j % 2 == 0)
            for j, c in enumerate(comb.catalan_polynomial(k).coeffs))
        for k in range(101)
    )
    out.append(_check("Catalan polynomial coefficients alternate in sign, k <= 100", ok_sign))

    out.append(_check("alpha_k == 4^(k-1) P_k(-1/4) exactly, k <= 50",
                      all(comb.alpha(k) == 4 ** (k - 1) * comb.catalan_polynomial(k)(Fraction(-1, 4))
                          for k in range(1, 51))))

    points = [Fraction(p, 7) for p in range(-10, 10)]
    ok_closed = all(
        comb.catalan_polynomial(k)(z) == comb.catalan_polynomial_closed(k, z)
        for k in range(51) for z in points
    )
    out.append(_check("Catalan polynomial recurrence == closed form at 20 rational points, k <= 50",
                      ok_closed))

    cs = comb.catalan_list(nmax + 1)
    out.append(_check(f"Catalan convolution recurrence == closed form, n <= {nmax}",
                      all(cs[n] == comb.catalan(n) for n in range(nmax + 1))))

    ok_rows = True
    detail = ""
    for n in range(1, nmax + 1):
        try:
            comb.row_sum_identities(n)
        except comb.ConsistencyError as exc:  # pragma: no cover - would be a bug
            ok_rows, detail = False, str(exc)
            break
    out.append(_check(f"row sums: (n+1)/2 C_n, (n+1) C_n, -C_(n-1), 0 for n <= {nmax}",
                      ok_rows, detail))

    ok_quarter = True
    for n in range(1, 61):
        s = comb.quarter_weighted_row_sums(n)
        if s.b != 5 * s.a or s.e != 3 * abs(s.d):
            ok_quarter = False
            break
    out.append(_check("quarter-weighted sums: b(n) == 5 a(n) and e(n) == 3 |d(n)|, n <= 60",
                      ok_quarter))

    # scalar generating function laws
    zs = _disk_points(1000, seed=20240817)
    res = max(abs(z * genfun.catalan_gf(z) ** 2 - genfun.catalan_gf(z) + 1.0) for z in zs)
    out.append(_check("quadratic residual |z C^2 - C + 1| < 1e-12 on 1000 disk points",
                      res < 1e-12, f"max residual {res:.3e}"))

    n_series = 4000
    tail = 2.0 * genfun.catalan_tail_bound(n_series)
    gap = max(abs(genfun.catalan_gf(z) - genfun.catalan_series(z, n_series)) for z in zs[:50])
    out.append(_check("series agreement within twice the certified tail",
                      gap < tail, f"gap {gap:.3e} vs allowance {tail:.3e}"))

    lams = 3.0 * _disk_points(100, seed=7, radius=1.0) + 0.5
    ok_res = True
    worst = 0.0
    for z, lam in zip(_disk_points(100, seed=8, radius=0.24), lams):
        if abs(lam * lam * z - lam + 1.0) < 1e-6:
            continue
        got = (lam - genfun.catalan_gf(z)) * genfun.resolvent_scalar(lam, z)
        worst = max(worst, abs(got - 1.0))
    out.append(_check("resolvent identity (lam - C(z)) * R(lam, z) == 1 to 1e-10",
                      worst < 1e-10, f"max deviation {worst:.3e}"))

    worst = 0.0
    for lam in zs[:200]:
        ce, co = genfun.even_odd_gf(lam)
        cem, com = genfun.even_odd_gf(-lam)
        worst = max(worst,
                    abs(ce + co - genfun.catalan_gf(lam)),
                    abs(cem - ce), abs(com + co))
    out.append(_check("even/odd split: C_e + C_o == C, C_e even, C_o odd (1e-12)",
                      worst < 1e-12, f"max deviation {worst:.3e}"))

    worst = 0.0
    ws = _disk_points(50, seed=9)
    zs2 = 0.9 * _disk_points(50, seed=10, radius=1.0)
    for z, w in zip(zs2, ws):
        try:
            worst = max(worst, abs(genfun.bivariate_q(z, w) - genfun.bivariate_p(z, w) * (z + 1.0)))
        except genfun.SingularityError:
            continue
    out.append(_check("bivariate Q(z, w) == P(z, w) (z+1) to 1e-12", worst < 1e-12))

    return out


def suite_abel(kmax: int = 3, n_terms: int = 10**6, tol: float = 1e-3) -> list[CheckResult]:
    """The eight weighted column/double-sum limits, within tol at n_terms."""
    out = []
    for chk in sa.abel_sums(kmax=kmax, n_terms=n_terms):
        label = f"{chk.name}" + (f" (k={chk.k})" if chk.k is not None else "")
        out.append(_check(
            f"{label} -> {chk.expected:.12g}",
            chk.error < tol,
            f"computed {chk.computed:.12g}, |error| {chk.error:.3e}, tail {chk.tail_bound:.3e}",
        ))
    return out


def suite_asymptotics(n: int = 5000, kmax: int = 3, rtol: float = 2e-3) -> list[CheckResult]:
    """Entry / growth-law ratio within rtol of 1 at large n for both triangles."""
    out = []
    for kind in TriangleKind:
        for k in range(1, kmax + 1):
            ratio = comb.asymptotic_ratio(kind, n, k)
            out.append(_check(
                f"{kind.value}[{n}][{k}] / growth law within {rtol:.1%} of 1",
                abs(ratio - 1.0) < rtol,
                f"ratio {ratio:.6f}",
            ))
    return out


def suite_inverse(n_small: int = 128, n_norm: int = 10**4) -> list[CheckResult]:
    """Convolution algebra laws, power/triangle equivalences, inverse formulas."""
    out: list[CheckResult] = []
    rng = np.random.default_rng(11)

    def random_seq(n: int) -> sa.WeightedSeq:
        return sa.WeightedSeq(tuple(int(v) for v in rng.integers(-9, 10, n + 1)))

    ok = True
    for _ in range(20):
        a, b, c = (random_seq(64) for _ in range(3))
        if sa.convolve(a, b).entries != sa.convolve(b, a).entries:
            ok = False
        if sa.convolve(sa.convolve(a, b), c).entries != sa.convolve(a, sa.convolve(b, c)).entries:
            ok = False
    out.append(_check("convolution commutes and associates (exact, N=64)", ok))

    ok = True
    for _ in range(20):
        a, b = random_seq(64), random_seq(64)
        if sa.weighted_norm(sa.convolve(a, b)) > sa.weighted_norm(a) * sa.weighted_norm(b):
            ok = False
    out.append(_check("norm is submultiplicative on truncations (exact)", ok))

    c = sa.catalan_seq(n_small)
    ok = all(
        sa.seq_power(c, 2 * k - 1).entries == sa.triangle_seq("a", k, n_small).entries
        and sa.seq_power(c, 2 * k).entries == sa.triangle_seq("b", k, n_small).entries
        for k in range(1, 7)
    )
    out.append(_check("a_k == odd c-power, b_k == even c-power, exact, k <= 6, N = 128", ok))

    ok = True
    for k in range(1, 9):
        inv = sa.catalan_inverse_power(k, n_small)
        if sa.convolve(inv, sa.seq_power(c, k)).entries != sa.delta(0, n_small).entries:
            ok = False
    out.append(_check("inverse formula convolves to delta_0, exact, k <= 8, N = 128", ok))

    ok = True
    details = []
    for k in range(1, 9):
        norm = sa.weighted_norm(sa.catalan_inverse_power(k, n_norm))
        bound = sa.inverse_norm_bound(k)
        loose = Fraction(comb.alpha(k + 1) + 2 * comb.alpha(k), 4**k)
        if not norm <= bound <= loose:
            ok = False
        details.append(f"k={k}: {float(norm):.6f} <= {float(bound):.6f} <= {float(loose):.6f}")
    out.append(_check("inverse norms below both bounds at N = 10^4, k <= 8",
                      ok, "; ".join(details[:3]) + " ..."))

    ok = True
    n_z = 400
    zs = _disk_points(100, seed=12, radius=0.24)
    a, b = sa.catalan_seq(n_z), sa.triangle_seq("b", 1, n_z)
    prod = sa.convolve(a, b)
    for z in zs:
        lhs = sa.z_transform(prod, z)
        rhs = sa.z_transform(a, z) * sa.z_transform(b, z)
        # truncated product differs from the product of truncations by degrees
        # above n_z only, all dominated by the 3-factor power tail
        allowance = sa.power_series_tail_bound(3, n_z, abs(z))
        if abs(lhs - rhs) > allowance + 1e-12:
            ok = False
    out.append(_check("Z(a * b) == Z(a) Z(b) within combined tails (100 disk points)", ok))

    ok = True
    worst = 0.0
    n_z = 600
    for k in (1, 2, 3):
        seq_a = sa.triangle_seq("a", k, n_z)
        seq_b = sa.triangle_seq("b", k, n_z)
        for z in zs[:25]:
            za = sa.z_transform(seq_a, z)
            zb = sa.z_transform(seq_b, z)
            cz = genfun.catalan_gf(z)
            gap = max(abs(za - cz ** (2 * k - 1)), abs(zb - cz ** (2 * k)))
            allow = (sa.power_series_tail_bound(2 * k - 1, n_z, abs(z))
                     + sa.power_series_tail_bound(2 * k, n_z, abs(z)))
            worst = max(worst, gap)
            if gap > allow + 1e-12:
                ok = False
    out.append(_check("Z(a_k) == C^(2k-1) and Z(b_k) == C^(2k) within tails, k <= 3",
                      ok, f"max deviation {worst:.3e}"))

    curve_ok = abs(sa.spectrum_point(1, 0.0) - 2.0) < 1e-12
    mag = abs(sa.spectrum_point(1, math.pi)) - 2 * (math.sqrt(2) - 1)
    curve_ok &= abs(mag) < 1e-12
    worst = max(
        abs(sa.spectrum_point(1, t) - sa.boundary_parametrization(t))
        for t in np.linspace(-math.pi + 1e-9, math.pi - 1e-9, 301)
    )
    curve_ok &= worst < 1e-12
    sq = max(
        abs(sa.spectrum_point(2, t) - sa.spectrum_point(1, t) ** 2)
        for t in np.linspace(-3.0, 3.0, 101)
    )
    curve_ok &= sq < 1e-12
    out.append(_check("spectrum boundary: value 2 at 0, |2(sqrt2-1)| at pi, "
                      "parametrization and power laws", bool(curve_ok),
                      f"max parametrization gap {worst:.3e}"))
    return out


def corpus() -> list[tuple[str, np.ndarray]]:
    """The operator test matrices used across the verification checks."""
    anti = np.array([[0.0, 1.0], [1.0, 0.0]])
    return [
        ("zero", np.zeros((2, 2))),
        ("diag(1/4,-1/4)", np.diag([0.25, -0.25])),
        ("antidiag(0.1)", 0.1 * anti),
        ("antidiag(0.2)", 0.2 * anti),
        ("antidiag(0.25)", 0.25 * anti),
        ("jordan(1/8,1)", np.array([[0.125, 1.0], [0.0, 0.125]])),
    ]


def suite_operator(tol: float = 1e-10) -> list[CheckResult]:
    """Operator-calculus checks over the matrix corpus."""
    out: list[CheckResult] = []
    eye = np.eye(2)

    ops = {name: oc.catalan_operator(t, tol) for name, t in corpus()}

    worst = max(op.residual for op in ops.values())
    out.append(_check("quadratic residual || T C(T)^2 - C(T) + I || < 1e-8 on corpus",
                      worst < 1e-8, f"max residual {worst:.3e}"))

    worst = 0.0
    for name, t in corpus():
        inv = oc.catalan_power(t, -1, tol)
        worst = max(worst, oc.operator_norm(inv @ ops[name].value - eye))
    out.append(_check("C(T)^(-1) C(T) == I to 1e-8 on corpus", worst < 1e-8,
                      f"max deviation {worst:.3e}"))

    worst = 0.0
    for name, t in corpus():
        powers = {j: oc.catalan_power(t, j, tol) for j in range(-4, 5)}
        for j1 in range(-2, 3):
            for j2 in range(-2, 3):
                worst = max(worst, oc.operator_norm(powers[j1] @ powers[j2] - powers[j1 + j2]))
    out.append(_check("power composition C(T)^j1 C(T)^j2 == C(T)^(j1+j2) to 1e-7",
                      worst < 1e-7, f"max deviation {worst:.3e}"))

    worst = max(
        oc.operator_norm(op.value @ op.source - op.source @ op.value) for op in ops.values()
    )
    out.append(_check("C(T) commutes with T to 1e-10", worst < 1e-10,
                      f"max deviation {worst:.3e}"))

    worst = 0.0
    skipped = []
    for name, t in corpus():
        for j in (1, 2, 3, 4, 5):
            try:
                series = oc.catalan_power(t, j, 1e-9, method="series")
            except NonConvergenceError:
                skipped.append(f"{name} j={j}")
                continue
            direct = np.linalg.matrix_power(ops[name].value, j)
            worst = max(worst, oc.operator_norm(series - direct))
    out.append(_check("triangle-coefficient series == C(T) matrix powers to 1e-7",
                      worst < 1e-7,
                      f"max deviation {worst:.3e}; series not certified for {len(skipped)} boundary cases"))

    worst = 0.0
    for name, t in corpus():
        base = ops[name].value
        for j in (2, 3, 4):
            formula = oc.catalan_power(t, -j, tol)
            direct = np.linalg.matrix_power(np.linalg.inv(base), j)
            worst = max(worst, oc.operator_norm(formula - direct))
    out.append(_check("negative powers via Catalan polynomials == direct inversion to 1e-7",
                      worst < 1e-7, f"max deviation {worst:.3e}"))

    worst = 0.0
    for j in (-3, -2, -1, 1, 2, 3):
        closed = oc.catalan_power_jordan(0.125, 1.0, j)
        general = oc.catalan_power(np.array([[0.125, 1.0], [0.0, 0.125]]), j, tol)
        worst = max(worst, oc.operator_norm(closed - general))
    out.append(_check("Jordan-block closed form == general evaluation to 1e-8",
                      worst < 1e-8, f"max deviation {worst:.3e}"))

    sols = oc.quadratic_solutions_diag(0.125, -0.125)
    ok = len(sols) == 4 and all(s.residual < 1e-10 for s in sols)
    sols_deg = oc.quadratic_solutions_diag(0.25, 0.25)
    ok &= sum(s.multiplicity for s in sols_deg) == 4 and any(
        np.allclose(s.matrix, 2 * eye) for s in sols_deg
    )
    out.append(_check("diagonal quadratic solutions: 4 branches, residual < 1e-10, "
                      "degenerate collapse at 1/4", bool(ok)))

    worst = 0.0
    for name, t in corpus():
        if name == "jordan(1/8,1)":
            continue
        for j in (-2, -1, 1, 2, 3):
            report = oc.spectral_mapping_check(t, j, tol)
            worst = max(worst, report.max_distance)
    out.append(_check("spectral mapping multiset distance < 1e-7 (diagonalizable corpus)",
                      worst < 1e-7, f"max distance {worst:.3e}"))

    ok = True
    for name, t in corpus():
        for row in oc.norm_bound_report(t, 3, tol):
            if not row.passed:
                ok = False
    out.append(_check("norm bounds: C(||T||)^j, 1 + M/2, M (alpha_(m+1) + 2 alpha_m)/4^m", ok))

    rep_p = oc.operator_polynomial_gf(np.diag([0.1, -0.12]), 0.3 + 0.1j, "P", 150)
    rep_q = oc.operator_polynomial_gf(np.diag([0.1, -0.12]), 0.3 + 0.1j, "Q", 150)
    gap_q = oc.operator_norm(rep_q.rhs - rep_p.rhs * (0.3 + 0.1j + 1.0))
    out.append(_check("row-polynomial operator series == closed form (interior spectrum)",
                      rep_p.gap < 1e-9 and rep_q.gap < 1e-9 and gap_q < 1e-12,
                      f"gaps {rep_p.gap:.3e} / {rep_q.gap:.3e}"))

    ok = True
    worst = 0.0
    for n in (1, 2):
        for chk in oc.matrix_triangle_gf_check(0.2, n, 300):
            worst = max(worst, chk.error)
            if chk.error > chk.tail_bound + 1e-8:
                ok = False
    out.append(_check("anti-diagonal triangle generating identities at z=0.2, n=1,2",
                      ok, f"max error {worst:.3e}"))

    return out


SUITES = {
    "identities": suite_identities,
    "abel": suite_abel,
    "asymptotics": suite_asymptotics,
    "inverse": suite_inverse,
    "operator": suite_operator,
}


def run_suite(name: str) -> list[CheckResult]:
    """Run one suite, or every suite for name == "all"."""
    if name == "all":
        results: list[CheckResult] = []
        for suite in SUITES.values():
            results.extend(suite())
        return results
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r} (choose from {', '.join(SUITES)}, all)")
    return SUITES[name]()

"""Catalan generating-function calculus for square complex matrices.

For a d x d matrix T with 4T power-bounded (sup_n ||(4T)^n|| = M finite) the
series sum C_n T^n converges and its value Y solves T Y^2 - Y + I = 0.  This
module certifies power-boundedness, evaluates the series with certified
truncation tails, computes integer powers of the value (positive powers through
the triangle-column coefficient series, negative powers through Catalan
polynomials), and verifies the norm/spectral statements that come with them.

Series truncation is only certifiable at a useful order when the spectrum of
4T sits strictly inside the unit disk; on the boundary the coefficient tail
decays like n^(-1/2) and reaching 1e-10 would take ~1e20 terms.  The default
("auto") evaluation therefore falls back to exact spectral evaluation (for
diagonalizable T) or the principal square root Y = 2 (I + sqrt(I - 4T))^{-1},
and every returned operator carries its measured quadratic residual.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np
import scipy.linalg
import scipy.optimize

from . import combinatorics as comb
from .combinatorics import TriangleKind
from .errors import (
    DivergenceError,
    DomainError,
    IllConditionedError,
    NonConvergenceError,
    NotCertifiedError,
    SingularityError,
)
from .genfun import catalan_gf
from .polynomials import IntPolynomial

_SQRT_PI = math.sqrt(math.pi)
_DIVERGENCE_CAP = 1e12
_EIG_COND_LIMIT = 1e8


def as_matrix(m) -> np.ndarray:
    """Validate and convert to a square complex128 ndarray."""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.view(float))):
        raise ValueError("matrix entries must be finite")
    return arr


def operator_norm(m: np.ndarray) -> float:
    """Spectral norm (largest singular value)."""
    return float(np.linalg.norm(m, 2))


def quadratic_residual(t: np.ndarray, y: np.ndarray) -> float:
    """|| T Y^2 - Y + I || in operator norm."""
    t = as_matrix(t)
    y = as_matrix(y)
    return operator_norm(t @ y @ y - y + np.eye(t.shape[0]))


@dataclass(frozen=True)
class PowerBoundCertificate:
    """Witness that sup_n ||(4T)^n|| <= bound.

    ``method`` is "eigen_bound" (diagonalizable T with spectrum in the closed
    quarter disk; bound is the eigenvector condition number, valid for every n)
    or "direct_scan" (bound is the scanned maximum; valid for every n once a
    scanned power dropped below norm 1, otherwise up to ``checked_up_to``).
    ``geo_scale * geo_rate**n`` additionally dominates ||(4T)^n|| whenever
    ``geo_rate < 1``, which is what makes series truncation certifiable.
    """

    bound: float
    checked_up_to: int
    method: str
    geo_rate: float
    geo_scale: float


def certify_power_bounded(t: np.ndarray, nmax: int = 10_000) -> PowerBoundCertificate:
    """Certify that 4T is power-bounded, or raise.

    Tries the eigenvector-conditioning bound first; otherwise scans ||(4T)^n||
    up to nmax, stopping early once a power drops below norm 1 (after which no
    later power can exceed the recorded maximum).  Raises DivergenceError when
    the scanned norms grow past 1e12, NotCertifiedError when neither route
    certifies within nmax.
    """
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    t = as_matrix(t)
    d = t.shape[0]
    t4 = 4.0 * t

    eigvals, eigvecs = np.linalg.eig(t4)
    cond = float(np.linalg.cond(eigvecs, 2))
    radius = float(np.max(np.abs(eigvals))) if d else 0.0
    if cond < _EIG_COND_LIMIT and radius <= 1.0 + 1e-10:
        return PowerBoundCertificate(
            bound=max(cond, 1.0),
            checked_up_to=nmax,
            method="eigen_bound",
            geo_rate=min(radius, 1.0),
            geo_scale=max(cond, 1.0),
        )

    power = np.eye(d, dtype=complex)
    best = 1.0
    grew = 0
    geo_rate = 1.0
    geo_at = 0
    last = 1.0
    for n in range(1, nmax + 1):
        power = power @ t4
        norm = operator_norm(power)
        if norm > _DIVERGENCE_CAP:
            raise DivergenceError(
                f"||(4T)^{n}|| = {norm:.3e} exceeds the divergence cap; "
                "the spectrum of T leaves the closed quarter disk"
            )
        grew = grew + 1 if norm > last else 0
        last = norm
        best = max(best, norm)
        if norm < 1.0:
            rate = max(norm, 1e-300) ** (1.0 / n)
            if rate < geo_rate:
                geo_rate, geo_at = rate, n
            # no later power can exceed the running maximum: safe to stop
            if norm < 1e-3:
                rho = max(geo_rate**geo_at, 1e-300)
                return PowerBoundCertificate(
                    bound=best, checked_up_to=n, method="direct_scan",
                    geo_rate=geo_rate, geo_scale=best / rho,
                )
    if geo_rate < 1.0:
        # some scanned power had norm < 1, so `best` dominates every n
        rho = max(geo_rate**geo_at, 1e-300)
        return PowerBoundCertificate(
            bound=best, checked_up_to=nmax, method="direct_scan",
            geo_rate=geo_rate, geo_scale=best / rho,
        )
    if grew >= nmax // 2:
        raise NotCertifiedError(
            f"||(4T)^n|| still growing after {nmax} steps (last = {last:.3e})"
        )
    # bounded-looking but never below 1 (e.g. norm identically 1)
    return PowerBoundCertificate(
        bound=best, checked_up_to=nmax, method="direct_scan",
        geo_rate=1.0, geo_scale=best,
    )


# ---------------------------------------------------------------------------
# coefficient streams: exact integers, folded against 4^n on the fly


def _catalan_coeffs() -> Iterator[int]:
    value, n = 1, 0
    while True:
        yield value
        value = value * 2 * (2 * n + 1) // (n + 2)
        n += 1


def _triangle_coeffs(kind: str, k: int) -> Iterator[int]:
    tk = TriangleKind.A if kind == "a" else TriangleKind.B
    return comb.triangle_column(tk, k, None)


def _series_sum(
    coeffs: Iterator[int],
    weight: float,
    t: np.ndarray,
    cert: PowerBoundCertificate,
    tol: float,
    max_terms: int,
) -> tuple[np.ndarray, int, float]:
    """Sum coef(n) T^n with terms folded as (coef(n)/4^n) (4T)^n.

    ``weight`` bounds the folded coefficients: coef(n)/4^n <= weight/(sqrt(pi) n^(3/2)).
    Stops once the certified remainder falls below tol; raises
    NonConvergenceError if that needs more than max_terms terms (predicted
    up front, so boundary-spectrum matrices fail fast instead of looping).
    """
    needed = (cert.bound * weight * 2.0 / (_SQRT_PI * tol)) ** 2
    if cert.geo_rate < 1.0 - 1e-12:
        # conservative: ignores the helping (n+1)^(-3/2) factor
        target = tol * (1.0 - cert.geo_rate) * _SQRT_PI / (cert.geo_scale * weight)
        log_rate = math.log(max(cert.geo_rate, 1e-300))
        needed = min(needed, max(math.log(max(target, 1e-320)) / log_rate, 1.0))
    if needed > 2.0 * max_terms:
        raise NonConvergenceError(
            f"certified series needs ~{needed:.3g} terms for tol={tol:g}, "
            f"beyond the cap of {max_terms} (spectral radius of 4T ~ {cert.geo_rate:.6f})"
        )
    d = t.shape[0]
    t4 = 4.0 * t
    power = np.eye(d, dtype=complex)
    total = np.zeros((d, d), dtype=complex)
    pow4 = 1
    for n in range(max_terms + 1):
        coef = next(coeffs)
        total += (coef / pow4) * power
        if n >= 1:
            rem = cert.bound * weight * 2.0 / (_SQRT_PI * math.sqrt(n))
            if cert.geo_rate < 1.0 - 1e-12:
                geo = (
                    cert.geo_scale
                    * (weight / (_SQRT_PI * (n + 1) ** 1.5))
                    * cert.geo_rate ** (n + 1)
                    / (1.0 - cert.geo_rate)
                )
                rem = min(rem, geo)
            if rem < tol:
                return total, n, rem
        power = power @ t4
        pow4 *= 4
    raise NonConvergenceError(
        f"certified series tail did not reach tol={tol:g} within {max_terms} terms "
        f"(spectral radius of 4T is {cert.geo_rate:.6f} at scale {cert.geo_scale:.3e})"
    )


@dataclass(frozen=True)
class CatalanOperator:
    """C(T) together with how it was obtained and how good it is.

    ``residual`` is the measured || T Y^2 - Y + I ||; ``truncation`` is the
    series order used (0 for the spectral / square-root routes).
    """

    source: np.ndarray
    value: np.ndarray
    truncation: int
    residual: float
    method: str
    certificate: PowerBoundCertificate


def _spectral_value(t: np.ndarray, f: Callable[[complex], complex]) -> np.ndarray:
    eigvals, eigvecs = np.linalg.eig(t)
    cond = float(np.linalg.cond(eigvecs, 2))
    if cond > _EIG_COND_LIMIT:
        raise IllConditionedError(f"eigenvector condition number {cond:.3e} too large")
    fvals = np.array([f(lam) for lam in eigvals], dtype=complex)
    return eigvecs @ (fvals[:, None] * np.linalg.inv(eigvecs))


def catalan_operator(
    t: np.ndarray,
    tol: float = 1e-10,
    method: str = "auto",
    nmax: int = 10_000,
    max_terms: int = 20_000,
) -> CatalanOperator:
    """Evaluate C(T) = sum C_n T^n for 4T power-bounded.

    method "series" insists on the certified partial sum (raises
    NonConvergenceError when the spectrum touches the boundary), "spectral"
    diagonalizes, "sqrt" uses 2 (I + sqrt(I - 4T))^{-1}, and "auto" tries them
    in that order.  The returned residual is measured, not assumed.
    """
    t = as_matrix(t)
    cert = certify_power_bounded(t, nmax)
    d = t.shape[0]

    def finish(value: np.ndarray, truncation: int, how: str) -> CatalanOperator:
        return CatalanOperator(
            source=t,
            value=value,
            truncation=truncation,
            residual=quadratic_residual(t, value),
            method=how,
            certificate=cert,
        )

    if method not in ("auto", "series", "spectral", "sqrt"):
        raise ValueError(f"unknown method {method!r}")
    if method in ("auto", "series"):
        try:
            value, used, _ = _series_sum(_catalan_coeffs(), 1.0, t, cert, tol, max_terms)
            return finish(value, used, "series")
        except NonConvergenceError:
            if method == "series":
                raise
    if method in ("auto", "spectral"):
        try:
            value = _spectral_value(t, catalan_gf)
            return finish(value, 0, "spectral")
        except IllConditionedError:
            if method == "spectral":
                raise
    root = scipy.linalg.sqrtm(np.eye(d) - 4.0 * t)
    value = 2.0 * np.linalg.solve(np.eye(d) + root, np.eye(d))
    return finish(value, 0, "sqrt")


def _poly_of_matrix(p: IntPolynomial, t: np.ndarray) -> np.ndarray:
    d = t.shape[0]
    acc = np.zeros((d, d), dtype=complex)
    eye = np.eye(d, dtype=complex)
    for c in reversed(p.coeffs):
        acc = acc @ t + float(c) * eye
    return acc


def catalan_power(t: np.ndarray, j: int, tol: float = 1e-10, method: str = "auto") -> np.ndarray:
    """C(T)^j for any integer j.

    Positive powers come from the triangle-column coefficient series
    (odd j = 2k-1 uses the A column a_k, even j = 2k uses the B column b_k)
    when the series certifies, else from powers of C(T).  Negative powers use
    the Catalan-polynomial form

        C(T)^{-m} = P_m(T) - T C(T) P_{m-1}(T),   m >= 1,

    which needs no matrix inversion.  j = 0 gives the identity.
    """
    t = as_matrix(t)
    d = t.shape[0]
    if j == 0:
        return np.eye(d, dtype=complex)
    if j >= 1:
        if method in ("auto", "series"):
            k = (j + 1) // 2
            if j % 2 == 1:
                coeffs, weight = _triangle_coeffs("a", k), 4.0 ** (k - 1) * (2 * k - 1)
            else:
                coeffs, weight = _triangle_coeffs("b", k), 4.0**k * k
            cert = certify_power_bounded(t)
            try:
                value, _, _ = _series_sum(coeffs, weight, t, cert, tol, 20_000)
                return value
            except NonConvergenceError:
                if method == "series":
                    raise
        base = catalan_operator(t, tol, method="auto").value
        return np.linalg.matrix_power(base, j)
    m = -j
    base = catalan_operator(t, tol, method=method if method != "series" else "auto").value
    head = _poly_of_matrix(comb.catalan_polynomial(m), t)
    tail = t @ base @ _poly_of_matrix(comb.catalan_polynomial(m - 1), t)
    return head - tail


def catalan_power_jordan(lam: complex, mu: complex, j: int) -> np.ndarray:
    """Closed form of C(T)^j for the Jordan block T = [[lam, mu], [0, lam]].

    Upper triangular with C(lam)^j on the diagonal and
    j C(lam)^{j-1} mu (C(lam) - 1) / (lam (1 - 2 lam C(lam))) above it;
    valid for every integer j (j = 0 gives the identity).  lam = 1/4 makes
    1 - 2 lam C(lam) = sqrt(1 - 4 lam) vanish and is rejected.
    """
    lam, mu = complex(lam), complex(mu)
    if lam == 0 or abs(lam) > 0.25 * (1 + 1e-12):
        raise DomainError(f"need 0 < |lam| <= 1/4, got lam = {lam}")
    if mu == 0:
        raise DomainError("mu must be nonzero (otherwise the block is diagonal)")
    c = catalan_gf(lam)
    den = lam * (1.0 - 2.0 * lam * c)
    if den == 0:
        raise SingularityError("1 - 2 lam C(lam) vanishes at lam = 1/4")
    if j == 0:
        return np.eye(2, dtype=complex)
    off = j * c ** (j - 1) * mu * (c - 1.0) / den
    return np.array([[c**j, off], [0.0, c**j]], dtype=complex)


@dataclass(frozen=True)
class DiagonalSolution:
    matrix: np.ndarray
    multiplicity: int
    residual: float


def quadratic_solutions_diag(lam: complex, mu: complex) -> list[DiagonalSolution]:
    """All diagonal solutions of T Y^2 - Y + I = 0 for T = diag(lam, mu).

    Each diagonal entry independently takes one of the two roots
    (1 +- sqrt(1 - 4x)) / (2x), giving four sign combinations; at x = 1/4 the
    roots collide and the combinations collapse (multiplicity recorded).
    Solvability only needs lam, mu != 0 -- the quarter-disk constraint plays
    no role here.
    """
    lam, mu = complex(lam), complex(mu)
    if lam == 0 or mu == 0:
        raise DomainError("lam and mu must be nonzero")

    def roots(x: complex) -> list[complex]:
        s = np.sqrt(complex(1.0 - 4.0 * x))  # principal branch: Re(s) >= 0, so 1 + s != 0
        return [2.0 / (1.0 + s), (1.0 + s) / (2.0 * x)]

    t = np.diag([lam, mu])
    seen: list[DiagonalSolution] = []
    for r1 in roots(lam):
        for r2 in roots(mu):
            y = np.diag([r1, r2])
            for i, known in enumerate(seen):
                if np.allclose(known.matrix, y, rtol=0, atol=1e-14):
                    seen[i] = DiagonalSolution(known.matrix, known.multiplicity + 1,
                                               known.residual)
                    break
            else:
                seen.append(DiagonalSolution(y, 1, quadratic_residual(t, y)))
    return seen


@dataclass(frozen=True)
class SpectralMappingReport:
    eigenvalues: tuple[complex, ...]
    expected: tuple[complex, ...]
    computed: tuple[complex, ...]
    max_distance: float


def spectral_mapping_check(t: np.ndarray, j: int, tol: float = 1e-10) -> SpectralMappingReport:
    """Compare eig(C(T)^j) with {C(lam)^j : lam in eig(T)} as multisets.

    Pairs the two eigenvalue lists by minimum-cost assignment and reports the
    largest matched distance.  Requires a diagonalizable T (eigenvector
    condition number below 1e8).
    """
    t = as_matrix(t)
    certify_power_bounded(t)
    eigvals, eigvecs = np.linalg.eig(t)
    cond = float(np.linalg.cond(eigvecs, 2))
    if cond > _EIG_COND_LIMIT:
        raise IllConditionedError(f"eigenvector condition number {cond:.3e} too large")
    expected = np.array([catalan_gf(lam) ** j for lam in eigvals])
    computed = np.linalg.eigvals(catalan_power(t, j, tol))
    cost = np.abs(expected[:, None] - computed[None, :])
    rows, cols = scipy.optimize.linear_sum_assignment(cost)
    return SpectralMappingReport(
        eigenvalues=tuple(eigvals),
        expected=tuple(expected),
        computed=tuple(computed[cols]),
        max_distance=float(cost[rows, cols].max()),
    )


@dataclass(frozen=True)
class PolynomialGFReport:
    lhs: np.ndarray
    rhs: np.ndarray
    gap: float
    terms: int


def operator_polynomial_gf(
    t: np.ndarray, z: complex, family: str, n_terms: int
) -> PolynomialGFReport:
    """Both sides of sum_n R_n(z) T^n = (C(T) - (z+1) I) (T (1+z)^2 - z I)^{-1} (x (z+1) for Q).

    ``lhs`` is the truncated series with the exact row polynomials R_n = P_n or
    Q_n, ``rhs`` the closed form; ``gap`` is the operator-norm difference.  The
    gap shrinks geometrically when the spectrum of 4T is interior but only like
    n^(-1/2) on the boundary; the report states both sides, it does not assert.
    """
    t = as_matrix(t)
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"|z| = {abs(z)} must be < 1")
    if family not in ("P", "Q"):
        raise ValueError("family must be 'P' or 'Q'")
    if not 0 <= n_terms <= 450:
        raise ValueError("n_terms must be in 0..450 (row coefficients overflow doubles beyond)")
    certify_power_bounded(t)
    d = t.shape[0]
    row = comb.row_polynomial_p if family == "P" else comb.row_polynomial_q
    lhs = np.zeros((d, d), dtype=complex)
    power = np.eye(d, dtype=complex)
    for n in range(n_terms + 1):
        lhs += complex(row(n)(z)) * power
        power = power @ t
    den = (1.0 + z) ** 2 * t - z * np.eye(d)
    if abs(np.linalg.det(den)) < 1e-300:
        raise SingularityError("T (1+z)^2 - z I is singular")
    cop = catalan_operator(t, tol=1e-13).value
    rhs = np.linalg.solve(den, cop - (z + 1.0) * np.eye(d))
    if family == "Q":
        rhs = rhs * (z + 1.0)
    return PolynomialGFReport(lhs=lhs, rhs=rhs, gap=operator_norm(lhs - rhs), terms=n_terms)


@dataclass(frozen=True)
class NormBoundCheck:
    power: int
    value: float
    bound: float
    rule: str
    passed: bool
    note: str = ""


def norm_bound_report(t: np.ndarray, jmax: int, tol: float = 1e-10) -> list[NormBoundCheck]:
    """Tabulate ||C(T)^j|| against the proved bounds for j = -jmax..jmax.

    Positive j: ||C(T)^j|| <= C(||T||)^j, applicable only when ||T|| <= 1/4
    (skipped with a note otherwise).  Negative j with M = sup ||(4T)^n||:
    ||C(T)^{-1}|| <= 1 + M/2 and ||C(T)^{-m-1}|| <= M (alpha_{m+1} + 2 alpha_m) / 4^m.
    Each inequality is asserted within 1e-8 * bound of slack.
    """
    if jmax < 1:
        raise ValueError("jmax must be >= 1")
    t = as_matrix(t)
    cert = certify_power_bounded(t)
    m_sup = cert.bound
    tnorm = operator_norm(t)
    out: list[NormBoundCheck] = []
    positive_ok = tnorm <= 0.25 * (1 + 1e-12)
    c_at_norm = catalan_gf(tnorm).real if positive_ok else float("nan")
    for j in range(1, jmax + 1):
        value = operator_norm(catalan_power(t, j, tol))
        if positive_ok:
            bound = c_at_norm**j
            out.append(NormBoundCheck(j, value, bound, "C(||T||)^j",
                                      value <= bound * (1 + 1e-8)))
        else:
            out.append(NormBoundCheck(j, value, float("nan"), "C(||T||)^j", True,
                                      note="skipped: ||T|| > 1/4"))
    for j in range(1, jmax + 1):
        value = operator_norm(catalan_power(t, -j, tol))
        if j == 1:
            bound = 1.0 + m_sup / 2.0
            rule = "1 + M/2"
        else:
            m = j - 1
            bound = m_sup * (comb.alpha(m + 1) + 2 * comb.alpha(m)) / 4.0**m
            rule = "M (alpha_{m+1} + 2 alpha_m) / 4^m"
        out.append(NormBoundCheck(-j, value, bound, rule, value <= bound * (1 + 1e-8)))
        if j == 2:
            bound = 1.5 * m_sup
            out.append(NormBoundCheck(-2, value, bound, "3M/2",
                                      value <= bound * (1 + 1e-8)))
    return out


@dataclass(frozen=True)
class TriangleGFCheck:
    name: str
    lhs: complex
    rhs: complex
    error: float
    tail_bound: float


def matrix_triangle_gf_check(z: complex, n: int, n_terms: int) -> list[TriangleGFCheck]:
    """Verify the four anti-diagonal generating identities for triangle columns.

    For T = z [[0,1],[1,0]], C(T)^{2n} and C(T)^{2n-1} split into diagonal and
    anti-diagonal parts; reading both sides entrywise gives, with
    E = C_e(z), O = C_o(z):

        sum_{k>=n} B[2k-n][n]   z^{2k}   = z^{2n} sum_{i even} binom(2n,   i) E^{2n-i}   O^i
        sum_{k>=n} B[2k+1-n][n] z^{2k+1} = z^{2n} sum_{i odd}  binom(2n,   i) E^{2n-i}   O^i
        sum_{k>=n} A[2k-1-n][n] z^{2k}   = z^{2n} sum_{i even} binom(2n-1, i) E^{2n-1-i} O^i
        sum_{k>=n} A[2k-n][n]   z^{2k+1} = z^{2n} sum_{i odd}  binom(2n-1, i) E^{2n-1-i} O^i

    Left sides are truncated at k = n_terms and reported with a certified tail
    bound from the n^(-3/2) entry growth.  Requires n >= 1 (the n = 0 case
    degenerates to C(T)^0 = I).
    """
    z = complex(z)
    if abs(z) > 0.25 * (1 + 1e-12):
        raise DomainError(f"|z| = {abs(z)} exceeds the disk radius 1/4")
    if n < 1:
        raise ValueError("n must be >= 1 (n = 0 is degenerate)")
    if n_terms < n + 1:
        raise ValueError("n_terms must exceed n")
    from .genfun import even_odd_gf

    ce, co = even_odd_gf(z)
    z4 = 4.0 * z
    r = abs(z4)

    def lhs_sum(kind: TriangleKind, first_index, z_extra_power: int) -> complex:
        # term_k = X[first_index(k)][n] * z^(2k + extra), folded through 4^first_index
        total = 0j
        for k in range(n, n_terms + 1):
            m = first_index(k)
            entry = comb.triangle_entry(kind, m, n)
            folded = entry / 4**m  # exact big-int division to float
            total += folded * z4 ** (2 * k + z_extra_power) / 4.0 ** (2 * k + z_extra_power - m)
        return total

    def tail_bound(weight: float, extra: int) -> float:
        # |term_k| <= weight/sqrt(pi) * r^(2k+extra) / 4^n-ish; geometric in r when r < 1
        if r < 1.0 - 1e-9:
            return weight / _SQRT_PI * r ** (2 * (n_terms + 1) + extra) / (1.0 - r * r)
        return weight / _SQRT_PI * 2.0 / math.sqrt(max(2 * n_terms - n, 1))

    def rhs_sum(total_degree: int, parity: int) -> complex:
        acc = 0j
        for i in range(parity, total_degree + 1, 2):
            acc += math.comb(total_degree, i) * ce ** (total_degree - i) * co**i
        return acc * z ** (2 * n)

    checks = []
    specs = [
        ("B even part", TriangleKind.B, lambda k: 2 * k - n, 0, 2 * n, 0, float(n)),
        ("B odd part", TriangleKind.B, lambda k: 2 * k + 1 - n, 1, 2 * n, 1, float(n)),
        ("A even part", TriangleKind.A, lambda k: 2 * k - 1 - n, 0, 2 * n - 1, 0, float(2 * n - 1)),
        ("A odd part", TriangleKind.A, lambda k: 2 * k - n, 1, 2 * n - 1, 1, float(2 * n - 1)),
    ]
    for name, kind, first_index, extra, degree, parity, weight in specs:
        lhs = lhs_sum(kind, first_index, extra)
        rhs = rhs_sum(degree, parity)
        checks.append(
            TriangleGFCheck(
                name=name,
                lhs=lhs,
                rhs=rhs,
                error=abs(lhs - rhs),
                tail_bound=tail_bound(weight, extra),
            )
        )
    return checks

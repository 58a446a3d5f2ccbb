"""Truncated elements of the weighted algebra l1(N0, 1/4^n).

A sequence is stored as its first N+1 entries.  Convolution is causal, so the
product of two sequences truncated at N has *exact* entries up to N; norms and
transforms of infinite-tail objects are reported together with certified tail
bounds derived from the entry growth 4^n n^(-3/2).

Entries may be Python ints / Fractions (exact variant) or floats / complex
(double variant); operations preserve exactness.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import combinatorics as comb
from .combinatorics import TriangleKind
from .errors import DomainError, TruncationMismatchError
from .genfun import catalan_gf
from .polynomials import IntPolynomial


@dataclass(frozen=True)
class WeightedSeq:
    """Immutable truncated sequence; ``entries[n]`` is the n-th term."""

    entries: tuple

    def __post_init__(self):
        if not self.entries:
            raise ValueError("a truncated sequence needs at least entry 0")

    @property
    def truncation(self) -> int:
        return len(self.entries) - 1

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, n: int):
        return self.entries[n]

    def is_exact(self) -> bool:
        return all(isinstance(e, (int, Fraction)) for e in self.entries)


def delta(j: int, n: int) -> WeightedSeq:
    """Canonical basis sequence: 1 at index j, zero elsewhere, truncated at n."""
    if not 0 <= j <= n:
        raise IndexError(f"need 0 <= j <= n, got j={j}, n={n}")
    return WeightedSeq((0,) * j + (1,) + (0,) * (n - j))


def catalan_seq(n: int) -> WeightedSeq:
    """The Catalan sequence c = (C_0, ..., C_n), exact."""
    return WeightedSeq(tuple(comb.catalan_iter(n + 1)))


def triangle_seq(kind: str, k: int, n: int) -> WeightedSeq:
    """Triangle column read as a sequence.

    kind 'a': a_k(m) = A[m+k-1][k]  (odd convolution powers of c),
    kind 'b': b_k(m) = B[m+k][k]    (even convolution powers of c).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if kind == "a":
        entries = tuple(comb.triangle_column(TriangleKind.A, k, n + 1))
    elif kind == "b":
        entries = tuple(comb.triangle_column(TriangleKind.B, k, n + 1))
    else:
        raise ValueError(f"kind must be 'a' or 'b', got {kind!r}")
    return WeightedSeq(entries)


def _nonzeros(entries: Sequence) -> list[tuple[int, object]]:
    return [(i, v) for i, v in enumerate(entries) if v != 0]


def convolve(a: WeightedSeq, b: WeightedSeq) -> WeightedSeq:
    """Cauchy product truncated at the common truncation order.

    Skips zero entries of the sparser factor, so convolving against a
    polynomial-in-delta_1 sequence costs O(N * nonzeros).
    """
    if a.truncation != b.truncation:
        raise TruncationMismatchError(
            f"truncations differ: {a.truncation} vs {b.truncation}"
        )
    dense, sparse = a.entries, b.entries
    if sum(1 for v in dense if v != 0) < sum(1 for v in sparse if v != 0):
        dense, sparse = sparse, dense
    nz = _nonzeros(sparse)
    out = [0] * len(dense)
    for j, bv in nz:
        for m in range(j, len(dense)):
            av = dense[m - j]
            if av != 0:
                out[m] += av * bv
    return WeightedSeq(tuple(out))


def seq_power(a: WeightedSeq, m: int) -> WeightedSeq:
    """m-fold convolution power; a^{*0} is the identity delta_0.

    Exponents count convolution factors: seq_power(a, 1) == a and
    seq_power(a, i + j) == convolve(seq_power(a, i), seq_power(a, j)).
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    result = delta(0, a.truncation)
    base = a
    while m:
        if m & 1:
            result = convolve(result, base)
        m >>= 1
        if m:
            base = convolve(base, base)
    return result


def weighted_norm(a: WeightedSeq):
    """Truncated weighted norm sum_{n<=N} |a(n)| / 4^n.

    Exact (a Fraction) when the entries are ints or Fractions, float otherwise.
    """
    entries = a.entries
    n = a.truncation
    if all(isinstance(e, int) for e in entries):
        total = 0  # Horner in base 4: ends up as sum |a_i| 4^(n-i)
        for e in entries:
            total = (total << 2) + abs(e)
        return Fraction(total, 4**n)
    if a.is_exact():
        return sum(abs(Fraction(e)) * Fraction(1, 4) ** i for i, e in enumerate(entries))
    return float(sum(abs(e) / 4.0**i for i, e in enumerate(entries)))


def _power_coeff_weight(factors: int) -> float:
    """w with c^{*factors}(m) / 4^m <= w / (sqrt(pi) m^(3/2)) for m >= 1.

    From B[m][k] / 4^m <= k / (sqrt(pi) m^(3/2)) and the A analogue with 2k-1.
    """
    if factors % 2 == 0:
        k = factors // 2
        return 4.0**k * k
    k = (factors + 1) // 2
    return 4.0 ** (k - 1) * (2 * k - 1)


def power_tail_bound(factors: int, n: int) -> float:
    """Certified bound on the dropped norm mass sum_{m>n} c^{*factors}(m) / 4^m."""
    if factors < 1 or n < 1:
        raise ValueError("factors and n must be >= 1")
    shift = factors // 2 if factors % 2 == 0 else (factors - 1) // 2
    return _power_coeff_weight(factors) * 2.0 / (math.sqrt(math.pi) * math.sqrt(n + shift))


def power_series_tail_bound(factors: int, n: int, z_abs: float) -> float:
    """Certified bound on |sum_{m>n} c^{*factors}(m) z^m| for |z| = z_abs <= 1/4.

    Geometric in (4 z_abs)^m strictly inside the disk, n^(-1/2) on the boundary.
    """
    if not 0.0 <= z_abs <= 0.25 * (1 + 1e-12):
        raise DomainError(f"z_abs = {z_abs} outside [0, 1/4]")
    w = _power_coeff_weight(factors)
    boundary = w * 2.0 / (math.sqrt(math.pi) * math.sqrt(n))
    r = 4.0 * z_abs
    if r < 1.0 - 1e-12:
        geometric = w / (math.sqrt(math.pi) * (n + 1) ** 1.5) * r ** (n + 1) / (1.0 - r)
        return min(boundary, geometric)
    return boundary


def poly_at_shift(p: IntPolynomial, n: int) -> WeightedSeq:
    """p(delta_1) as a truncated sequence: coefficient j sits at index j."""
    entries = list(p.coeffs[: n + 1])
    entries += [0] * (n + 1 - len(entries))
    return WeightedSeq(tuple(entries))


def catalan_inverse_power(k: int, n: int) -> WeightedSeq:
    """Convolution inverse of the k-fold power of the Catalan sequence.

    Built from Catalan polynomials evaluated at the shift delta_1:

        (c^{*k})^{-1} = P_k(delta_1) - (c * delta_1) * P_{k-1}(delta_1),

    which convolves with seq_power(catalan_seq(n), k) to delta_0 exactly on all
    n+1 retained entries.  k = 1 gives (1, -C_0, -C_1, ...).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    head = poly_at_shift(comb.catalan_polynomial(k), n)
    c_shift = WeightedSeq((0,) + tuple(comb.catalan_iter(n)))
    tail = convolve(c_shift, poly_at_shift(comb.catalan_polynomial(k - 1), n))
    return WeightedSeq(tuple(h - t for h, t in zip(head.entries, tail.entries)))


def inverse_norm_bound(k: int) -> Fraction:
    """Exact norm bound for catalan_inverse_power(k) in the full algebra.

    ||P_k(delta_1)|| + ||c * delta_1|| ||P_{k-1}(delta_1)||
        = P_k(-1/4) + (1/2) P_{k-1}(-1/4),

    using that the Catalan-polynomial coefficients alternate in sign.  The
    triangle inequality is an equality here (no cancellation between the two
    groups of entries), so the truncated norms converge to this value.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    q = Fraction(-1, 4)
    return comb.catalan_polynomial(k)(q) + Fraction(1, 2) * comb.catalan_polynomial(k - 1)(q)


def z_transform(a: WeightedSeq, z: complex) -> complex:
    """Z(a)(z) = sum_n a(n) z^n on the closed quarter disk.

    Turns convolution into multiplication; Z(delta_n) = z^n and Z(c) = C(z).
    Entries are folded against 4^n before multiplying by (4z)^n, so exact
    integer entries of Catalan-type growth never overflow doubles.
    """
    z = complex(z)
    if abs(z) > 0.25 * (1 + 1e-12):
        raise DomainError(f"|z| = {abs(z)} exceeds the disk radius 1/4")
    z4 = 4.0 * z
    acc = 0j
    p = 1.0 + 0j
    pow4 = 1
    for i, e in enumerate(a.entries):
        if isinstance(e, int):
            folded = e / pow4
        elif isinstance(e, Fraction):
            folded = float(e / pow4)
        else:
            folded = complex(e) * 0.25**i
        acc += folded * p
        p *= z4
        pow4 <<= 2
    return acc


# ---------------------------------------------------------------------------
# Abel-sum verification


@dataclass(frozen=True)
class AbelCheck:
    name: str
    k: int | None
    computed: float
    expected: float
    error: float
    tail_bound: float


def _column_sums(kind: TriangleKind, k: int, n_terms: int) -> tuple[float, float, float, float]:
    """(plain sum, alternating sum, plain tail estimate, last term) of a column / 4^n.

    For B: sum_{n>=k} B[n][k] x^n at x = 1/4 resp. -1/4.
    For A: sum_{n>=k} A[n][k+1] x^n likewise (k >= 0).
    Terms are generated by the exact ratio recurrences of the entries, folded
    with the 1/4^n weight so nothing overflows.  The plain tail estimate
    extends the measured last term with the n^(-3/2) decay law; for the
    alternating sum the dropped tail is below the last term.
    """
    j = np.arange(k, k + n_terms, dtype=np.float64)
    if kind is TriangleKind.B:
        ratios = j * (2 * j + 1) / (2 * (j + 1 - k) * (j + 1 + k))
    else:
        kk = k + 1  # column index in the A triangle
        ratios = (2 * j + 1) * (j + 1) / (2 * (j + 2 - kk) * (j + 1 + kk))
    t = np.empty(n_terms + 1)
    t[0] = 4.0 ** (-k)
    np.cumprod(ratios, out=ratios)
    t[1:] = t[0] * ratios
    total = float(t.sum())
    last_n = k + n_terms
    signs = np.where((np.arange(k, last_n + 1) % 2) == 0, 1.0, -1.0)
    alternating = float((t * signs).sum())
    tail = float(t[-1]) * last_n**1.5 * 2.0 / math.sqrt(last_n + 0.5)
    return total, alternating, tail, float(t[-1])


def abel_sums(kmax: int = 3, n_terms: int = 10**6) -> list[AbelCheck]:
    """Numerically verify the eight weighted column/double-sum identities.

    Column sums (per k): B columns converge to 1 and (2 sqrt2 - 3)^k; A columns
    to 2 and 2 (sqrt2 - 1)(2 sqrt2 - 3)^k.  Double sums over n and k converge
    to 1/3, (8 sqrt2 - 13)/41, 8/3 and (8/41)(5 sqrt2 - 3).  Plain column sums
    add their certified n^(-3/2) tail estimate; alternating sums truncate (the
    dropped tail is below the last term).
    """
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    s2 = math.sqrt(2.0)
    q = 2 * s2 - 3
    checks: list[AbelCheck] = []

    k_double = 20  # 4^-20 ~ 1e-12: double-sum k-tail is negligible
    b_cols = {k: _column_sums(TriangleKind.B, k, n_terms) for k in range(1, max(kmax, k_double) + 1)}
    a_cols = {k: _column_sums(TriangleKind.A, k, n_terms) for k in range(0, k_double + 1)}

    for k in range(1, kmax + 1):
        total, alternating, tail, last = b_cols[k]
        checks.append(AbelCheck("B column sum", k, total + tail, 1.0,
                                abs(total + tail - 1.0), tail))
        checks.append(AbelCheck("B column alternating sum", k, alternating, q**k,
                                abs(alternating - q**k), last))
        total, alternating, tail, last = a_cols[k]
        checks.append(AbelCheck("A column sum", k, total + tail, 2.0,
                                abs(total + tail - 2.0), tail))
        expected = 2 * (s2 - 1) * q**k
        checks.append(AbelCheck("A column alternating sum", k, alternating, expected,
                                abs(alternating - expected), last))

    dbl = sum(4.0 ** (-k) * (b_cols[k][0] + b_cols[k][2]) for k in range(1, k_double + 1))
    checks.append(AbelCheck("B double sum", None, dbl, 1.0 / 3.0, abs(dbl - 1.0 / 3.0),
                            4.0 ** (-k_double) / 3.0))
    dbl = sum(4.0 ** (-k) * b_cols[k][1] for k in range(1, k_double + 1))
    expected = (8 * s2 - 13) / 41
    checks.append(AbelCheck("B double alternating sum", None, dbl, expected,
                            abs(dbl - expected), 4.0 ** (-k_double)))
    dbl = sum(4.0 ** (-k) * (a_cols[k][0] + a_cols[k][2]) for k in range(0, k_double + 1))
    checks.append(AbelCheck("A double sum", None, dbl, 8.0 / 3.0, abs(dbl - 8.0 / 3.0),
                            2 * 4.0 ** (-k_double) / 3.0))
    dbl = sum(4.0 ** (-k) * a_cols[k][1] for k in range(0, k_double + 1))
    expected = 8.0 / 41.0 * (5 * s2 - 3)
    checks.append(AbelCheck("A double alternating sum", None, dbl, expected,
                            abs(dbl - expected), 4.0 ** (-k_double)))
    return checks


# ---------------------------------------------------------------------------
# Spectrum boundary curves


def spectrum_point(j: int, theta: float) -> complex:
    """Point of the boundary curve of the spectrum of the j-th Catalan power.

    The boundary of the spectrum of c is the image of the circle |z| = 1/4
    under C; powers map pointwise, so the curve is C(e^{i theta} / 4)^j.
    Equivalently, with s = sqrt(2 |sin(theta/2)|),

        [2 e^{-i theta} (1 - s e^{-i sgn(theta) (pi - |theta|) / 4})]^j.

    theta = 0 gives 2^j; |theta| -> pi gives magnitude (2(sqrt2 - 1))^|j|.
    """
    if j == 0:
        raise ValueError("power j must be nonzero")
    g = catalan_gf(0.25 * cmath.exp(1j * theta))
    return g**j


def boundary_parametrization(theta: float) -> complex:
    """Closed parametrization of the base curve (the j = 1 case).

    Matches spectrum_point(1, theta) to machine precision; the phase of the
    inner square root flips sign with theta so the point stays on the curve.
    """
    s = math.sqrt(2.0 * abs(math.sin(theta / 2.0)))
    phase = -math.copysign((math.pi - abs(theta)) / 4.0, theta)
    return 2.0 * cmath.exp(-1j * theta) * (1.0 - s * cmath.exp(1j * phase))


@dataclass(frozen=True)
class SpectrumCurve:
    """Sampled boundary curve for the j-th convolution power of c."""

    power: int
    thetas: tuple[float, ...]
    points: tuple[complex, ...]

    @classmethod
    def sample(cls, j: int, samples: int) -> "SpectrumCurve":
        """Uniform samples on the open interval (-pi, pi), endpoints excluded.

        With an odd sample count the midpoint theta = 0 is hit exactly.
        """
        if j == 0:
            raise ValueError("power j must be nonzero")
        if samples < 2:
            raise ValueError("need at least 2 samples")
        step = 2.0 * math.pi / (samples + 1)
        thetas = tuple(-math.pi + step * (m + 1) for m in range(samples))
        points = tuple(spectrum_point(j, t) for t in thetas)
        return cls(power=j, thetas=thetas, points=points)

    def to_csv(self) -> str:
        lines = ["theta,re,im"]
        for t, p in zip(self.thetas, self.points):
            lines.append(f"{t:.17g},{p.real:.17g},{p.imag:.17g}")
        return "\n".join(lines) + "\n"

"""Exact Catalan combinatorics: numbers, both triangles, row polynomials.

Everything here is computed in arbitrary-precision integer/rational arithmetic;
the only floating-point function is :func:`asymptotic_ratio`, which compares an
exact entry against its growth law through logarithms to avoid overflow.

Conventions
-----------
The two triangles are::

    B[n][k] = (k/n)     * binom(2n,   n-k),   1 <= k <= n,   n >= 1
    A[n][k] = (2k-1)/(2n+1) * binom(2n+1, n+1-k),  1 <= k <= n+1,  n >= 0

The first column of each is the Catalan numbers; the rightmost entry is 1.
Both satisfy ``X[n][k] = X[n-1][k-1] + 2 X[n-1][k] + X[n-1][k+1]`` for k >= 2
(out-of-range entries read as 0).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import ConsistencyError, TriangleIndexError
from .polynomials import IntPolynomial


class TriangleKind(enum.Enum):
    B = "B"
    A = "A"


def catalan(n: int) -> int:
    """n-th Catalan number, binom(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return math.comb(2 * n, n) // (n + 1)


def catalan_list(count: int) -> list[int]:
    """[C_0, ..., C_{count-1}] via the convolution recurrence C_n = sum C_i C_{n-1-i}.

    Quadratic cost; this is the independent cross-check route against the
    binomial closed form of :func:`catalan`.
    """
    out: list[int] = []
    for n in range(count):
        out.append(1 if n == 0 else sum(out[i] * out[n - 1 - i] for i in range(n)))
    return out


def catalan_iter(count: int) -> Iterator[int]:
    """Yield C_0, ..., C_{count-1} by the ratio recurrence C_{n+1} = C_n 2(2n+1)/(n+2).

    Linear in count (up to big-int growth); use this in hot paths.
    """
    value = 1
    for n in range(count):
        yield value
        value = value * 2 * (2 * n + 1) // (n + 2)


def _check_triangle_index(kind: TriangleKind, n: int, k: int) -> None:
    if kind is TriangleKind.B:
        if not (1 <= k <= n):
            raise TriangleIndexError(f"B triangle needs 1 <= k <= n, got (n={n}, k={k})")
    else:
        if not (n >= 0 and 1 <= k <= n + 1):
            raise TriangleIndexError(f"A triangle needs 1 <= k <= n+1, n >= 0, got (n={n}, k={k})")


def triangle_entry(kind: TriangleKind, n: int, k: int) -> int:
    """Exact entry of the B or A Catalan triangle."""
    _check_triangle_index(kind, n, k)
    if kind is TriangleKind.B:
        num = k * math.comb(2 * n, n - k)
        q, r = divmod(num, n)
    else:
        num = (2 * k - 1) * math.comb(2 * n + 1, n + 1 - k)
        q, r = divmod(num, 2 * n + 1)
    if r:
        raise ConsistencyError(f"triangle entry ({kind}, {n}, {k}) is not an integer")
    return q


def triangle_row(kind: TriangleKind, n: int) -> list[int]:
    """Full row n of a triangle (closed-form entries)."""
    if kind is TriangleKind.B:
        if n < 1:
            raise TriangleIndexError(f"B triangle rows start at n=1, got {n}")
        return [triangle_entry(kind, n, k) for k in range(1, n + 1)]
    if n < 0:
        raise TriangleIndexError(f"A triangle rows start at n=0, got {n}")
    return [triangle_entry(kind, n, k) for k in range(1, n + 2)]


def triangle_rows_by_recurrence(kind: TriangleKind, nmax: int) -> Iterator[list[int]]:
    """Yield rows up to nmax using only the additive recurrence.

    Seeds: B row 1 = [1]; A row 0 = [1].  For k >= 2 both triangles use
    X[n][k] = X[n-1][k-1] + 2 X[n-1][k] + X[n-1][k+1] with out-of-range
    entries read as 0.  The leftmost column differs: B[n][1] doubles the
    entry above it (2 X[n-1][1] + X[n-1][2]) while A[n][1] does not
    (X[n-1][1] + X[n-1][2]).
    """
    first = 1 if kind is TriangleKind.B else 0
    row = [1]
    yield row
    for n in range(first + 1, nmax + 1):
        prev = row

        def at(k: int) -> int:
            return prev[k - 1] if 1 <= k <= len(prev) else 0

        width = len(prev) + 1
        row = []
        for k in range(1, width + 1):
            if k == 1 and kind is TriangleKind.A:
                row.append(at(1) + at(2))
            else:
                row.append(at(k - 1) + 2 * at(k) + at(k + 1))
        yield row


def triangle_column(kind: TriangleKind, k: int, count: int | None = None) -> Iterator[int]:
    """Yield column k from the diagonal down: X[k][k], X[k+1][k], ... (B) or
    X[k-1][k], X[k][k], ... (A); endless when count is None.

    Uses the exact entry ratio recurrences (one big multiply/divide per step)
    instead of a binomial per entry, so long columns are cheap.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    value = 1  # diagonal entry
    n = k if kind is TriangleKind.B else k - 1
    remaining = count
    while remaining is None or remaining > 0:
        yield value
        if kind is TriangleKind.B:
            value = value * (n * (2 * n + 1) * (2 * n + 2)) // (
                (n + 1) * (n + 1 - k) * (n + 1 + k)
            )
        else:
            value = value * ((2 * n + 1) * (2 * n + 2)) // ((n + 2 - k) * (n + 1 + k))
        n += 1
        if remaining is not None:
            remaining -= 1


def row_polynomial_p(n: int) -> IntPolynomial:
    """P_n(z) = sum_j B[n+1][j+1] z^j, the B-triangle row n+1 as a polynomial."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return IntPolynomial(triangle_row(TriangleKind.B, n + 1))


def row_polynomial_q(n: int) -> IntPolynomial:
    """Q_n(z) = sum_j A[n+1][j+1] z^j, the A-triangle row n+1 as a polynomial.

    Identically (1+z) P_n(z); satisfies z Q_n + (1+z) C_n = (z+1)^2 Q_{n-1}
    with Q_0 = 1 + z.  (Stating the recurrence with a bare C_n instead of
    (1+z) C_n looks tempting by analogy with P_n but is false already at
    n = 1: z Q_1 + C_1 = 1 + 2z + 3z^2 + z^3 while (z+1)^2 Q_0 = (1+z)^3.)
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return IntPolynomial(triangle_row(TriangleKind.A, n + 1))


def catalan_polynomial(k: int) -> IntPolynomial:
    """Catalan polynomial from the recurrence P_{k+2} = P_{k+1} - z P_k, P_0 = P_1 = 1.

    Coefficients alternate in sign: coefficient j has sign (-1)^j or is zero.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k <= 1:
        return IntPolynomial((1,))
    prev2 = IntPolynomial((1,))
    prev1 = IntPolynomial((1,))
    for _ in range(2, k + 1):
        prev2, prev1 = prev1, prev1 - prev2.shift(1)
    return prev1


def catalan_polynomial_closed(k: int, z: Fraction) -> Fraction:
    """Closed-form value of the k-th Catalan polynomial at a rational point.

    ((1+s)^{k+1} - (1-s)^{k+1}) / (2^{k+1} s) with s = sqrt(1-4z) collapses,
    after expanding the binomials, to the rational expression

        2^{-k} * sum_j binom(k+1, 2j+1) * (1-4z)^j,

    which this evaluates exactly.  Independent of :func:`catalan_polynomial`.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    u = 1 - 4 * Fraction(z)
    total = Fraction(0)
    for j in range((k + 1) // 2 + 1):
        if 2 * j + 1 <= k + 1:
            total += math.comb(k + 1, 2 * j + 1) * u**j
    return total / 2**k


def alpha(k: int) -> int:
    """alpha_1 = 1, alpha_2 = 5, alpha_k = 4 (alpha_{k-1} + alpha_{k-2}).

    Equals 4^{k-1} * P_k(-1/4) for the k-th Catalan polynomial; bounds the
    weighted norm of P_k evaluated at the shift sequence.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k == 1:
        return 1
    a, b = 1, 5
    for _ in range(k - 2):
        a, b = b, 4 * (b + a)
    return b


@dataclass(frozen=True)
class RowSums:
    sum_b: int
    sum_a: int
    alt_b: int
    alt_a: int


def row_sum_identities(n: int) -> RowSums:
    """Row sums of both triangles, cross-checked against their closed forms.

    sum_k B[n][k] = (n+1)/2 * C_n        sum_k (-1)^k B[n][k] = -C_{n-1}
    sum_k A[n][k] = (n+1)   * C_n        sum_k (-1)^k A[n][k] = 0

    Raises ConsistencyError if the direct sums and closed forms disagree
    (including the divisibility of (n+1) C_n by 2).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    row_b = triangle_row(TriangleKind.B, n)
    row_a = triangle_row(TriangleKind.A, n)
    sum_b = sum(row_b)
    sum_a = sum(row_a)
    alt_b = sum((-1) ** k * v for k, v in enumerate(row_b, start=1))
    alt_a = sum((-1) ** k * v for k, v in enumerate(row_a, start=1))
    cn = catalan(n)
    q, r = divmod((n + 1) * cn, 2)
    if r:
        raise ConsistencyError(f"(n+1) C_n is odd at n={n}")
    if sum_b != q or sum_a != (n + 1) * cn or alt_b != -catalan(n - 1) or alt_a != 0:
        raise ConsistencyError(f"row-sum identity failed at n={n}")
    return RowSums(sum_b=sum_b, sum_a=sum_a, alt_b=alt_b, alt_a=alt_a)


@dataclass(frozen=True)
class QuarterSums:
    """Integers clearing the denominators of the (+-1/4)-weighted row sums.

    a(n) =  4^n     sum_k B[n][k] (1/4)^k          (n >= 1)
    b(n) =  4^(n+1) sum_k A[n][k] (1/4)^k          (n >= 0)
    d(n) = -(-4)^n  sum_k B[n][k] (-1/4)^k         (n >= 1; alternates in sign)
    e(n) = -4^(n+1) sum_k A[n][k] (-1/4)^k         (n >= 0)

    ``a`` and ``d`` are None at n = 0 where the B row is empty.
    """

    a: int | None
    b: int
    d: int | None
    e: int


def quarter_weighted_row_sums(n: int) -> QuarterSums:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    row_a = triangle_row(TriangleKind.A, n)
    quarter = Fraction(1, 4)
    s_a = sum(v * quarter**k for k, v in enumerate(row_a, start=1))
    s_am = sum(v * (-quarter) ** k for k, v in enumerate(row_a, start=1))
    b = 4 ** (n + 1) * s_a
    e = -(4 ** (n + 1)) * s_am
    if n == 0:
        for name, v in (("b", b), ("e", e)):
            if v.denominator != 1:
                raise ConsistencyError(f"{name}({n}) = {v} is not an integer")
        return QuarterSums(a=None, b=int(b), d=None, e=int(e))
    row_b = triangle_row(TriangleKind.B, n)
    s_b = sum(v * quarter**k for k, v in enumerate(row_b, start=1))
    s_bm = sum(v * (-quarter) ** k for k, v in enumerate(row_b, start=1))
    a = 4**n * s_b
    d = -((-4) ** n) * s_bm
    for name, v in (("a", a), ("b", b), ("d", d), ("e", e)):
        if v.denominator != 1:
            raise ConsistencyError(f"{name}({n}) = {v} is not an integer")
    return QuarterSums(a=int(a), b=int(b), d=int(d), e=int(e))


def asymptotic_ratio(kind: TriangleKind, n: int, k: int) -> float:
    """Exact triangle entry divided by its n -> infinity growth law.

    The law is 4^n k / (sqrt(pi) n^(3/2)) for B and 4^n (2k-1) / (sqrt(pi) n^(3/2))
    for A; the ratio tends to 1.  Computed as exp(log(exact) - log(law)) so that
    n in the thousands does not overflow doubles.
    """
    entry = triangle_entry(kind, n, k)
    weight = k if kind is TriangleKind.B else 2 * k - 1
    log_law = n * math.log(4.0) + math.log(weight) - 0.5 * math.log(math.pi) - 1.5 * math.log(n)
    return math.exp(math.log(entry) - log_law)

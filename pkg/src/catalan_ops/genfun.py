"""Scalar Catalan generating functions on the closed disk of radius 1/4.

All closed forms use the principal square-root branch (cut along the negative
real axis), fixed by the normalization C(0) = 1.  Forms with a removable
singularity at the origin are rewritten with the conjugate of the square root
so they are exact there and lose no precision nearby:

    C(z)   = (1 - sqrt(1-4z)) / (2z)            = 2 / (1 + sqrt(1-4z))
    C_e(y) = (sqrt(1+4y) - sqrt(1-4y)) / (4y)   = 2 / (sqrt(1+4y) + sqrt(1-4y))
    C^{a,b}(z) = (1 - sqrt(1-za)) / (bz)        = a / (b (1 + sqrt(1-za)))

Arguments with modulus beyond 1/4 (resp. |az| > 1 for the generalized form)
raise DomainError: the series and all norm statements live on the closed disk
and no analytic continuation is offered.
"""

from __future__ import annotations

import cmath
import functools
import math

from .combinatorics import catalan_iter
from .errors import DomainError, SingularityError

DISK_RADIUS = 0.25

# measured eigenvalues of matrices on the spectral boundary overshoot by a few ulp
_DISK_SLACK = 1e-12


def _require_disk(z: complex, name: str = "z") -> complex:
    z = complex(z)
    if not (cmath.isfinite(z)):
        raise DomainError(f"{name} must be finite, got {z}")
    if abs(z) > DISK_RADIUS * (1.0 + _DISK_SLACK):
        raise DomainError(f"|{name}| = {abs(z)} exceeds the disk radius 1/4")
    return z


def catalan_gf(z: complex) -> complex:
    """Catalan generating function C(z) = sum C_n z^n for |z| <= 1/4.

    Satisfies z C(z)^2 - C(z) + 1 = 0 and C(0) = 1, C(1/4) = 2,
    C(-1/4) = 2 (sqrt(2) - 1).
    """
    z = _require_disk(z)
    return 2.0 / (1.0 + cmath.sqrt(1.0 - 4.0 * z))


@functools.lru_cache(maxsize=8)
def _folded_catalan(terms: int) -> tuple[float, ...]:
    return tuple(cn / 4**n for n, cn in enumerate(catalan_iter(terms)))


def catalan_series(z: complex, terms: int) -> complex:
    """Truncated series sum_{n < terms} C_n z^n (oracle route, no closed form).

    Terms are accumulated as (C_n / 4^n) (4z)^n so arbitrarily many of them
    stay inside double range on the closed disk.
    """
    z4 = 4.0 * complex(z)
    total = 0j
    p = 1.0 + 0j
    for s in _folded_catalan(terms):
        total += s * p
        p *= z4
    return total


def catalan_tail_bound(n: int) -> float:
    """Certified bound on sum_{m > n} C_m / 4^m.

    C_m / 4^m <= 1 / (sqrt(pi) m^(3/2)), so the tail is below 2 / (sqrt(pi) sqrt(n)).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2.0 / (math.sqrt(math.pi) * math.sqrt(n))


def resolvent_scalar(lam: complex, z: complex) -> complex:
    """1 / (lam - C(z)) evaluated through the closed form

        (lam z - 1 + z C(z)) / (lam^2 z - lam + 1).

    Singular exactly when lam^2 z - lam + 1 = 0, i.e. lam is C(z) or its
    conjugate root 1 / (z C(z)).
    """
    z = _require_disk(z)
    lam = complex(lam)
    c = catalan_gf(z)
    den = lam * lam * z - lam + 1.0
    scale = abs(lam) ** 2 * abs(z) + abs(lam) + 1.0
    if abs(den) < 1e-13 * scale:
        raise SingularityError(f"lam = {lam} is a root of lam^2 z - lam + 1 at z = {z}")
    return (lam * z - 1.0 + z * c) / den


def even_odd_gf(lam: complex) -> tuple[complex, complex]:
    """(C_e(lam), C_o(lam)): even- and odd-index halves of the Catalan series.

    C_e(y) = sum C_{2n} y^{2n},  C_o(y) = sum C_{2n+1} y^{2n+1};
    C_e + C_o = C, C_e is even and C_o is odd.  Both are computed from
    cancellation-free forms (see module docstring); C_o uses

        C_o(y) = 8y / ((2 + s)(1 + sqrt(1 - 16 y^2))),  s = sqrt(1+4y) + sqrt(1-4y),

    which is exact at y = 0.
    """
    lam = _require_disk(lam, "lam")
    s = cmath.sqrt(1.0 + 4.0 * lam) + cmath.sqrt(1.0 - 4.0 * lam)
    ce = 2.0 / s
    co = 8.0 * lam / ((2.0 + s) * (1.0 + cmath.sqrt(1.0 - 16.0 * lam * lam)))
    return ce, co


def bivariate_p(z: complex, w: complex) -> complex:
    """P(z, w) = sum_n P_n(z) w^n = (C(w) - (z+1)) / (w (1+z)^2 - z).

    Defined for |w| <= 1/4, |z| < 1 away from the excluded set w (1+z)^2 = z,
    where the closed form degenerates.  P(z, 0) = 1 and P(0, w) = C(w)^2
    (stable special case of (C(w) - 1)/w).
    """
    w = _require_disk(w, "w")
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"|z| = {abs(z)} must be < 1")
    if w == 0:
        return 1.0 + 0j
    c = catalan_gf(w)
    if z == 0:
        return c * c
    den = w * (1.0 + z) ** 2 - z
    if abs(den) < 1e-13 * (abs(w) * (1.0 + abs(z)) ** 2 + abs(z)):
        raise SingularityError(f"w (1+z)^2 = z at (z={z}, w={w})")
    return (c - (z + 1.0)) / den


def bivariate_q(z: complex, w: complex) -> complex:
    """Q(z, w) = sum_n Q_n(z) w^n = P(z, w) (z + 1)."""
    return bivariate_p(z, w) * (complex(z) + 1.0)


def generalized_gf(a: complex, b: complex, z: complex) -> complex:
    """C^{a,b}(z) = (1 - sqrt(1 - za)) / (bz) for b != 0, |az| <= 1.

    Equals (a / 2b) C(az / 4) and solves (bz/2) y^2 - y + a/(2b) = 0.
    The value at z = 0 is the series limit a / (2b).
    """
    a, b, z = complex(a), complex(b), complex(z)
    if b == 0:
        raise DomainError("b must be nonzero")
    if abs(a * z) > 1.0 + _DISK_SLACK:
        raise DomainError(f"|az| = {abs(a * z)} must be <= 1")
    return a / (b * (1.0 + cmath.sqrt(1.0 - z * a)))

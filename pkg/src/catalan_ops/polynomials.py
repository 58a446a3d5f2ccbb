"""Dense integer-coefficient polynomials.

Coefficients are stored in ascending degree order, so ``IntPolynomial((5, 4, 1))``
is ``5 + 4z + z^2``.  Arithmetic is exact (Python ints); evaluation works for any
scalar that supports ``+`` and ``*`` with ints (int, Fraction, float, complex).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __call__(self, x):
        """Evaluate by Horner's scheme; exact when x is int or Fraction."""
        acc = 0 * x  # zero of the scalar type
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        oc = (other,) if isinstance(other, int) else other.coeffs
        return IntPolynomial(
            a + b for a, b in itertools.zip_longest(self.coeffs, oc, fillvalue=0)
        )

    __radd__ = __add__

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        oc = (other,) if isinstance(other, int) else other.coeffs
        return IntPolynomial(
            a - b for a, b in itertools.zip_longest(self.coeffs, oc, fillvalue=0)
        )

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, j: int) -> IntPolynomial:
        """Multiply by z^j."""
        return IntPolynomial((0,) * j + self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "IntPolynomial('0')"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                z = "z" if i == 1 else f"z^{i}"
                term = z if mag == 1 else f"{mag}{z}"
            parts.append(f"{sign} {term}" if parts else f"{sign}{term}")
        return f"IntPolynomial('{' '.join(parts)}')"


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
Z = IntPolynomial((0, 1))

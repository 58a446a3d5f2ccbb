"""Catalan triangles, the weighted 1/4^n convolution algebra, and the
Catalan generating-function calculus for complex matrices.

Subpackages/modules:

- :mod:`catalan_ops.combinatorics` -- exact numbers, triangles, row polynomials
- :mod:`catalan_ops.genfun`        -- scalar generating functions on the quarter disk
- :mod:`catalan_ops.seq_algebra`   -- truncated convolution algebra, spectra, Abel sums
- :mod:`catalan_ops.operator_calculus` -- C(T) and its integer powers for matrices
- :mod:`catalan_ops.oeis`          -- b-file fixtures and cross-checks
- :mod:`catalan_ops.verify`        -- runnable verification suites
- :mod:`catalan_ops.cli`, :mod:`catalan_ops.service` -- command line and HTTP surfaces
"""

from .combinatorics import (
    TriangleKind,
    alpha,
    asymptotic_ratio,
    catalan,
    catalan_polynomial,
    quarter_weighted_row_sums,
    row_polynomial_p,
    row_polynomial_q,
    row_sum_identities,
    triangle_entry,
    triangle_row,
)
from .genfun import (
    bivariate_p,
    bivariate_q,
    catalan_gf,
    even_odd_gf,
    generalized_gf,
    resolvent_scalar,
)
from .operator_calculus import (
    CatalanOperator,
    PowerBoundCertificate,
    catalan_operator,
    catalan_power,
    catalan_power_jordan,
    certify_power_bounded,
    quadratic_residual,
    quadratic_solutions_diag,
    spectral_mapping_check,
)
from .polynomials import IntPolynomial
from .seq_algebra import (
    SpectrumCurve,
    WeightedSeq,
    catalan_inverse_power,
    catalan_seq,
    convolve,
    delta,
    seq_power,
    spectrum_point,
    triangle_seq,
    weighted_norm,
    z_transform,
)

__version__ = "0.1.0"

__all__ = [
    "TriangleKind", "alpha", "asymptotic_ratio", "catalan", "catalan_polynomial",
    "quarter_weighted_row_sums", "row_polynomial_p", "row_polynomial_q",
    "row_sum_identities", "triangle_entry", "triangle_row",
    "bivariate_p", "bivariate_q", "catalan_gf", "even_odd_gf", "generalized_gf",
    "resolvent_scalar",
    "CatalanOperator", "PowerBoundCertificate", "catalan_operator", "catalan_power",
    "catalan_power_jordan", "certify_power_bounded", "quadratic_residual",
    "quadratic_solutions_diag", "spectral_mapping_check",
    "IntPolynomial",
    "SpectrumCurve", "WeightedSeq", "catalan_inverse_power", "catalan_seq",
    "convolve", "delta", "seq_power", "spectrum_point", "triangle_seq",
    "weighted_norm", "z_transform",
    "__version__",
]

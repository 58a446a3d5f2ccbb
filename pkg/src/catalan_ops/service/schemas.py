"""Pydantic request/response models for the HTTP service.

Big integers are carried as decimal strings; matrices use the same
{d, re, im} row-major layout as the CLI JSON files.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator


class MatrixDoc(BaseModel):
    d: int = Field(ge=1, le=64)
    re: list[list[float]]
    im: list[list[float]]

    @field_validator("re", "im")
    @classmethod
    def square(cls, rows, info):
        d = info.data.get("d")
        if d is not None and (len(rows) != d or any(len(r) != d for r in rows)):
            raise ValueError(f"expected a {d}x{d} row-major array")
        return rows


class TriangleRow(BaseModel):
    n: int
    entries: list[str]


class TriangleResponse(BaseModel):
    kind: str
    rows: list[TriangleRow]


class SequencePowerRequest(BaseModel):
    k: int = Field(ge=0, le=64, description="number of convolution factors")
    length: int = Field(ge=0, le=4096, description="truncation order N")


class SequenceResponse(BaseModel):
    entries: list[str]


class SequenceInverseResponse(BaseModel):
    entries: list[str]
    norm_truncated: float
    norm_truncated_exact: str
    norm_limit: float
    norm_limit_exact: str


class PolynomialResponse(BaseModel):
    family: str
    n: int
    coefficients: list[str]


class OperatorEvalRequest(BaseModel):
    matrix: MatrixDoc
    power: int = 1
    tol: float = Field(default=1e-10, gt=0)


class OperatorEvalResponse(BaseModel):
    matrix: MatrixDoc


class ResidualRequest(BaseModel):
    matrix: MatrixDoc
    tol: float = Field(default=1e-10, gt=0)


class ResidualResponse(BaseModel):
    method: str
    truncation: int
    residual: float
    certificate_bound: float
    certificate_method: str
    value: MatrixDoc


class SpectralMapRequest(BaseModel):
    matrix: MatrixDoc
    power: int


class ComplexPair(BaseModel):
    re: float
    im: float


class SpectralMapResponse(BaseModel):
    power: int
    max_distance: float
    eigenvalues: list[ComplexPair]
    expected: list[ComplexPair]
    computed: list[ComplexPair]


class SpectrumSample(BaseModel):
    theta: float
    re: float
    im: float


class SpectrumResponse(BaseModel):
    power: int
    samples: list[SpectrumSample]


class VerifyCheck(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    checks: list[VerifyCheck]


class OeisCheckResponse(BaseModel):
    id: str
    count: int
    full_match: bool
    match_length: int
    shift: int
    first_mismatch: int | None

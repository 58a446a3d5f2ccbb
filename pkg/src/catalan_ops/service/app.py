"""FastAPI service wrapping the core package.

Run with ``uvicorn catalan_ops.service:app``.  Every endpoint is a stateless
computation; errors in the mathematical domain map to 400/422 responses.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import PlainTextResponse

from .. import combinatorics as comb
from .. import jsonio
from .. import oeis
from .. import operator_calculus as oc
from .. import seq_algebra as sa
from .. import verify
from ..combinatorics import TriangleKind
from ..errors import CatalanOpsError
from . import schemas


def _matrix_in(doc: schemas.MatrixDoc):
    return jsonio.matrix_from_doc(doc.model_dump())


def _matrix_out(value) -> schemas.MatrixDoc:
    return schemas.MatrixDoc(**jsonio.matrix_to_doc(value))


def create_app() -> FastAPI:
    app = FastAPI(
        title="catalan-ops",
        description="Catalan triangles, the weighted 1/4^n convolution algebra, "
        "and the Catalan generating-function calculus for complex matrices.",
        version="0.1.0",
    )

    @app.exception_handler(CatalanOpsError)
    async def _domain_error(_, exc: CatalanOpsError):
        raise HTTPException(status_code=400, detail=str(exc))

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.get("/triangle/{kind}", response_model=schemas.TriangleResponse)
    def triangle(kind: str, rows: int = Query(ge=1, le=500)):
        if kind not in ("B", "A"):
            raise HTTPException(status_code=422, detail="kind must be 'B' or 'A'")
        tk = TriangleKind[kind]
        start = 1 if tk is TriangleKind.B else 0
        return schemas.TriangleResponse(
            kind=kind,
            rows=[
                schemas.TriangleRow(n=n, entries=[str(v) for v in comb.triangle_row(tk, n)])
                for n in range(start, rows + 1)
            ],
        )

    @app.get("/polynomials/{family}/{n}", response_model=schemas.PolynomialResponse)
    def polynomial(family: str, n: int):
        table = {
            "P": comb.row_polynomial_p,
            "Q": comb.row_polynomial_q,
            "catalan": comb.catalan_polynomial,
        }
        if family not in table:
            raise HTTPException(status_code=422, detail="family must be P, Q or catalan")
        if not 0 <= n <= 2000:
            raise HTTPException(status_code=422, detail="n must be in 0..2000")
        try:
            poly = table[family](n)
        except (ValueError, CatalanOpsError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return schemas.PolynomialResponse(
            family=family, n=n, coefficients=[str(c) for c in poly.coeffs]
        )

    @app.post("/seq/power", response_model=schemas.SequenceResponse)
    def seq_power(request: schemas.SequencePowerRequest):
        power = sa.seq_power(sa.catalan_seq(request.length), request.k)
        return schemas.SequenceResponse(entries=[str(v) for v in power.entries])

    @app.post("/seq/inverse", response_model=schemas.SequenceInverseResponse)
    def seq_inverse(request: schemas.SequencePowerRequest):
        if request.k < 1:
            raise HTTPException(status_code=422, detail="k must be >= 1")
        inv = sa.catalan_inverse_power(request.k, request.length)
        norm = sa.weighted_norm(inv)
        bound = sa.inverse_norm_bound(request.k)
        return schemas.SequenceInverseResponse(
            entries=[str(v) for v in inv.entries],
            norm_truncated=float(norm),
            norm_truncated_exact=f"{norm.numerator}/{norm.denominator}",
            norm_limit=float(bound),
            norm_limit_exact=f"{bound.numerator}/{bound.denominator}",
        )

    @app.post("/operator/evaluate", response_model=schemas.OperatorEvalResponse)
    def operator_evaluate(request: schemas.OperatorEvalRequest):
        t = _matrix_in(request.matrix)
        try:
            value = oc.catalan_power(t, request.power, request.tol)
        except CatalanOpsError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return schemas.OperatorEvalResponse(matrix=_matrix_out(value))

    @app.post("/operator/residual", response_model=schemas.ResidualResponse)
    def operator_residual(request: schemas.ResidualRequest):
        t = _matrix_in(request.matrix)
        try:
            op = oc.catalan_operator(t, request.tol)
        except CatalanOpsError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return schemas.ResidualResponse(
            method=op.method,
            truncation=op.truncation,
            residual=op.residual,
            certificate_bound=op.certificate.bound,
            certificate_method=op.certificate.method,
            value=_matrix_out(op.value),
        )

    @app.post("/operator/spectral-mapping", response_model=schemas.SpectralMapResponse)
    def operator_spectral_mapping(request: schemas.SpectralMapRequest):
        t = _matrix_in(request.matrix)
        try:
            report = oc.spectral_mapping_check(t, request.power)
        except CatalanOpsError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        pair = lambda v: schemas.ComplexPair(re=v.real, im=v.imag)  # noqa: E731
        return schemas.SpectralMapResponse(
            power=request.power,
            max_distance=report.max_distance,
            eigenvalues=[pair(v) for v in report.eigenvalues],
            expected=[pair(v) for v in report.expected],
            computed=[pair(v) for v in report.computed],
        )

    @app.get("/spectrum", response_model=schemas.SpectrumResponse)
    def spectrum(power: int, samples: int = Query(default=721, ge=2, le=100_000)):
        try:
            curve = sa.SpectrumCurve.sample(power, samples)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return schemas.SpectrumResponse(
            power=power,
            samples=[
                schemas.SpectrumSample(theta=t, re=p.real, im=p.imag)
                for t, p in zip(curve.thetas, curve.points)
            ],
        )

    @app.get("/spectrum.csv", response_class=PlainTextResponse)
    def spectrum_csv(power: int, samples: int = Query(default=721, ge=2, le=100_000)):
        try:
            return sa.SpectrumCurve.sample(power, samples).to_csv()
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.post("/verify/{suite}", response_model=schemas.VerifyResponse)
    def run_verify(suite: str):
        try:
            results = verify.run_suite(suite)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return schemas.VerifyResponse(
            suite=suite,
            passed=all(r.passed for r in results),
            checks=[
                schemas.VerifyCheck(name=r.name, passed=r.passed, detail=r.detail)
                for r in results
            ],
        )

    @app.get("/oeis/{seq_id}/check", response_model=schemas.OeisCheckResponse)
    def oeis_check(seq_id: str, count: int = Query(default=30, ge=1, le=200)):
        try:
            computed = oeis.local_values(seq_id, count)
        except KeyError:
            raise HTTPException(status_code=422, detail=f"no local generator for {seq_id}")
        try:
            report = oeis.compare(seq_id, computed)
        except CatalanOpsError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return schemas.OeisCheckResponse(
            id=seq_id,
            count=count,
            full_match=report.full_match,
            match_length=report.match_length,
            shift=report.shift,
            first_mismatch=report.first_mismatch,
        )

    return app


app = create_app()

"""FastAPI application exposing the engine over HTTP.

Every endpoint is a pure function of its request body; there is no
state, so responses are deterministic and instances need no coordination.
Engine errors map to 400 with a structured detail: {"kind", "message"}
plus "position" for parse errors.  Kinds: parse, domain, overflow,
non-monomial.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..derivative import NonMonomialSequenceError
from ..grammar import ParseError
from ..integers import multifactorial
from ..ops import compute_derivative, compute_sequence
from ..poly import ExponentOverflowError, PolynomialError
from ..verify import run_suite, suite_names
from .schemas import (
    DeriveRequest,
    DeriveResponse,
    HealthResponse,
    MultifactorialRequest,
    MultifactorialResponse,
    SeqItem,
    SeqRequest,
    SeqResponse,
    SuitesResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="gramcalc",
    version=__version__,
    description="Exact derivative calculus over substitution grammars.",
)

_ENGINE_ERRORS = (ParseError, PolynomialError, ValueError, IndexError, ZeroDivisionError)


def _bad_request(exc: Exception) -> HTTPException:
    if isinstance(exc, ExponentOverflowError):
        kind = "overflow"
    elif isinstance(exc, NonMonomialSequenceError):
        kind = "non-monomial"
    elif isinstance(exc, ParseError):
        kind = "parse"
    else:
        kind = "domain"
    detail: dict = {"kind": kind, "message": str(exc)}
    if isinstance(exc, ParseError):
        detail["position"] = exc.pos
    return HTTPException(status_code=400, detail=detail)


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.get("/suites", response_model=SuitesResponse)
def suites() -> SuitesResponse:
    return SuitesResponse(suites=list(suite_names()))


@app.post("/derive", response_model=DeriveResponse)
def derive_endpoint(request: DeriveRequest) -> DeriveResponse:
    try:
        poly = compute_derivative(request.grammar, request.expr, request.n, request.word)
    except _ENGINE_ERRORS as exc:
        raise _bad_request(exc) from exc
    return DeriveResponse(text=poly.text(), terms=poly.to_json())


@app.post("/seq", response_model=SeqResponse)
def seq_endpoint(request: SeqRequest) -> SeqResponse:
    try:
        items = compute_sequence(request.grammar, request.expr, request.n_max, request.word)
    except _ENGINE_ERRORS as exc:
        raise _bad_request(exc) from exc
    return SeqResponse(
        items=[
            SeqItem(n=n, coeff=str(coeff), monomial=dict(mono.exps))
            for n, coeff, mono in items
        ]
    )


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(request: VerifyRequest) -> VerifyResponse:
    try:
        report = run_suite(request.suite, request.params)
    except _ENGINE_ERRORS as exc:
        raise _bad_request(exc) from exc
    return VerifyResponse.model_validate(report.to_json())


@app.post("/multifactorial", response_model=MultifactorialResponse)
def multifactorial_endpoint(request: MultifactorialRequest) -> MultifactorialResponse:
    try:
        value = multifactorial(request.n, request.r)
    except ValueError as exc:
        raise _bad_request(exc) from exc
    return MultifactorialResponse(n=request.n, r=request.r, value=str(value))

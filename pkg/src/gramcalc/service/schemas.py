"""Request and response models for the HTTP service.

Coefficients and multifactorial values travel as decimal strings:
they are exact big integers or reduced fractions, and JSON numbers
would silently lose precision past 2^53 in most clients.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class HealthResponse(BaseModel):
    status: str
    version: str


class SuitesResponse(BaseModel):
    suites: list[str]


class Term(BaseModel):
    coeff: str
    monomial: dict[str, int]


class DeriveRequest(BaseModel):
    grammar: str
    expr: str
    n: int = Field(default=1, ge=0)
    word: str | None = None


class DeriveResponse(BaseModel):
    text: str
    terms: list[Term]


class SeqRequest(BaseModel):
    grammar: str
    expr: str
    n_max: int = Field(ge=0)
    word: str | None = None


class SeqItem(BaseModel):
    n: int
    coeff: str
    monomial: dict[str, int]


class SeqResponse(BaseModel):
    items: list[SeqItem]


class VerifyRequest(BaseModel):
    suite: str
    params: dict[str, int | str] = Field(default_factory=dict)


class VerifyCase(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    params: dict[str, int | str]
    lhs: str
    rhs: str
    ok: bool = Field(alias="pass")


class VerifyResponse(BaseModel):
    suite: str
    passed: int
    failed: int
    cases: list[VerifyCase]


class MultifactorialRequest(BaseModel):
    n: int
    r: int


class MultifactorialResponse(BaseModel):
    n: int
    r: int
    value: str

"""Request and response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class EngineInfo(BaseModel):
    name: str
    version: str


class ApplyRequest(BaseModel):
    formula: str
    point: int | None = None


class ApplyResponse(BaseModel):
    degree: int
    cycles: str
    image: int | None = None


class GroupRequest(BaseModel):
    text: str = Field(description="generator file content: 'degree N' then 'label: <cycles|formula>' lines")
    base: list[int] | None = None
    budget: int = 2**24


class StabilizerInfo(BaseModel):
    fixed: list[int]
    order: str
    orbit_sizes: list[int]


class GroupResponse(BaseModel):
    degree: int
    labels: list[str]
    order: str
    transitivity: int
    values: str
    verdict: str
    min_support: int | None = None
    min_support_note: str = ""
    stabilizer: StabilizerInfo | None = None


class ClassifyRequest(BaseModel):
    p: int
    exhaustive: bool = False


class ClassifyRow(BaseModel):
    alignment: int
    exponent: int
    candidate: str
    order: str
    transitivity: int
    values: str
    verdict: str
    conjugate_of: int | None = None


class ClassifyResponse(BaseModel):
    case: str
    engine: EngineInfo
    rows: list[ClassifyRow]


class MinSupportRequest(BaseModel):
    text: str
    budget: int = 2**24


class MinSupportResponse(BaseModel):
    min_support: int | None = None
    note: str = ""


class ReproduceRequest(BaseModel):
    corpus: dict | None = None
    budget: int = 2**24


class CheckModel(BaseModel):
    id: str
    expected: str
    computed: str
    match: bool
    note: str = ""


class ReproduceResponse(BaseModel):
    ok: bool
    engine: EngineInfo
    checks: list[CheckModel]

"""Request and response bodies for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str


class GrassmannianRequest(BaseModel):
    n: int = 7


class ParametersOut(BaseModel):
    v: int
    b: int
    r: int | None
    k: int | None
    regular: bool
    linear: bool
    binomial: bool


class StructurePointOut(BaseModel):
    id: int
    label: str


class StructureOut(BaseModel):
    schema_version: int = Field(default=1, serialization_alias="schema")
    points: list[StructurePointOut]
    lines: list[list[int]]


class GrassmannianResponse(BaseModel):
    schema_version: int = Field(default=1, serialization_alias="schema")
    n: int
    name: str
    parameters: ParametersOut
    structure: StructureOut


class HyperplanesRequest(BaseModel):
    n: int = 7
    oracle: bool = False


class HyperplaneOut(BaseModel):
    partition: str | None
    points: list[str]


class HyperplanesResponse(BaseModel):
    schema_version: int = Field(default=1, serialization_alias="schema")
    n: int
    count: int
    method: str
    hyperplanes: list[HyperplaneOut]


class VeldkampRequest(BaseModel):
    n: int = 7


class VeldkampResponse(BaseModel):
    schema_version: int = Field(default=1, serialization_alias="schema")
    n: int
    points: int
    lines: int
    census: dict | None


class PolarRequest(BaseModel):
    n: int = 7
    what: str


class PolarResponse(BaseModel):
    schema_version: int = Field(default=1, serialization_alias="schema")
    n: int
    kind: str
    points: list[str]
    lines: list[list[str]]
    details: dict


class MagicLineRequest(BaseModel):
    n: int = 7
    pivot: int | None = None
    all: bool = False


class SectorOut(BaseModel):
    points: list[str]
    lines: list[list[str]]


class CheckOut(BaseModel):
    name: str
    ok: bool
    detail: str


class ReportOut(BaseModel):
    name: str
    ok: bool
    checks: list[CheckOut]
    data: dict


class MagicLineOut(BaseModel):
    pivot: int
    vertex: str
    sectors: dict[str, SectorOut]
    cone_induced_line_count: int
    ok: bool
    reports: list[ReportOut]


class MagicLineResponse(BaseModel):
    schema_version: int = Field(default=1, serialization_alias="schema")
    n: int
    decompositions: list[MagicLineOut]


class VerifyAllResponse(BaseModel):
    schema_version: int = Field(default=1, serialization_alias="schema")
    ok: bool
    checks: list[CheckOut]
    export: dict


class DotRequest(BaseModel):
    n: int = 7
    which: str = "grassmannian"
    pivot: int | None = None

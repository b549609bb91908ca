"""Request and response bodies for the HTTP API.

Meshes, chains, cochains, paths and weights travel as the same text formats
the CLI reads and writes, so a response body can be saved to a file and fed
straight back into another call.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class GenRequest(BaseModel):
    name: str
    q: int | None = None


class GenResponse(BaseModel):
    mesh: str


class ValidateRequest(BaseModel):
    mesh: str


class ValidateResponse(BaseModel):
    ok: bool
    witness: str | None
    n0: int
    n1: int
    n2: int
    n3: int
    euler_characteristic: int


class HomologyRequest(BaseModel):
    mesh: str
    dim: int = Field(ge=0, le=3)


class HomologyResponse(BaseModel):
    betti: int
    representatives: list[str]


class CocycleRequest(BaseModel):
    mesh: str
    chain: str
    method: str = "fast"


class CocycleResponse(BaseModel):
    cochain: str


class IntersectRequest(BaseModel):
    mesh: str
    chain_a: str
    chain_b: str


class IntersectResponse(BaseModel):
    value: int


class IndexRequest(BaseModel):
    mesh: str
    chain: str


class IndexResponse(BaseModel):
    rank: int
    bits: list[int]


class HomologousRequest(BaseModel):
    mesh: str
    chain_a: str
    chain_b: str


class HomologousResponse(BaseModel):
    homologous: bool


class MinpathRequest(BaseModel):
    mesh: str
    path: str
    weights: str | None = None
    max_nodes: int | None = None


class MinpathResponse(BaseModel):
    path: str
    weight: float


class ErrorBody(BaseModel):
    code: str
    detail: str

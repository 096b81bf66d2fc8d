"""Pydantic request/response models for the classification service.

Rationals travel as exact strings ("a" or "a/b"); weight inputs use
fundamental-weight coordinates of the finite part plus the level, the
smallest unambiguous surface.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class WeightModel(BaseModel):
    finite: List[str]
    level: str
    delta: str
    fundamental: List[str]


class RealRootModel(BaseModel):
    alpha: List[str]
    n: int


class LevelCheckRequest(BaseModel):
    type: str = Field(description="Lie type label, e.g. B2")
    level: str = Field(description='exact rational level, e.g. "-1/2"')


class LevelCheckResponse(BaseModel):
    type: str
    level: str
    admissible: bool
    p: int
    q: int
    case_gcd: int
    min_numerator: int
    reason: Optional[str] = None


class RootDataRequest(BaseModel):
    type: str


class RootDataResponse(BaseModel):
    type: str
    family: str
    rank: int
    roots: List[List[str]]
    simple_roots: List[List[str]]
    positive_roots: List[List[str]]
    form: List[List[str]]
    h: int
    h_dual: int
    lacing: int
    cartan_matrix: List[List[int]]
    theta: List[str]
    theta_s: List[str]
    rho: List[str]
    fundamental_weights: List[List[str]]
    fundamental_coweights: List[List[str]]


class EnumerateRequest(BaseModel):
    type: str
    level: str
    verbose: bool = False


class EnumerateResponse(BaseModel):
    type: str
    level: str
    p: int
    q: int
    case_gcd: int
    dominant_count: int
    total_count: int
    twist_count: int
    dominant: List[WeightModel]
    weights: List[WeightModel]
    multiplicities: Optional[List[int]] = None


class ClassifyRequest(BaseModel):
    type: str
    level: str
    weight: List[str] = Field(
        description="fundamental-weight coordinates of the finite part"
    )


class FailureModel(BaseModel):
    check: str
    witness: Dict[str, object]


class ClassifyResponse(BaseModel):
    weight: WeightModel
    is_module: bool
    admissible: bool
    integral_system: str
    failures: List[FailureModel]


class ReduceRequest(BaseModel):
    type: str
    level: str
    weight: List[str]


class ReductionRowModel(BaseModel):
    index: int
    level_i: str
    h_value: str
    sl2_admissible: bool


class ReduceResponse(BaseModel):
    type: str
    level: str
    rows: List[ReductionRowModel]


class OrbitRequest(BaseModel):
    type: str
    level: str
    weight: List[str]
    moves: List[str] = Field(
        description='generator names: "s0".."sl", "t1".."tl", "d<perm>"'
    )


class OrbitStepModel(BaseModel):
    move: str
    applied: bool
    weight: Optional[WeightModel] = None
    blocking_root: Optional[RealRootModel] = None
    blocking_pairing: Optional[str] = None


class OrbitResponse(BaseModel):
    ok: bool
    start: WeightModel
    steps: List[OrbitStepModel]

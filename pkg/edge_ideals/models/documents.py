from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, StrictBool, StrictInt


# Pydantic models for the JSON documents read and written by the toolkit
class GraphDocument(BaseModel):
    """Canonical weighted oriented graph input"""
    model_config = ConfigDict(extra="forbid")

    n: StrictInt = Field(..., ge=0, description="Vertex count; vertices are 1..n")
    edges: List[Tuple[StrictInt, StrictInt]] = Field(default_factory=list, description="Directed edges [from, to]")
    weights: List[StrictInt] = Field(default_factory=list, description="Vertex weights, one per vertex")


class ComplexDocument(BaseModel):
    """Simplicial complex stored by its facets"""
    n: StrictInt = Field(..., ge=0)
    facets: Optional[List[List[int]]] = None
    void: Optional[StrictBool] = None


class IdealDocument(BaseModel):
    """Monomial ideal stored by its minimal generators, graded-lex sorted"""
    n: StrictInt = Field(..., ge=0)
    gens: List[List[StrictInt]] = Field(default_factory=list)


class BettiEntryDocument(BaseModel):
    i: int
    degree: List[int]
    rank: int


class WitnessDocument(BaseModel):
    kind: Literal["betti", "colon"]
    index: Optional[int] = None
    degree: Optional[List[int]] = None
    monomial: Optional[List[int]] = None


class CMReportDocument(BaseModel):
    """Verdict of the Cohen-Macaulay oracle"""
    depth: int
    depth_colon: Optional[int] = None
    dim: int
    pd: int
    cm: bool
    method: str
    field: str
    unmixed: Optional[bool] = None
    embedded_primes: Optional[bool] = None
    witness: Optional[WitnessDocument] = None


class ReasonDocument(BaseModel):
    kind: str
    value: Optional[int] = None
    vertices: Optional[List[int]] = None


class VerdictDocument(BaseModel):
    """Structural verdict of one of the characterization theorems, with its oracle"""
    theorem: str
    t: Union[int, Literal["all"]]
    structural: bool
    reasons: List[ReasonDocument] = Field(default_factory=list)
    oracle: Optional[Dict[str, Any]] = None
    direct: Optional[bool] = None
    witness: Optional[List[int]] = None
    agreement: Optional[bool] = None
    cm: Optional[bool] = None
    failures: Optional[List[int]] = None
    notes: Optional[Dict[str, Any]] = None

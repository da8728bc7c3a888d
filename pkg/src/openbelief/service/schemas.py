"""Pydantic request/response models for the HTTP service.

Requests carry the raw evidence document text (the same bytes a .evj file
holds) so parsing, validation, and error locations stay server-side.
"""

from typing import Literal

from pydantic import BaseModel, Field

from ..combination import Rule
from ..conflict import ConflictModel

MetricName = Literal["k", "jousselme", "betp-dist"]
ExperimentName = Literal["table1", "fig1", "fig2", "fig4"]
TableFormat = Literal["csv", "json"]


class MassEntry(BaseModel):
    focal: list[str]
    mass: float


class BodySummary(BaseModel):
    id: str
    classical: bool
    empty_set_mass: float
    masses: list[MassEntry]


class DocumentRequest(BaseModel):
    document: str = Field(description="Raw evidence document text (.evj JSON)")
    renormalize: bool = False


class ValidateResponse(BaseModel):
    frame: list[str]
    bodies: list[BodySummary]


class CombineRequest(DocumentRequest):
    rule: Rule
    bodies: list[str] = Field(min_length=2)


class CombineResponse(BaseModel):
    rule: Rule
    conflict: float
    masses: list[MassEntry]


class SubsetRequest(DocumentRequest):
    body: str
    subset: list[str] = Field(default_factory=list)


class ValueResponse(BaseModel):
    value: float


class PignisticRequest(DocumentRequest):
    body: str


class PignisticResponse(BaseModel):
    probabilities: dict[str, float]


class MeasureRequest(DocumentRequest):
    metric: MetricName
    bodies: list[str] = Field(min_length=2, max_length=2)


class MeasureResponse(BaseModel):
    metric: MetricName
    value: float


class ConflictRequest(DocumentRequest):
    model: ConflictModel
    bodies: list[str] = Field(min_length=2, max_length=2)
    epsilon: float


class ConflictResponse(BaseModel):
    model: ConflictModel
    coefficient: float
    distance: float
    epsilon: float
    in_conflict: bool
    verdict: str


class SweepRequest(BaseModel):
    experiment: ExperimentName
    step: float = 0.1
    format: TableFormat = "csv"

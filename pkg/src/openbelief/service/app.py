"""FastAPI service wrapping the core package.

Domain errors map to 400, document parse/validation errors to 422, so a
client can tell "your evidence is malformed" apart from "this operation is
undefined for that evidence".
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .. import __version__
from ..combination import Rule, combine_sequence, conflict_coefficient, gbel, gpl
from ..conflict import (
    ConflictModel,
    generalized_cf,
    judge_conflict,
    liu_cf,
    modified_cf,
)
from ..distances import gbpa_distance
from ..documents import EvidenceDocument, emit_table, parse_evidence_document
from ..errors import DocumentError, EvidenceError
from ..experiments import EXPERIMENT_COLUMNS, run_experiment
from ..frames import Gbpa
from ..transforms import betp, dif_betp
from . import schemas

_CONFLICT_MODELS = {
    ConflictModel.LIU: liu_cf,
    ConflictModel.MODIFIED: modified_cf,
    ConflictModel.GENERALIZED: generalized_cf,
}


def _parse(request: schemas.DocumentRequest) -> EvidenceDocument:
    override = True if request.renormalize else None
    return parse_evidence_document(request.document, renormalize=override)


def _mass_entries(gbpa: Gbpa) -> list[schemas.MassEntry]:
    return [
        schemas.MassEntry(focal=list(subset.members()), mass=mass)
        for subset, mass in gbpa.items()
    ]


def create_app() -> FastAPI:
    app = FastAPI(
        title="openbelief",
        version=__version__,
        description=(
            "Open-world belief functions over HTTP: validate evidence "
            "documents, combine bodies of evidence, evaluate belief and "
            "plausibility, transform to pignistic probabilities, measure "
            "distances and conflict, and run the bundled sweep experiments."
        ),
    )

    @app.exception_handler(EvidenceError)
    async def _evidence_error(_: Request, exc: EvidenceError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(DocumentError)
    async def _document_error(_: Request, exc: DocumentError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/healthz")
    async def healthz() -> dict[str, str]:
        return {"status": "ok", "version": __version__}

    @app.post("/validate", response_model=schemas.ValidateResponse)
    async def validate(request: schemas.DocumentRequest) -> schemas.ValidateResponse:
        document = _parse(request)
        return schemas.ValidateResponse(
            frame=list(document.frame.labels),
            bodies=[
                schemas.BodySummary(
                    id=body_id,
                    classical=gbpa.is_classical,
                    empty_set_mass=gbpa.empty_mass,
                    masses=_mass_entries(gbpa),
                )
                for body_id, gbpa in document.bodies
            ],
        )

    @app.post("/combine", response_model=schemas.CombineResponse)
    async def combine(request: schemas.CombineRequest) -> schemas.CombineResponse:
        document = _parse(request)
        bodies = [document.body(body_id) for body_id in request.bodies]
        if request.rule is Rule.DEMPSTER:
            open_world = [
                body_id
                for body_id, body in zip(request.bodies, bodies)
                if not body.is_classical
            ]
            if open_world:
                raise EvidenceError(
                    "Dempster's rule needs classical inputs, but these bodies "
                    f"carry empty-set mass: {', '.join(open_world)}; use the GCR"
                )
        outcome = combine_sequence(request.rule, bodies)
        return schemas.CombineResponse(
            rule=outcome.rule,
            conflict=outcome.conflict_k,
            masses=_mass_entries(outcome.result),
        )

    @app.post("/belief", response_model=schemas.ValueResponse)
    async def belief(request: schemas.SubsetRequest) -> schemas.ValueResponse:
        document = _parse(request)
        subset = document.frame.subset(request.subset)
        return schemas.ValueResponse(value=gbel(document.body(request.body), subset))

    @app.post("/plausibility", response_model=schemas.ValueResponse)
    async def plausibility(request: schemas.SubsetRequest) -> schemas.ValueResponse:
        document = _parse(request)
        subset = document.frame.subset(request.subset)
        return schemas.ValueResponse(value=gpl(document.body(request.body), subset))

    @app.post("/pignistic", response_model=schemas.PignisticResponse)
    async def pignistic(request: schemas.PignisticRequest) -> schemas.PignisticResponse:
        document = _parse(request)
        distribution = betp(document.body(request.body))
        return schemas.PignisticResponse(probabilities=distribution.as_mapping())

    @app.post("/measure", response_model=schemas.MeasureResponse)
    async def measure(request: schemas.MeasureRequest) -> schemas.MeasureResponse:
        document = _parse(request)
        m1, m2 = (document.body(body_id) for body_id in request.bodies)
        if request.metric == "k":
            value = conflict_coefficient(m1, m2)
        elif request.metric == "jousselme":
            value = gbpa_distance(m1, m2)
        else:
            value = dif_betp(m1, m2)
        return schemas.MeasureResponse(metric=request.metric, value=value)

    @app.post("/conflict", response_model=schemas.ConflictResponse)
    async def conflict(request: schemas.ConflictRequest) -> schemas.ConflictResponse:
        document = _parse(request)
        m1, m2 = (document.body(body_id) for body_id in request.bodies)
        measure = _CONFLICT_MODELS[request.model](m1, m2)
        verdict = judge_conflict(measure, request.epsilon)
        return schemas.ConflictResponse(
            model=measure.model,
            coefficient=measure.coefficient,
            distance=measure.distance,
            epsilon=verdict.epsilon,
            in_conflict=verdict.in_conflict,
            verdict="in conflict" if verdict.in_conflict else "not in conflict",
        )

    @app.post("/sweep")
    async def sweep(request: schemas.SweepRequest) -> Response:
        rows = run_experiment(request.experiment, request.step)
        data = emit_table(
            rows, request.format, columns=EXPERIMENT_COLUMNS[request.experiment]
        )
        media = "text/csv; charset=utf-8" if request.format == "csv" else "application/json"
        return Response(content=data, media_type=media)

    return app


app = create_app()

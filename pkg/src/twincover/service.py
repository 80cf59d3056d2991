"""HTTP service exposing the classifier ("twin-cover/1" JSON schema).

Endpoints mirror the CLI subcommands: POST /classify, /cover, /lift, /jsj
and /tabulate, plus GET /healthz.  Domain errors become HTTP 400 with a
body {"error": <code>, "detail": <message>}.  Tabulation can answer in JSON
or as RFC 4180 CSV (text/csv).
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel, ConfigDict, Field

from . import reports
from .errors import TwinCoverError


class PresentationRequest(BaseModel):
    presentation: str
    mirror: bool = False


class LiftRequest(BaseModel):
    alpha: int
    beta: int
    mirror: bool = False


class TabulateRequest(BaseModel):
    family: Literal["torus", "montesinos", "twobridge-lift"]
    max: Optional[int] = None
    max_alpha: Optional[int] = None
    max_b: Optional[int] = None
    verify: bool = False
    format: Literal["json", "csv"] = "json"


class _SchemaModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(
        default=reports.SCHEMA, alias="schema", serialization_alias="schema"
    )


class CoverPayload(BaseModel):
    fibers: list[list[int]]
    euler: str


class JsjPiecePayload(BaseModel):
    kind: str
    alpha: Optional[int] = None
    beta: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None


class JsjPayload(BaseModel):
    pieces: list[JsjPiecePayload]
    edges: list[list[int]]


class ClassifyResponse(_SchemaModel):
    presentation: str
    verdict: str
    condition: Optional[str] = None
    twin: Optional[str] = None
    twin_class: Optional[str] = None
    identified_as: Optional[str] = None
    cover: Optional[CoverPayload] = None
    jsj: Optional[JsjPayload] = None
    no_tn1_twins: Optional[bool] = None


class CoverResponse(_SchemaModel):
    presentation: str
    fibers: list[list[int]]
    euler: str


class LiftResponse(_SchemaModel):
    input: list[int]
    lifted: list[int]
    components: int
    linking_parity: int
    hyperbolic: bool


class JsjResponse(_SchemaModel):
    presentation: str
    pieces: list[JsjPiecePayload]
    edges: list[list[int]]


class TabulateResponse(_SchemaModel):
    family: str
    rows: list[dict[str, str]]


class HealthResponse(BaseModel):
    status: str = "ok"


def create_app() -> FastAPI:
    app = FastAPI(title="twincover", description=__doc__)

    @app.exception_handler(TwinCoverError)
    async def _domain_error(_request: Request, exc: TwinCoverError):
        return JSONResponse(status_code=400, content={"error": exc.code, "detail": str(exc)})

    @app.get("/healthz", response_model=HealthResponse)
    def healthz():
        return HealthResponse()

    @app.post(
        "/classify", response_model=ClassifyResponse, response_model_exclude_none=True
    )
    def classify(req: PresentationRequest):
        return reports.classify_report(req.presentation, req.mirror)

    @app.post("/cover", response_model=CoverResponse)
    def cover(req: PresentationRequest):
        return reports.cover_report(req.presentation, req.mirror)

    @app.post("/lift", response_model=LiftResponse)
    def lift(req: LiftRequest):
        return reports.lift_report(req.alpha, req.beta, req.mirror)

    @app.post("/jsj", response_model=JsjResponse, response_model_exclude_none=True)
    def jsj(req: PresentationRequest):
        return reports.jsj_report(req.presentation, req.mirror)

    @app.post("/tabulate", response_model=TabulateResponse)
    def tabulate(req: TabulateRequest):
        kwargs = dict(
            max_q=req.max,
            max_alpha=req.max_alpha,
            max_b=req.max_b,
            verify=req.verify,
        )
        if req.format == "csv":
            return PlainTextResponse(
                reports.tabulate_csv(req.family, **kwargs), media_type="text/csv"
            )
        return reports.tabulate_json(req.family, **kwargs)

    return app

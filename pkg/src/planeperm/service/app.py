"""FastAPI front end over the handlers.

Run with:  uvicorn planeperm.service.app:app
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import DomainError, ParseError, ResourceLimitError
from . import handlers, models

app = FastAPI(
    title="planeperm",
    description=(
        "Decompositions, bijections, statistics, exact counts, and exhaustive "
        "verification for 132-avoiding permutations and plane trees."
    ),
    version="0.1.0",
)


@app.exception_handler(ParseError)
async def _parse_error(_: Request, exc: ParseError) -> JSONResponse:
    body = models.ErrorBody(code="parse-error", message=str(exc))
    return JSONResponse(status_code=400, content=body.model_dump())


@app.exception_handler(DomainError)
async def _domain_error(_: Request, exc: DomainError) -> JSONResponse:
    body = models.ErrorBody(code="domain-error", message=str(exc))
    return JSONResponse(status_code=400, content=body.model_dump())


@app.exception_handler(ResourceLimitError)
async def _resource_error(_: Request, exc: ResourceLimitError) -> JSONResponse:
    body = models.ErrorBody(code="resource-limit", message=str(exc))
    return JSONResponse(status_code=413, content=body.model_dump())


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/decompose", response_model=models.DecomposeResponse)
def decompose(req: models.DecomposeRequest) -> models.DecomposeResponse:
    return handlers.handle_decompose(req)


@app.post("/map", response_model=models.MapResponse, response_model_exclude_none=True)
def map_object(req: models.MapRequest) -> models.MapResponse:
    return handlers.handle_map(req)


@app.post("/stats", response_model=models.StatsResponse, response_model_exclude_none=True)
def stats(req: models.StatsRequest) -> models.StatsResponse:
    return handlers.handle_stats(req)


@app.post("/count", response_model=models.CountResponse)
def count(req: models.CountRequest) -> models.CountResponse:
    return handlers.handle_count(req)


@app.post("/enumerate", response_model=models.EnumerateResponse)
def enumerate_objects(req: models.EnumerateRequest) -> models.EnumerateResponse:
    return handlers.handle_enumerate(req)


@app.post("/verify", response_model=models.VerifyResponse)
def verify(req: models.VerifyRequest) -> models.VerifyResponse:
    return handlers.handle_verify(req)

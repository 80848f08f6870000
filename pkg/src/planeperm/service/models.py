"""Pydantic request/response models shared by the HTTP API and the CLI."""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class LabeledNode(StrictModel):
    """Nested labelled plane tree; permutation-image roots carry null."""

    label: Optional[int] = None
    children: list["LabeledNode"] = Field(default_factory=list)


class AltNode(StrictModel):
    """Nested set-alternating tree with parity and star flags."""

    label: int
    parity: Literal["E", "O"]
    starred: bool = False
    children: list["AltNode"] = Field(default_factory=list)


class DecomposeRequest(StrictModel):
    method: Literal["ird", "drd", "vcis", "lde"]
    perm: str


class DecomposeResponse(StrictModel):
    kind: Literal["IRD", "DRD", "VCIS", "LDE"]
    segments: list[list[int]]
    positions: list[list[int]]
    distribution: list[int]


Bijection = Literal[
    "jr", "jr-inv", "phi", "phi-inv", "mirror", "level-switch", "alt-to-forest", "forest-to-alt"
]


class MapRequest(StrictModel):
    bijection: Bijection
    perm: Optional[str] = None
    tree: Optional[str] = None
    alt_tree: Optional[AltNode] = None
    forest: Optional[list[AltNode]] = None


class MapResponse(StrictModel):
    bijection: Bijection
    perm: Optional[str] = None
    tree: Optional[str] = None
    labeled_tree: Optional[LabeledNode] = None
    alt_tree: Optional[AltNode] = None
    forest: Optional[list[AltNode]] = None


class StatsRequest(StrictModel):
    tree: str
    what: Literal["heights", "rsw", "paths", "levels", "all"] = "all"


class StatsResponse(StrictModel):
    tree: str
    heights: Optional[list[int]] = None
    rsw_all: Optional[list[int]] = None
    rsw_internal: Optional[list[int]] = None
    rsw_leaves: Optional[list[int]] = None
    rsw_tree: Optional[int] = None
    left_paths: Optional[list[int]] = None
    right_paths: Optional[list[int]] = None
    internal_outdegrees: Optional[list[int]] = None
    even_degrees: Optional[list[int]] = None
    odd_outdegrees: Optional[list[int]] = None
    tree_height: Optional[int] = None


Formula = Literal[
    "binomial",
    "catalan",
    "narayana",
    "gen-narayana",
    "kappa",
    "bounded-compositions",
    "start-descents",
    "start-end-descents",
    "bounded-runs",
    "bounded-ir",
    "consec-pattern",
]


class CountRequest(StrictModel):
    formula: Formula
    n: Optional[int] = None
    i: Optional[int] = None
    j: Optional[int] = None
    k: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    h: Optional[int] = None
    l: Optional[int] = None
    m: Optional[int] = None
    t: Optional[int] = None
    w: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None


class CountResponse(StrictModel):
    formula: Formula
    params: dict[str, int]
    value: int


class EnumerateRequest(StrictModel):
    what: Literal["avoiders", "trees"]
    n: int
    filters: dict[str, str] = Field(default_factory=dict)
    limit: Optional[int] = None


class EnumerateResponse(StrictModel):
    what: str
    n: int
    count: int
    items: list[str]
    truncated: bool


class VerifyRequest(StrictModel):
    claim: str
    max_n: Optional[int] = None
    shards: int = 1
    bound: Optional[int] = None


class ReportPayload(StrictModel):
    claim: str
    n: int
    checked: int
    status: Literal["pass", "fail"]
    witnesses: list[dict]


class VerifyResponse(StrictModel):
    report: ReportPayload
    elapsed_seconds: float


class ErrorBody(StrictModel):
    code: Literal["domain-error", "parse-error", "resource-limit", "usage-error"]
    message: str

"""Request and response bodies for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

GraphFormat = Literal["auto", "family", "edgelist"]


class GraphRequest(BaseModel):
    graph: str
    format: GraphFormat = "auto"


class SolveRequest(GraphRequest):
    preorder: list[int] = Field(default_factory=list)
    first: Literal["auto", "alice", "bob"] = "auto"
    alice_passes: int = Field(0, ge=0)
    bob_passes: int = Field(0, ge=0)


class SolveResponse(BaseModel):
    quantity: str
    value: int
    best_move: Optional[Union[int, Literal["pass"]]] = None
    nodes: int
    memo_entries: int


class ColResponse(BaseModel):
    value: int


class GraphInfoResponse(BaseModel):
    vertices: int
    edges: list[tuple[int, int]]
    max_degree: int
    coloring_number: int


class ScoresRequest(GraphRequest):
    ordering: list[int] = Field(default_factory=list)


class ScoresResponse(BaseModel):
    scores: list[int]  # back score of each ordered vertex, in order
    current_max: int
    complete: bool
    unordered: list[int]
    final_score: Optional[int] = None  # set only when the ordering is complete


class VerifyRequest(BaseModel):
    suite: Literal["monotonicity", "skipping", "section3", "construction", "c5", "all"]
    max_n: Optional[int] = None
    samples: Optional[int] = None
    seed: int = 0
    jobs: int = Field(1, ge=1)


class ViolationModel(BaseModel):
    graph: str
    detail: str


class ReportModel(BaseModel):
    suite: str
    params: dict
    cases_run: int
    violations: list[ViolationModel]
    notes: list[str]
    result: Literal["pass", "fail"]
    elapsed_s: Optional[float] = None


class VerifyResponse(BaseModel):
    reports: list[ReportModel]
    passed: bool


class TransferRequest(GraphRequest):
    remove: int
    preorder: list[int] = Field(default_factory=list)  # labels in the full graph
    adversary: Literal["optimal", "exhaustive"] = "optimal"


class InvariantModel(BaseModel):
    ok: bool
    case: Optional[int] = None
    witness: Optional[int] = None
    detail: str


class TransferTurnModel(BaseModel):
    turn: int
    bob_move: Optional[int] = None
    bob_branch: Optional[str] = None
    interpreted: Optional[list[int]] = None
    invariant: Optional[InvariantModel] = None
    alice_move: Optional[int] = None
    alice_branch: Optional[str] = None
    real: list[int]
    imagined: list[int]
    ended: Optional[str] = None


class TransferResponse(BaseModel):
    removed: int
    score: Optional[int] = None  # single-game score; None for exhaustive audits
    max_score: Optional[int] = None  # worst line of an exhaustive audit
    bound: int  # companion-game value the scores must not exceed
    within_bound: bool
    blocked_choices: int
    substitutions: int
    lines: Optional[int] = None
    turns: list[TransferTurnModel]
    invariant_failures: int = 0
    bookkeeping_failures: int = 0

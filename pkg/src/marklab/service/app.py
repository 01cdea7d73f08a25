"""HTTP front end.

Thin translation layer: parse the request, call the library, shape the
response.  No game logic lives here.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import engine
from ..engine import PASS, GameSpec, Player, Starter
from ..graphs import ParseError, load_graph_text
from ..harness import run_suite
from ..ordering import back_score, check_ordering, coloring_number
from ..strategy import StrategyError
from ..transfer import (
    TransferError,
    audit_all_bob_lines,
    play_transfer_game,
)
from .schemas import (
    ColResponse,
    GraphInfoResponse,
    GraphRequest,
    InvariantModel,
    ReportModel,
    ScoresRequest,
    ScoresResponse,
    SolveRequest,
    SolveResponse,
    TransferRequest,
    TransferResponse,
    TransferTurnModel,
    VerifyRequest,
    VerifyResponse,
)

_STARTERS = {"auto": Starter.BY_PARITY, "alice": Starter.ALICE, "bob": Starter.BOB}


def _quantity(spec: GameSpec) -> str:
    if spec.alice_passes or spec.bob_passes:
        return "value"
    parity_mover = Player.ALICE if len(spec.preorder) % 2 == 0 else Player.BOB
    prefix = "sigma-gcol" if spec.preorder else "gcol"
    mover = spec.first_player()
    if mover is parity_mover:
        return prefix
    return prefix + ("_A" if mover is Player.ALICE else "_B")


def _turn_models(trace) -> list[TransferTurnModel]:
    out = []
    for t in trace:
        inv = None
        if t.invariant is not None:
            inv = InvariantModel(
                ok=t.invariant.ok,
                case=t.invariant.case,
                witness=t.invariant.witness,
                detail=t.invariant.detail,
            )
        out.append(
            TransferTurnModel(
                turn=t.turn,
                bob_move=t.bob_move,
                bob_branch=t.bob_branch,
                interpreted=None if t.interpreted is None else list(t.interpreted),
                invariant=inv,
                alice_move=t.alice_move,
                alice_branch=t.alice_branch,
                real=list(t.real),
                imagined=list(t.imagined),
                ended=t.ended,
            )
        )
    return out


def create_app() -> FastAPI:
    app = FastAPI(title="marklab", version="0.1.0")

    @app.exception_handler(ParseError)
    async def _parse_error(request: Request, exc: ParseError):
        return JSONResponse(
            status_code=400,
            content={
                "detail": {"message": str(exc), "line": exc.line, "col": exc.col}
            },
        )

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": {"message": str(exc)}})

    @app.exception_handler(TransferError)
    async def _transfer_error(request: Request, exc: TransferError):
        return JSONResponse(status_code=500, content={"detail": {"message": str(exc)}})

    @app.exception_handler(StrategyError)
    async def _strategy_error(request: Request, exc: StrategyError):
        return JSONResponse(status_code=500, content={"detail": {"message": str(exc)}})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/graph/info", response_model=GraphInfoResponse)
    def graph_info(req: GraphRequest) -> GraphInfoResponse:
        g = load_graph_text(req.graph, req.format)
        return GraphInfoResponse(
            vertices=g.n,
            edges=g.edges(),
            max_degree=g.max_degree,
            coloring_number=coloring_number(g),
        )

    @app.post("/col", response_model=ColResponse)
    def col(req: GraphRequest) -> ColResponse:
        g = load_graph_text(req.graph, req.format)
        return ColResponse(value=coloring_number(g))

    @app.post("/solve", response_model=SolveResponse)
    def solve(req: SolveRequest) -> SolveResponse:
        g = load_graph_text(req.graph, req.format)
        spec = GameSpec(
            g,
            tuple(req.preorder),
            _STARTERS[req.first],
            alice_passes=req.alice_passes,
            bob_passes=req.bob_passes,
        )
        result = engine.solve(spec)
        best: "int | str | None"
        if result.best_move is None:
            best = None
        elif result.best_move is PASS:
            best = "pass"
        else:
            best = result.best_move
        return SolveResponse(
            quantity=_quantity(spec),
            value=result.value,
            best_move=best,
            nodes=result.nodes,
            memo_entries=result.memo_entries,
        )

    @app.post("/ordering/scores", response_model=ScoresResponse)
    def ordering_scores(req: ScoresRequest) -> ScoresResponse:
        g = load_graph_text(req.graph, req.format)
        tau = tuple(req.ordering)
        check_ordering(g, tau)
        scores = [back_score(g, tau, v) for v in tau]
        current_max = max(scores, default=0)
        complete = len(tau) == g.n
        return ScoresResponse(
            scores=scores,
            current_max=current_max,
            complete=complete,
            unordered=sorted(set(range(g.n)) - set(tau)),
            final_score=current_max if complete else None,
        )

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        reports = run_suite(req.suite, req.max_n, req.samples, req.seed, req.jobs)
        models = [
            ReportModel(**r.to_json_dict(include_elapsed=True)) for r in reports
        ]
        return VerifyResponse(reports=models, passed=all(r.passed for r in reports))

    @app.post("/transfer", response_model=TransferResponse)
    def transfer(req: TransferRequest) -> TransferResponse:
        g = load_graph_text(req.graph, req.format)
        sigma = tuple(req.preorder)
        bound = engine.sigma_gcol(g, sigma)
        if req.adversary == "optimal":
            game = play_transfer_game(g, sigma, req.remove)
            return TransferResponse(
                removed=req.remove,
                score=game.score,
                max_score=None,
                bound=bound,
                within_bound=game.score <= bound,
                blocked_choices=game.blocked_choices,
                substitutions=game.substitutions,
                lines=None,
                turns=_turn_models(game.trace),
            )
        audit = audit_all_bob_lines(g, sigma, req.remove)
        within = (
            audit.clean and audit.max_score is not None and audit.max_score <= bound
        )
        return TransferResponse(
            removed=req.remove,
            score=None,
            max_score=audit.max_score,
            bound=bound,
            within_bound=within,
            blocked_choices=audit.blocked_choices,
            substitutions=audit.substitutions,
            lines=audit.lines,
            turns=_turn_models(audit.worst_trace or []),
            invariant_failures=len(audit.invariant_failures),
            bookkeeping_failures=len(audit.bookkeeping_failures),
        )

    return app


app = create_app()

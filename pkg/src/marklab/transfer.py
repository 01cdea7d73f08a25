"""Playing the game on G - x with a strategy for G.

The minimizer's moves on the vertex-deleted graph are produced by running a
companion game on the full graph: each opponent move is copied into the
companion ordering (or replaced by a minimum-degree stand-in when it already
appears there), the full-graph strategy is consulted, and a detour through
the removed vertex is taken whenever the strategy points at it.  Between the
two bookkeeping steps the companion and real orderings must agree up to the
removed vertex and at most one extra vertex; that set equation is checked
every turn and is the property the verification suites watch.

All orderings here carry full-graph labels; translation to the deleted
graph's dense labels happens only at the Strategy interface.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .engine import GameSpec, Player
from .graphs import Graph, delete_vertex
from .ordering import col_of_ordering
from .strategy import Strategy, StrategyError, optimal_strategy, position_from_history


class TransferError(RuntimeError):
    pass


class InvariantViolation(TransferError):
    """The companion/real set equation failed; message carries a state dump."""


class BookkeepingError(TransferError):
    """A stand-in was needed before any blocked choice placed the removed
    vertex, which the bookkeeping promises cannot happen."""


@dataclass(frozen=True)
class InvariantCheck:
    ok: bool
    case: int  # 1: removed vertex not yet in the companion order, 2: it is
    witness: "int | None"  # the single extra companion vertex in case 2
    detail: str


@dataclass(frozen=True)
class TurnRecord:
    turn: int
    bob_move: "int | None"
    bob_branch: "str | None"  # "first", "copy" or "substitute"
    interpreted: "tuple[int, ...] | None"
    invariant: "InvariantCheck | None"
    alice_move: "int | None"
    alice_branch: "str | None"  # "direct", "detour", "detour-end" or "last-vertex"
    real: tuple[int, ...]
    imagined: tuple[int, ...]
    ended: "str | None"  # "at-start", "before-interpret" or "after-move"


def to_h_label(x: int, v: int) -> int:
    return v if v < x else v - 1


def to_g_label(x: int, v: int) -> int:
    return v if v < x else v + 1


class TransferState:
    """One run of the companion-game bookkeeping for H = G - x.

    real is the ordering of the game actually being played on H, imagined
    the companion ordering on G after the minimizer's last move, and
    interpreted the companion ordering after folding in the opponent's
    latest move (only set between the two bookkeeping steps).
    """

    def __init__(self, graph: Graph, sigma, x: int, strategy: Strategy):
        graph._check(x)
        sigma = tuple(sigma)
        seen = set()
        for v in sigma:
            graph._check(v)
            if v in seen:
                raise ValueError(f"preorder repeats vertex {v}")
            seen.add(v)
        if x in seen:
            raise ValueError(f"removed vertex {x} appears in the preorder")
        self.graph = graph
        self.x = x
        self.sigma = sigma
        self.h_graph = delete_vertex(graph, x)
        self.spec_g = GameSpec(graph, sigma)
        self.strategy = strategy
        self.real: tuple[int, ...] = sigma
        self.imagined: tuple[int, ...] = sigma
        self.interpreted: "tuple[int, ...] | None" = None
        self.blocked_choices = 0
        self.substitutions = 0
        self.finished = False
        self.ended_by: "str | None" = None
        self.trace: list[TurnRecord] = []
        self._phase = "bob"
        self._turn = 0
        self._last_bob: "int | None" = None
        self._bob_branch: "str | None" = None
        if len(self.real) == graph.n - 1:
            self.finished = True
            self.ended_by = "at-start"

    def clone(self) -> "TransferState":
        new = TransferState.__new__(TransferState)
        for name in (
            "graph",
            "x",
            "sigma",
            "h_graph",
            "spec_g",
            "strategy",
            "real",
            "imagined",
            "interpreted",
            "blocked_choices",
            "substitutions",
            "finished",
            "ended_by",
            "_phase",
            "_turn",
            "_last_bob",
            "_bob_branch",
        ):
            setattr(new, name, getattr(self, name))
        new.trace = list(self.trace)
        return new

    def real_score(self) -> int:
        """Score of the finished real game, computed on the deleted graph."""
        if not self.finished:
            raise TransferError("the real game is not finished")
        tau_h = tuple(to_h_label(self.x, v) for v in self.real)
        return col_of_ordering(self.h_graph, tau_h)

    def dump(self) -> str:
        return (
            f"removed={self.x} sigma={self.sigma} real={self.real} "
            f"imagined={self.imagined} interpreted={self.interpreted}"
        )


def _min_degree_vertex(g: Graph, pool) -> int:
    return min(pool, key=lambda u: (g.degree(u), u))


def interpret_bob_move(state: TransferState, v: "int | None") -> TransferState:
    """Fold the opponent's latest real-game move (None when the minimizer
    opens the game) into the companion ordering."""
    if state.finished:
        raise TransferError("the game is already finished")
    if state._phase != "bob":
        raise TransferError("out of order: the minimizer's move is pending")
    g = state.graph
    first = state._turn == 0
    if v is None:
        if not first or len(state.sigma) % 2 != 0:
            raise TransferError("only the opening turn of a minimizer-first game has no opponent move")
    else:
        g._check(v)
        if v == state.x:
            raise ValueError(f"vertex {v} is the removed vertex")
        if v in state.real:
            raise ValueError(f"vertex {v} is already ordered in the real game")
        state.real = state.real + (v,)
    state._turn += 1
    state._last_bob = v
    if len(state.real) == g.n - 1:
        state.finished = True
        state.ended_by = "before-interpret"
        state.trace.append(
            TurnRecord(
                state._turn, v, None, None, None, None, None,
                state.real, state.imagined, "before-interpret",
            )
        )
        return state
    if v is None:
        interpreted = state.sigma
        branch = "first"
    elif v not in state.imagined:
        interpreted = state.imagined + (v,)
        branch = "copy"
    else:
        # The opponent's vertex already sits in the companion order, which
        # can only happen after a blocked choice placed the removed vertex
        # there; stand in a minimum-degree unplaced vertex.
        if state.x not in state.imagined:
            raise BookkeepingError(
                f"stand-in needed before any blocked choice: {state.dump()}"
            )
        state.substitutions += 1
        pool = [u for u in range(g.n) if u not in state.imagined]
        y = _min_degree_vertex(g, pool)
        interpreted = state.imagined + (y,)
        branch = "substitute"
    state.interpreted = interpreted
    state._bob_branch = branch
    state._phase = "alice"
    return state


def check_invariant(state: TransferState) -> InvariantCheck:
    """Companion-vs-real set equation; reports, never raises."""
    if state.interpreted is None:
        raise TransferError("no interpreted companion ordering to check")
    real_set = set(state.real)
    comp = set(state.interpreted) - {state.x}
    if state.x not in state.interpreted:
        if comp == real_set:
            return InvariantCheck(
                True, 1, None, "companion order matches the real order"
            )
        return InvariantCheck(
            False, 1, None,
            f"companion {sorted(comp)} differs from real {sorted(real_set)}",
        )
    extra = comp - real_set
    missing = real_set - comp
    if len(extra) == 1 and not missing:
        w = next(iter(extra))
        return InvariantCheck(
            True, 2, w, f"companion order leads by exactly one vertex ({w})"
        )
    return InvariantCheck(
        False, 2, None,
        f"extra {sorted(extra)}, missing {sorted(missing)}",
    )


def choose_alice_move(state: TransferState, strategy: "Strategy | None" = None) -> int:
    """Produce the minimizer's real-game move from the companion game and
    advance both orderings; returns the move in full-graph labels."""
    if state.finished:
        raise TransferError("the game is already finished")
    if state._phase != "alice":
        raise TransferError("out of order: the opponent's move must be folded in first")
    strategy = strategy if strategy is not None else state.strategy
    inv = check_invariant(state)
    if not inv.ok:
        raise InvariantViolation(f"{inv.detail}; {state.dump()}")
    g = state.graph
    x = state.x
    interp = state.interpreted
    unplaced = [u for u in range(g.n) if u not in interp]
    if set(unplaced) <= {x}:
        # everything but (possibly) the removed vertex is placed; the real
        # game has exactly one vertex left and ends with it
        remaining = [u for u in range(g.n) if u != x and u not in state.real]
        if len(remaining) != 1:
            raise TransferError(
                f"expected exactly one real vertex left, found {remaining}: {state.dump()}"
            )
        w = remaining[0]
        imagined = interp  # the companion game makes no further move
        branch = "last-vertex"
    else:
        a = _query(strategy, state, interp)
        if a != x:
            if a in state.real:
                raise TransferError(
                    f"strategy produced {a}, already ordered in the real game: {state.dump()}"
                )
            w = a
            imagined = interp + (a,)
            branch = "direct"
        else:
            # blocked choice: place the removed vertex in the companion
            # order and take a minimum-degree detour in the real game
            state.blocked_choices += 1
            pool = [u for u in unplaced if u != x]
            y = _min_degree_vertex(g, pool)
            if len(pool) == 1:
                w = y
                imagined = interp + (x, y)
                branch = "detour-end"
            else:
                z = _query(strategy, state, interp + (x, y))
                if z == x or z in state.real or z == y:
                    raise TransferError(
                        f"detour strategy produced unusable {z}: {state.dump()}"
                    )
                w = z
                imagined = interp + (x, y, z)
                branch = "detour"
    state.real = state.real + (w,)
    state.imagined = imagined
    ended = None
    if len(state.real) == g.n - 1:
        state.finished = True
        state.ended_by = "after-move"
        ended = "after-move"
    state.trace.append(
        TurnRecord(
            state._turn, state._last_bob, state._bob_branch, interp, inv,
            w, branch, state.real, state.imagined, ended,
        )
    )
    state.interpreted = None
    state._phase = "bob"
    return w


def _query(strategy: Strategy, state: TransferState, history) -> int:
    v = strategy.choose(state.spec_g, history)
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < state.graph.n or v in history:
        raise StrategyError(
            f"full-graph strategy returned illegal move {v!r} at {history}"
        )
    return v


def h_game_spec(graph: Graph, sigma, x: int) -> GameSpec:
    """The real game's spec: the deleted graph with the relabeled preorder."""
    sigma = tuple(sigma)
    if x in sigma:
        raise ValueError(f"removed vertex {x} appears in the preorder")
    return GameSpec(delete_vertex(graph, x), tuple(to_h_label(x, v) for v in sigma))


class TransferredStrategy(Strategy):
    """Minimizer strategy on G - x, derived from a strategy for G by
    replaying the queried history through the companion-game bookkeeping.

    Histories must follow this strategy's own play; a history that departs
    from it raises StrategyError with the divergence point.
    """

    def __init__(self, graph: Graph, sigma, x: int, inner: Strategy):
        super().__init__(Player.ALICE)
        self.full_graph = graph
        self.sigma = tuple(sigma)
        self.x = x
        self.inner = inner
        self.h_spec = h_game_spec(graph, sigma, x)

    def game_spec(self) -> GameSpec:
        return self.h_spec

    def choose(self, spec: GameSpec, history) -> int:
        if spec != self.h_spec:
            raise ValueError("strategy is bound to a different game")
        history = tuple(history)
        if len(history) == spec.graph.n:
            raise ValueError("the game is already over")
        p = position_from_history(spec, history)
        if p.to_move is not Player.ALICE:
            raise ValueError("not alice's turn")
        st = TransferState(self.full_graph, self.sigma, self.x, self.inner)
        first = spec.first_player()
        moves = history[len(spec.preorder):]
        pending: "int | None" = None
        for i, mv in enumerate(moves):
            mover = first if i % 2 == 0 else first.opponent
            g_mv = to_g_label(self.x, mv)
            if mover is Player.BOB:
                pending = g_mv
                continue
            interpret_bob_move(st, pending)
            pending = None
            if st.finished:
                raise StrategyError("history extends past the end of the game")
            w = choose_alice_move(st)
            if w != g_mv:
                raise StrategyError(
                    f"history departs from this strategy's play at move {i}: "
                    f"played {mv}, strategy plays {to_h_label(self.x, w)}"
                )
        interpret_bob_move(st, pending)
        if st.finished:
            raise ValueError("the game is already over")
        return to_h_label(self.x, choose_alice_move(st))


def transfer_strategy(
    graph: Graph, sigma, x: int, inner: "Strategy | None" = None
) -> TransferredStrategy:
    """Strategy for the game on G - x; inner defaults to the engine-optimal
    minimizer for the preordered game on G."""
    sigma = tuple(sigma)
    if inner is None:
        inner = optimal_strategy(GameSpec(graph, sigma), Player.ALICE)
    return TransferredStrategy(graph, sigma, x, inner)


@dataclass
class TransferGame:
    trace: list[TurnRecord]
    ordering: tuple[int, ...]  # real ordering in the deleted graph's labels
    score: int
    blocked_choices: int
    substitutions: int
    ended_by: str


def play_transfer_game(
    graph: Graph,
    sigma,
    x: int,
    inner: "Strategy | None" = None,
    bob_choose=None,
) -> TransferGame:
    """Play one full real game on G - x, the minimizer driven by the
    bookkeeping and the opponent by bob_choose(h_spec, history); the
    opponent defaults to engine-optimal play."""
    sigma = tuple(sigma)
    if inner is None:
        inner = optimal_strategy(GameSpec(graph, sigma), Player.ALICE)
    st = TransferState(graph, sigma, x, inner)
    h_spec = h_game_spec(graph, sigma, x)
    if bob_choose is None:
        bob_strategy = optimal_strategy(h_spec, Player.BOB)
        bob_choose = bob_strategy.choose
    if not st.finished and h_spec.first_player() is Player.ALICE:
        interpret_bob_move(st, None)
        if not st.finished:
            choose_alice_move(st)
    while not st.finished:
        h_history = tuple(to_h_label(x, v) for v in st.real)
        b = bob_choose(h_spec, h_history)
        if not isinstance(b, int) or isinstance(b, bool) or not 0 <= b < h_spec.graph.n:
            raise StrategyError(f"opponent returned illegal move {b!r}")
        g_b = to_g_label(x, b)
        if g_b in st.real:
            raise StrategyError(f"opponent repeated vertex {b}")
        interpret_bob_move(st, g_b)
        if not st.finished:
            choose_alice_move(st)
    return TransferGame(
        st.trace,
        tuple(to_h_label(x, v) for v in st.real),
        st.real_score(),
        st.blocked_choices,
        st.substitutions,
        st.ended_by,
    )


@dataclass
class TransferAudit:
    """Aggregate of the bookkeeping run against every opponent line."""

    max_score: "int | None"
    lines: int
    blocked_choices: int
    substitutions: int
    invariant_failures: list[str]
    bookkeeping_failures: list[str]
    worst_trace: "list[TurnRecord] | None"

    @property
    def clean(self) -> bool:
        return not self.invariant_failures and not self.bookkeeping_failures


def audit_all_bob_lines(
    graph: Graph, sigma, x: int, inner: "Strategy | None" = None
) -> TransferAudit:
    """Exhaust every opponent move sequence on G - x, checking the set
    equation on every turn, and report the worst final score."""
    sigma = tuple(sigma)
    if inner is None:
        inner = optimal_strategy(GameSpec(graph, sigma), Player.ALICE)
    st0 = TransferState(graph, sigma, x, inner)
    result = TransferAudit(None, 0, 0, 0, [], [], None)

    def finish_line(st: TransferState) -> None:
        score = st.real_score()
        result.lines += 1
        result.blocked_choices += st.blocked_choices
        result.substitutions += st.substitutions
        if result.max_score is None or score > result.max_score:
            result.max_score = score
            result.worst_trace = st.trace
        elif score == result.max_score and result.worst_trace is None:
            result.worst_trace = st.trace

    def bob_options(st: TransferState) -> list[int]:
        return [v for v in range(graph.n) if v != x and v not in st.real]

    def rec(st: TransferState, pending: "int | None") -> None:
        try:
            interpret_bob_move(st, pending)
            if not st.finished:
                choose_alice_move(st)
        except InvariantViolation as e:
            result.lines += 1
            result.invariant_failures.append(str(e))
            return
        except BookkeepingError as e:
            result.lines += 1
            result.bookkeeping_failures.append(str(e))
            return
        if st.finished:
            finish_line(st)
            return
        for b in bob_options(st):
            rec(st.clone(), b)

    if st0.finished:
        finish_line(st0)
    elif len(sigma) % 2 == 0:
        rec(st0, None)
    else:
        for b in bob_options(st0):
            rec(st0.clone(), b)
    return result

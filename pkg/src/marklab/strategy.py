"""Strategies as functions of the play history, play-out of two fixed
strategies, and worst-case evaluation of a minimizer strategy against every
opponent line.

Histories are complete orderings-so-far (preorder included) and never contain
passes, so everything here requires zero pass budgets.
"""

from __future__ import annotations

from .engine import GameSpec, Player, Position, Solver, initial_position
from .ordering import Ordering, col_of_ordering


class StrategyError(RuntimeError):
    """A strategy broke its contract; the message carries the history."""


def _require_no_passes(spec: GameSpec) -> None:
    if spec.alice_passes or spec.bob_passes:
        raise ValueError("history-based strategies assume games without passes")


def position_from_history(spec: GameSpec, history) -> Position:
    """Position reached after playing out history (which must extend the
    preorder); the mover alternates from ``spec.first_player``."""
    _require_no_passes(spec)
    g = spec.graph
    history = tuple(history)
    k = len(spec.preorder)
    if history[:k] != spec.preorder:
        raise ValueError("history must start with the preorder")
    ordered = 0
    cur = 0
    for v in history:
        g._check(v)
        if ordered >> v & 1:
            raise ValueError(f"history repeats vertex {v}")
        sc = (g.adj[v] & ordered).bit_count() + 1
        if sc > cur:
            cur = sc
        ordered |= 1 << v
    moves = len(history) - k
    to_move = spec.first_player() if moves % 2 == 0 else spec.first_player().opponent
    return Position(ordered, cur, to_move, 0, 0)


class Strategy:
    """Move chooser for one player, queried with the ordering so far."""

    positional = False  # True when the choice depends only on the position

    def __init__(self, owner: Player):
        self.owner = owner

    def choose(self, spec: GameSpec, history) -> int:
        raise NotImplementedError

    def choose_position(self, spec: GameSpec, position: Position) -> int:
        raise NotImplementedError(f"{type(self).__name__} is not positional")


class OptimalStrategy(Strategy):
    """Plays engine-optimal moves, sharing one memo table across queries."""

    positional = True

    def __init__(self, spec: GameSpec, owner: Player):
        _require_no_passes(spec)
        super().__init__(owner)
        self.spec = spec
        self._solver = Solver(spec)

    def choose(self, spec: GameSpec, history) -> int:
        if spec != self.spec:
            raise ValueError("strategy is bound to a different game")
        return self.choose_position(spec, position_from_history(spec, history))

    def choose_position(self, spec: GameSpec, position: Position) -> int:
        if position.to_move is not self.owner:
            raise ValueError(f"not {self.owner.value}'s turn")
        move = self._solver.best_move_from(position)
        if move is None:
            raise ValueError("the game is already over")
        return move  # zero pass budget, so always a vertex


def optimal_strategy(spec: GameSpec, owner: Player) -> OptimalStrategy:
    return OptimalStrategy(spec, owner)


class FunctionStrategy(Strategy):
    def __init__(self, owner: Player, fn):
        super().__init__(owner)
        self._fn = fn

    def choose(self, spec: GameSpec, history) -> int:
        return self._fn(spec, tuple(history))


def lowest_index_strategy(owner: Player) -> FunctionStrategy:
    """Always orders the smallest unordered vertex; a simple baseline."""

    def fn(spec, history):
        for v in range(spec.graph.n):
            if v not in history:
                return v
        raise ValueError("no vertices left to order")

    return FunctionStrategy(owner, fn)


def _checked_move(spec: GameSpec, history, player: Player, v) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < spec.graph.n or v in history:
        raise StrategyError(
            f"{player.value} returned illegal move {v!r} at history {tuple(history)}"
        )
    return v


def play_out(spec: GameSpec, alice: Strategy, bob: Strategy) -> tuple[Ordering, int]:
    """Run the game to the end; returns the complete ordering and its score."""
    _require_no_passes(spec)
    g = spec.graph
    history = tuple(spec.preorder)
    player = spec.first_player()
    while len(history) < g.n:
        strat = alice if player is Player.ALICE else bob
        v = _checked_move(spec, history, player, strat.choose(spec, history))
        history += (v,)
        player = player.opponent
    return history, col_of_ordering(g, history)


def worst_case_score(spec: GameSpec, alice: Strategy, method: str = "auto") -> int:
    """Maximum final score over every opponent line with alice's moves fixed.

    method "exhaustive" walks the whole opponent tree and scores each leaf
    from scratch; "positional" memoizes subtrees on (ordered set, running
    max) and needs a positional strategy; "auto" is exhaustive through 8
    vertices and positional beyond when available.
    """
    _require_no_passes(spec)
    if method == "auto":
        if spec.graph.n <= 8 or not alice.positional:
            method = "exhaustive"
        else:
            method = "positional"
    if method == "exhaustive":
        return _worst_case_exhaustive(spec, alice)
    if method == "positional":
        if not alice.positional:
            raise ValueError("positional evaluation needs a positional strategy")
        return _worst_case_positional(spec, alice)
    raise ValueError(f"unknown method {method!r}")


def _worst_case_exhaustive(spec: GameSpec, alice: Strategy) -> int:
    g = spec.graph
    n = g.n

    def walk(history: tuple[int, ...], player: Player) -> int:
        if len(history) == n:
            return col_of_ordering(g, history)
        if player is Player.ALICE:
            v = _checked_move(spec, history, Player.ALICE, alice.choose(spec, history))
            return walk(history + (v,), Player.BOB)
        return max(
            walk(history + (v,), Player.ALICE)
            for v in range(n)
            if v not in history
        )

    return walk(tuple(spec.preorder), spec.first_player())


def _worst_case_positional(spec: GameSpec, alice: Strategy) -> int:
    g = spec.graph
    full = (1 << g.n) - 1
    memo: dict[tuple[int, int], int] = {}

    def walk(ordered: int, cur: int, player: Player) -> int:
        if ordered == full:
            return cur
        if player is Player.ALICE:
            p = Position(ordered, cur, Player.ALICE, 0, 0)
            v = alice.choose_position(spec, p)
            if not isinstance(v, int) or not 0 <= v < g.n or ordered >> v & 1:
                raise StrategyError(f"illegal positional move {v!r}")
            sc = (g.adj[v] & ordered).bit_count() + 1
            return walk(ordered | 1 << v, sc if sc > cur else cur, Player.BOB)
        key = (ordered, cur)
        cached = memo.get(key)
        if cached is not None:
            return cached
        best = -1
        for v in range(g.n):
            if ordered >> v & 1:
                continue
            sc = (g.adj[v] & ordered).bit_count() + 1
            val = walk(ordered | 1 << v, sc if sc > cur else cur, Player.ALICE)
            if val > best:
                best = val
        memo[key] = best
        return best

    p0 = initial_position(spec)
    return walk(p0.ordered, p0.current_max, p0.to_move)

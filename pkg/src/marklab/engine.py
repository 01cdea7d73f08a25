"""Exact minimax solver for the (preordered) vertex marking game.

Two players extend a linear ordering of the vertices one vertex per turn,
the minimizer trying to keep every vertex's back-score (1 + already-ordered
neighbors) low and the maximizer trying to push it high; the game's score is
the worst back-score once the ordering is complete.  A position is fully
described by the set of ordered vertices, the running maximum score, whose
turn it is, and any remaining pass budgets, so values are memoized on exactly
that tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graphs import Graph
from .ordering import Ordering


class Player(Enum):
    ALICE = "alice"  # minimizes the final score
    BOB = "bob"  # maximizes it

    @property
    def opponent(self) -> "Player":
        return Player.BOB if self is Player.ALICE else Player.ALICE


class Starter(Enum):
    ALICE = "alice"
    BOB = "bob"
    BY_PARITY = "auto"  # Alice if the preorder has even length, else Bob


class _PassMove:
    """Singleton marker for a skipped turn."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "PASS"


PASS = _PassMove()

Move = "int | _PassMove"


@dataclass(frozen=True)
class GameSpec:
    """One rules instance: graph, fixed opening ordering, who moves first,
    and how many turns each player may skip."""

    graph: Graph
    preorder: Ordering = ()
    starter: Starter = Starter.BY_PARITY
    alice_passes: int = 0
    bob_passes: int = 0

    def __post_init__(self):
        object.__setattr__(self, "preorder", tuple(self.preorder))
        seen = set()
        for v in self.preorder:
            self.graph._check(v)
            if v in seen:
                raise ValueError(f"preorder repeats vertex {v}")
            seen.add(v)
        if self.alice_passes < 0 or self.bob_passes < 0:
            raise ValueError("pass budgets must be nonnegative")
        if not isinstance(self.starter, Starter):
            raise ValueError(f"bad starter {self.starter!r}")

    def first_player(self) -> Player:
        if self.starter is Starter.ALICE:
            return Player.ALICE
        if self.starter is Starter.BOB:
            return Player.BOB
        return Player.ALICE if len(self.preorder) % 2 == 0 else Player.BOB


@dataclass(frozen=True)
class Position:
    ordered: int  # bitmask of ordered vertices
    current_max: int  # worst back-score so far
    to_move: Player
    alice_passes_left: int
    bob_passes_left: int


@dataclass(frozen=True)
class SolveResult:
    value: int
    best_move: "Move | None"  # None only when the game is already over
    nodes: int
    memo_entries: int


def initial_position(spec: GameSpec) -> Position:
    g = spec.graph
    ordered = 0
    cur = 0
    for v in spec.preorder:
        sc = (g.adj[v] & ordered).bit_count() + 1
        if sc > cur:
            cur = sc
        ordered |= 1 << v
    return Position(
        ordered, cur, spec.first_player(), spec.alice_passes, spec.bob_passes
    )


def is_terminal(spec: GameSpec, p: Position) -> bool:
    return p.ordered == (1 << spec.graph.n) - 1


def legal_moves(spec: GameSpec, p: Position) -> list:
    """Unordered vertices in increasing label order, then PASS if the mover
    still has budget; empty at a terminal position."""
    g = spec.graph
    if is_terminal(spec, p):
        return []
    moves: list = [v for v in range(g.n) if not p.ordered >> v & 1]
    budget = (
        p.alice_passes_left if p.to_move is Player.ALICE else p.bob_passes_left
    )
    if budget > 0:
        moves.append(PASS)
    return moves


def apply_move(spec: GameSpec, p: Position, move) -> Position:
    g = spec.graph
    if is_terminal(spec, p):
        raise ValueError("no moves from a terminal position")
    nxt = p.to_move.opponent
    if move is PASS:
        if p.to_move is Player.ALICE:
            if p.alice_passes_left <= 0:
                raise ValueError("no passes left")
            return Position(
                p.ordered, p.current_max, nxt, p.alice_passes_left - 1, p.bob_passes_left
            )
        if p.bob_passes_left <= 0:
            raise ValueError("no passes left")
        return Position(
            p.ordered, p.current_max, nxt, p.alice_passes_left, p.bob_passes_left - 1
        )
    g._check(move)
    if p.ordered >> move & 1:
        raise ValueError(f"vertex {move} is already ordered")
    sc = (g.adj[move] & p.ordered).bit_count() + 1
    return Position(
        p.ordered | 1 << move,
        sc if sc > p.current_max else p.current_max,
        nxt,
        p.alice_passes_left,
        p.bob_passes_left,
    )


class Solver:
    """Memoized value computer for one GameSpec, reusable across positions.

    Two exact cutoffs keep the scan short without changing any value: no
    position is worth less than its running maximum, so the minimizer stops
    once a branch returns it, and no back-score can exceed max degree + 1,
    so the maximizer stops there.  Both bounds are tight for the branch
    being cut, so returned values, node counts, and tie-breaking (lowest
    vertex first, PASS last) stay deterministic.
    """

    def __init__(self, spec: GameSpec):
        self.spec = spec
        g = spec.graph
        self._n = g.n
        self._adj = g.adj
        self._full = (1 << g.n) - 1
        self._cap = g.max_degree + 1 if g.n else 0
        self._mmod = g.n + 2
        self._apmod = spec.alice_passes + 1
        self._bpmod = spec.bob_passes + 1
        self._memo: dict[int, int] = {}
        self.nodes = 0

    @property
    def memo_entries(self) -> int:
        return len(self._memo)

    def value_from(self, p: Position) -> int:
        return self._value(
            p.ordered,
            p.current_max,
            1 if p.to_move is Player.ALICE else 0,
            p.alice_passes_left,
            p.bob_passes_left,
        )

    def _value(self, ordered: int, cur: int, alice: int, ap: int, bp: int) -> int:
        self.nodes += 1
        if ordered == self._full:
            return cur
        key = (
            ((ordered * self._mmod + cur) * 2 + alice) * self._apmod + ap
        ) * self._bpmod + bp
        memo = self._memo
        cached = memo.get(key)
        if cached is not None:
            return cached
        adj = self._adj
        rec = self._value
        rem = self._full & ~ordered
        if alice:
            best = self._n + 2
            while rem:
                b = rem & -rem
                rem ^= b
                v = b.bit_length() - 1
                sc = (adj[v] & ordered).bit_count() + 1
                val = rec(ordered | b, sc if sc > cur else cur, 0, ap, bp)
                if val < best:
                    best = val
                    if best <= cur:
                        break
            if ap and best > cur:
                val = rec(ordered, cur, 0, ap - 1, bp)
                if val < best:
                    best = val
        else:
            best = -1
            cap = self._cap
            while rem:
                b = rem & -rem
                rem ^= b
                v = b.bit_length() - 1
                sc = (adj[v] & ordered).bit_count() + 1
                val = rec(ordered | b, sc if sc > cur else cur, 1, ap, bp)
                if val > best:
                    best = val
                    if best >= cap:
                        break
            if bp and best < cap:
                val = rec(ordered, cur, 1, ap, bp - 1)
                if val > best:
                    best = val
        memo[key] = best
        return best

    def best_move_from(self, p: Position):
        """Optimal move, ties broken lowest vertex first with PASS last;
        None when the position is terminal."""
        if p.ordered == self._full:
            return None
        target = self.value_from(p)
        alice = p.to_move is Player.ALICE
        flip = 0 if alice else 1
        for v in range(self._n):
            if p.ordered >> v & 1:
                continue
            sc = (self._adj[v] & p.ordered).bit_count() + 1
            nm = sc if sc > p.current_max else p.current_max
            if (
                self._value(
                    p.ordered | 1 << v, nm, flip, p.alice_passes_left, p.bob_passes_left
                )
                == target
            ):
                return v
        budget = p.alice_passes_left if alice else p.bob_passes_left
        if budget > 0:
            ap = p.alice_passes_left - (1 if alice else 0)
            bp = p.bob_passes_left - (0 if alice else 1)
            if self._value(p.ordered, p.current_max, flip, ap, bp) == target:
                return PASS
        raise AssertionError("no move achieves the computed value")

    def solve(self) -> SolveResult:
        p0 = initial_position(self.spec)
        value = self.value_from(p0)
        best = self.best_move_from(p0)
        return SolveResult(value, best, self.nodes, len(self._memo))


def solve(spec: GameSpec) -> SolveResult:
    return Solver(spec).solve()


def optimal_move(spec: GameSpec, p: Position):
    if is_terminal(spec, p):
        raise ValueError("no moves from a terminal position")
    return Solver(spec).best_move_from(p)


def gcol(g: Graph) -> int:
    """Game value with the minimizer moving first and no preorder."""
    return solve(GameSpec(g)).value


def gcol_B(g: Graph) -> int:
    """Game value when the maximizer moves first."""
    return solve(GameSpec(g, starter=Starter.BOB)).value


def sigma_gcol(g: Graph, sigma) -> int:
    """Game value after the fixed opening sigma, mover set by parity."""
    return solve(GameSpec(g, sigma)).value


def sigma_gcol_A(g: Graph, sigma) -> int:
    """Preordered value with the minimizer moving first despite odd parity."""
    sigma = tuple(sigma)
    if len(sigma) % 2 == 0:
        raise ValueError(
            "minimizer-start variant needs an odd preorder; even parity already starts with the minimizer"
        )
    return solve(GameSpec(g, sigma, Starter.ALICE)).value


def sigma_gcol_B(g: Graph, sigma) -> int:
    """Preordered value with the maximizer moving first despite even parity."""
    sigma = tuple(sigma)
    if len(sigma) % 2 == 1:
        raise ValueError(
            "maximizer-start variant needs an even preorder; odd parity already starts with the maximizer"
        )
    return solve(GameSpec(g, sigma, Starter.BOB)).value

"""Unmemoized reference values for the marking game.

Walks raw move sequences and scores finished orderings vertex by vertex,
sharing none of the solver's incremental position bookkeeping; exists purely
to cross-check the memoized engine on small inputs.
"""

from __future__ import annotations

from .engine import GameSpec, Player


def _final_score(g, tau) -> int:
    best = 0
    for i, v in enumerate(tau):
        sc = 1 + sum(1 for u in tau[:i] if g.adj[v] >> u & 1)
        if sc > best:
            best = sc
    return best


def brute_force_value(spec: GameSpec) -> int:
    g = spec.graph
    n = g.n

    def walk(history: tuple[int, ...], ap: int, bp: int, player: Player) -> int:
        rest = [v for v in range(n) if v not in history]
        if not rest:
            return _final_score(g, history)
        nxt = player.opponent
        values = [walk(history + (v,), ap, bp, nxt) for v in rest]
        if player is Player.ALICE:
            if ap:
                values.append(walk(history, ap - 1, bp, nxt))
            return min(values)
        if bp:
            values.append(walk(history, ap, bp - 1, nxt))
        return max(values)

    return walk(tuple(spec.preorder), spec.alice_passes, spec.bob_passes, spec.first_player())

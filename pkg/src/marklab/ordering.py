"""Linear orderings of graph vertices: concatenation, back-neighbor scores,
and the coloring number via a smallest-last ordering."""

from __future__ import annotations

from .graphs import Graph

Ordering = tuple[int, ...]


def check_ordering(g: Graph, tau) -> Ordering:
    """Validate that tau lists distinct vertices of g; returns it as a tuple."""
    tau = tuple(tau)
    seen = set()
    for v in tau:
        g._check(v)
        if v in seen:
            raise ValueError(f"vertex {v} appears twice in the ordering")
        seen.add(v)
    return tau


def concat(a, b) -> Ordering:
    a, b = tuple(a), tuple(b)
    overlap = set(a) & set(b)
    if overlap:
        raise ValueError(f"orderings overlap on {sorted(overlap)}")
    return a + b


def back_score(g: Graph, tau, v: int) -> int:
    """1 + the number of neighbors of v ordered before v in tau."""
    tau = check_ordering(g, tau)
    try:
        pos = tau.index(v)
    except ValueError:
        raise ValueError(f"vertex {v} is not in the ordering") from None
    earlier = 0
    for u in tau[:pos]:
        earlier |= 1 << u
    return (g.adj[v] & earlier).bit_count() + 1


def col_of_ordering(g: Graph, tau) -> int:
    """Worst back-score over a complete ordering; 0 for the empty graph."""
    tau = check_ordering(g, tau)
    if len(tau) != g.n:
        raise ValueError("ordering must cover every vertex")
    best = 0
    mask = 0
    for v in tau:
        sc = (g.adj[v] & mask).bit_count() + 1
        if sc > best:
            best = sc
        mask |= 1 << v
    return best


def smallest_last_ordering(g: Graph) -> Ordering:
    """Built back to front: each slot takes a minimum-degree vertex of the
    not-yet-placed part, ties to the lowest index."""
    alive = set(range(g.n))
    deg = [g.degree(v) for v in range(g.n)]
    rev = []
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        alive.remove(v)
        rev.append(v)
        for u in g.neighbors(v):
            if u in alive:
                deg[u] -= 1
    return tuple(reversed(rev))


def coloring_number(g: Graph) -> int:
    """col(G): the smallest worst back-score any complete ordering allows,
    attained by a smallest-last ordering (degeneracy + 1; 0 when n = 0)."""
    if g.n == 0:
        return 0
    return col_of_ordering(g, smallest_last_ordering(g))

"""Exact solver and verification harness for the graph marking game.

Two players alternately append vertices of a graph to a linear order;
a vertex's back score is one plus its earlier neighbors, the finished
order scores the maximum back score, the minimizer (alice) wants it low
and the maximizer (bob) wants it high.  This package computes exact game
values, plays optimal strategies, transfers a strategy across a vertex
deletion, and checks the documented bounds over graph corpora.
"""

from .engine import (
    PASS,
    GameSpec,
    Player,
    SolveResult,
    Starter,
    gcol,
    gcol_B,
    optimal_move,
    sigma_gcol,
    sigma_gcol_A,
    sigma_gcol_B,
    solve,
)
from .graphs import (
    Graph,
    ParseError,
    augment_isolated,
    delete_edge,
    delete_vertex,
    induced_subgraph,
    isomorphic,
    join,
    load_graph_text,
    make_complete,
    make_cycle,
    make_empty,
    make_path,
    parse_edge_list,
    parse_family_expr,
    render_edge_list,
)
from .harness import (
    Report,
    Violation,
    explore_c5,
    run_suite,
    verify_all,
    verify_construction,
    verify_monotonicity,
    verify_section3,
    verify_skipping,
)
from .ordering import back_score, col_of_ordering, coloring_number, smallest_last_ordering
from .strategy import (
    Strategy,
    StrategyError,
    lowest_index_strategy,
    optimal_strategy,
    play_out,
    worst_case_score,
)
from .transfer import (
    BookkeepingError,
    InvariantViolation,
    TransferError,
    TransferState,
    audit_all_bob_lines,
    play_transfer_game,
    transfer_strategy,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Graph",
    "ParseError",
    "make_complete",
    "make_empty",
    "make_cycle",
    "make_path",
    "join",
    "delete_vertex",
    "delete_edge",
    "induced_subgraph",
    "augment_isolated",
    "isomorphic",
    "parse_edge_list",
    "render_edge_list",
    "parse_family_expr",
    "load_graph_text",
    "back_score",
    "col_of_ordering",
    "smallest_last_ordering",
    "coloring_number",
    "Player",
    "Starter",
    "PASS",
    "GameSpec",
    "SolveResult",
    "solve",
    "optimal_move",
    "gcol",
    "gcol_B",
    "sigma_gcol",
    "sigma_gcol_A",
    "sigma_gcol_B",
    "Strategy",
    "StrategyError",
    "optimal_strategy",
    "lowest_index_strategy",
    "play_out",
    "worst_case_score",
    "TransferError",
    "InvariantViolation",
    "BookkeepingError",
    "TransferState",
    "transfer_strategy",
    "play_transfer_game",
    "audit_all_bob_lines",
    "Report",
    "Violation",
    "verify_monotonicity",
    "verify_skipping",
    "verify_section3",
    "verify_construction",
    "explore_c5",
    "verify_all",
    "run_suite",
]

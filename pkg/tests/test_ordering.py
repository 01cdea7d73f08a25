import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from marklab.graphs import (
    Graph,
    join,
    make_complete,
    make_cycle,
    make_empty,
    make_path,
)
from marklab.harness import all_labeled_graphs
from marklab.ordering import (
    back_score,
    check_ordering,
    col_of_ordering,
    coloring_number,
    concat,
    smallest_last_ordering,
)


def min_col_by_enumeration(g: Graph) -> int:
    """Reference coloring number: try every complete ordering."""
    if g.n == 0:
        return 0
    return min(
        col_of_ordering(g, tau) for tau in itertools.permutations(range(g.n))
    )


def test_check_ordering():
    g = make_path(3)
    assert check_ordering(g, [2, 0]) == (2, 0)
    with pytest.raises(ValueError):
        check_ordering(g, [0, 0])
    with pytest.raises(ValueError):
        check_ordering(g, [3])


def test_concat():
    assert concat((0, 1), (2,)) == (0, 1, 2)
    with pytest.raises(ValueError):
        concat((0, 1), (1, 2))


def test_back_score_counts_earlier_neighbors_only():
    g = make_path(4)  # 0-1-2-3
    tau = (0, 2, 1, 3)
    assert back_score(g, tau, 0) == 1
    assert back_score(g, tau, 2) == 1  # 1 and 3 come later
    assert back_score(g, tau, 1) == 3  # both neighbors already placed
    assert back_score(g, tau, 3) == 2


def test_back_score_requires_membership():
    g = make_path(3)
    with pytest.raises(ValueError):
        back_score(g, (0,), 2)


def test_col_of_ordering():
    g = make_complete(3)
    assert col_of_ordering(g, (0, 1, 2)) == 3
    assert col_of_ordering(make_empty(4), (3, 1, 0, 2)) == 1
    assert col_of_ordering(Graph(0), ()) == 0
    with pytest.raises(ValueError):
        col_of_ordering(g, (0, 1))


def test_smallest_last_is_a_permutation():
    g = make_cycle(5)
    tau = smallest_last_ordering(g)
    assert sorted(tau) == list(range(5))


@pytest.mark.parametrize(
    "g,expected",
    [
        (Graph(0), 0),
        (make_empty(1), 1),
        (make_empty(5), 1),
        (make_path(5), 2),
        (make_cycle(5), 3),
        (make_complete(4), 4),
        (join(make_complete(3), make_empty(2)), 4),
    ],
)
def test_coloring_number_known_values(g, expected):
    assert coloring_number(g) == expected


def test_coloring_number_matches_enumeration_exhaustively():
    # every labeled graph through 5 vertices
    for n in range(6):
        for g in all_labeled_graphs(n):
            assert coloring_number(g) == min_col_by_enumeration(g)


@given(st.integers(0, 6), st.integers(0, 10**9))
def test_coloring_number_never_beaten_by_a_random_ordering(n, seed):
    import random

    rng = random.Random(seed)
    g = Graph(
        n,
        [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.5
        ],
    )
    tau = list(range(n))
    rng.shuffle(tau)
    if n == 0:
        assert coloring_number(g) == 0
    else:
        assert coloring_number(g) <= col_of_ordering(g, tau)
